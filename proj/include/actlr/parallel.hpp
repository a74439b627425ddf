#pragma once

#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace actlr {

// Runs fn(0..jobs-1) across up to `threads` workers (<=1 means inline).
// The first exception thrown by any job is rethrown after all workers join.
inline void parallel_for(int jobs, int threads,
                         const std::function<void(int)>& fn) {
  if (jobs <= 0) return;
  if (threads <= 1 || jobs == 1) {
    for (int i = 0; i < jobs; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  int workers = std::min(threads, jobs);
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      while (!failed.load(std::memory_order_relaxed)) {
        int i = next.fetch_add(1);
        if (i >= jobs) break;
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
          failed.store(true);
        }
      }
    });
  }
  for (std::thread& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace actlr
