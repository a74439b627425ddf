#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "actlr/eval.hpp"
#include "actlr/learners.hpp"
#include "actlr/model.hpp"

namespace actlr {

struct SyntheticSpec {
  long n = 0;
  int d = 0;
  std::uint64_t seed = 0;
};

// Parsed run configuration. See parse_config_text for the key list.
struct ExperimentConfig {
  std::string dataset_kind = "synthetic";  // "synthetic" | "csv"
  SyntheticSpec synth;
  std::string csv_path;
  std::string csv_test_path;
  long test_n = 2000;  // held-out size for synthetic datasets

  std::vector<Strategy> strategies;
  std::vector<long> budgets;
  int trials = 1;
  double epsilon = 0.05;
  double delta = 0.1;
  std::optional<double> r1_bound;  // default: sqrt(d+1) synthetic, 10 csv
  std::uint64_t master_seed = 1;
  int threads = 0;  // 0 = hardware concurrency
  std::string out_dir = "out";
  std::optional<double> target_train_acc;  // summary target; default derived

  CurveOptions curve;
};

// Flat key/value text: one `key = value` per line, '#' comments, lists
// comma-separated. Unknown keys and malformed values throw.
ExperimentConfig parse_config_text(const std::string& text);
ExperimentConfig parse_config_file(const std::string& path);

// n points uniform in [-1,1]^d with an appended constant-1 coordinate,
// uniform weights, and a Bernoulli oracle whose truth is uniform in
// [-1,1]^(d+1). Fixed seed gives identical bytes.
std::pair<DatasetPtr, LabelOracle> generate_synthetic(long n, int d,
                                                      std::uint64_t seed);

struct LoadedCsv {
  DatasetPtr data;
  std::optional<std::vector<int>> labels;
  bool had_weights = false;
};

// Header `f0..f{d-1}[,label][,weight]`; weights default uniform.
LoadedCsv load_csv(const std::string& path);

void write_dataset_csv(const std::string& path, const Dataset& data,
                       const std::vector<int>* labels);

// Runs every strategy x trial job, writes curves.csv / transcripts.csv /
// summary.txt under cfg.out_dir, prints the summary table. Returns 0; config
// errors throw before any work starts.
int run_experiment(const ExperimentConfig& cfg);

// Median labels needed per strategy to reach `metric` >= value (<= value for
// l2_to_truth) from a curves.csv; returns the printable table.
std::string summarize_curves(const std::string& curves_path,
                             const std::string& metric, double value);

}  // namespace actlr
