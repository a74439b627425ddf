#include "actlr/learners.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <utility>

#include <Eigen/SVD>

#include "actlr/eval.hpp"

namespace actlr {

std::optional<Strategy> strategy_from_string(std::string_view name) {
  if (name == "ours") return Strategy::kOurs;
  if (name == "pass") return Strategy::kPass;
  if (name == "lss") return Strategy::kLss;
  if (name == "clipped") return Strategy::kClipped;
  if (name == "reduced") return Strategy::kReduced;
  return std::nullopt;
}

std::string_view strategy_name(Strategy s) {
  switch (s) {
    case Strategy::kOurs: return "ours";
    case Strategy::kPass: return "pass";
    case Strategy::kLss: return "lss";
    case Strategy::kClipped: return "clipped";
    case Strategy::kReduced: return "reduced";
  }
  return "unknown";
}

ScheduleParams default_schedule(const Dataset& data, double r1_bound,
                                double epsilon, long budget_cap) {
  if (!(epsilon > 0.0) || !(r1_bound > 0.0) || budget_cap < 1) {
    throw std::invalid_argument("default_schedule: invalid arguments");
  }
  ScheduleParams p;
  double ideal = r1_bound * r1_bound * std::max(data.dim(), 1) /
                 std::pow(epsilon, 4);
  double m = std::min({static_cast<double>(data.size()), std::ceil(ideal),
                       1e4});
  p.m_surrogate = std::max(2L, static_cast<long>(m));
  p.gamma = std::min(std::max(epsilon / (10.0 * static_cast<double>(p.m_surrogate)),
                              1e-6),
                     0.05);
  double k = std::ceil(std::log2(1.0 / epsilon));
  p.phases = static_cast<int>(std::min(std::max(k, 2.0), 16.0));
  p.iters_per_phase =
      static_cast<int>(std::max(1L, budget_cap / (4L * p.phases)));
  p.budget_cap = budget_cap;
  return p;
}

namespace {

void validate_learner_options(const LearnerOptions& opts) {
  if (opts.r_samples < 2) {
    throw std::invalid_argument("LearnerOptions: r_samples must be >= 2");
  }
  if (opts.warm_burn_in < 0 || opts.paired_max_rejections < 1 ||
      opts.paired_rejection_pool < 0) {
    throw std::invalid_argument("LearnerOptions: invalid rejection settings");
  }
}

SamplerConfig warm_config(const LearnerOptions& opts, double step) {
  SamplerConfig cfg = opts.sampler;
  cfg.burn_in = opts.warm_burn_in;
  cfg.step_size = step;
  return cfg;
}

std::vector<long> checkpoint_plan(const std::vector<long>& requested,
                                  long max_budget) {
  std::vector<long> plan;
  for (long b : requested) {
    if (b >= 1 && b <= max_budget) plan.push_back(b);
  }
  std::sort(plan.begin(), plan.end());
  plan.erase(std::unique(plan.begin(), plan.end()), plan.end());
  return plan;
}

}  // namespace

RunResult active_simple(ProblemInstance& prob, int rounds,
                        const LearnerOptions& opts, Rng& rng) {
  if (rounds < 0) {
    throw std::invalid_argument("active_simple: rounds must be >= 0");
  }
  validate_learner_options(opts);

  const long start_count = prob.oracle.query_count();
  Posterior post(ObservationTranscript(prob.data), 0.0, prob.r1_bound,
                 prob.link);
  RunResult out;
  std::optional<Eigen::VectorXd> warm;
  std::optional<double> warm_step;
  std::vector<long> plan = checkpoint_plan(opts.checkpoint_budgets, rounds);
  std::size_t next_cp = 0;

  for (int round = 0; round < rounds; ++round) {
    SamplerConfig cfg =
        warm ? warm_config(opts, *warm_step) : opts.sampler;
    MalaChain chain(post, cfg, rng.fork(), warm);
    std::vector<Hypothesis> samples;
    samples.reserve(static_cast<std::size_t>(opts.r_samples));
    for (int s = 0; s < opts.r_samples; ++s) {
      samples.push_back(Hypothesis{chain.next(), prob.link, 0.0});
    }
    InformativenessEstimate est = estimate_r(samples, *prob.data, opts.cap);
    int x = select_query(est);
    int y = prob.oracle.query(x);
    out.log.push_back({static_cast<long>(out.log.size()), x, y, 0, round});
    post = post.append_observation(x, y);
    warm = chain.state();
    warm_step = chain.step_size();

    if (next_cp < plan.size() && plan[next_cp] == round + 1) {
      MalaChain cp_chain(post, warm_config(opts, *warm_step), rng.fork(),
                         warm);
      out.checkpoints.push_back(
          {plan[next_cp], Hypothesis{cp_chain.next(), prob.link, 0.0}});
      ++next_cp;
    }
  }

  SamplerConfig cfg = warm ? warm_config(opts, *warm_step) : opts.sampler;
  MalaChain final_chain(post, cfg, rng.fork(), warm);
  out.hypothesis = Hypothesis{final_chain.next(), prob.link, 0.0};
  out.labels_used = prob.oracle.query_count() - start_count;
  return out;
}

RunResult clipped_active(ProblemInstance& prob, const ScheduleParams& sched,
                         const LearnerOptions& opts, Rng& rng) {
  if (!(sched.gamma > 0.0 && sched.gamma < 0.5) || sched.phases < 1 ||
      sched.iters_per_phase < 1 || sched.budget_cap < 0 ||
      sched.m_surrogate < 1) {
    throw std::invalid_argument("clipped_active: invalid schedule");
  }
  if (!(prob.epsilon > 0.0)) {
    throw std::invalid_argument("clipped_active: epsilon must be positive");
  }
  validate_learner_options(opts);

  const long start_count = prob.oracle.query_count();
  const double gamma = sched.gamma;
  const int phase_end_marker = sched.iters_per_phase + 1;
  RunResult out;
  long used = 0;

  auto budget_left = [&](long need) { return used + need <= sched.budget_cap; };
  auto query_twice = [&](int point, int phase, int iter) {
    int y1 = prob.oracle.query(point);
    out.log.push_back({static_cast<long>(out.log.size()), point, y1, phase, iter});
    int y2 = prob.oracle.query(point);
    out.log.push_back({static_cast<long>(out.log.size()), point, y2, phase, iter});
    used += 2;
    return std::pair<int, int>{y1, y2};
  };

  Posterior lambda_post(ObservationTranscript(prob.data), gamma, prob.r1_bound,
                        prob.link);
  std::vector<Posterior> phase_end_p;
  Posterior p_post = lambda_post;  // current iteration track

  PairedSampleConfig paired;
  paired.distance_threshold = 2.0 * prob.epsilon;

  long rejection_pool_init = opts.paired_rejection_pool > 0
                                 ? opts.paired_rejection_pool
                                 : 4L * opts.r_samples;

  for (int phase = 1; phase <= sched.phases && !out.truncated; ++phase) {
    p_post = Posterior(ObservationTranscript(prob.data), gamma, prob.r1_bound,
                       prob.link);
    MalaChain lam_chain(lambda_post, opts.sampler, rng.fork());
    std::optional<Eigen::VectorXd> warm_p;
    std::optional<double> warm_p_step;
    std::vector<int> phase_points;

    for (int iter = 1; iter <= sched.iters_per_phase; ++iter) {
      if (!budget_left(2)) {
        out.truncated = true;
        break;
      }
      SamplerConfig p_cfg =
          warm_p ? warm_config(opts, *warm_p_step) : opts.sampler;
      MalaChain p_chain(p_post, p_cfg, rng.fork(), warm_p);

      auto lam_draw = [&] {
        return Hypothesis{lam_chain.next(), prob.link, gamma};
      };
      auto p_draw = [&] {
        return Hypothesis{p_chain.next(), prob.link, gamma};
      };

      long rejections_left = rejection_pool_init;
      std::vector<Hypothesis> population;
      population.reserve(static_cast<std::size_t>(opts.r_samples));
      for (int s = 0; s < opts.r_samples; ++s) {
        paired.max_rejections = static_cast<int>(std::min<long>(
            opts.paired_max_rejections, std::max<long>(1, rejections_left)));
        PairedDraw draw = paired_sample(lam_draw, p_draw, paired, *prob.data,
                                        rng);
        rejections_left -= draw.rejections;
        if (draw.outcome == PairedOutcome::kFallback) ++out.paired_fallbacks;
        population.push_back(std::move(draw.hypothesis));
      }

      InformativenessEstimate est = estimate_r(population, *prob.data,
                                               opts.cap);
      int x = select_query(est);
      auto [y1, y2] = query_twice(x, phase, iter);
      p_post = p_post.append_observation(x, y1).append_observation(x, y2);
      phase_points.push_back(x);
      warm_p = p_chain.state();
      warm_p_step = p_chain.step_size();
    }

    if (!out.truncated) {
      for (int x : phase_points) {
        if (!budget_left(2)) {
          out.truncated = true;
          break;
        }
        auto [y1, y2] = query_twice(x, phase, phase_end_marker);
        lambda_post =
            lambda_post.append_observation(x, y1).append_observation(x, y2);
      }
    }
    if (!out.truncated) {
      phase_end_p.push_back(p_post);
    }
  }

  const Posterior& final_post =
      phase_end_p.empty()
          ? p_post
          : phase_end_p[static_cast<std::size_t>(
                rng.uniform_int(static_cast<int>(phase_end_p.size())))];
  MalaChain final_chain(final_post, opts.sampler, rng.fork());
  out.hypothesis = Hypothesis{final_chain.next(), prob.link, gamma};
  out.labels_used = prob.oracle.query_count() - start_count;
  return out;
}

RunResult active_logistic_regression(ProblemInstance& prob,
                                     const std::optional<ScheduleParams>& overrides,
                                     const LearnerOptions& opts, Rng& rng) {
  if (!(prob.epsilon > 0.0)) {
    throw std::invalid_argument(
        "active_logistic_regression: epsilon must be positive");
  }
  double c = std::numbers::sqrt2 / (prob.data->r2_bound() * prob.epsilon);
  double kappa = 0.5 * prob.epsilon * prob.epsilon;

  Subspace sub = kappa < 1.0 ? dimension_reduction(*prob.data, c, kappa)
                             : Subspace::zero(prob.data->dim());
  RunResult out;
  out.reduced_dim = sub.dim();
  if (sub.dim() == 0) {
    out.degenerate = true;
    out.hypothesis =
        Hypothesis{Eigen::VectorXd::Zero(prob.data->dim()), prob.link, 0.0};
    return out;
  }

  auto reduced = std::make_shared<Dataset>(project_pool(*prob.data, sub));
  ScheduleParams sched =
      overrides ? *overrides
                : default_schedule(*reduced, prob.r1_bound, prob.epsilon);

  ProblemInstance reduced_prob{reduced, prob.oracle, prob.link, prob.r1_bound,
                               prob.epsilon, prob.delta};
  RunResult inner = clipped_active(reduced_prob, sched, opts, rng);
  prob.oracle = std::move(reduced_prob.oracle);  // keep count and rng state

  out.log = std::move(inner.log);
  out.labels_used = inner.labels_used;
  out.truncated = inner.truncated;
  out.paired_fallbacks = inner.paired_fallbacks;
  out.hypothesis = Hypothesis{sub.embed(inner.hypothesis.theta), prob.link,
                              inner.hypothesis.gamma};
  return out;
}

namespace {

RunResult fit_from_log(ProblemInstance& prob, RunResult out,
                       const std::vector<long>& checkpoints) {
  if (out.log.empty()) {
    out.hypothesis =
        Hypothesis{Eigen::VectorXd::Zero(prob.data->dim()), prob.link, 0.0};
    return out;
  }
  FitOptions fopts;
  fopts.r1_bound = prob.r1_bound;
  std::vector<long> plan =
      checkpoint_plan(checkpoints, static_cast<long>(out.log.size()));
  std::size_t next_cp = 0;
  ObservationTranscript t(prob.data);
  long count = 0;
  for (const QueryRecord& q : out.log) {
    t = t.appended(q.point, q.label);
    ++count;
    if (next_cp < plan.size() && plan[next_cp] == count) {
      out.checkpoints.push_back({count, fit_logistic(t, fopts).hypothesis});
      ++next_cp;
    }
  }
  out.hypothesis = fit_logistic(t, fopts).hypothesis;
  return out;
}

bool uniform_weights(const Dataset& data) {
  double lo = data.weights().minCoeff();
  double hi = data.weights().maxCoeff();
  return hi - lo < 1e-12;
}

}  // namespace

RunResult passive_baseline(ProblemInstance& prob, long budget, Rng& rng,
                           const std::vector<long>& checkpoints) {
  if (budget < 0) {
    throw std::invalid_argument("passive_baseline: budget must be >= 0");
  }
  const long start_count = prob.oracle.query_count();
  RunResult out;

  if (uniform_weights(*prob.data)) {
    std::vector<int> perm;
    std::size_t pos = 0;
    for (long i = 0; i < budget; ++i) {
      if (pos >= perm.size()) {
        perm = rng.permutation(prob.data->size());
        pos = 0;
      }
      int x = perm[pos++];
      int y = prob.oracle.query(x);
      out.log.push_back({i, x, y, 0, 0});
    }
  } else {
    std::vector<double> cum(static_cast<std::size_t>(prob.data->size()));
    double acc = 0.0;
    for (int i = 0; i < prob.data->size(); ++i) {
      acc += prob.data->weights()(i);
      cum[static_cast<std::size_t>(i)] = acc;
    }
    for (long i = 0; i < budget; ++i) {
      double u = rng.uniform() * acc;
      int x = static_cast<int>(
          std::upper_bound(cum.begin(), cum.end(), u) - cum.begin());
      x = std::min(x, prob.data->size() - 1);
      int y = prob.oracle.query(x);
      out.log.push_back({i, x, y, 0, 0});
    }
  }
  out.labels_used = prob.oracle.query_count() - start_count;
  return fit_from_log(prob, std::move(out), checkpoints);
}

Eigen::VectorXd leverage_scores(const Dataset& data) {
  const Eigen::MatrixXd& x = data.points();
  Eigen::BDCSVD<Eigen::MatrixXd> svd(x, Eigen::ComputeThinU);
  const Eigen::VectorXd& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) <= 0.0) {
    return Eigen::VectorXd::Zero(x.rows());
  }
  double tol = std::max(x.rows(), x.cols()) *
               std::numeric_limits<double>::epsilon() * sv(0);
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > tol) ++rank;
  }
  Eigen::VectorXd scores =
      svd.matrixU().leftCols(rank).rowwise().squaredNorm();
  return scores.cwiseMin(1.0).cwiseMax(0.0);
}

RunResult lss_baseline(ProblemInstance& prob, long budget, Rng& rng,
                       const std::vector<long>& checkpoints) {
  if (budget < 0) {
    throw std::invalid_argument("lss_baseline: budget must be >= 0");
  }
  const long start_count = prob.oracle.query_count();
  Eigen::VectorXd scores = leverage_scores(*prob.data);
  if (scores.sum() <= 1e-12) {
    scores = Eigen::VectorXd::Ones(prob.data->size());
  }
  std::vector<double> cum(static_cast<std::size_t>(scores.size()));
  double acc = 0.0;
  for (Eigen::Index i = 0; i < scores.size(); ++i) {
    acc += scores(i);
    cum[static_cast<std::size_t>(i)] = acc;
  }

  RunResult out;
  for (long i = 0; i < budget; ++i) {
    double u = rng.uniform() * acc;
    int x = static_cast<int>(std::upper_bound(cum.begin(), cum.end(), u) -
                             cum.begin());
    x = std::min(x, prob.data->size() - 1);
    int y = prob.oracle.query(x);
    out.log.push_back({i, x, y, 0, 0});
  }
  out.labels_used = prob.oracle.query_count() - start_count;
  return fit_from_log(prob, std::move(out), checkpoints);
}

Hypothesis boost_success(const std::vector<Hypothesis>& candidates,
                         double radius, const Dataset& data) {
  if (candidates.empty()) {
    throw std::invalid_argument("boost_success: empty candidate list");
  }
  if (!(radius >= 0.0)) {
    throw std::invalid_argument("boost_success: radius must be >= 0");
  }
  std::size_t n = candidates.size();
  std::vector<Eigen::VectorXd> preds;
  preds.reserve(n);
  for (const Hypothesis& h : candidates) {
    preds.push_back(predictions(h, data));
  }
  std::size_t best = 0;
  int best_count = -1;
  for (std::size_t i = 0; i < n; ++i) {
    int count = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (weighted_l2(preds[i], preds[j], data.weights()) <= radius) {
        ++count;
      }
    }
    if (count > best_count) {
      best_count = count;
      best = i;
    }
  }
  return candidates[best];
}

}  // namespace actlr
