#pragma once

#include <optional>
#include <string>
#include <vector>

#include "actlr/learners.hpp"
#include "actlr/model.hpp"
#include "actlr/posterior.hpp"

namespace actlr {

struct FitOptions {
  double reg = 1e-4;   // ridge coefficient on ||theta||^2
  double tol = 1e-6;   // gradient norm for convergence
  int max_iters = 2000;
  double r1_bound = std::numeric_limits<double>::infinity();  // projection ball
};

struct FitOutcome {
  Hypothesis hypothesis;
  bool converged = false;
  int iterations = 0;
  double grad_norm = 0.0;
  double objective = 0.0;
};

// Ridge-regularized logistic fit of labeled observations by projected
// gradient descent with Barzilai-Borwein steps and a backtracking line
// search (objective never increases). Non-convergence returns the last
// iterate with converged = false.
FitOutcome fit_logistic(const Eigen::MatrixXd& xs, const Eigen::VectorXd& labels,
                        const Eigen::VectorXd& multiplicities,
                        const FitOptions& opts = {});

// Same fit over a query transcript (points resolved from its dataset).
FitOutcome fit_logistic(const ObservationTranscript& obs,
                        const FitOptions& opts = {});

// Fraction of examples where (predict >= 0.5) matches the label.
double accuracy(const Hypothesis& h, const Eigen::MatrixXd& points,
                const std::vector<int>& labels);
double accuracy(const Eigen::VectorXd& preds, const std::vector<int>& labels);

// Weighted l2 distance from h to the oracle's ground truth over the pool.
// Requires an oracle that knows its truth (synthetic instances).
double l2_to_truth(const Hypothesis& h, const LabelOracle& oracle,
                   const Dataset& data);

// Expected accuracy of h's decisions under the label distribution the
// oracle's truth induces on the pool: a point predicted on the majority
// side contributes max(p, 1-p), otherwise min(p, 1-p), weighted.
double expected_accuracy(const Hypothesis& h, const LabelOracle& oracle,
                         const Dataset& data);

// Evaluation data for curve building. Pools with stored labels (replay
// oracles) provide them here and train accuracy scores against them;
// when absent, train accuracy is the expected accuracy under the oracle's
// ground truth. An optional held-out test set is fixed across trials.
struct EvalSplit {
  std::optional<std::vector<int>> train_labels;
  std::optional<Eigen::MatrixXd> test_points;
  std::vector<int> test_labels;
};

struct CurveRow {
  long budget = 0;
  double train_acc = 0.0;
  double test_acc = 0.0;
  double l2 = 0.0;
  bool has_test = false;
  bool has_l2 = false;
  bool valid = false;  // false when the run ended before this budget
};

struct LearningCurve {
  Strategy strategy = Strategy::kPass;
  std::uint64_t trial_seed = 0;
  std::vector<CurveRow> rows;
  RunResult run;
  bool failed = false;
  std::string error;
};

struct CurveOptions {
  LearnerOptions learner;
  FitOptions fit;
  std::optional<ScheduleParams> schedule;  // clipped/reduced override
};

// Runs `strategy` once per trial up to budgets.back() labels, refits on each
// transcript prefix, and evaluates train accuracy, test accuracy (when a
// test set is present) and distance to truth (when the oracle knows it).
// Bernoulli oracles are re-seeded per trial; replay oracles are reused.
// Train accuracy scores against split.train_labels when given, otherwise
// in expectation against the oracle's truth.
// A trial whose run throws is returned flagged instead of propagating.
std::vector<LearningCurve> learning_curve(Strategy strategy,
                                          const ProblemInstance& prob,
                                          const EvalSplit& split,
                                          const std::vector<long>& budgets,
                                          int trials, const CurveOptions& opts,
                                          Rng& rng);

}  // namespace actlr
