#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "actlr/dimred.hpp"
#include "actlr/model.hpp"
#include "actlr/posterior.hpp"
#include "actlr/query_select.hpp"
#include "actlr/rng.hpp"

namespace actlr {

enum class Strategy { kOurs, kPass, kLss, kClipped, kReduced };

std::optional<Strategy> strategy_from_string(std::string_view name);
std::string_view strategy_name(Strategy s);

// Everything a learner needs: the pool, a label source, the hypothesis class
// bounds, and the target accuracy/confidence. The oracle is mutated by runs.
struct ProblemInstance {
  DatasetPtr data;
  LabelOracle oracle;
  LinkFunction link = LinkFunction::sigmoid();
  double r1_bound = 1.0;
  double epsilon = 0.05;
  double delta = 0.1;
};

// Sampling knobs shared by the active learners.
struct LearnerOptions {
  int r_samples = 256;     // hypotheses drawn per query-selection round
  SamplerConfig sampler;   // MALA settings for the first chain of a run
  int warm_burn_in = 50;   // burn-in when a chain restarts from a warm state
  LogRatioCap cap;         // log-ratio bound inside informativeness estimates
  int paired_max_rejections = 2000;
  // Total q-draw rejections allowed per iteration across the whole
  // population; 0 means 4 * r_samples. Exhaustion degrades to fallbacks.
  long paired_rejection_pool = 0;
  // Label counts at which active_simple snapshots an interim hypothesis
  // into RunResult::checkpoints. Out-of-range entries are skipped.
  std::vector<long> checkpoint_budgets;
};

// Resolved phase schedule for the clipped learner. All fields positive.
struct ScheduleParams {
  double gamma = 0.01;     // clip level in (0, 1/2)
  int phases = 2;          // K
  int iters_per_phase = 1; // M
  long m_surrogate = 2;    // stand-in for the optimal label complexity
  long budget_cap = 2000;  // hard stop on oracle labels for the run
};

// Desk-scale defaults: m_surrogate = min(pool size, ceil(r1^2 d / eps^4),
// 10^4), gamma = eps / (10 m_surrogate) floored at 1e-6, K ~ log2(1/eps),
// M fills budget_cap / (4K).
ScheduleParams default_schedule(const Dataset& data, double r1_bound,
                                double epsilon, long budget_cap = 2000);

// One oracle interaction. Phase/iteration are 1-based for the phased
// learner (iteration = iters_per_phase + 1 marks phase-end re-queries)
// and 0/round-index for the single-track learners.
struct QueryRecord {
  long seq = 0;
  int point = 0;
  int label = 0;
  int phase = 0;
  int iteration = 0;
};

// Interim hypothesis recorded after `budget` labels of a single run.
struct Checkpoint {
  long budget = 0;
  Hypothesis hypothesis;
};

struct RunResult {
  Hypothesis hypothesis;
  std::vector<QueryRecord> log;
  long labels_used = 0;
  std::vector<Checkpoint> checkpoints;  // at the requested budgets, ascending
  bool truncated = false;    // budget_cap stopped the run early
  bool degenerate = false;   // reduction left nothing to learn on
  int paired_fallbacks = 0;  // rejection budget exhaustions
  int reduced_dim = -1;      // subspace dimension, when reduction ran
};

// One query per round: sample hypotheses from the posterior, pick the point
// with the largest informativeness estimate, query it, update the posterior.
// The returned hypothesis is a single posterior draw after the last round;
// checkpoint hypotheses are single draws from the interim posteriors.
RunResult active_simple(ProblemInstance& prob, int rounds,
                        const LearnerOptions& opts, Rng& rng);

// Phased learner with two posterior tracks: p restarts uniform each phase
// and absorbs double queries per iteration; lambda absorbs fresh phase-end
// double re-queries of the phase's points. Query selection draws its
// hypothesis population through paired_sample against the previous phase's
// lambda. Returns a draw from a uniformly chosen end-of-phase p posterior.
RunResult clipped_active(ProblemInstance& prob, const ScheduleParams& sched,
                         const LearnerOptions& opts, Rng& rng);

// Full pipeline: build a significant subspace with c = sqrt(2)/(R2 eps),
// kappa = eps^2/2, project the pool, run clipped_active in the reduced
// space, re-embed the answer. A zero-dimensional subspace short-circuits to
// the zero hypothesis with the degenerate flag set.
RunResult active_logistic_regression(ProblemInstance& prob,
                                     const std::optional<ScheduleParams>& overrides,
                                     const LearnerOptions& opts, Rng& rng);

// Labels a random permutation of the pool (uniform weights), cycling with
// fresh permutations when the budget exceeds the pool; non-uniform pools are
// sampled i.i.d. from the weight marginal instead. Fits the queried labels;
// `checkpoints` requests interim fits at the listed label counts.
RunResult passive_baseline(ProblemInstance& prob, long budget, Rng& rng,
                           const std::vector<long>& checkpoints = {});

// Diagonal of the hat matrix X (X'X)^+ X', one score per pool row.
Eigen::VectorXd leverage_scores(const Dataset& data);

// Samples `budget` points with replacement proportionally to leverage
// scores, queries each draw, fits the result; `checkpoints` requests
// interim fits at the listed label counts.
RunResult lss_baseline(ProblemInstance& prob, long budget, Rng& rng,
                       const std::vector<long>& checkpoints = {});

// Candidate whose `radius`-ball (weighted l2 on predictions) contains the
// most candidates; ties go to the lowest index.
Hypothesis boost_success(const std::vector<Hypothesis>& candidates,
                         double radius, const Dataset& data);

}  // namespace actlr
