#pragma once

#include <functional>
#include <vector>

#include "actlr/metrics.hpp"
#include "actlr/model.hpp"
#include "actlr/rng.hpp"

namespace actlr {

// Per-point informativeness r_hat(x): the average KL divergence from the
// mean prediction to each sampled hypothesis's prediction.
struct InformativenessEstimate {
  Eigen::VectorXd r_hat;      // one entry per pool point, >= 0
  Eigen::VectorXd mean_pred;  // averaged predictions, in [gamma, 1-gamma]
  int sample_count = 0;
};

InformativenessEstimate estimate_r(const std::vector<Hypothesis>& samples,
                                   const Dataset& data, LogRatioCap cap = {});

// Index of the largest estimate; ties go to the lowest index.
int select_query(const InformativenessEstimate& est);

struct PairedSampleConfig {
  double distance_threshold = 0.0;  // required weighted l2 gap between draws
  int max_rejections = 2000;        // draws from q before falling back
};

enum class PairedOutcome { kPaired, kFallback };

struct PairedDraw {
  Hypothesis hypothesis;
  PairedOutcome outcome = PairedOutcome::kPaired;
  int rejections = 0;  // q-draws discarded before acceptance
};

// Draw h1 from p once, then draw h2 from q until the two are at least
// distance_threshold apart in weighted l2 over the pool; return one of the
// pair uniformly. If the rejection budget runs out, return h1 flagged as a
// fallback.
PairedDraw paired_sample(const std::function<Hypothesis()>& p_draw,
                         const std::function<Hypothesis()>& q_draw,
                         const PairedSampleConfig& cfg, const Dataset& data,
                         Rng& rng);

}  // namespace actlr
