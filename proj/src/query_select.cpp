#include "actlr/query_select.hpp"

#include <cmath>
#include <stdexcept>

namespace actlr {

namespace {
// Open-interval clamp applied before taking logs; saturated predictions
// (exactly 0 or 1 in floating point) would otherwise produce NaNs. The floor
// is far below where a cap of 100 binds, so capped results are unaffected.
constexpr double kPredFloor = 1e-300;
const double kPredCeil = 1.0 - 0x1.0p-53;
}  // namespace

InformativenessEstimate estimate_r(const std::vector<Hypothesis>& samples,
                                   const Dataset& data, LogRatioCap cap) {
  if (samples.empty()) {
    throw std::invalid_argument("estimate_r: empty sample list");
  }
  if (!(cap.cap > 0.0)) {
    throw std::invalid_argument("estimate_r: cap must be positive");
  }
  Eigen::Index s_count = static_cast<Eigen::Index>(samples.size());
  Eigen::Index n = data.size();

  Eigen::ArrayXXd preds(s_count, n);
  for (Eigen::Index s = 0; s < s_count; ++s) {
    preds.row(s) = predictions(samples[static_cast<std::size_t>(s)], data)
                       .transpose()
                       .array();
  }
  Eigen::ArrayXd mean_pred = preds.colwise().mean().transpose();

  Eigen::ArrayXXd pc = preds.max(kPredFloor).min(kPredCeil);
  Eigen::ArrayXd mc = mean_pred.max(kPredFloor).min(kPredCeil);

  Eigen::ArrayXXd log_q = pc.log();
  Eigen::ArrayXXd log_q1 = (-pc).log1p();
  Eigen::ArrayXd log_m = mc.log();
  Eigen::ArrayXd log_m1 = (-mc).log1p();

  // Per (sample, point) log-ratio terms, each clamped to +-cap.
  Eigen::ArrayXXd t1 =
      ((-log_q).rowwise() + log_m.transpose()).min(cap.cap).max(-cap.cap);
  Eigen::ArrayXXd t2 =
      ((-log_q1).rowwise() + log_m1.transpose()).min(cap.cap).max(-cap.cap);

  Eigen::ArrayXd r = mc * t1.colwise().mean().transpose() +
                     (1.0 - mc) * t2.colwise().mean().transpose();
  r = (r < 0.0 && r > -1e-12).select(0.0, r);

  InformativenessEstimate est;
  est.r_hat = r.matrix();
  est.mean_pred = mean_pred.matrix();
  est.sample_count = static_cast<int>(s_count);
  return est;
}

int select_query(const InformativenessEstimate& est) {
  if (est.r_hat.size() == 0) {
    throw std::invalid_argument("select_query: empty estimate");
  }
  int best = 0;
  for (int i = 1; i < est.r_hat.size(); ++i) {
    if (est.r_hat(i) > est.r_hat(best)) best = i;
  }
  return best;
}

PairedDraw paired_sample(const std::function<Hypothesis()>& p_draw,
                         const std::function<Hypothesis()>& q_draw,
                         const PairedSampleConfig& cfg, const Dataset& data,
                         Rng& rng) {
  if (!(cfg.distance_threshold > 0.0)) {
    throw std::invalid_argument("paired_sample: threshold must be positive");
  }
  if (cfg.max_rejections < 1) {
    throw std::invalid_argument("paired_sample: max_rejections must be >= 1");
  }
  Hypothesis h1 = p_draw();
  Eigen::VectorXd pred1 = predictions(h1, data);
  for (int k = 0; k < cfg.max_rejections; ++k) {
    Hypothesis h2 = q_draw();
    Eigen::VectorXd pred2 = predictions(h2, data);
    double dist = weighted_l2(pred1, pred2, data.weights());
    if (dist >= cfg.distance_threshold) {
      PairedDraw out;
      out.outcome = PairedOutcome::kPaired;
      out.rejections = k;
      out.hypothesis = rng.uniform() < 0.5 ? std::move(h1) : std::move(h2);
      return out;
    }
  }
  return {std::move(h1), PairedOutcome::kFallback, cfg.max_rejections};
}

}  // namespace actlr
