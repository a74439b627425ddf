#include "actlr/metrics.hpp"

#include <cmath>
#include <stdexcept>

namespace actlr {

double weighted_l2(const Hypothesis& h1, const Hypothesis& h2,
                   const Dataset& data) {
  if (h1.theta.size() != data.dim() || h2.theta.size() != data.dim()) {
    throw std::invalid_argument("weighted_l2: dimension mismatch");
  }
  return weighted_l2(predictions(h1, data), predictions(h2, data),
                     data.weights());
}

double weighted_l2(const Eigen::VectorXd& pred1, const Eigen::VectorXd& pred2,
                   const Eigen::VectorXd& weights) {
  if (pred1.size() != pred2.size() || pred1.size() != weights.size()) {
    throw std::invalid_argument("weighted_l2: length mismatch");
  }
  double s = (weights.array() * (pred1 - pred2).array().square()).sum();
  return std::sqrt(std::max(s, 0.0));
}

double kl_binary(double p, double q, LogRatioCap cap) {
  if (!(cap.cap > 0.0)) {
    throw std::invalid_argument("kl_binary: cap must be positive");
  }
  if (!(p > 0.0 && p < 1.0 && q > 0.0 && q < 1.0)) {
    throw std::domain_error("kl_binary: arguments must lie in (0,1)");
  }
  // log1p keeps the complement ratio accurate when p or q is near 1.
  double lr1 = std::log(p) - std::log(q);
  double lr2 = std::log1p(-p) - std::log1p(-q);
  lr1 = std::min(std::max(lr1, -cap.cap), cap.cap);
  lr2 = std::min(std::max(lr2, -cap.cap), cap.cap);
  double v = p * lr1 + (1.0 - p) * lr2;
  if (v < 0.0 && v > -1e-12) return 0.0;
  return v;
}

double cross_entropy_loss(double pred, int y) {
  if (!(pred > 0.0 && pred < 1.0)) {
    throw std::domain_error("cross_entropy_loss: pred must lie in (0,1)");
  }
  if (y != 0 && y != 1) {
    throw std::invalid_argument("cross_entropy_loss: label must be 0/1");
  }
  return y == 1 ? -std::log(pred) : -std::log1p(-pred);
}

}  // namespace actlr
