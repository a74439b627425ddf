#pragma once

#include "actlr/model.hpp"

namespace actlr {

// Magnitude bound applied to each log-ratio term inside KL evaluations.
struct LogRatioCap {
  double cap = 100.0;
};

// Weighted l2 distance between prediction vectors over the pool:
// sqrt(sum_x weight(x) * (h1(x) - h2(x))^2).
double weighted_l2(const Hypothesis& h1, const Hypothesis& h2,
                   const Dataset& data);

// Same distance given precomputed prediction vectors.
double weighted_l2(const Eigen::VectorXd& pred1, const Eigen::VectorXd& pred2,
                   const Eigen::VectorXd& weights);

// Binary KL divergence p*log(p/q) + (1-p)*log((1-p)/(1-q)), with each
// log-ratio term clamped to [-cap, cap] before combining. Tiny negative
// results from rounding (above -1e-12) are mapped to 0.
double kl_binary(double p, double q, LogRatioCap cap = {});

// Cross-entropy penalty: -log(pred) if y=1, -log(1-pred) if y=0.
double cross_entropy_loss(double pred, int y);

}  // namespace actlr
