#include "actlr/model.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace actlr {

double clip(double z, double gamma) {
  if (!(gamma >= 0.0 && gamma < 0.5)) {
    throw std::invalid_argument("clip: gamma must lie in [0, 1/2)");
  }
  return std::min(std::max(z, gamma), 1.0 - gamma);
}

double stable_sigmoid(double a) {
  if (a >= 0.0) {
    return 1.0 / (1.0 + std::exp(-a));
  }
  double e = std::exp(a);
  return e / (1.0 + e);
}

double softplus(double a) {
  if (a > 0.0) {
    return a + std::log1p(std::exp(-a));
  }
  return std::log1p(std::exp(a));
}

const LinkFunction& LinkFunction::sigmoid() {
  static const LinkFunction f = [] {
    LinkFunction g;
    g.name = "sigmoid";
    g.lipschitz_const = 0.25;
    g.forward = [](double a) { return stable_sigmoid(a); };
    g.log_forward = [](double a) { return -softplus(-a); };
    g.log_complement = [](double a) { return -softplus(a); };
    g.derivative = [](double a) {
      return stable_sigmoid(a) * stable_sigmoid(-a);
    };
    return g;
  }();
  return f;
}

const LinkFunction& LinkFunction::probit() {
  static const LinkFunction f = [] {
    const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
    const double inv_sqrt_2pi = 1.0 / std::sqrt(2.0 * std::numbers::pi);
    LinkFunction g;
    g.name = "probit";
    g.lipschitz_const = inv_sqrt_2pi;
    g.forward = [inv_sqrt2](double a) {
      return 0.5 * std::erfc(-a * inv_sqrt2);
    };
    g.log_forward = [inv_sqrt2](double a) {
      return std::log(0.5 * std::erfc(-a * inv_sqrt2));
    };
    g.log_complement = [inv_sqrt2](double a) {
      return std::log(0.5 * std::erfc(a * inv_sqrt2));
    };
    g.derivative = [inv_sqrt_2pi](double a) {
      return inv_sqrt_2pi * std::exp(-0.5 * a * a);
    };
    return g;
  }();
  return f;
}

Dataset::Dataset(Eigen::MatrixXd points, Eigen::VectorXd weights,
                 double r2_bound)
    : points_(std::move(points)),
      weights_(std::move(weights)),
      r2_bound_(r2_bound) {
  if (points_.rows() < 1) {
    throw std::invalid_argument("Dataset: empty pool");
  }
  if (weights_.size() != points_.rows()) {
    throw std::invalid_argument("Dataset: weight count != point count");
  }
  if ((weights_.array() < 0.0).any()) {
    throw std::invalid_argument("Dataset: negative weight");
  }
  if (std::abs(weights_.sum() - 1.0) > 1e-9) {
    throw std::invalid_argument("Dataset: weights must sum to 1");
  }
  if (!(r2_bound_ >= 0.0)) {
    throw std::invalid_argument("Dataset: r2_bound must be non-negative");
  }
  double max_norm = points_.rowwise().norm().maxCoeff();
  if (max_norm > r2_bound_ + 1e-9) {
    throw std::invalid_argument("Dataset: point norm exceeds r2_bound");
  }
}

Dataset Dataset::with_uniform_weights(Eigen::MatrixXd points) {
  Eigen::Index n = points.rows();
  if (n < 1) {
    throw std::invalid_argument("Dataset: empty pool");
  }
  Eigen::VectorXd w = Eigen::VectorXd::Constant(n, 1.0 / static_cast<double>(n));
  double r2 = points.rowwise().norm().maxCoeff();
  return Dataset(std::move(points), std::move(w), r2);
}

double predict(const Hypothesis& h, const Eigen::VectorXd& x) {
  if (x.size() != h.theta.size()) {
    throw std::invalid_argument("predict: dimension mismatch");
  }
  return clip(h.link.forward(h.theta.dot(x)), h.gamma);
}

Eigen::VectorXd predictions(const Hypothesis& h, const Dataset& data) {
  if (data.dim() != h.theta.size()) {
    throw std::invalid_argument("predictions: dimension mismatch");
  }
  Eigen::VectorXd scores = data.points() * h.theta;
  double lo = h.gamma;
  double hi = 1.0 - h.gamma;
  if (h.link.is_sigmoid()) {
    return scores.unaryExpr([lo, hi](double a) {
      return std::min(std::max(stable_sigmoid(a), lo), hi);
    });
  }
  return scores.unaryExpr([&](double a) {
    return std::min(std::max(h.link.forward(a), lo), hi);
  });
}

LabelOracle::LabelOracle(DatasetPtr pool, std::optional<Hypothesis> truth,
                         std::vector<int> labels, std::uint64_t seed)
    : pool_(std::move(pool)),
      truth_(std::move(truth)),
      labels_(std::move(labels)),
      rng_(seed) {
  if (!pool_) {
    throw std::invalid_argument("LabelOracle: null pool");
  }
  if (truth_ && truth_->theta.size() != pool_->dim()) {
    throw std::invalid_argument("LabelOracle: truth dimension mismatch");
  }
  if (!truth_ && static_cast<int>(labels_.size()) != pool_->size()) {
    throw std::invalid_argument("LabelOracle: replay needs one label per point");
  }
  for (int y : labels_) {
    if (y != 0 && y != 1) {
      throw std::invalid_argument("LabelOracle: labels must be 0/1");
    }
  }
}

LabelOracle LabelOracle::bernoulli(DatasetPtr pool, Hypothesis truth,
                                   std::uint64_t seed) {
  return LabelOracle(std::move(pool), std::move(truth), {}, seed);
}

LabelOracle LabelOracle::replay(DatasetPtr pool, std::vector<int> labels) {
  return LabelOracle(std::move(pool), std::nullopt, std::move(labels), 0);
}

int LabelOracle::query(int point_index) {
  if (point_index < 0 || point_index >= pool_->size()) {
    throw std::out_of_range("LabelOracle: point index out of range");
  }
  ++count_;
  if (truth_) {
    return rng_.bernoulli(predict(*truth_, pool_->point(point_index)));
  }
  return labels_[static_cast<std::size_t>(point_index)];
}

int LabelOracle::query_point(const Eigen::VectorXd& x) {
  if (!truth_) {
    throw std::logic_error("LabelOracle: replay oracle answers by index only");
  }
  ++count_;
  return rng_.bernoulli(predict(*truth_, x));
}

const Hypothesis& LabelOracle::truth() const {
  if (!truth_) {
    throw std::logic_error("LabelOracle: replay oracle has no truth");
  }
  return *truth_;
}

int oracle_query(LabelOracle& oracle, const Eigen::VectorXd& x) {
  return oracle.query_point(x);
}

RarePointInstance make_example1_instance(double eps_prime) {
  if (!(eps_prime > 0.0 && eps_prime < 1.0)) {
    throw std::invalid_argument("make_example1_instance: eps_prime in (0,1)");
  }
  Eigen::MatrixXd pts(2, 1);
  pts << 0.0, 1.0;
  Eigen::VectorXd w(2);
  w << 1.0 - eps_prime, eps_prime;
  RarePointInstance inst;
  inst.data = std::make_shared<Dataset>(std::move(pts), std::move(w), 1.0);
  inst.r1_bound = 10.0;
  inst.eps_prime = eps_prime;
  return inst;
}

}  // namespace actlr
