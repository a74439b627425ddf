#pragma once

#include <Eigen/Dense>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "actlr/rng.hpp"

namespace actlr {

// Clamp a probability into [gamma, 1-gamma]. gamma = 0 leaves z unchanged.
double clip(double z, double gamma);

// Response model mapping a score theta'x to a label probability.
// `forward` must be monotone non-decreasing and L-Lipschitz. The optional
// log_forward / log_complement / derivative fields give exact values of
// log f(a), log(1-f(a)) and f'(a); when absent, callers fall back to
// composing with std::log, which loses precision in the tails.
struct LinkFunction {
  std::string name;
  double lipschitz_const = 0.0;
  std::function<double(double)> forward;
  std::function<double(double)> log_forward;
  std::function<double(double)> log_complement;
  std::function<double(double)> derivative;

  bool is_sigmoid() const { return name == "sigmoid"; }

  static const LinkFunction& sigmoid();
  static const LinkFunction& probit();
};

// Numerically stable sigmoid and softplus, usable for any real argument.
double stable_sigmoid(double a);
double softplus(double a);

// Finite weighted pool of feature vectors. Immutable once built; the weight
// vector is the sampling marginal over the pool and must sum to 1.
class Dataset {
 public:
  Dataset(Eigen::MatrixXd points, Eigen::VectorXd weights, double r2_bound);

  // Uniform weights, r2_bound = max row norm.
  static Dataset with_uniform_weights(Eigen::MatrixXd points);

  int size() const { return static_cast<int>(points_.rows()); }
  int dim() const { return static_cast<int>(points_.cols()); }
  const Eigen::MatrixXd& points() const { return points_; }
  Eigen::VectorXd point(int i) const { return points_.row(i).transpose(); }
  const Eigen::VectorXd& weights() const { return weights_; }
  double r2_bound() const { return r2_bound_; }

 private:
  Eigen::MatrixXd points_;   // n x d, one point per row
  Eigen::VectorXd weights_;  // n, non-negative, sums to 1
  double r2_bound_;
};

using DatasetPtr = std::shared_ptr<const Dataset>;

// Parameter vector with link and clip level; h(x) = clip(link(theta'x), gamma).
struct Hypothesis {
  Eigen::VectorXd theta;
  LinkFunction link = LinkFunction::sigmoid();
  double gamma = 0.0;
};

double predict(const Hypothesis& h, const Eigen::VectorXd& x);

// Predictions over the whole pool, one entry per dataset row.
Eigen::VectorXd predictions(const Hypothesis& h, const Dataset& data);

// Label source. In bernoulli mode labels are drawn as Bernoulli(truth(x))
// with a private seeded generator; in replay mode stored labels are returned
// (repeat queries to a point repeat its stored label). Both modes count every
// label issued. Stateful: not safe to share across threads.
class LabelOracle {
 public:
  static LabelOracle bernoulli(DatasetPtr pool, Hypothesis truth,
                               std::uint64_t seed);
  static LabelOracle replay(DatasetPtr pool, std::vector<int> labels);

  int query(int point_index);
  int query_point(const Eigen::VectorXd& x);  // bernoulli mode only

  long query_count() const { return count_; }
  const Dataset& pool() const { return *pool_; }
  DatasetPtr pool_ptr() const { return pool_; }
  bool has_truth() const { return truth_.has_value(); }
  const Hypothesis& truth() const;

 private:
  LabelOracle(DatasetPtr pool, std::optional<Hypothesis> truth,
              std::vector<int> labels, std::uint64_t seed);

  DatasetPtr pool_;
  std::optional<Hypothesis> truth_;
  std::vector<int> labels_;
  Rng rng_;
  long count_ = 0;
};

int oracle_query(LabelOracle& oracle, const Eigen::VectorXd& x);

// Two-point instance on {0, 1} with weights (1-eps_prime, eps_prime) and a
// 1-d sigmoid family bounded by r1 = 10. The rare point carries all the
// information; it separates active from passive query strategies.
struct RarePointInstance {
  DatasetPtr data;
  double r1_bound = 10.0;
  double eps_prime = 0.0;
};

RarePointInstance make_example1_instance(double eps_prime);

}  // namespace actlr
