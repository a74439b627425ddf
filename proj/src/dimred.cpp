#include "actlr/dimred.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

namespace actlr {

namespace {
constexpr double kOrthoTol = 1e-10;
constexpr double kResidualSkip = 1e-12;
}  // namespace

Subspace::Subspace(Eigen::MatrixXd basis, int ambient_dim)
    : basis_(std::move(basis)), ambient_dim_(ambient_dim) {
  if (ambient_dim_ < 0 || basis_.rows() != ambient_dim_ ||
      basis_.cols() > ambient_dim_) {
    throw std::invalid_argument("Subspace: basis shape mismatch");
  }
  if (basis_.cols() > 0) {
    Eigen::MatrixXd gram = basis_.transpose() * basis_;
    gram.diagonal().array() -= 1.0;
    if (gram.cwiseAbs().maxCoeff() > kOrthoTol) {
      throw std::invalid_argument("Subspace: basis not orthonormal");
    }
  }
}

Subspace Subspace::zero(int ambient_dim) {
  return Subspace(Eigen::MatrixXd(ambient_dim, 0), ambient_dim);
}

Eigen::VectorXd Subspace::coordinates(const Eigen::VectorXd& x) const {
  if (x.size() != ambient_dim_) {
    throw std::invalid_argument("Subspace: vector dimension mismatch");
  }
  return basis_.transpose() * x;
}

Eigen::VectorXd Subspace::embed(const Eigen::VectorXd& coords) const {
  if (coords.size() != basis_.cols()) {
    throw std::invalid_argument("Subspace: coordinate dimension mismatch");
  }
  return basis_ * coords;
}

double dist_to_subspace(const Eigen::VectorXd& x, const Subspace& s) {
  if (x.size() != s.ambient_dim()) {
    throw std::invalid_argument("dist_to_subspace: dimension mismatch");
  }
  if (s.dim() == 0) return x.norm();
  return (x - s.basis() * (s.basis().transpose() * x)).norm();
}

bool is_significant(const Subspace& s, const Dataset& data, double c,
                    double kappa) {
  if (s.ambient_dim() != data.dim()) {
    throw std::invalid_argument("is_significant: dimension mismatch");
  }
  if (!(c > 0.0) || !(kappa > 0.0)) {
    throw std::invalid_argument("is_significant: c and kappa must be positive");
  }
  double threshold = c * kappa;
  double far_mass = 0.0;
  for (int i = 0; i < data.size(); ++i) {
    if (dist_to_subspace(data.point(i), s) >= threshold) {
      far_mass += data.weights()(i);
    }
  }
  return far_mass <= kappa;
}

namespace {

// Orthonormal completion of the accepted columns, built from the standard
// basis with two Gram-Schmidt passes; near-dependent directions are skipped.
std::vector<Eigen::VectorXd> complement_basis(const Eigen::MatrixXd& accepted) {
  int d = static_cast<int>(accepted.rows());
  std::vector<Eigen::VectorXd> comp;
  for (int j = 0; j < d; ++j) {
    Eigen::VectorXd r = Eigen::VectorXd::Zero(d);
    r(j) = 1.0;
    if (accepted.cols() > 0) {
      r -= accepted * (accepted.transpose() * r);
    }
    for (const Eigen::VectorXd& v : comp) {
      r -= v.dot(r) * v;
    }
    if (r.norm() < kResidualSkip) continue;
    r.normalize();
    if (accepted.cols() > 0) {
      r -= accepted * (accepted.transpose() * r);
    }
    for (const Eigen::VectorXd& v : comp) {
      r -= v.dot(r) * v;
    }
    double nrm = r.norm();
    if (nrm < kResidualSkip) continue;
    comp.push_back(r / nrm);
  }
  return comp;
}

}  // namespace

Subspace dimension_reduction(const Dataset& data, double c, double kappa) {
  if (!(c > 0.0) || !(kappa > 0.0 && kappa < 1.0)) {
    throw std::invalid_argument(
        "dimension_reduction: need c > 0 and kappa in (0,1)");
  }
  int d = data.dim();
  Eigen::MatrixXd basis(d, 0);
  if (d == 0) return Subspace(basis, d);

  double threshold = c * kappa / std::sqrt(static_cast<double>(d));
  for (int round = 0; round < d; ++round) {
    Subspace current(basis, d);
    if (is_significant(current, data, c, kappa)) break;

    std::vector<Eigen::VectorXd> candidates = complement_basis(basis);
    if (candidates.empty()) break;

    double best_mass = -1.0;
    Eigen::VectorXd best;
    for (const Eigen::VectorXd& b : candidates) {
      Eigen::VectorXd proj = data.points() * b;
      double plus = 0.0;
      double minus = 0.0;
      for (int i = 0; i < data.size(); ++i) {
        if (proj(i) >= threshold) plus += data.weights()(i);
        if (-proj(i) >= threshold) minus += data.weights()(i);
      }
      if (plus > best_mass) {
        best_mass = plus;
        best = b;
      }
      if (minus > best_mass) {
        best_mass = minus;
        best = -b;
      }
    }
    basis.conservativeResize(Eigen::NoChange, basis.cols() + 1);
    basis.col(basis.cols() - 1) = best;
  }
  return Subspace(std::move(basis), d);
}

Dataset project_pool(const Dataset& data, const Subspace& s) {
  if (s.ambient_dim() != data.dim()) {
    throw std::invalid_argument("project_pool: dimension mismatch");
  }
  Eigen::MatrixXd coords = data.points() * s.basis();
  return Dataset(std::move(coords), data.weights(), data.r2_bound());
}

}  // namespace actlr
