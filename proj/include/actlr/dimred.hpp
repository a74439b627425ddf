#pragma once

#include "actlr/model.hpp"

namespace actlr {

// Orthonormal basis of a linear subspace of R^d, stored column-wise.
class Subspace {
 public:
  // basis: ambient_dim x dim matrix with orthonormal columns (validated).
  Subspace(Eigen::MatrixXd basis, int ambient_dim);
  static Subspace zero(int ambient_dim);

  int dim() const { return static_cast<int>(basis_.cols()); }
  int ambient_dim() const { return ambient_dim_; }
  const Eigen::MatrixXd& basis() const { return basis_; }

  // Coefficients of the orthogonal projection in the basis coordinates.
  Eigen::VectorXd coordinates(const Eigen::VectorXd& x) const;
  // Ambient-space vector for given basis coordinates.
  Eigen::VectorXd embed(const Eigen::VectorXd& coords) const;

 private:
  Eigen::MatrixXd basis_;
  int ambient_dim_;
};

// Norm of the component of x orthogonal to the subspace.
double dist_to_subspace(const Eigen::VectorXd& x, const Subspace& s);

// True iff the pool mass at distance >= c*kappa from the subspace is <= kappa.
bool is_significant(const Subspace& s, const Dataset& data, double c,
                    double kappa);

// Greedy construction: while the current subspace is not (c,kappa)-significant,
// scan an orthonormal completion of its basis and append the direction b
// (sign chosen over +-b) maximizing the pool mass with <x,b> >= c*kappa/sqrt(d).
// Every appended direction meets that threshold with mass >= kappa/d.
Subspace dimension_reduction(const Dataset& data, double c, double kappa);

// Replace each point by its projection expressed in basis coordinates;
// weights and r2_bound carry over.
Dataset project_pool(const Dataset& data, const Subspace& s);

}  // namespace actlr
