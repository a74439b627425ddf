#pragma once

// Test-only oracles: adaptive quadrature for 1-d posterior moments and a
// rejection sampler for the uniform ball. Written independently of the
// library's samplers so they can vouch for them.

#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

#include "actlr/posterior.hpp"
#include "actlr/rng.hpp"

namespace testsupport {

inline double simpson(double a, double b, double fa, double fm, double fb) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

inline double adaptive_simpson_rec(const std::function<double(double)>& f,
                                   double a, double b, double fa, double fm,
                                   double fb, double whole, double tol,
                                   int depth) {
  double m = 0.5 * (a + b);
  double lm = 0.5 * (a + m);
  double rm = 0.5 * (m + b);
  double flm = f(lm);
  double frm = f(rm);
  double left = simpson(a, m, fa, flm, fm);
  double right = simpson(m, b, fm, frm, fb);
  if (depth <= 0 || std::abs(left + right - whole) <= 15.0 * tol) {
    return left + right + (left + right - whole) / 15.0;
  }
  return adaptive_simpson_rec(f, a, m, fa, flm, fm, left, tol / 2.0,
                              depth - 1) +
         adaptive_simpson_rec(f, m, b, fm, frm, fb, right, tol / 2.0,
                              depth - 1);
}

inline double adaptive_simpson(const std::function<double(double)>& f,
                               double a, double b, double tol = 1e-12,
                               int depth = 40) {
  double m = 0.5 * (a + b);
  double fa = f(a);
  double fm = f(m);
  double fb = f(b);
  double whole = simpson(a, b, fa, fm, fb);
  return adaptive_simpson_rec(f, a, b, fa, fm, fb, whole, tol, depth);
}

struct Moments {
  double mean = 0.0;
  double var = 0.0;
};

// Mean and variance of a 1-d posterior by quadrature over [-r1, r1].
// The log-density is shifted by its grid maximum before exponentiation.
inline Moments quadrature_moments(const actlr::Posterior& post) {
  double r1 = post.r1_bound();
  double shift = -std::numeric_limits<double>::infinity();
  for (int i = 0; i <= 2000; ++i) {
    Eigen::VectorXd t(1);
    t(0) = -r1 + 2.0 * r1 * i / 2000.0;
    shift = std::max(shift, post.log_density_unnormalized(t));
  }
  auto density = [&](double x) {
    Eigen::VectorXd t(1);
    t(0) = x;
    double ld = post.log_density_unnormalized(t);
    return std::isfinite(ld) ? std::exp(ld - shift) : 0.0;
  };
  double mass = adaptive_simpson(density, -r1, r1);
  if (!(mass > 0.0)) {
    throw std::runtime_error("quadrature_moments: zero mass");
  }
  double m1 =
      adaptive_simpson([&](double x) { return x * density(x); }, -r1, r1) /
      mass;
  double m2 = adaptive_simpson([&](double x) { return x * x * density(x); },
                               -r1, r1) /
              mass;
  return {m1, m2 - m1 * m1};
}

// Uniform draw from the d-ball of radius r: gaussian direction scaled by
// u^(1/d) so the radius has the correct density in every dimension.
inline Eigen::VectorXd uniform_ball_draw(int d, double r, actlr::Rng& rng) {
  Eigen::VectorXd x(d);
  double norm = 0.0;
  do {
    for (int i = 0; i < d; ++i) x(i) = rng.normal();
    norm = x.norm();
  } while (norm == 0.0);
  double radius = r * std::pow(rng.uniform(), 1.0 / d);
  return x * (radius / norm);
}

}  // namespace testsupport
