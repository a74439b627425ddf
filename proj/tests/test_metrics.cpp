#include <cmath>
#include <stdexcept>

#include "actlr/metrics.hpp"
#include "actlr/rng.hpp"
#include "doctest.h"

using namespace actlr;

TEST_SUITE("metrics") {

TEST_CASE("kl_binary closed-form values") {
  CHECK(kl_binary(0.5, 0.5) == 0.0);
  CHECK(kl_binary(0.75, 0.25) ==
        doctest::Approx(0.5 * std::log(3.0)).epsilon(1e-14));
  CHECK(kl_binary(0.75, 0.25) == doctest::Approx(0.54931).epsilon(1e-4));

  // One log ratio saturates at the cap, the other stays analytic.
  double q = std::exp(-200.0);
  double expected = 0.5 * 100.0 + 0.5 * (std::log(0.5) - std::log1p(-q));
  CHECK(kl_binary(0.5, q, LogRatioCap{100.0}) ==
        doctest::Approx(expected).epsilon(1e-14));
  CHECK(kl_binary(0.5, q, LogRatioCap{100.0}) ==
        doctest::Approx(49.653).epsilon(1e-4));
}

TEST_CASE("kl_binary rejects arguments on the boundary") {
  CHECK_THROWS_AS(kl_binary(0.0, 0.5), std::domain_error);
  CHECK_THROWS_AS(kl_binary(0.5, 0.0), std::domain_error);
  CHECK_THROWS_AS(kl_binary(1.0, 0.5), std::domain_error);
  CHECK_THROWS_AS(kl_binary(0.5, 1.0), std::domain_error);
  CHECK_THROWS_AS(kl_binary(0.5, 0.5, LogRatioCap{0.0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(kl_binary(0.5, 0.5, LogRatioCap{-3.0}),
                  std::invalid_argument);
}

TEST_CASE("kl_binary grid: non-negativity, identity, Pinsker") {
  for (int i = 0; i < 100; ++i) {
    double p = 0.01 + 0.98 * i / 99.0;
    for (int j = 0; j < 100; ++j) {
      double q = 0.01 + 0.98 * j / 99.0;
      double v = kl_binary(p, q);
      CHECK(v >= 0.0);
      if (i == j) {
        CHECK(v == 0.0);
      } else {
        CHECK(v > 0.0);
      }
      CHECK(v >= 2.0 * (p - q) * (p - q) - 1e-12);
    }
  }
}

TEST_CASE("kl_binary at matched extreme arguments is exactly zero") {
  CHECK(kl_binary(1e-15, 1e-15) == 0.0);
  CHECK(kl_binary(1.0 - 1e-15, 1.0 - 1e-15) == 0.0);
}

TEST_CASE("cross_entropy_loss values and bound") {
  CHECK(cross_entropy_loss(0.5, 1) ==
        doctest::Approx(std::log(2.0)).epsilon(1e-15));
  CHECK(cross_entropy_loss(0.5, 0) ==
        doctest::Approx(std::log(2.0)).epsilon(1e-15));
  CHECK(cross_entropy_loss(0.01, 1) ==
        doctest::Approx(std::log(100.0)).epsilon(1e-14));

  CHECK_THROWS_AS(cross_entropy_loss(0.0, 1), std::domain_error);
  CHECK_THROWS_AS(cross_entropy_loss(1.0, 0), std::domain_error);
  CHECK_THROWS_AS(cross_entropy_loss(0.5, 2), std::invalid_argument);

  Rng rng(23);
  for (int i = 0; i < 2000; ++i) {
    double gamma = rng.uniform(1e-4, 0.49);
    double pred = rng.uniform(gamma, 1.0 - gamma);
    double bound = std::log(1.0 / gamma);
    CHECK(cross_entropy_loss(pred, 0) <= bound + 1e-12);
    CHECK(cross_entropy_loss(pred, 1) <= bound + 1e-12);
  }
}

TEST_CASE("weighted_l2 hand-evaluated examples") {
  Eigen::VectorXd w(2);
  w << 0.5, 0.5;
  Eigen::VectorXd a(2), b(2);
  a << 1.0, 0.0;
  b << 0.0, 0.0;
  CHECK(weighted_l2(a, b, w) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));
  CHECK(weighted_l2(a, a, w) == 0.0);

  // Rare-point geometry: mass eps' at the only disagreement point.
  double eps_prime = 0.01;
  double delta = 0.37;
  Eigen::VectorXd w2(2), p1(2), p2(2);
  w2 << 1.0 - eps_prime, eps_prime;
  p1 << 0.5, 0.7;
  p2 << 0.5, 0.7 - delta;
  CHECK(weighted_l2(p1, p2, w2) ==
        doctest::Approx(std::sqrt(eps_prime) * delta).epsilon(1e-14));
}

TEST_CASE("weighted_l2 over hypotheses matches the prediction form") {
  Eigen::MatrixXd pts(2, 2);
  pts << 1.0, 0.0, 0.0, 1.0;
  Dataset data = Dataset::with_uniform_weights(pts);

  Eigen::VectorXd t1(2), t2(2);
  t1 << 800.0, -800.0;
  t2 << -800.0, -800.0;
  Hypothesis h1{t1};
  Hypothesis h2{t2};
  CHECK(weighted_l2(h1, h2, data) ==
        doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));
  CHECK(weighted_l2(h1, h1, data) == 0.0);
  CHECK(weighted_l2(h1, h2, data) == weighted_l2(h2, h1, data));

  Hypothesis bad{Eigen::VectorXd::Zero(3)};
  CHECK_THROWS_AS(weighted_l2(h1, bad, data), std::invalid_argument);
}

TEST_CASE("weighted_l2 triangle inequality on random triples") {
  Rng rng(31);
  Eigen::MatrixXd pts(20, 3);
  for (int i = 0; i < 20; ++i) {
    for (int j = 0; j < 3; ++j) pts(i, j) = rng.uniform(-2.0, 2.0);
  }
  Dataset data = Dataset::with_uniform_weights(pts);
  for (int t = 0; t < 1000; ++t) {
    Hypothesis h[3];
    for (int k = 0; k < 3; ++k) {
      Eigen::VectorXd theta(3);
      for (int j = 0; j < 3; ++j) theta(j) = rng.uniform(-6.0, 6.0);
      h[k] = Hypothesis{theta};
    }
    double d01 = weighted_l2(h[0], h[1], data);
    double d12 = weighted_l2(h[1], h[2], data);
    double d02 = weighted_l2(h[0], h[2], data);
    CHECK(d02 <= d01 + d12 + 1e-12);
    CHECK(d01 == weighted_l2(h[1], h[0], data));
  }
}

}  // TEST_SUITE
