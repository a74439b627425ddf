#include <cmath>
#include <stdexcept>
#include <vector>

#include "actlr/metrics.hpp"
#include "actlr/query_select.hpp"
#include "actlr/rng.hpp"
#include "doctest.h"

using namespace actlr;

namespace {

Hypothesis hyp1(double theta, double gamma = 0.0) {
  Eigen::VectorXd t(1);
  t << theta;
  return Hypothesis{t, LinkFunction::sigmoid(), gamma};
}

Dataset one_point_pool() {
  Eigen::MatrixXd pts(1, 1);
  pts << 1.0;
  return Dataset::with_uniform_weights(pts);
}

}  // namespace

TEST_SUITE("query_select") {

TEST_CASE("identical samples carry no information") {
  Eigen::MatrixXd pts(4, 1);
  pts << -1.0, -0.2, 0.4, 1.0;
  Dataset data = Dataset::with_uniform_weights(pts);
  std::vector<Hypothesis> samples(8, hyp1(1.3));
  InformativenessEstimate est = estimate_r(samples, data);
  REQUIRE(est.r_hat.size() == 4);
  CHECK(est.sample_count == 8);
  for (int i = 0; i < 4; ++i) CHECK(est.r_hat(i) == 0.0);
  CHECK_THROWS_AS(estimate_r({}, data), std::invalid_argument);
  CHECK_THROWS_AS(estimate_r(samples, data, LogRatioCap{0.0}),
                  std::invalid_argument);
}

TEST_CASE("two-sample mixture matches the closed form") {
  Dataset data = one_point_pool();
  double t = std::log(9.0);
  std::vector<Hypothesis> samples = {hyp1(t), hyp1(-t)};

  double p1 = predict(samples[0], data.point(0));
  double p2 = predict(samples[1], data.point(0));
  double mean = 0.5 * (p1 + p2);
  double expected = 0.5 * kl_binary(mean, p1) + 0.5 * kl_binary(mean, p2);

  InformativenessEstimate est = estimate_r(samples, data);
  CHECK(est.mean_pred(0) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(est.r_hat(0) == doctest::Approx(expected).epsilon(1e-12));
  CHECK(est.r_hat(0) == doctest::Approx(0.5108).epsilon(1e-3));
}

TEST_CASE("a point every hypothesis agrees on is never informative") {
  RarePointInstance inst = make_example1_instance(0.1);
  Rng rng(101);
  std::vector<Hypothesis> samples;
  for (int i = 0; i < 32; ++i) samples.push_back(hyp1(rng.uniform(-8.0, 8.0)));
  InformativenessEstimate est = estimate_r(samples, *inst.data);
  CHECK(est.r_hat(0) == 0.0);
  CHECK(est.r_hat(1) > 0.0);
}

TEST_CASE("mean predictions respect the clip band") {
  Eigen::MatrixXd pts(3, 1);
  pts << -1.0, 0.0, 1.0;
  Dataset data = Dataset::with_uniform_weights(pts);
  std::vector<Hypothesis> samples;
  Rng rng(103);
  for (int i = 0; i < 50; ++i) {
    samples.push_back(hyp1(rng.uniform(-30.0, 30.0), 0.02));
  }
  InformativenessEstimate est = estimate_r(samples, data);
  CHECK(est.mean_pred.minCoeff() >= 0.02);
  CHECK(est.mean_pred.maxCoeff() <= 0.98);
  CHECK(est.r_hat.minCoeff() >= 0.0);
}

TEST_CASE("sampled estimate converges to the discrete mixture value") {
  Eigen::MatrixXd pts(5, 2);
  pts << 1.0, 0.0, 0.0, 1.0, -0.5, 0.5, 0.8, 0.6, -1.0, -1.0;
  Dataset data = Dataset::with_uniform_weights(pts);

  std::vector<Hypothesis> support;
  Eigen::VectorXd t(2);
  t << 2.0, -1.0;
  support.push_back(Hypothesis{t});
  t << -1.5, 0.5;
  support.push_back(Hypothesis{t});
  t << 0.3, 1.8;
  support.push_back(Hypothesis{t});

  // Closed-form informativeness of the uniform 3-hypothesis mixture.
  Eigen::VectorXd exact(5);
  for (int x = 0; x < 5; ++x) {
    double mean = 0.0;
    for (const Hypothesis& h : support) mean += predict(h, data.point(x));
    mean /= 3.0;
    double r = 0.0;
    for (const Hypothesis& h : support) {
      r += kl_binary(mean, predict(h, data.point(x)));
    }
    exact(x) = r / 3.0;
  }

  Rng rng(107);
  std::vector<Hypothesis> samples;
  samples.reserve(100000);
  for (int s = 0; s < 100000; ++s) {
    samples.push_back(support[static_cast<std::size_t>(rng.uniform_int(3))]);
  }
  InformativenessEstimate est = estimate_r(samples, data);
  for (int x = 0; x < 5; ++x) {
    CHECK(std::abs(est.r_hat(x) - exact(x)) < 0.01);
  }
}

TEST_CASE("select_query picks the argmax with lowest-index ties") {
  InformativenessEstimate est;
  est.r_hat.resize(3);
  est.r_hat << 0.0, 0.3, 0.1;
  CHECK(select_query(est) == 1);

  est.r_hat = Eigen::VectorXd::Zero(4);
  CHECK(select_query(est) == 0);

  est.r_hat.resize(6);
  est.r_hat << 0.1, 0.2, 0.7, 0.3, 0.1, 0.7;
  CHECK(select_query(est) == 2);

  est.r_hat.resize(0);
  CHECK_THROWS_AS(select_query(est), std::invalid_argument);
}

TEST_CASE("select_query is invariant under positive rescaling") {
  Rng rng(109);
  for (int rep = 0; rep < 100; ++rep) {
    InformativenessEstimate est;
    est.r_hat.resize(7);
    for (int i = 0; i < 7; ++i) est.r_hat(i) = rng.uniform();
    int pick = select_query(est);
    for (double scale : {0.01, 3.0, 1e6}) {
      InformativenessEstimate scaled;
      scaled.r_hat = scale * est.r_hat;
      CHECK(select_query(scaled) == pick);
    }
  }
}

TEST_CASE("paired_sample falls back when p and q coincide") {
  Dataset data = one_point_pool();
  Hypothesis h = hyp1(0.7);
  PairedSampleConfig cfg;
  cfg.distance_threshold = 0.1;
  cfg.max_rejections = 50;
  Rng rng(113);
  int q_calls = 0;
  PairedDraw out = paired_sample(
      [&] { return h; },
      [&] {
        ++q_calls;
        return h;
      },
      cfg, data, rng);
  CHECK(out.outcome == PairedOutcome::kFallback);
  CHECK(out.rejections == 50);
  CHECK(q_calls == 50);
  CHECK(out.hypothesis.theta(0) == h.theta(0));

  cfg.distance_threshold = 0.0;
  CHECK_THROWS_AS(
      paired_sample([&] { return h; }, [&] { return h; }, cfg, data, rng),
      std::invalid_argument);
}

TEST_CASE("paired_sample returns each side of a far pair about half the time") {
  Dataset data = one_point_pool();
  Hypothesis ha = hyp1(4.0);
  Hypothesis hb = hyp1(-4.0);
  PairedSampleConfig cfg;
  cfg.distance_threshold = 0.5;

  Rng rng(127);
  int got_a = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    PairedDraw out = paired_sample([&] { return ha; }, [&] { return hb; },
                                   cfg, data, rng);
    REQUIRE(out.outcome == PairedOutcome::kPaired);
    CHECK(out.rejections == 0);
    if (out.hypothesis.theta(0) == ha.theta(0)) ++got_a;
  }
  double freq = got_a / 10000.0;
  CHECK(freq >= 0.47);
  CHECK(freq <= 0.53);
}

TEST_CASE("rejection filters hypotheses inside the threshold") {
  Dataset data = one_point_pool();
  Hypothesis ha = hyp1(0.0);
  Hypothesis far = hyp1(4.0);
  Hypothesis near = hyp1(0.1);
  PairedSampleConfig cfg;
  cfg.distance_threshold = 0.3;

  Rng rng(131);
  Rng qrng(137);
  for (int trial = 0; trial < 2000; ++trial) {
    PairedDraw out = paired_sample(
        [&] { return ha; },
        [&] { return qrng.bernoulli(0.5) ? far : near; }, cfg, data, rng);
    REQUIRE(out.outcome == PairedOutcome::kPaired);
    bool is_a = out.hypothesis.theta(0) == ha.theta(0);
    bool is_far = out.hypothesis.theta(0) == far.theta(0);
    CHECK((is_a || is_far));
  }
}

TEST_CASE("no hypothesis captures much more than half the output mass") {
  Dataset data = one_point_pool();
  std::vector<Hypothesis> support = {hyp1(-4.0), hyp1(0.0), hyp1(4.0)};
  // Pairwise prediction distances are >= 0.48, comfortably above 2*eps.
  double eps = 0.2;
  PairedSampleConfig cfg;
  cfg.distance_threshold = 2.0 * eps;

  // Heavily skewed source distribution: the worst case for output mass.
  const double weights[3] = {0.9, 0.05, 0.05};
  auto draw_from = [&](Rng& r) {
    double u = r.uniform();
    if (u < weights[0]) return support[0];
    if (u < weights[0] + weights[1]) return support[1];
    return support[2];
  };

  Rng prng(139);
  Rng qrng(149);
  Rng rng(151);
  int counts[3] = {0, 0, 0};
  for (int trial = 0; trial < 10000; ++trial) {
    PairedDraw out = paired_sample([&] { return draw_from(prng); },
                                   [&] { return draw_from(qrng); }, cfg, data,
                                   rng);
    REQUIRE(out.outcome == PairedOutcome::kPaired);
    for (int k = 0; k < 3; ++k) {
      if (out.hypothesis.theta(0) == support[static_cast<std::size_t>(k)]
                                         .theta(0)) {
        ++counts[k];
      }
    }
  }
  for (int k = 0; k < 3; ++k) {
    CHECK(static_cast<double>(counts[k]) / 10000.0 <= 0.55);
  }
}

}  // TEST_SUITE
