#include "actlr/eval.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace actlr {

namespace {

double objective(const Eigen::MatrixXd& xs, const Eigen::VectorXd& labels,
                 const Eigen::VectorXd& mult, const Eigen::VectorXd& theta,
                 double reg) {
  Eigen::VectorXd a = xs * theta;
  double loss = 0.0;
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    loss += mult(i) * (softplus(a(i)) - labels(i) * a(i));
  }
  return loss + reg * theta.squaredNorm();
}

Eigen::VectorXd gradient(const Eigen::MatrixXd& xs,
                         const Eigen::VectorXd& labels,
                         const Eigen::VectorXd& mult,
                         const Eigen::VectorXd& theta, double reg) {
  Eigen::VectorXd a = xs * theta;
  Eigen::VectorXd w(a.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    w(i) = mult(i) * (stable_sigmoid(a(i)) - labels(i));
  }
  return xs.transpose() * w + 2.0 * reg * theta;
}

Eigen::VectorXd project_ball(Eigen::VectorXd theta, double r1) {
  double nrm = theta.norm();
  if (std::isfinite(r1) && nrm > r1) {
    theta *= r1 / nrm;
  }
  return theta;
}

}  // namespace

FitOutcome fit_logistic(const Eigen::MatrixXd& xs, const Eigen::VectorXd& labels,
                        const Eigen::VectorXd& multiplicities,
                        const FitOptions& opts) {
  if (xs.rows() < 1) {
    throw std::invalid_argument("fit_logistic: no observations");
  }
  if (labels.size() != xs.rows() || multiplicities.size() != xs.rows()) {
    throw std::invalid_argument("fit_logistic: length mismatch");
  }
  if (!(opts.reg >= 0.0) || !(opts.tol > 0.0) || opts.max_iters < 1) {
    throw std::invalid_argument("fit_logistic: invalid options");
  }

  // Projected gradient descent with Barzilai-Borwein steps; backtracking
  // keeps the objective non-increasing.
  Eigen::VectorXd theta = Eigen::VectorXd::Zero(xs.cols());
  double obj = objective(xs, labels, multiplicities, theta, opts.reg);
  Eigen::VectorXd grad = gradient(xs, labels, multiplicities, theta, opts.reg);
  double step = 1.0 / std::max(1.0, multiplicities.sum());

  FitOutcome out;
  int iter = 0;
  for (; iter < opts.max_iters; ++iter) {
    if (grad.norm() <= opts.tol) {
      out.converged = true;
      break;
    }
    double t = step;
    Eigen::VectorXd next;
    double next_obj = obj;
    bool moved = false;
    for (int bt = 0; bt < 60; ++bt) {
      next = project_ball(theta - t * grad, opts.r1_bound);
      next_obj = objective(xs, labels, multiplicities, next, opts.reg);
      double decrease = (theta - next).squaredNorm() / std::max(t, 1e-300);
      if (next_obj <= obj - 1e-4 * decrease) {
        moved = true;
        break;
      }
      t *= 0.5;
    }
    if (!moved || (theta - next).norm() == 0.0) {
      // No descent step left at this scale; treat as converged if the
      // projected step is already stationary.
      out.converged = (theta - project_ball(theta - grad, opts.r1_bound))
                          .norm() <= opts.tol;
      break;
    }
    Eigen::VectorXd new_grad =
        gradient(xs, labels, multiplicities, next, opts.reg);
    Eigen::VectorXd s = next - theta;
    Eigen::VectorXd y = new_grad - grad;
    double sy = s.dot(y);
    step = sy > 1e-300 ? s.squaredNorm() / sy : t * 2.0;
    step = std::min(std::max(step, 1e-12), 1e12);
    theta = std::move(next);
    grad = std::move(new_grad);
    obj = next_obj;
  }

  out.hypothesis = Hypothesis{std::move(theta), LinkFunction::sigmoid(), 0.0};
  out.iterations = iter;
  out.grad_norm = grad.norm();
  out.objective = obj;
  return out;
}

FitOutcome fit_logistic(const ObservationTranscript& obs,
                        const FitOptions& opts) {
  const auto& entries = obs.entries();
  if (entries.empty()) {
    throw std::invalid_argument("fit_logistic: empty transcript");
  }
  Eigen::Index m = static_cast<Eigen::Index>(entries.size());
  Eigen::MatrixXd xs(m, obs.data().dim());
  Eigen::VectorXd labels(m);
  Eigen::VectorXd mult(m);
  for (Eigen::Index i = 0; i < m; ++i) {
    const Observation& o = entries[static_cast<std::size_t>(i)];
    xs.row(i) = obs.data().points().row(o.point);
    labels(i) = o.label;
    mult(i) = o.multiplicity;
  }
  return fit_logistic(xs, labels, mult, opts);
}

double accuracy(const Eigen::VectorXd& preds, const std::vector<int>& labels) {
  if (preds.size() == 0 ||
      preds.size() != static_cast<Eigen::Index>(labels.size())) {
    throw std::invalid_argument("accuracy: length mismatch or empty");
  }
  long correct = 0;
  for (Eigen::Index i = 0; i < preds.size(); ++i) {
    int predicted = preds(i) >= 0.5 ? 1 : 0;
    if (predicted == labels[static_cast<std::size_t>(i)]) ++correct;
  }
  return static_cast<double>(correct) / static_cast<double>(preds.size());
}

double accuracy(const Hypothesis& h, const Eigen::MatrixXd& points,
                const std::vector<int>& labels) {
  Eigen::VectorXd scores = points * h.theta;
  Eigen::VectorXd preds = scores.unaryExpr([&](double a) {
    return clip(h.link.forward(a), h.gamma);
  });
  return accuracy(preds, labels);
}

double l2_to_truth(const Hypothesis& h, const LabelOracle& oracle,
                   const Dataset& data) {
  if (!oracle.has_truth()) {
    throw std::logic_error("l2_to_truth: oracle has no ground truth");
  }
  return weighted_l2(h, oracle.truth(), data);
}

double expected_accuracy(const Hypothesis& h, const LabelOracle& oracle,
                         const Dataset& data) {
  if (!oracle.has_truth()) {
    throw std::logic_error("expected_accuracy: oracle has no ground truth");
  }
  double total = 0.0;
  for (int i = 0; i < data.size(); ++i) {
    double p = predict(oracle.truth(), data.point(i));
    bool positive = predict(h, data.point(i)) >= 0.5;
    total += data.weights()(i) * (positive ? p : 1.0 - p);
  }
  return total;
}

namespace {

RunResult run_strategy(Strategy strategy, ProblemInstance& prob, long budget,
                       const CurveOptions& opts, Rng& rng) {
  switch (strategy) {
    case Strategy::kOurs:
      return active_simple(prob, static_cast<int>(budget), opts.learner, rng);
    case Strategy::kPass:
      return passive_baseline(prob, budget, rng);
    case Strategy::kLss:
      return lss_baseline(prob, budget, rng);
    case Strategy::kClipped: {
      ScheduleParams sched =
          opts.schedule ? *opts.schedule
                        : default_schedule(*prob.data, prob.r1_bound,
                                           prob.epsilon, budget);
      sched.budget_cap = std::min(sched.budget_cap, budget);
      return clipped_active(prob, sched, opts.learner, rng);
    }
    case Strategy::kReduced: {
      std::optional<ScheduleParams> sched = opts.schedule;
      if (!sched) {
        sched = default_schedule(*prob.data, prob.r1_bound, prob.epsilon,
                                 budget);
      } else {
        sched->budget_cap = std::min(sched->budget_cap, budget);
      }
      return active_logistic_regression(prob, sched, opts.learner, rng);
    }
  }
  throw std::logic_error("run_strategy: unknown strategy");
}

}  // namespace

std::vector<LearningCurve> learning_curve(Strategy strategy,
                                          const ProblemInstance& prob,
                                          const EvalSplit& split,
                                          const std::vector<long>& budgets,
                                          int trials, const CurveOptions& opts,
                                          Rng& rng) {
  if (budgets.empty()) {
    throw std::invalid_argument("learning_curve: budgets empty");
  }
  for (std::size_t i = 0; i + 1 < budgets.size(); ++i) {
    if (budgets[i] >= budgets[i + 1]) {
      throw std::invalid_argument("learning_curve: budgets must increase");
    }
  }
  if (budgets.front() < 1 || trials < 1) {
    throw std::invalid_argument("learning_curve: invalid budgets or trials");
  }
  if (split.train_labels &&
      static_cast<int>(split.train_labels->size()) != prob.data->size()) {
    throw std::invalid_argument("learning_curve: train label count mismatch");
  }
  if (!split.train_labels && !prob.oracle.has_truth()) {
    throw std::invalid_argument(
        "learning_curve: no train labels and no oracle truth to score against");
  }
  if (split.test_points &&
      static_cast<int>(split.test_labels.size()) != split.test_points->rows()) {
    throw std::invalid_argument("learning_curve: test label count mismatch");
  }

  std::vector<LearningCurve> curves;
  curves.reserve(static_cast<std::size_t>(trials));
  for (int trial = 0; trial < trials; ++trial) {
    std::uint64_t trial_seed = rng.next_u64();
    LearningCurve curve;
    curve.strategy = strategy;
    curve.trial_seed = trial_seed;

    ProblemInstance inst = prob;
    if (prob.oracle.has_truth()) {
      inst.oracle = LabelOracle::bernoulli(
          prob.data, prob.oracle.truth(), Rng::mix(trial_seed, Rng::hash_name("oracle")));
    }
    Rng run_rng(Rng::mix(trial_seed, Rng::hash_name("learner")));

    try {
      curve.run = run_strategy(strategy, inst, budgets.back(), opts, run_rng);
    } catch (const std::exception& e) {
      curve.failed = true;
      curve.error = e.what();
      curves.push_back(std::move(curve));
      continue;
    }

    ObservationTranscript prefix(prob.data);
    std::size_t consumed = 0;
    for (long budget : budgets) {
      CurveRow row;
      row.budget = budget;
      if (static_cast<long>(curve.run.log.size()) < budget) {
        row.valid = false;
        curve.rows.push_back(row);
        continue;
      }
      while (consumed < static_cast<std::size_t>(budget)) {
        const QueryRecord& q = curve.run.log[consumed];
        prefix = prefix.appended(q.point, q.label);
        ++consumed;
      }
      FitOptions fopts = opts.fit;
      fopts.r1_bound = prob.r1_bound;
      Hypothesis fitted = fit_logistic(prefix, fopts).hypothesis;

      row.train_acc =
          split.train_labels
              ? accuracy(fitted, prob.data->points(), *split.train_labels)
              : expected_accuracy(fitted, prob.oracle, *prob.data);
      if (split.test_points) {
        row.test_acc = accuracy(fitted, *split.test_points, split.test_labels);
        row.has_test = true;
      }
      if (prob.oracle.has_truth()) {
        row.l2 = l2_to_truth(fitted, prob.oracle, *prob.data);
        row.has_l2 = true;
      }
      row.valid = true;
      curve.rows.push_back(row);
    }
    curves.push_back(std::move(curve));
  }
  return curves;
}

}  // namespace actlr
