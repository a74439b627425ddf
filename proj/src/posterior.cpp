#include "actlr/posterior.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>
#include <utility>

namespace actlr {

namespace {
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
}

ObservationTranscript::ObservationTranscript(DatasetPtr data)
    : data_(std::move(data)) {
  if (!data_) {
    throw std::invalid_argument("ObservationTranscript: null dataset");
  }
}

ObservationTranscript::ObservationTranscript(DatasetPtr data,
                                             std::vector<Observation> entries)
    : data_(std::move(data)), entries_(std::move(entries)) {
  if (!data_) {
    throw std::invalid_argument("ObservationTranscript: null dataset");
  }
  for (const Observation& o : entries_) {
    if (o.point < 0 || o.point >= data_->size()) {
      throw std::out_of_range("ObservationTranscript: point index");
    }
    if (o.label != 0 && o.label != 1) {
      throw std::invalid_argument("ObservationTranscript: label must be 0/1");
    }
    if (o.multiplicity < 1) {
      throw std::invalid_argument("ObservationTranscript: multiplicity < 1");
    }
  }
}

ObservationTranscript ObservationTranscript::appended(int point, int label,
                                                      int multiplicity) const {
  if (point < 0 || point >= data_->size()) {
    throw std::out_of_range("ObservationTranscript: point index");
  }
  if (label != 0 && label != 1) {
    throw std::invalid_argument("ObservationTranscript: label must be 0/1");
  }
  if (multiplicity < 1) {
    throw std::invalid_argument("ObservationTranscript: multiplicity < 1");
  }
  ObservationTranscript out(*this);
  if (!out.entries_.empty() && out.entries_.back().point == point &&
      out.entries_.back().label == label) {
    out.entries_.back().multiplicity += multiplicity;
  } else {
    out.entries_.push_back({point, label, multiplicity});
  }
  return out;
}

long ObservationTranscript::total_labels() const {
  long t = 0;
  for (const Observation& o : entries_) t += o.multiplicity;
  return t;
}

Posterior::Posterior(ObservationTranscript transcript, double gamma,
                     double r1_bound, LinkFunction link)
    : transcript_(std::move(transcript)),
      gamma_(gamma),
      r1_bound_(r1_bound),
      link_(std::move(link)) {
  if (!(gamma_ >= 0.0 && gamma_ < 0.5)) {
    throw std::invalid_argument("Posterior: gamma must lie in [0, 1/2)");
  }
  if (!(r1_bound_ > 0.0)) {
    throw std::invalid_argument("Posterior: r1_bound must be positive");
  }
  // Consolidate the transcript by (point, label); the density only depends
  // on the multiset of observations and a compact matrix evaluates faster.
  std::map<std::pair<int, int>, double> mult;
  for (const Observation& o : transcript_.entries()) {
    mult[{o.point, o.label}] += o.multiplicity;
  }
  const Dataset& data = transcript_.data();
  Eigen::Index m = static_cast<Eigen::Index>(mult.size());
  obs_points_.resize(m, data.dim());
  obs_labels_.resize(m);
  obs_mult_.resize(m);
  Eigen::Index i = 0;
  for (const auto& [key, count] : mult) {
    obs_points_.row(i) = data.points().row(key.first);
    obs_labels_(i) = key.second;
    obs_mult_(i) = count;
    ++i;
  }
}

double Posterior::log_density_unnormalized(const Eigen::VectorXd& theta) const {
  if (theta.size() != dim()) {
    throw std::invalid_argument("Posterior: theta dimension mismatch");
  }
  if (theta.norm() > r1_bound_) return kNegInf;
  if (obs_points_.rows() == 0) return 0.0;

  Eigen::VectorXd a = obs_points_ * theta;
  Eigen::ArrayXd lp(a.size());
  Eigen::ArrayXd lq(a.size());
  if (link_.is_sigmoid()) {
    for (Eigen::Index i = 0; i < a.size(); ++i) {
      lp(i) = -softplus(-a(i));  // log sigma(a)
      lq(i) = -softplus(a(i));   // log sigma(-a) = log(1 - sigma(a))
    }
  } else {
    for (Eigen::Index i = 0; i < a.size(); ++i) {
      lp(i) = link_.log_forward ? link_.log_forward(a(i))
                                : std::log(link_.forward(a(i)));
      lq(i) = link_.log_complement ? link_.log_complement(a(i))
                                   : std::log1p(-link_.forward(a(i)));
    }
  }
  if (gamma_ > 0.0) {
    double lo = std::log(gamma_);
    double hi = std::log1p(-gamma_);
    lp = lp.min(hi).max(lo);
    lq = lq.min(hi).max(lo);
  }
  Eigen::ArrayXd y = obs_labels_.array();
  return (obs_mult_.array() * (y * lp + (1.0 - y) * lq)).sum();
}

Eigen::VectorXd Posterior::grad_log_density(const Eigen::VectorXd& theta) const {
  if (theta.size() != dim()) {
    throw std::invalid_argument("Posterior: theta dimension mismatch");
  }
  if (theta.norm() > r1_bound_) {
    throw std::domain_error("Posterior: gradient outside the parameter ball");
  }
  if (obs_points_.rows() == 0) {
    return Eigen::VectorXd::Zero(dim());
  }
  Eigen::VectorXd a = obs_points_ * theta;
  Eigen::VectorXd w(a.size());
  if (link_.is_sigmoid()) {
    for (Eigen::Index i = 0; i < a.size(); ++i) {
      w(i) = obs_mult_(i) * (obs_labels_(i) - stable_sigmoid(a(i)));
    }
  } else {
    for (Eigen::Index i = 0; i < a.size(); ++i) {
      double f = link_.forward(a(i));
      double df = link_.derivative ? link_.derivative(a(i)) : 0.0;
      double denom = std::max(f * (1.0 - f), 1e-300);
      w(i) = obs_mult_(i) * df * (obs_labels_(i) - f) / denom;
    }
  }
  return obs_points_.transpose() * w;
}

Posterior Posterior::append_observation(int point, int label) const {
  return Posterior(transcript_.appended(point, label), gamma_, r1_bound_,
                   link_);
}

MalaChain::MalaChain(Posterior post, SamplerConfig cfg, Rng rng,
                     std::optional<Eigen::VectorXd> init,
                     std::optional<double> init_step)
    : post_(std::move(post)), cfg_(cfg), rng_(std::move(rng)) {
  if (!(cfg_.step_size > 0.0) || cfg_.burn_in < 0 || cfg_.thinning < 1 ||
      cfg_.chain_count < 1 || !(cfg_.target_acceptance > 0.0) ||
      !(cfg_.target_acceptance < 1.0)) {
    throw std::invalid_argument("MalaChain: invalid sampler config");
  }
  step_ = init_step.value_or(cfg_.step_size);
  int d = post_.dim();

  log_density_ = kNegInf;
  if (init && init->size() == d) {
    double ld = post_.log_density_unnormalized(*init);
    if (std::isfinite(ld)) {
      theta_ = *init;
      log_density_ = ld;
    }
  }
  if (!std::isfinite(log_density_)) {
    Eigen::VectorXd zero = Eigen::VectorXd::Zero(d);
    double ld = post_.log_density_unnormalized(zero);
    if (std::isfinite(ld)) {
      theta_ = zero;
      log_density_ = ld;
    }
  }
  for (int attempt = 0; attempt < 256 && !std::isfinite(log_density_);
       ++attempt) {
    Eigen::VectorXd dir(d);
    for (int i = 0; i < d; ++i) dir(i) = rng_.normal();
    double nrm = dir.norm();
    if (nrm == 0.0) continue;
    double radius =
        post_.r1_bound() * std::pow(rng_.uniform(), 1.0 / std::max(d, 1));
    Eigen::VectorXd cand = dir * (radius / nrm);
    double ld = post_.log_density_unnormalized(cand);
    if (std::isfinite(ld)) {
      theta_ = cand;
      log_density_ = ld;
    }
  }
  if (!std::isfinite(log_density_)) {
    throw std::runtime_error("MalaChain: no interior starting point found");
  }
  grad_ = post_.grad_log_density(theta_);
  for (int i = 0; i < cfg_.burn_in; ++i) step(true);
}

void MalaChain::step(bool adapt) {
  int d = post_.dim();
  Eigen::VectorXd noise(d);
  for (int i = 0; i < d; ++i) noise(i) = rng_.normal();

  double s2 = step_ * step_;
  Eigen::VectorXd mean_fwd = theta_ + 0.5 * s2 * grad_;
  Eigen::VectorXd prop = mean_fwd + step_ * noise;

  ++proposals_;
  bool accepted = false;
  double ld_prop = post_.log_density_unnormalized(prop);
  if (std::isfinite(ld_prop)) {
    Eigen::VectorXd grad_prop = post_.grad_log_density(prop);
    Eigen::VectorXd mean_rev = prop + 0.5 * s2 * grad_prop;
    double log_q_fwd = -(prop - mean_fwd).squaredNorm() / (2.0 * s2);
    double log_q_rev = -(theta_ - mean_rev).squaredNorm() / (2.0 * s2);
    double log_alpha = ld_prop - log_density_ + log_q_rev - log_q_fwd;
    if (log_alpha >= 0.0 || std::log(rng_.uniform()) < log_alpha) {
      theta_ = std::move(prop);
      grad_ = std::move(grad_prop);
      log_density_ = ld_prop;
      accepted = true;
      ++accepts_;
    }
  }
  if (adapt) {
    double move = (accepted ? 1.0 : 0.0) - cfg_.target_acceptance;
    step_ *= std::exp(0.05 * move);
    step_ = std::min(std::max(step_, 1e-6), post_.r1_bound());
  }
}

const Eigen::VectorXd& MalaChain::next() {
  for (int i = 0; i < cfg_.thinning; ++i) step(false);
  return theta_;
}

double MalaChain::acceptance_rate() const {
  return proposals_ == 0
             ? 0.0
             : static_cast<double>(accepts_) / static_cast<double>(proposals_);
}

std::vector<Eigen::VectorXd> mala_sample(const Posterior& post,
                                         const SamplerConfig& cfg, int n,
                                         Rng& rng) {
  if (n < 1) {
    throw std::invalid_argument("mala_sample: n must be >= 1");
  }
  int chains = std::min(std::max(cfg.chain_count, 1), n);
  std::vector<Eigen::VectorXd> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < chains; ++k) {
    int count = n / chains + (k < n % chains ? 1 : 0);
    MalaChain chain(post, cfg, rng.fork());
    for (int i = 0; i < count; ++i) out.push_back(chain.next());
  }
  return out;
}

}  // namespace actlr
