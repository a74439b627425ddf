#pragma once

#include <optional>
#include <vector>

#include "actlr/metrics.hpp"
#include "actlr/model.hpp"
#include "actlr/rng.hpp"

namespace actlr {

// One transcript entry: a pool point queried `multiplicity` times with the
// same observed label.
struct Observation {
  int point = 0;
  int label = 0;
  int multiplicity = 1;
};

// Ordered record of labeled queries against a dataset. Value type with
// copy-on-append; consecutive duplicates merge into one entry.
class ObservationTranscript {
 public:
  explicit ObservationTranscript(DatasetPtr data);
  ObservationTranscript(DatasetPtr data, std::vector<Observation> entries);

  ObservationTranscript appended(int point, int label,
                                 int multiplicity = 1) const;

  const std::vector<Observation>& entries() const { return entries_; }
  const Dataset& data() const { return *data_; }
  DatasetPtr data_ptr() const { return data_; }
  long total_labels() const;
  bool empty() const { return entries_.empty(); }

 private:
  DatasetPtr data_;
  std::vector<Observation> entries_;
};

// Unnormalized posterior over the parameter ball of radius r1_bound: uniform
// prior on the ball times exp(-penalty) per observation, where the penalty is
// the cross-entropy loss of the gamma-clipped prediction. Immutable.
class Posterior {
 public:
  Posterior(ObservationTranscript transcript, double gamma, double r1_bound,
            LinkFunction link = LinkFunction::sigmoid());

  double log_density_unnormalized(const Eigen::VectorXd& theta) const;

  // Gradient of the UNCLIPPED log-density (gamma treated as 0). Used as the
  // Langevin drift; the Metropolis correction targets the clipped density.
  Eigen::VectorXd grad_log_density(const Eigen::VectorXd& theta) const;

  Posterior append_observation(int point, int label) const;

  const ObservationTranscript& transcript() const { return transcript_; }
  double gamma() const { return gamma_; }
  double r1_bound() const { return r1_bound_; }
  const LinkFunction& link() const { return link_; }
  int dim() const { return static_cast<int>(transcript_.data().dim()); }

 private:
  ObservationTranscript transcript_;
  double gamma_;
  double r1_bound_;
  LinkFunction link_;
  // Transcript consolidated by (point,label) for vectorized evaluation.
  Eigen::MatrixXd obs_points_;  // m x d
  Eigen::VectorXd obs_labels_;  // m
  Eigen::VectorXd obs_mult_;    // m
};

struct SamplerConfig {
  double step_size = 0.2;        // initial Langevin step, adapted in burn-in
  int burn_in = 200;             // adaptation steps before any state is kept
  int thinning = 10;             // chain steps per emitted sample
  int chain_count = 1;           // independent chains, merged by chain index
  double target_acceptance = 0.574;
};

// One MALA chain over a fixed posterior. Construction runs the burn-in
// (adapting the step size toward cfg.target_acceptance); next() advances
// `thinning` accepted-or-rejected steps and returns the state. The chain can
// be seeded from a previous round's state to warm-start.
class MalaChain {
 public:
  MalaChain(Posterior post, SamplerConfig cfg, Rng rng,
            std::optional<Eigen::VectorXd> init = std::nullopt,
            std::optional<double> init_step = std::nullopt);

  const Eigen::VectorXd& next();
  const Eigen::VectorXd& state() const { return theta_; }
  double step_size() const { return step_; }
  double acceptance_rate() const;
  const Posterior& posterior() const { return post_; }

 private:
  void step(bool adapt);

  Posterior post_;
  SamplerConfig cfg_;
  Rng rng_;
  Eigen::VectorXd theta_;
  Eigen::VectorXd grad_;
  double log_density_;
  double step_;
  long proposals_ = 0;
  long accepts_ = 0;
};

// n samples from the posterior via cfg.chain_count independent chains
// (seeds derived from rng), merged by chain index. Deterministic per seed.
std::vector<Eigen::VectorXd> mala_sample(const Posterior& post,
                                         const SamplerConfig& cfg, int n,
                                         Rng& rng);

}  // namespace actlr
