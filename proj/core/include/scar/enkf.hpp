#pragma once

#include <Eigen/Dense>
#include <deque>

#include "scar/armodel.hpp"
#include "scar/rng.hpp"

namespace scar::filtering {

using Complex = std::complex<double>;

/// Ensemble of lag-augmented states, one column per member.
struct Ensemble {
  Eigen::MatrixXcd members;  // p x m

  int size() const { return static_cast<int>(members.cols()); }
  int dim() const { return static_cast<int>(members.rows()); }
  Eigen::VectorXcd mean() const { return members.rowwise().mean(); }
  /// Trace of the empirical covariance.
  double spread() const;
};

/// Draws members around a mean with independent complex Gaussian
/// perturbations of the given variance.
Ensemble make_ensemble(const Eigen::VectorXcd& mean, double variance, int size, Rng& rng);

struct EnkfStepResult {
  Ensemble analysis;
  Complex innovation{0.0, 0.0};      // v - G * prior mean
  double prior_obs_variance = 0.0;   // G C G^H of the forecast ensemble
};

struct EnkfOptions {
  double inflation = 1.0;  // multiplicative on forecast anomalies
};

/// One assimilation cycle: stochastic propagation of every member by n
/// model steps, then a deterministic square-root (transform) update in
/// the scalar observation space.
EnkfStepResult enkf_step(const Ensemble& ensemble, const armodel::ARModel& model,
                         Complex observation, double r_estimate, int n_steps, Rng& rng,
                         const EnkfOptions& options = {});

/// Batch innovation-based observation-noise estimate:
/// max(mean|eps|^2 - mean(prior obs variance), floor).
double adaptive_noise_estimate(const std::vector<Complex>& innovations,
                               const std::vector<double>& prior_variances,
                               double floor = 1e-8);

/// Exponentially forgetting variant of the same estimator.
class AdaptiveNoiseTracker {
 public:
  explicit AdaptiveNoiseTracker(double forgetting = 0.99, double floor = 1e-8)
      : forgetting_(forgetting), floor_(floor) {}

  double update(Complex innovation, double prior_variance);
  double current() const;
  size_t count() const { return count_; }

 private:
  double forgetting_;
  double floor_;
  double innovation_power_ = 0.0;
  double prior_power_ = 0.0;
  double weight_ = 0.0;
  size_t count_ = 0;
};

}  // namespace scar::filtering
