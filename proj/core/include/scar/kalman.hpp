#pragma once

#include <Eigen/Dense>
#include <optional>

#include "scar/armodel.hpp"
#include "scar/timeseries.hpp"

namespace scar::filtering {

using Complex = std::complex<double>;

/// Lag-augmented Gaussian state: mean of (u_{k-p+1}, ..., u_k) and its
/// Hermitian covariance.
struct FilterState {
  Eigen::VectorXcd mean;
  Eigen::MatrixXcd cov;

  int dim() const { return static_cast<int>(mean.size()); }
};

/// Propagates the state n model steps. Process noise enters the last
/// component only; the covariance is re-Hermitized every step.
FilterState kalman_forecast(const FilterState& state, const armodel::ARModel& model, int n_steps);

struct UpdateResult {
  FilterState posterior;
  Eigen::VectorXcd gain;
};

/// Scalar-observation Kalman update on the last state component.
UpdateResult kalman_update(const FilterState& prior, Complex observation, double r_var);

struct SkillReport {
  double prior_rmse = 0.0;
  double posterior_rmse = 0.0;
  std::vector<std::pair<double, double>> pattern_correlation_curve;
  bool diverged = false;
  size_t cycles = 0;
};

struct TrackPoint {
  double t = 0.0;
  Complex truth{0.0, 0.0};
  Complex prior_mean{0.0, 0.0};
  Complex posterior_mean{0.0, 0.0};
  double prior_var = 0.0;
};

struct KalmanRunResult {
  SkillReport skill;
  std::vector<TrackPoint> track;
};

struct KalmanRunConfig {
  int obs_interval = 1;     // n: observation every n model steps
  double obs_noise = 0.1;   // R
  uint64_t seed = 0;        // observation noise stream
  int spin_up_cycles = 10;  // excluded from the error metrics
  std::optional<double> init_energy;  // initial covariance scale; truth variance when unset
};

/// Synthesizes noisy observations of the truth and runs forecast/update
/// cycles. Divergence is reported as infinite RMSE, not an exception.
KalmanRunResult run_kalman(const armodel::ARModel& model, const TimeSeries& truth,
                           const KalmanRunConfig& config);

}  // namespace scar::filtering
