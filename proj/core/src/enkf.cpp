#include "scar/enkf.hpp"

#include <cmath>

#include "scar/rational.hpp"

namespace scar::filtering {

double Ensemble::spread() const {
  const int m = size();
  if (m < 2) return 0.0;
  const Eigen::VectorXcd mu = mean();
  double acc = 0.0;
  for (int i = 0; i < m; ++i) acc += (members.col(i) - mu).squaredNorm();
  return acc / static_cast<double>(m - 1);
}

Ensemble make_ensemble(const Eigen::VectorXcd& mean, double variance, int size, Rng& rng) {
  if (size < 2) throw Error("make_ensemble: need at least 2 members");
  Ensemble e;
  e.members.resize(mean.size(), size);
  for (int i = 0; i < size; ++i) {
    for (int j = 0; j < mean.size(); ++j)
      e.members(j, i) = mean(j) + rng.complex_gaussian(variance);
  }
  return e;
}

EnkfStepResult enkf_step(const Ensemble& ensemble, const armodel::ARModel& model,
                         Complex observation, double r_estimate, int n_steps, Rng& rng,
                         const EnkfOptions& options) {
  model.validate();
  const int m = ensemble.size();
  const int p = model.p;
  if (m < 2) throw Error("enkf_step: need at least 2 members");
  if (ensemble.dim() != p) throw Error("enkf_step: ensemble dimension != model order");
  if (!(r_estimate > 0)) throw Error("enkf_step: R must be positive");
  if (n_steps < 1) throw Error("enkf_step: n_steps must be >= 1");

  // stochastic forecast of every member
  Eigen::MatrixXcd x = ensemble.members;
  for (int i = 0; i < m; ++i) {
    Eigen::VectorXcd col = x.col(i);
    for (int step = 0; step < n_steps; ++step) {
      Complex next = col(p - 1) + model.forcing;
      for (int j = 0; j < p; ++j) next += model.coeffs[static_cast<size_t>(j)] * col(j);
      if (model.noise_variance > 0) next += rng.complex_gaussian(model.noise_variance);
      for (int j = 0; j + 1 < p; ++j) col(j) = col(j + 1);
      col(p - 1) = next;
    }
    x.col(i) = col;
  }
  if (!x.allFinite()) throw Error("diverged state");

  const Eigen::VectorXcd xbar = x.rowwise().mean();
  Eigen::MatrixXcd anom = x.colwise() - xbar;
  anom *= std::sqrt(std::max(options.inflation, 0.0));
  const double spread = anom.squaredNorm() / static_cast<double>(m - 1);
  if (spread < 1e-12) throw Error("ensemble degenerate");

  // scalar observation space: h = last row of anomalies
  const Eigen::RowVectorXcd h = anom.row(p - 1);
  const double s2 = h.squaredNorm();  // (m-1) * G C G^H
  const double denom = s2 + static_cast<double>(m - 1) * r_estimate;

  EnkfStepResult out;
  out.prior_obs_variance = s2 / static_cast<double>(m - 1);
  out.innovation = observation - xbar(p - 1);

  // mean update with the exact Kalman gain of the ensemble covariance
  const Eigen::VectorXcd k_gain = (anom * h.adjoint()) / denom;
  const Eigen::VectorXcd mean_a = xbar + k_gain * out.innovation;

  // deterministic square-root transform of the anomalies:
  // A <- A (I - theta u u^H), u = conj(h)^T, keeps the analysis covariance
  const double rho = s2 / denom;
  const double theta = s2 > 0 ? (1.0 - std::sqrt(1.0 - rho)) / s2 : 0.0;
  const Eigen::VectorXcd u = h.adjoint();  // conj of obs anomalies
  const Eigen::VectorXcd au = anom * u;
  const Eigen::MatrixXcd anom_a = anom - theta * au * u.adjoint();

  out.analysis.members = anom_a.colwise() + mean_a;
  if (!out.analysis.members.allFinite()) throw Error("diverged state");
  return out;
}

double adaptive_noise_estimate(const std::vector<Complex>& innovations,
                               const std::vector<double>& prior_variances, double floor) {
  if (innovations.size() < 30) throw Error("adaptive_noise_estimate: need at least 30 samples");
  if (innovations.size() != prior_variances.size())
    throw Error("adaptive_noise_estimate: length mismatch");
  double power = 0.0, prior = 0.0;
  for (size_t i = 0; i < innovations.size(); ++i) {
    power += std::norm(innovations[i]);
    prior += prior_variances[i];
  }
  power /= static_cast<double>(innovations.size());
  prior /= static_cast<double>(innovations.size());
  return std::max(power - prior, floor);
}

double AdaptiveNoiseTracker::update(Complex innovation, double prior_variance) {
  innovation_power_ = forgetting_ * innovation_power_ + std::norm(innovation);
  prior_power_ = forgetting_ * prior_power_ + prior_variance;
  weight_ = forgetting_ * weight_ + 1.0;
  ++count_;
  return current();
}

double AdaptiveNoiseTracker::current() const {
  if (weight_ <= 0.0) return floor_;
  return std::max(innovation_power_ / weight_ - prior_power_ / weight_, floor_);
}

}  // namespace scar::filtering
