#include "scar/kalman.hpp"

#include <cmath>

#include "scar/rational.hpp"
#include "scar/rng.hpp"

namespace scar::filtering {

namespace {

void hermitize(Eigen::MatrixXcd& c) { c = 0.5 * (c + c.adjoint()).eval(); }

bool finite(const FilterState& s) {
  return s.mean.allFinite() && s.cov.allFinite();
}

}  // namespace

FilterState kalman_forecast(const FilterState& state, const armodel::ARModel& model, int n_steps) {
  model.validate();
  if (n_steps < 1) throw Error("kalman_forecast: n_steps must be >= 1");
  if (state.dim() != model.p) throw Error("kalman_forecast: state dimension != model order");
  const Eigen::MatrixXcd f = model.companion();
  Eigen::VectorXcd fvec = Eigen::VectorXcd::Zero(model.p);
  fvec(model.p - 1) = model.forcing;

  FilterState out = state;
  for (int step = 0; step < n_steps; ++step) {
    out.mean = f * out.mean + fvec;
    out.cov = f * out.cov * f.adjoint();
    out.cov(model.p - 1, model.p - 1) += model.noise_variance;
    hermitize(out.cov);
  }
  return out;
}

UpdateResult kalman_update(const FilterState& prior, Complex observation, double r_var) {
  if (!(r_var > 0)) throw Error("kalman_update: R must be positive");
  const int p = prior.dim();
  if (p < 1) throw Error("kalman_update: empty state");
  if (!finite(prior) || !std::isfinite(observation.real()) || !std::isfinite(observation.imag()))
    throw Error("diverged state");

  const double s = prior.cov(p - 1, p - 1).real() + r_var;
  UpdateResult out;
  out.gain = prior.cov.col(p - 1) / s;
  const Complex innovation = observation - prior.mean(p - 1);
  out.posterior.mean = prior.mean + out.gain * innovation;
  out.posterior.cov = prior.cov - out.gain * prior.cov.row(p - 1);
  hermitize(out.posterior.cov);
  if (!finite(out.posterior)) throw Error("diverged state");
  return out;
}

KalmanRunResult run_kalman(const armodel::ARModel& model, const TimeSeries& truth,
                           const KalmanRunConfig& config) {
  model.validate();
  if (std::abs(model.dt - truth.dt) > 1e-9 * std::max(1.0, std::abs(model.dt)))
    throw Error("run_kalman: model dt does not match truth dt");
  const int n = config.obs_interval;
  if (n < 1) throw Error("run_kalman: obs_interval must be >= 1");
  if (!(config.obs_noise > 0)) throw Error("run_kalman: R must be positive");
  const size_t cycles = truth.size() > 0 ? (truth.size() - 1) / static_cast<size_t>(n) : 0;
  if (cycles < 100) throw Error("run_kalman: truth too short for 100 analysis cycles");

  Rng rng(config.seed);
  const double energy = config.init_energy ? *config.init_energy : truth.variance();

  FilterState state;
  state.mean = Eigen::VectorXcd::Zero(model.p);
  state.cov = Eigen::MatrixXcd::Identity(model.p, model.p) * std::max(energy, 1e-12);

  KalmanRunResult out;
  out.track.reserve(cycles);
  double prior_sq = 0.0, post_sq = 0.0;
  size_t scored = 0;
  bool diverged = false;

  for (size_t k = 1; k <= cycles; ++k) {
    const size_t idx = k * static_cast<size_t>(n);
    const Complex truth_val = truth.values[idx];
    const Complex obs = truth_val + rng.complex_gaussian(config.obs_noise);

    TrackPoint tp;
    tp.t = truth.time_at(idx);
    tp.truth = truth_val;
    try {
      state = kalman_forecast(state, model, n);
      const Complex prior_mean = state.mean(model.p - 1) + model.mean_offset;
      tp.prior_mean = prior_mean;
      tp.prior_var = state.cov(model.p - 1, model.p - 1).real();
      const auto update = kalman_update(state, obs - model.mean_offset, config.obs_noise);
      state = update.posterior;
      tp.posterior_mean = state.mean(model.p - 1) + model.mean_offset;
    } catch (const Error&) {
      diverged = true;
    }
    if (diverged) {
      tp.prior_mean = tp.posterior_mean = Complex(std::nan(""), std::nan(""));
      out.track.push_back(tp);
      break;
    }
    out.track.push_back(tp);
    if (static_cast<int>(k) > config.spin_up_cycles) {
      prior_sq += std::norm(tp.prior_mean - truth_val);
      post_sq += std::norm(tp.posterior_mean - truth_val);
      ++scored;
    }
  }

  out.skill.cycles = out.track.size();
  out.skill.diverged = diverged;
  if (diverged || scored == 0) {
    out.skill.prior_rmse = std::numeric_limits<double>::infinity();
    out.skill.posterior_rmse = std::numeric_limits<double>::infinity();
  } else {
    out.skill.prior_rmse = std::sqrt(prior_sq / static_cast<double>(scored));
    out.skill.posterior_rmse = std::sqrt(post_sq / static_cast<double>(scored));
    if (!std::isfinite(out.skill.prior_rmse) || !std::isfinite(out.skill.posterior_rmse))
      out.skill.diverged = true;
  }
  return out;
}

}  // namespace scar::filtering
