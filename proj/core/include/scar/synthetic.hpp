#pragma once

#include <complex>

#include "scar/timeseries.hpp"

namespace scar::signals {

/// Exact discretization of the complex Ornstein-Uhlenbeck process
/// du = lambda u dt + sigma dW: u_{k+1} = e^{lambda dt} u_k + noise with
/// the exact stationary increment variance. Starts from a stationary
/// draw.
TimeSeries simulate_ou(std::complex<double> lambda, double sigma, double dt, size_t steps,
                       uint64_t seed);

/// Noisy observation series: truth plus circular complex Gaussian noise
/// of variance r_var.
TimeSeries add_observation_noise(const TimeSeries& truth, double r_var, uint64_t seed);

}  // namespace scar::signals
