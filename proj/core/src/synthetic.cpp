#include "scar/synthetic.hpp"

#include <cmath>

#include "scar/rational.hpp"
#include "scar/rng.hpp"

namespace scar::signals {

TimeSeries simulate_ou(std::complex<double> lambda, double sigma, double dt, size_t steps,
                       uint64_t seed) {
  if (!(lambda.real() < 0)) throw Error("simulate_ou: Re(lambda) must be negative");
  if (!(dt > 0) || steps < 1) throw Error("simulate_ou: bad dt or steps");
  Rng rng(seed);
  const std::complex<double> a = std::exp(lambda * dt);
  const double energy = sigma * sigma / (2.0 * std::abs(lambda.real()));
  const double increment_var = energy * (1.0 - std::norm(a));

  TimeSeries out;
  out.dt = dt;
  out.t0 = 0.0;
  out.values.reserve(steps);
  std::complex<double> u = rng.complex_gaussian(energy);  // stationary start
  out.values.push_back(u);
  for (size_t k = 1; k < steps; ++k) {
    u = a * u + rng.complex_gaussian(increment_var);
    out.values.push_back(u);
  }
  return out;
}

TimeSeries add_observation_noise(const TimeSeries& truth, double r_var, uint64_t seed) {
  if (!(r_var >= 0)) throw Error("add_observation_noise: negative variance");
  Rng rng(seed);
  TimeSeries out = truth;
  for (auto& v : out.values) v += rng.complex_gaussian(r_var);
  return out;
}

}  // namespace scar::signals
