#include "scar/stats.hpp"

#include <cmath>

#include "scar/rational.hpp"

namespace scar::signals {

EquilibriumStats equilibrium_stats(const TimeSeries& series, std::optional<double> max_lag) {
  const size_t m = series.size();
  if (m < 2) throw Error("equilibrium_stats: series too short");

  const std::complex<double> mean = series.mean();
  double energy = 0.0;
  for (const auto& v : series.values) energy += std::norm(v - mean);
  energy /= static_cast<double>(m);
  if (energy <= 0.0) throw Error("zero energy");

  size_t lag_cap = max_lag ? static_cast<size_t>(std::floor(*max_lag / series.dt)) : m / 2;
  lag_cap = std::min(lag_cap, m - 1);
  // default truncation threshold: decayed-away level, raised to the
  // sampling noise floor of the ACF estimate on short series
  const double cutoff = std::max(0.01, 3.0 / std::sqrt(static_cast<double>(m)));

  EquilibriumStats out;
  out.energy = energy;
  out.acf_dt = series.dt;
  out.acf.reserve(lag_cap + 1);
  for (size_t lag = 0; lag <= lag_cap; ++lag) {
    std::complex<double> acc(0.0, 0.0);
    for (size_t i = 0; i + lag < m; ++i)
      acc += (series.values[i + lag] - mean) * std::conj(series.values[i] - mean);
    acc /= static_cast<double>(m - lag);
    out.acf.push_back(acc / energy);
    if (!max_lag && lag > 0 && std::abs(out.acf.back()) < cutoff) break;
  }

  // trapezoidal complex integral of the normalized ACF
  std::complex<double> integral(0.0, 0.0);
  for (size_t lag = 0; lag + 1 < out.acf.size(); ++lag)
    integral += 0.5 * (out.acf[lag] + out.acf[lag + 1]) * series.dt;
  out.correlation_time = integral;
  return out;
}

}  // namespace scar::signals
