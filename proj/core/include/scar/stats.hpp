#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "scar/timeseries.hpp"

namespace scar::signals {

struct EquilibriumStats {
  double energy = 0.0;                        // variance of the mean-removed signal
  std::complex<double> correlation_time{0.0, 0.0};  // trapezoidal integral of the ACF
  std::vector<std::complex<double>> acf;      // normalized, acf[0] = 1
  double acf_dt = 0.0;
};

/// Energy, normalized autocorrelation, and correlation time of a complex
/// signal. max_lag defaults to the first lag where |acf| < 0.01.
EquilibriumStats equilibrium_stats(const TimeSeries& series,
                                   std::optional<double> max_lag = std::nullopt);

}  // namespace scar::signals
