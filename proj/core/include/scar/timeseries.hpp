#pragma once

#include <complex>
#include <string>
#include <vector>

namespace scar {

/// Uniformly sampled complex-valued signal.
struct TimeSeries {
  std::vector<std::complex<double>> values;
  double dt = 1.0;
  double t0 = 0.0;

  size_t size() const { return values.size(); }
  double time_at(size_t i) const { return t0 + dt * static_cast<double>(i); }

  std::complex<double> mean() const;
  /// Sample variance of the mean-removed signal, E|u - mean|^2.
  double variance() const;
};

/// CSV persistence with full round-trip decimal precision.
/// Native schema: header `t,re,im`. Files with header `date,rmm1,rmm2`
/// and daily rows are mapped onto dt = 12/365 (one day, month units).
TimeSeries load_timeseries(const std::string& path);
void save_timeseries(const TimeSeries& series, const std::string& path);

}  // namespace scar
