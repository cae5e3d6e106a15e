#pragma once

#include "scar/timeseries.hpp"

namespace scar::filtering {

/// Temporal-average root-mean-square error between two equal-length
/// complex series.
double rmse(const TimeSeries& estimates, const TimeSeries& truth);

/// Bivariate pattern correlation of two complex series over a window:
/// sum Re(f conj(v)) / (||f|| ||v||). The real/imaginary parts act as the
/// two pattern components.
double pattern_correlation(const TimeSeries& forecast, const TimeSeries& verification);

}  // namespace scar::filtering
