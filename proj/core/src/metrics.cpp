#include "scar/metrics.hpp"

#include <cmath>

#include "scar/rational.hpp"

namespace scar::filtering {

double rmse(const TimeSeries& estimates, const TimeSeries& truth) {
  if (estimates.size() != truth.size()) throw Error("rmse: length mismatch");
  if (estimates.size() == 0) throw Error("rmse: empty series");
  double acc = 0.0;
  for (size_t i = 0; i < estimates.size(); ++i)
    acc += std::norm(estimates.values[i] - truth.values[i]);
  return std::sqrt(acc / static_cast<double>(estimates.size()));
}

double pattern_correlation(const TimeSeries& forecast, const TimeSeries& verification) {
  if (forecast.size() != verification.size()) throw Error("pattern_correlation: length mismatch");
  if (forecast.size() == 0) throw Error("pattern_correlation: empty series");
  double dot = 0.0, nf = 0.0, nv = 0.0;
  for (size_t i = 0; i < forecast.size(); ++i) {
    dot += (forecast.values[i] * std::conj(verification.values[i])).real();
    nf += std::norm(forecast.values[i]);
    nv += std::norm(verification.values[i]);
  }
  if (nf == 0.0 || nv == 0.0) throw Error("pattern_correlation: zero-norm window");
  return dot / std::sqrt(nf * nv);
}

}  // namespace scar::filtering
