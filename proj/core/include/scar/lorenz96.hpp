#pragma once

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "scar/timeseries.hpp"

namespace scar::signals {

/// Uniformly sampled multivariate trajectory.
struct MultiSeries {
  std::vector<Eigen::VectorXd> states;
  double dt = 1.0;
  double t0 = 0.0;

  size_t size() const { return states.size(); }
  int dimension() const { return states.empty() ? 0 : static_cast<int>(states.front().size()); }
};

struct Lorenz96Config {
  int dimension = 40;       // J
  double forcing = 6.0;     // F
  double sample_dt = 0.0625;
  double integrator_step = 0.0;  // 0: sample_dt / 4
  double spin_up = 100.0;
  double duration = 100.0;
  uint64_t seed = 0;
  std::optional<Eigen::VectorXd> initial_state;  // default: F + 0.01 N(0,1)
};

/// Classical RK4 on the cyclic advection-dissipation-forcing system
/// dx_j/dt = (x_{j+1} - x_{j-2}) x_{j-1} - x_j + F.
MultiSeries integrate_lorenz96(const Lorenz96Config& config);

/// Discrete Fourier coefficient (1/J) sum_j x_j e^{-2 pi i k j / J} per
/// time sample; 0 <= k <= J/2.
TimeSeries fourier_mode(const MultiSeries& series, int wavenumber);

/// Trajectory CSV: header t,x1,...,xJ, full round-trip precision.
void save_multiseries(const MultiSeries& series, const std::string& path);
MultiSeries load_multiseries(const std::string& path);

}  // namespace scar::signals
