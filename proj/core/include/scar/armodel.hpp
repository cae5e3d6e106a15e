#pragma once

#include <Eigen/Dense>
#include <array>
#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "scar/timeseries.hpp"

namespace scar::armodel {

using Complex = std::complex<double>;

enum class Provenance { Manual, YuleWalker, ConstrainedYuleWalker, Scar };

std::string provenance_tag(Provenance p);
Provenance provenance_from_tag(const std::string& tag);

/// Discrete-time AR(p) model for a complex scalar. The one-step map on
/// the lag-augmented state has last row (a_1, ..., a_{p-1}, 1+a_p) and an
/// identity superdiagonal.
struct ARModel {
  int p = 1;
  std::vector<Complex> coeffs;  // a_1..a_p
  Complex forcing{0.0, 0.0};
  double noise_variance = 0.0;  // Q
  double dt = 1.0;
  Complex mean_offset{0.0, 0.0};
  Provenance provenance = Provenance::Manual;

  void validate() const;
  Eigen::MatrixXcd companion() const;
};

/// Roots of a monic polynomial given by ascending coefficients
/// c[0] + c[1] x + ... + c[n-1] x^{n-1} + x^n (Durand-Kerner iteration).
std::vector<Complex> monic_roots(const std::vector<Complex>& ascending_coeffs);

/// The p roots of the characteristic polynomial
/// Pi(x) = sum_j a_j x^{j-1} + x^{p-1} - x^p.
std::vector<Complex> characteristic_roots(const ARModel& model);

struct StabilityCheck {
  bool stable = false;
  double max_modulus = 0.0;
};
/// Strict stability: every root modulus < 1 - 1e-12; the margin is
/// reported either way.
StabilityCheck is_stable(const ARModel& model);

struct ConsistencyCheck {
  bool consistent = false;
  std::vector<Complex> residuals;  // one per consistency order
};
/// Order-q Adams-Bashforth consistency residuals
/// l * sum_j (j-p)^{l-1} a_j - lambda*dt for l = 1..q.
ConsistencyCheck is_consistent(const ARModel& model, Complex lambda, int order,
                               double tol = 1e-9);

/// Forward simulation with circular complex Gaussian noise of variance Q.
/// A burn-in of 10*p steps from a zero initial state is discarded.
TimeSeries simulate(const ARModel& model, size_t steps, uint64_t seed);

struct FitDiagnostics {
  double residual_variance = 0.0;  // Q-hat
  double aic_value = 0.0;          // Q-hat (M+p)/(M-p)
  bool constrained = false;
  double condition_estimate = 0.0;
};

struct FitResult {
  ARModel model;
  FitDiagnostics diagnostics;
};

/// Yule-Walker least squares on the lagged design matrix of the
/// mean-removed series.
FitResult yule_walker_fit(const TimeSeries& series, int p);

/// Yule-Walker fit subject to the two order-2 consistency equalities
/// (solved as a KKT system).
FitResult constrained_yule_walker_fit(const TimeSeries& series, int p, Complex lambda);

struct AicSelection {
  int chosen_p = 0;
  std::vector<std::pair<int, double>> table;  // (p, F(p)) for fits that succeeded
};
/// Order selection minimizing F(p) = Q-hat (M+p)/(M-p).
AicSelection aic_select(const TimeSeries& series, int p_max);

struct MsmParameters {
  Complex lambda;
  double sigma = 0.0;
};
/// Mean-stochastic-model inversion of equilibrium statistics:
/// lambda = 1/T with the sign fixed so Re(lambda) < 0, sigma^2 = 2|Re lambda| E.
MsmParameters msm_parameters(double energy, Complex correlation_time);

}  // namespace scar::armodel
