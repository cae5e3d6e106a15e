#include "scar/armodel.hpp"

#include <algorithm>
#include <cmath>

#include "scar/rational.hpp"
#include "scar/rng.hpp"

namespace scar::armodel {

std::string provenance_tag(Provenance p) {
  switch (p) {
    case Provenance::YuleWalker: return "YW";
    case Provenance::ConstrainedYuleWalker: return "CYW";
    case Provenance::Scar: return "SCAR";
    case Provenance::Manual: break;
  }
  return "manual";
}

Provenance provenance_from_tag(const std::string& tag) {
  if (tag == "YW") return Provenance::YuleWalker;
  if (tag == "CYW") return Provenance::ConstrainedYuleWalker;
  if (tag == "SCAR") return Provenance::Scar;
  if (tag == "manual") return Provenance::Manual;
  throw Error("unknown provenance tag: " + tag);
}

void ARModel::validate() const {
  if (p < 1) throw Error("ARModel: order must be >= 1");
  if (static_cast<int>(coeffs.size()) != p) throw Error("ARModel: coefficient count != p");
  if (noise_variance < 0) throw Error("ARModel: Q must be nonnegative");
  if (!(dt > 0)) throw Error("ARModel: dt must be positive");
}

Eigen::MatrixXcd ARModel::companion() const {
  validate();
  Eigen::MatrixXcd f = Eigen::MatrixXcd::Zero(p, p);
  for (int i = 0; i + 1 < p; ++i) f(i, i + 1) = 1.0;
  for (int j = 0; j < p; ++j) f(p - 1, j) = coeffs[static_cast<size_t>(j)];
  f(p - 1, p - 1) += 1.0;
  return f;
}

std::vector<Complex> monic_roots(const std::vector<Complex>& c) {
  const size_t n = c.size();
  if (n == 0) return {};
  if (n == 1) return {-c[0]};

  const auto eval = [&](Complex x) {
    Complex acc(1.0, 0.0);
    for (size_t k = n; k-- > 0;) acc = acc * x + c[k];
    return acc;
  };

  // root radius bound seeds the Durand-Kerner circle
  double radius = 0.0;
  for (const auto& ck : c) radius = std::max(radius, std::abs(ck));
  radius = 1.0 + radius;
  std::vector<Complex> z(n);
  const Complex seed(0.4, 0.9);
  Complex acc(1.0, 0.0);
  for (size_t i = 0; i < n; ++i) {
    acc *= seed;
    z[i] = radius * acc / std::abs(acc) * (0.5 + 0.5 * static_cast<double>(i + 1) / n);
  }

  for (int iter = 0; iter < 600; ++iter) {
    double worst = 0.0;
    for (size_t i = 0; i < n; ++i) {
      Complex denom(1.0, 0.0);
      for (size_t j = 0; j < n; ++j)
        if (j != i) denom *= z[i] - z[j];
      if (denom == Complex(0.0, 0.0)) {
        z[i] += Complex(1e-8, 1e-8);
        denom = Complex(1.0, 0.0);
      }
      const Complex step = eval(z[i]) / denom;
      z[i] -= step;
      worst = std::max(worst, std::abs(step) / std::max(1.0, std::abs(z[i])));
    }
    if (worst < 1e-15) break;
  }
  std::sort(z.begin(), z.end(), [](const Complex& a, const Complex& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return z;
}

std::vector<Complex> characteristic_roots(const ARModel& model) {
  model.validate();
  const int p = model.p;
  // -Pi(x) = x^p - x^{p-1} - sum_j a_j x^{j-1}, monic of degree p
  std::vector<Complex> c(static_cast<size_t>(p), Complex(0.0, 0.0));
  for (int j = 1; j <= p; ++j) c[static_cast<size_t>(j - 1)] = -model.coeffs[static_cast<size_t>(j - 1)];
  c[static_cast<size_t>(p - 1)] -= 1.0;
  return monic_roots(c);
}

StabilityCheck is_stable(const ARModel& model) {
  double maxmod = 0.0;
  for (const auto& r : characteristic_roots(model)) maxmod = std::max(maxmod, std::abs(r));
  return {maxmod < 1.0 - 1e-12, maxmod};
}

ConsistencyCheck is_consistent(const ARModel& model, Complex lambda, int order, double tol) {
  model.validate();
  if (order < 1 || order > 2) throw Error("is_consistent: order must be 1 or 2");
  ConsistencyCheck out;
  out.consistent = true;
  for (int l = 1; l <= order; ++l) {
    Complex sum(0.0, 0.0);
    for (int j = 1; j <= model.p; ++j) {
      const double base = static_cast<double>(j - model.p);
      const double w = (l == 1) ? 1.0 : std::pow(base, l - 1);
      sum += w * model.coeffs[static_cast<size_t>(j - 1)];
    }
    const Complex residual = static_cast<double>(l) * sum - lambda * model.dt;
    out.residuals.push_back(residual);
    if (std::abs(residual) > tol) out.consistent = false;
  }
  return out;
}

TimeSeries simulate(const ARModel& model, size_t steps, uint64_t seed) {
  model.validate();
  if (steps < 1) throw Error("simulate: steps must be >= 1");
  Rng rng(seed);
  const size_t p = static_cast<size_t>(model.p);
  const size_t burn_in = 10 * p;
  std::vector<Complex> lag(p, Complex(0.0, 0.0));  // lag[k] = u_{m-p+1+k}, fluctuation space

  TimeSeries out;
  out.dt = model.dt;
  out.t0 = 0.0;
  out.values.reserve(steps);
  for (size_t m = 0; m < burn_in + steps; ++m) {
    Complex next = lag[p - 1] + model.forcing;
    for (size_t j = 0; j < p; ++j) next += model.coeffs[j] * lag[j];
    if (model.noise_variance > 0) next += rng.complex_gaussian(model.noise_variance);
    for (size_t j = 0; j + 1 < p; ++j) lag[j] = lag[j + 1];
    lag[p - 1] = next;
    if (m >= burn_in) out.values.push_back(next + model.mean_offset);
  }
  return out;
}

}  // namespace scar::armodel
