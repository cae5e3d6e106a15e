#pragma once

#include <complex>
#include <cstdint>
#include <random>

namespace scar {

/// Deterministic random stream. Gaussians use an explicit Box-Muller so
/// sequences are reproducible across standard libraries.
class Rng {
 public:
  explicit Rng(uint64_t seed) : gen_(seed) {}

  /// Uniform in (0,1), never returning an endpoint.
  double uniform() {
    const uint64_t r = gen_() >> 11;  // 53 bits
    return (static_cast<double>(r) + 0.5) * 0x1p-53;
  }

  double gaussian() {
    const double u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
  }

  /// Circularly symmetric complex Gaussian with total variance `variance`
  /// (real and imaginary parts each carry half).
  std::complex<double> complex_gaussian(double variance) {
    const double s = std::sqrt(variance / 2.0);
    const double re = gaussian();
    const double im = gaussian();
    return {s * re, s * im};
  }

  uint64_t raw() { return gen_(); }

 private:
  std::mt19937_64 gen_;
};

}  // namespace scar
