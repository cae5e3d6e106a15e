#include <doctest.h>

#include <Eigen/Eigenvalues>
#include <random>

#include "scar/armodel.hpp"
#include "scar/pipeline.hpp"

using namespace scar::armodel;

namespace {

ARModel make_model(int p, std::vector<Complex> coeffs, double dt = 1.0, double q = 0.0) {
  ARModel m;
  m.p = p;
  m.coeffs = std::move(coeffs);
  m.dt = dt;
  m.noise_variance = q;
  return m;
}

std::vector<Complex> eigen_route(const ARModel& m) {
  const Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(m.companion());
  std::vector<Complex> out(solver.eigenvalues().data(),
                           solver.eigenvalues().data() + m.p);
  std::sort(out.begin(), out.end(), [](Complex a, Complex b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return out;
}

}  // namespace

TEST_CASE("first order root") {
  const auto roots = characteristic_roots(make_model(1, {Complex(-0.5, 0.0)}));
  REQUIRE(roots.size() == 1);
  CHECK(std::abs(roots[0] - Complex(0.5, 0.0)) < 1e-12);
}

TEST_CASE("third order with zero coefficients") {
  const auto roots = characteristic_roots(make_model(3, {Complex(0), Complex(0), Complex(0)}));
  REQUIRE(roots.size() == 3);
  // {0, 0, 1}
  CHECK(std::abs(roots[0]) < 1e-8);
  CHECK(std::abs(roots[1]) < 1e-8);
  CHECK(std::abs(roots[2] - Complex(1.0, 0.0)) < 1e-12);
}

TEST_CASE("companion structure matches the recursion layout") {
  const auto m = make_model(3, {Complex(0.1, 0.0), Complex(0.2, 0.0), Complex(0.3, 0.0)});
  const Eigen::MatrixXcd f = m.companion();
  CHECK(f(0, 1) == Complex(1.0, 0.0));
  CHECK(f(1, 2) == Complex(1.0, 0.0));
  CHECK(f(0, 0) == Complex(0.0, 0.0));
  CHECK(f(2, 0) == Complex(0.1, 0.0));
  CHECK(f(2, 1) == Complex(0.2, 0.0));
  CHECK(f(2, 2) == Complex(1.3, 0.0));
}

TEST_CASE("polynomial roots agree with companion eigenvalues") {
  std::mt19937 gen(29);
  std::uniform_real_distribution<double> small(-0.2, 0.2);
  std::uniform_int_distribution<int> order(1, 6);
  for (int trial = 0; trial < 100; ++trial) {
    const int p = order(gen);
    std::vector<Complex> coeffs;
    for (int j = 0; j < p; ++j) coeffs.emplace_back(small(gen), small(gen));
    const auto m = make_model(p, coeffs);
    const auto direct = characteristic_roots(m);
    const auto eig = eigen_route(m);
    REQUIRE(direct.size() == eig.size());
    for (size_t i = 0; i < direct.size(); ++i) CHECK(std::abs(direct[i] - eig[i]) < 1e-9);
  }
}

TEST_CASE("stability predicate and margin") {
  const auto stable = is_stable(make_model(1, {Complex(-0.5, 0.0)}));
  CHECK(stable.stable);
  CHECK(stable.max_modulus == doctest::Approx(0.5));

  const auto marginal = is_stable(make_model(3, {Complex(0), Complex(0), Complex(0)}));
  CHECK(!marginal.stable);
  CHECK(marginal.max_modulus == doctest::Approx(1.0));
}

TEST_CASE("stability is invariant under coefficient conjugation") {
  std::mt19937 gen(37);
  std::uniform_real_distribution<double> small(-0.4, 0.4);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Complex> coeffs;
    for (int j = 0; j < 3; ++j) coeffs.emplace_back(small(gen), small(gen));
    std::vector<Complex> conj_coeffs;
    for (const auto& c : coeffs) conj_coeffs.push_back(std::conj(c));
    const auto a = is_stable(make_model(3, coeffs));
    const auto b = is_stable(make_model(3, conj_coeffs));
    CHECK(a.stable == b.stable);
    CHECK(a.max_modulus == doctest::Approx(b.max_modulus).epsilon(1e-9));
  }
}

TEST_CASE("consistency residuals") {
  // any family member is order-2 consistent
  const Complex lambda(-2.0, 1.0);
  const scar::pipeline::ConsistentFamily family(lambda);
  const auto a = family.coefficients(Complex(0.7, -0.4), 0.05);
  auto model = make_model(3, {a[0], a[1], a[2]}, 0.05);
  const auto check = is_consistent(model, lambda, 2);
  CHECK(check.consistent);
  for (const auto& r : check.residuals) CHECK(std::abs(r) < 1e-12);

  // the reported regression fit of the daily index is not consistent
  auto ar3 = make_model(3,
                        {Complex(0.0564, -0.0679), Complex(-0.5877, 0.1307),
                         Complex(0.4938, -0.0005)},
                        12.0 / 365.0);
  const auto bad = is_consistent(ar3, Complex(-0.4458, 3.7161), 2);
  CHECK(!bad.consistent);
  CHECK(std::abs(bad.residuals[0]) > 0.01);
}

TEST_CASE("simulation determinism and forced drift") {
  auto drift = make_model(1, {Complex(0.0, 0.0)});
  drift.forcing = Complex(0.25, 0.0);
  const auto series = simulate(drift, 50, 9);
  // a1 = 0 keeps u_{m+1} = u_m + f: constant increments
  for (size_t i = 1; i < series.size(); ++i)
    CHECK(std::abs(series.values[i] - series.values[i - 1] - Complex(0.25, 0.0)) < 1e-12);

  const auto again = simulate(drift, 50, 9);
  CHECK(series.values == again.values);
  auto noisy = make_model(1, {Complex(-0.5, 0.0)}, 1.0, 0.3);
  CHECK(simulate(noisy, 100, 4).values == simulate(noisy, 100, 4).values);
  CHECK(simulate(noisy, 100, 4).values != simulate(noisy, 100, 5).values);
}

TEST_CASE("stationary variance of a stable first-order model") {
  // Var = Q / (1 - |1+a1|^2)
  auto m = make_model(1, {Complex(-0.7, 0.1)}, 1.0, 0.01);
  const double rho = std::norm(Complex(1.0, 0.0) + m.coeffs[0]);
  const double expected = m.noise_variance / (1.0 - rho);
  const auto series = simulate(m, 1000000, 123);
  CHECK(series.variance() == doctest::Approx(expected).epsilon(0.05));
}

TEST_CASE("zero-noise consistent model tracks the linear flow at second order") {
  const Complex lambda(-1.0, 0.8);
  const scar::pipeline::ConsistentFamily family(lambda);
  const Complex s(1.2, -0.1);

  // local error at fixed horizon shrinks ~ dt^2 under halving
  const double horizon = 1.0;
  std::vector<double> errors;
  for (const double dt : {0.02, 0.01, 0.005}) {
    const auto a = family.coefficients(s, dt);
    const size_t steps = static_cast<size_t>(horizon / dt);
    std::vector<Complex> lag{std::exp(lambda * (-2.0 * dt)), std::exp(lambda * (-dt)),
                             Complex(1.0, 0.0)};
    for (size_t k = 0; k < steps; ++k) {
      const Complex next = lag[2] + a[0] * lag[0] + a[1] * lag[1] + a[2] * lag[2];
      lag[0] = lag[1];
      lag[1] = lag[2];
      lag[2] = next;
    }
    errors.push_back(std::abs(lag[2] - std::exp(lambda * horizon)));
  }
  CHECK(errors[0] / errors[1] > 3.0);  // ~4 for second order
  CHECK(errors[1] / errors[2] > 3.0);
  CHECK(errors[0] / errors[1] < 6.0);
  CHECK(errors[1] / errors[2] < 6.0);
}

TEST_CASE("validation errors") {
  ARModel bad;
  bad.p = 2;
  bad.coeffs = {Complex(0.0, 0.0)};
  CHECK_THROWS_AS(bad.validate(), scar::Error);
  bad.coeffs = {Complex(0.0, 0.0), Complex(0.0, 0.0)};
  bad.noise_variance = -1.0;
  CHECK_THROWS_AS(bad.validate(), scar::Error);
}
