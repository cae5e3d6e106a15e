#include <benchmark/benchmark.h>

#include "scar/boundary.hpp"
#include "scar/pipeline.hpp"
#include "scar/poly_gcd.hpp"
#include "scar/real_roots.hpp"
#include "scar/resultant.hpp"

using namespace scar::algebra;

namespace {

Polynomial dense_poly(int degree) {
  const Polynomial x = Polynomial::variable("x");
  const Polynomial y = Polynomial::variable("y");
  Polynomial p;
  for (int i = 0; i <= degree; ++i)
    for (int j = 0; j + i <= degree; ++j)
      p += Polynomial::term(Rational(1 + i + 2 * j), {"x", "y"},
                            {static_cast<unsigned>(i), static_cast<unsigned>(j)});
  return p;
}

}  // namespace

static void PolynomialMultiply(benchmark::State& state) {
  const Polynomial a = dense_poly(static_cast<int>(state.range(0)));
  const Polynomial b = dense_poly(static_cast<int>(state.range(0)) + 1);
  for (auto _ : state) {
    Polynomial c = a * b;
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(PolynomialMultiply)->Arg(4)->Arg(8)->Arg(12);

static void SylvesterResultant(benchmark::State& state) {
  const Polynomial x = Polynomial::variable("x");
  const Polynomial t = Polynomial::variable("t");
  const Polynomial f = x.pow(4) + t * x.pow(2) + Polynomial(3L) * x - t * t;
  const Polynomial g = x.pow(3) - t * x + Polynomial(1L);
  for (auto _ : state) {
    Polynomial r = resultant(f, g, "x");
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(SylvesterResultant);

static void BoundarySurface(benchmark::State& state) {
  const auto lambda = rationalize_complex({-8.312, -8.569}, 1000000);
  for (auto _ : state) {
    Polynomial r = scar::pipeline::boundary_surface(lambda);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BoundarySurface)->Unit(benchmark::kMillisecond)->Iterations(1);

static void RealRootIsolation(benchmark::State& state) {
  const Polynomial x = Polynomial::variable("x");
  Polynomial p(Rational(1));
  for (int k = 1; k <= 8; ++k) p = p * (x - Polynomial(Rational(k)));
  for (auto _ : state) {
    auto roots = real_roots_univariate(p, RootDomain::all());
    benchmark::DoNotOptimize(roots);
  }
}
BENCHMARK(RealRootIsolation);

BENCHMARK_MAIN();
