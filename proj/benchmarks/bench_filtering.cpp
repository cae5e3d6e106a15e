#include <benchmark/benchmark.h>

#include "scar/enkf.hpp"
#include "scar/kalman.hpp"
#include "scar/pipeline.hpp"
#include "scar/synthetic.hpp"

using namespace scar;

namespace {

const armodel::ARModel& bench_model() {
  static const auto built = pipeline::construct_scar3(std::complex<double>(-1.0, 0.8), 1.0, 0.1);
  return built.model;
}

}  // namespace

static void KalmanCycle(benchmark::State& state) {
  const auto& model = bench_model();
  filtering::FilterState s;
  s.mean = Eigen::VectorXcd::Zero(3);
  s.cov = Eigen::MatrixXcd::Identity(3, 3);
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    s = filtering::kalman_forecast(s, model, n);
    s = filtering::kalman_update(s, std::complex<double>(0.1, -0.2), 0.25).posterior;
    benchmark::DoNotOptimize(s.mean);
  }
}
BENCHMARK(KalmanCycle)->Arg(1)->Arg(10)->Arg(50);

static void EnkfCycle(benchmark::State& state) {
  const auto& model = bench_model();
  Rng rng(1);
  auto ensemble =
      filtering::make_ensemble(Eigen::VectorXcd::Zero(3), 1.0, static_cast<int>(state.range(0)), rng);
  for (auto _ : state) {
    const auto step =
        filtering::enkf_step(ensemble, model, std::complex<double>(0.1, -0.2), 0.25, 1, rng);
    ensemble = step.analysis;
    benchmark::DoNotOptimize(ensemble.members);
  }
}
BENCHMARK(EnkfCycle)->Arg(50)->Arg(500);

static void ModelSimulation(benchmark::State& state) {
  const auto& model = bench_model();
  for (auto _ : state) {
    auto series = armodel::simulate(model, static_cast<size_t>(state.range(0)), 7);
    benchmark::DoNotOptimize(series.values);
  }
}
BENCHMARK(ModelSimulation)->Arg(10000)->Unit(benchmark::kMillisecond);

static void CertificateConstruction(benchmark::State& state) {
  for (auto _ : state) {
    auto cert = pipeline::build_certificate(std::complex<double>(-1.246, -1.214));
    benchmark::DoNotOptimize(cert.dt_hat);
  }
}
BENCHMARK(CertificateConstruction)->Unit(benchmark::kMillisecond)->Iterations(1);

BENCHMARK_MAIN();
