#include <doctest.h>

#include <random>

#include "scar/kalman.hpp"
#include "scar/pipeline.hpp"
#include "scar/synthetic.hpp"

using namespace scar::filtering;
using scar::armodel::ARModel;

namespace {

ARModel random_walk_model() {
  ARModel m;
  m.p = 1;
  m.coeffs = {Complex(0.0, 0.0)};  // F = [1]
  m.noise_variance = 0.05;
  m.dt = 1.0;
  return m;
}

Eigen::MatrixXcd random_psd(int p, std::mt19937& gen) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Eigen::MatrixXcd a(p, p);
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j) a(i, j) = Complex(u(gen), u(gen));
  return a * a.adjoint() + 0.1 * Eigen::MatrixXcd::Identity(p, p);
}

}  // namespace

TEST_CASE("scalar random walk forecast adds the noise variance") {
  FilterState state;
  state.mean = Eigen::VectorXcd::Constant(1, Complex(2.0, -1.0));
  state.cov = Eigen::MatrixXcd::Constant(1, 1, Complex(0.3, 0.0));
  const auto prior = kalman_forecast(state, random_walk_model(), 1);
  CHECK(std::abs(prior.mean(0) - Complex(2.0, -1.0)) < 1e-14);
  CHECK(prior.cov(0, 0).real() == doctest::Approx(0.35));
}

TEST_CASE("noise-free stable model contracts the covariance") {
  const auto built = scar::pipeline::construct_scar3(Complex(-1.0, 0.7), 0.0);
  ARModel model = built.model;
  model.noise_variance = 0.0;
  FilterState state;
  state.mean = Eigen::VectorXcd::Zero(3);
  state.cov = Eigen::MatrixXcd::Identity(3, 3);
  const auto later = kalman_forecast(state, model, 400);
  CHECK(later.cov.norm() < 1e-3);
}

TEST_CASE("n-step forecast equals repeated single steps") {
  const auto built = scar::pipeline::construct_scar3(Complex(-1.2, -0.9), 1.0);
  FilterState state;
  state.mean = Eigen::VectorXcd::Constant(3, Complex(0.4, 0.2));
  std::mt19937 gen(11);
  state.cov = random_psd(3, gen);

  const auto ten = kalman_forecast(state, built.model, 10);
  FilterState step = state;
  for (int i = 0; i < 10; ++i) step = kalman_forecast(step, built.model, 1);
  CHECK((ten.mean - step.mean).norm() < 1e-12);
  CHECK((ten.cov - step.cov).norm() < 1e-12);
}

TEST_CASE("update with huge R is a no-op") {
  FilterState prior;
  prior.mean = Eigen::VectorXcd::Constant(2, Complex(1.0, 1.0));
  prior.cov = Eigen::MatrixXcd::Identity(2, 2);
  const auto result = kalman_update(prior, Complex(100.0, 0.0), 1e12);
  CHECK((result.posterior.mean - prior.mean).norm() < 1e-9);
  CHECK((result.posterior.cov - prior.cov).norm() < 1e-9);
}

TEST_CASE("textbook scalar update") {
  FilterState prior;
  prior.mean = Eigen::VectorXcd::Zero(1);
  prior.cov = Eigen::MatrixXcd::Identity(1, 1);
  const auto result = kalman_update(prior, Complex(1.0, 0.0), 1.0);
  CHECK(std::abs(result.gain(0) - Complex(0.5, 0.0)) < 1e-14);
  CHECK(result.posterior.cov(0, 0).real() == doctest::Approx(0.5));
  CHECK(std::abs(result.posterior.mean(0) - Complex(0.5, 0.0)) < 1e-14);
}

TEST_CASE("update never inflates the observed component") {
  std::mt19937 gen(13);
  for (int trial = 0; trial < 100; ++trial) {
    FilterState prior;
    prior.mean = Eigen::VectorXcd::Zero(3);
    prior.cov = random_psd(3, gen);
    const auto result = kalman_update(prior, Complex(0.3, -0.7), 0.5);
    CHECK(result.posterior.cov(2, 2).real() <= prior.cov(2, 2).real() + 1e-12);
  }
}

TEST_CASE("covariance stays Hermitian PSD over many cycles") {
  const auto built = scar::pipeline::construct_scar3(Complex(-1.0, 1.3), 1.0);
  FilterState state;
  state.mean = Eigen::VectorXcd::Zero(3);
  state.cov = Eigen::MatrixXcd::Identity(3, 3);
  std::mt19937 gen(17);
  std::uniform_real_distribution<double> obs(-2.0, 2.0);
  for (int cycle = 0; cycle < 1000; ++cycle) {
    state = kalman_forecast(state, built.model, 1 + cycle % 3);
    state = kalman_update(state, Complex(obs(gen), obs(gen)), 0.25).posterior;
    CHECK((state.cov - state.cov.adjoint()).norm() < 1e-12);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(state.cov);
    CHECK(eig.eigenvalues().minCoeff() > -1e-10);
  }
}

TEST_CASE("gain approaches one as R vanishes") {
  FilterState prior;
  prior.mean = Eigen::VectorXcd::Zero(2);
  prior.cov = Eigen::MatrixXcd::Identity(2, 2);
  const auto result = kalman_update(prior, Complex(1.0, 0.0), 1e-12);
  CHECK(std::abs(result.gain(1) - Complex(1.0, 0.0)) < 1e-9);
  CHECK_THROWS_AS(kalman_update(prior, Complex(1.0, 0.0), 0.0), scar::Error);
}

TEST_CASE("near-direct observation pins the posterior") {
  const Complex lambda(-1.0, 0.9);
  const double sigma = std::sqrt(2.0 * std::abs(lambda.real()));  // energy 1
  const auto built = scar::pipeline::construct_scar3(lambda, sigma, 0.1);
  const auto truth = scar::signals::simulate_ou(lambda, sigma, 0.1, 2000, 42);
  KalmanRunConfig config;
  config.obs_interval = 1;
  config.obs_noise = 1e-8;
  config.seed = 5;
  const auto run = run_kalman(built.model, truth, config);
  CHECK(!run.skill.diverged);
  CHECK(run.skill.posterior_rmse <= 2.0 * std::sqrt(config.obs_noise));
}

TEST_CASE("posterior beats the prior and stays below the signal scale") {
  const Complex lambda(-1.0, 0.9);
  const double sigma = std::sqrt(2.0 * std::abs(lambda.real()));
  const auto built = scar::pipeline::construct_scar3(lambda, sigma, 0.1);
  const auto truth = scar::signals::simulate_ou(lambda, sigma, 0.1, 4000, 43);
  const double energy = truth.variance();
  for (const double r : {0.1 * energy, 10.0 * energy}) {
    KalmanRunConfig config;
    config.obs_interval = 10;
    config.obs_noise = r;
    config.seed = 6;
    const auto run = run_kalman(built.model, truth, config);
    REQUIRE(!run.skill.diverged);
    CHECK(run.skill.posterior_rmse <= run.skill.prior_rmse + 1e-9);
    // even with nearly useless observations the posterior cannot exceed
    // the climatological spread by much
    CHECK(run.skill.posterior_rmse < 2.0 * std::sqrt(energy));
  }
}

TEST_CASE("dt mismatch and short truth are rejected") {
  const auto built = scar::pipeline::construct_scar3(Complex(-1.0, 0.5), 1.0, 0.1);
  scar::TimeSeries truth;
  truth.dt = 0.2;
  truth.values.assign(5000, Complex(0.0, 0.0));
  KalmanRunConfig config;
  CHECK_THROWS_AS(run_kalman(built.model, truth, config), scar::Error);
  truth.dt = built.model.dt;
  truth.values.assign(50, Complex(0.0, 0.0));
  CHECK_THROWS_AS(run_kalman(built.model, truth, config), scar::Error);
}

TEST_CASE("unstable model reports divergence instead of crashing") {
  ARModel unstable;
  unstable.p = 1;
  unstable.coeffs = {Complex(1e4, 0.0)};  // violently unstable root
  unstable.noise_variance = 0.01;
  unstable.dt = 1.0;
  scar::TimeSeries truth;
  truth.dt = 1.0;
  truth.values.assign(10001, Complex(0.0, 0.0));
  for (size_t i = 0; i < truth.values.size(); ++i)
    truth.values[i] = Complex(std::sin(0.01 * static_cast<double>(i)), 0.0);
  KalmanRunConfig config;
  // sparse observations: the forecast state overflows between updates
  config.obs_interval = 100;
  config.obs_noise = 0.1;
  const auto run = run_kalman(unstable, truth, config);
  CHECK(run.skill.diverged);
  CHECK(std::isinf(run.skill.posterior_rmse));
}
