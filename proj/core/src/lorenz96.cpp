#include "scar/lorenz96.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "scar/rational.hpp"
#include "scar/rng.hpp"

namespace scar::signals {

namespace {

Eigen::VectorXd tendency(const Eigen::VectorXd& x, double forcing) {
  const int j = static_cast<int>(x.size());
  Eigen::VectorXd dx(j);
  for (int i = 0; i < j; ++i) {
    const double xp1 = x((i + 1) % j);
    const double xm1 = x((i - 1 + j) % j);
    const double xm2 = x((i - 2 + j) % j);
    dx(i) = (xp1 - xm2) * xm1 - x(i) + forcing;
  }
  return dx;
}

Eigen::VectorXd rk4_step(const Eigen::VectorXd& x, double h, double forcing) {
  const Eigen::VectorXd k1 = tendency(x, forcing);
  const Eigen::VectorXd k2 = tendency(x + 0.5 * h * k1, forcing);
  const Eigen::VectorXd k3 = tendency(x + 0.5 * h * k2, forcing);
  const Eigen::VectorXd k4 = tendency(x + h * k3, forcing);
  return x + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

}  // namespace

MultiSeries integrate_lorenz96(const Lorenz96Config& config) {
  if (config.dimension < 4) throw Error("lorenz96: dimension must be >= 4");
  if (!(config.sample_dt > 0)) throw Error("lorenz96: sample_dt must be positive");
  if (!(config.duration > 0)) throw Error("lorenz96: duration must be positive");

  const double h_req = config.integrator_step > 0 ? config.integrator_step : config.sample_dt / 4.0;
  const int substeps = std::max(1, static_cast<int>(std::ceil(config.sample_dt / h_req - 1e-12)));
  const double h = config.sample_dt / substeps;

  Eigen::VectorXd x;
  if (config.initial_state) {
    if (config.initial_state->size() != config.dimension)
      throw Error("lorenz96: initial state dimension mismatch");
    x = *config.initial_state;
  } else {
    Rng rng(config.seed);
    x.resize(config.dimension);
    for (int i = 0; i < config.dimension; ++i) x(i) = config.forcing + 0.01 * rng.gaussian();
  }

  const auto advance = [&](double span) {
    const long steps = std::lround(span / h);
    for (long s = 0; s < steps; ++s) {
      x = rk4_step(x, h, config.forcing);
      if (!x.allFinite()) throw Error("integration blow-up");
    }
  };

  if (config.spin_up > 0) advance(config.spin_up);

  MultiSeries out;
  out.dt = config.sample_dt;
  out.t0 = 0.0;
  const size_t samples = static_cast<size_t>(std::floor(config.duration / config.sample_dt)) + 1;
  out.states.reserve(samples);
  out.states.push_back(x);
  for (size_t k = 1; k < samples; ++k) {
    for (int s = 0; s < substeps; ++s) {
      x = rk4_step(x, h, config.forcing);
      if (!x.allFinite()) throw Error("integration blow-up");
    }
    out.states.push_back(x);
  }
  return out;
}

TimeSeries fourier_mode(const MultiSeries& series, int wavenumber) {
  const int j = series.dimension();
  if (j == 0) throw Error("fourier_mode: empty trajectory");
  if (wavenumber < 0 || wavenumber > j / 2) throw Error("fourier_mode: wavenumber out of range");

  TimeSeries out;
  out.dt = series.dt;
  out.t0 = series.t0;
  out.values.reserve(series.size());
  std::vector<std::complex<double>> phases(static_cast<size_t>(j));
  for (int n = 0; n < j; ++n) {
    const double angle = -2.0 * M_PI * wavenumber * n / static_cast<double>(j);
    phases[static_cast<size_t>(n)] = {std::cos(angle), std::sin(angle)};
  }
  for (const auto& x : series.states) {
    std::complex<double> acc(0.0, 0.0);
    for (int n = 0; n < j; ++n) acc += x(n) * phases[static_cast<size_t>(n)];
    out.values.push_back(acc / static_cast<double>(j));
  }
  return out;
}

void save_multiseries(const MultiSeries& series, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("multiseries: cannot write " + path);
  out << "t";
  for (int i = 1; i <= series.dimension(); ++i) out << ",x" << i;
  out << "\n";
  char buf[64];
  for (size_t k = 0; k < series.size(); ++k) {
    std::snprintf(buf, sizeof(buf), "%.17g", series.t0 + series.dt * static_cast<double>(k));
    out << buf;
    for (int i = 0; i < series.dimension(); ++i) {
      std::snprintf(buf, sizeof(buf), ",%.17g", series.states[k](i));
      out << buf;
    }
    out << "\n";
  }
  if (!out) throw Error("multiseries: write failed for " + path);
}

MultiSeries load_multiseries(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("multiseries: cannot open " + path);
  std::string line;
  if (!std::getline(in, line)) throw Error("multiseries: empty file " + path);
  MultiSeries out;
  std::vector<double> times;
  size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string field;
    std::vector<double> row;
    while (std::getline(ss, field, ',')) row.push_back(std::stod(field));
    if (row.size() < 2) throw Error("multiseries: malformed row at line " + std::to_string(line_no));
    times.push_back(row[0]);
    Eigen::VectorXd x(static_cast<int>(row.size()) - 1);
    for (size_t i = 1; i < row.size(); ++i) x(static_cast<int>(i - 1)) = row[i];
    out.states.push_back(std::move(x));
  }
  if (out.states.empty()) throw Error("multiseries: no samples in " + path);
  out.t0 = times.front();
  out.dt = times.size() > 1 ? times[1] - times[0] : 1.0;
  return out;
}

}  // namespace scar::signals
