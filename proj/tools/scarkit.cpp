// scarkit: construct stable consistent AR(3) filter models from
// equilibrium statistics, fit regression AR models, and run Kalman/EnKF
// skill experiments.

#include <CLI11.hpp>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "scar/enkf.hpp"
#include "scar/experiment.hpp"
#include "scar/kalman.hpp"
#include "scar/lorenz96.hpp"
#include "scar/metrics.hpp"
#include "scar/model_io.hpp"
#include "scar/pipeline.hpp"
#include "scar/stats.hpp"
#include "scar/synthetic.hpp"

namespace fs = std::filesystem;
using scar::Error;
using Complex = std::complex<double>;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRuntime = 1;
constexpr int kExitUsage = 2;

std::string timestamp_line() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  char buf[64];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
  return buf;
}

void prepend_timestamp(const std::string& path, bool enabled) {
  if (!enabled) return;
  std::ifstream in(path);
  std::string body((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  in.close();
  std::ofstream out(path);
  out << "# generated_at=" << timestamp_line() << "\n" << body;
}

struct ScarArgs {
  std::string lambda_text;
  double sigma = 1.0;
  double dt = 0.0;  // 0: dt_hat/2
  std::string cert_path = "scar_certificate.json";
  std::string model_path = "scar_model.json";
  bool no_timestamp = false;
};

int cmd_scar(const ScarArgs& args) {
  Complex lambda;
  try {
    lambda = scar::io::parse_complex(args.lambda_text);
    if (!(lambda.real() < 0)) throw Error("unstable continuous dynamics");
    if (args.dt < 0) throw Error("dt must be positive");
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  try {
    const std::optional<double> dt =
        args.dt > 0 ? std::optional<double>(args.dt) : std::nullopt;
    const auto built = scar::pipeline::construct_scar3(lambda, args.sigma, dt);
    const auto& cert = built.certificate;
    std::printf("dt_hat = %.4f\n", cert.dt_hat);
    std::printf("s_hat = %s\n", scar::io::format_complex(cert.s_hat).c_str());
    const scar::pipeline::ConsistentFamily family(lambda);
    const auto per_dt = family.coefficients(cert.s_hat, 1.0);
    std::printf("a1 = (%s)*dt\n", scar::io::format_complex(per_dt[0]).c_str());
    std::printf("a2 = (%s)*dt\n", scar::io::format_complex(per_dt[1]).c_str());
    std::printf("a3 = (%s)*dt\n", scar::io::format_complex(per_dt[2]).c_str());
    std::printf("dt = %.6g  (method: %s)\n", built.model.dt, cert.method.c_str());
    scar::io::save_certificate(cert, args.cert_path);
    scar::io::save_model(built.model, args.model_path);
    std::printf("wrote %s and %s\n", args.cert_path.c_str(), args.model_path.c_str());
    return kExitOk;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
}

struct FitArgs {
  std::string series_path;
  std::string method = "yw";
  int p = 3;
  std::string lambda_text;
  int aic_pmax = 0;
  std::string out_path = "fit_model.json";
};

int cmd_fit(const FitArgs& args) {
  Complex lambda(0.0, 0.0);
  try {
    if (args.method != "yw" && args.method != "cyw")
      throw Error("method must be yw or cyw");
    if (args.method == "cyw") {
      if (args.lambda_text.empty()) throw Error("cyw requires --lambda");
      lambda = scar::io::parse_complex(args.lambda_text);
    }
    if (args.p < 1) throw Error("p must be >= 1");
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  try {
    const scar::TimeSeries series = scar::load_timeseries(args.series_path);
    if (args.aic_pmax > 0) {
      if (static_cast<double>(args.aic_pmax) >= static_cast<double>(series.size()) / 4.0) {
        std::cerr << "error: p_max too large\n";
        return kExitUsage;
      }
      const auto aic = scar::armodel::aic_select(series, args.aic_pmax);
      std::printf("p,F(p)\n");
      for (const auto& [p, f] : aic.table) std::printf("%d,%.6g\n", p, f);
      std::printf("chosen p = %d\n", aic.chosen_p);
    }
    const auto fit = args.method == "yw"
                         ? scar::armodel::yule_walker_fit(series, args.p)
                         : scar::armodel::constrained_yule_walker_fit(series, args.p, lambda);
    for (int j = 0; j < fit.model.p; ++j)
      std::printf("a%d = %s\n", j + 1,
                  scar::io::format_complex(fit.model.coeffs[static_cast<size_t>(j)], 6).c_str());
    std::printf("Q = %.6g\nmean = %s\nF(p) = %.6g\ncondition = %.3g\n",
                fit.diagnostics.residual_variance,
                scar::io::format_complex(fit.model.mean_offset, 6).c_str(),
                fit.diagnostics.aic_value, fit.diagnostics.condition_estimate);
    scar::io::save_model(fit.model, args.out_path);
    std::printf("wrote %s\n", args.out_path.c_str());
    return kExitOk;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
}

struct FilterArgs {
  std::string model_path;
  std::string truth_path;
  int n = 1;
  double r_value = 0.0;
  double r_fraction = 0.0;
  uint64_t seed = 1;
  std::string track_path;
};

int cmd_filter(const FilterArgs& args) {
  try {
    if (args.n < 1) throw Error("n must be >= 1");
    if (args.r_value <= 0 && args.r_fraction <= 0)
      throw Error("provide --r or --r-frac (positive)");
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  try {
    const auto model = scar::io::load_model(args.model_path);
    const auto truth = scar::load_timeseries(args.truth_path);
    scar::filtering::KalmanRunConfig config;
    config.obs_interval = args.n;
    config.obs_noise = args.r_value > 0 ? args.r_value : args.r_fraction * truth.variance();
    config.seed = args.seed;
    const auto run = scar::filtering::run_kalman(model, truth, config);
    std::printf("cycles = %zu\nprior_rmse = %.6g\nposterior_rmse = %.6g\ndiverged = %d\n",
                run.skill.cycles, run.skill.prior_rmse, run.skill.posterior_rmse,
                run.skill.diverged ? 1 : 0);
    if (!args.track_path.empty()) {
      scar::experiment::save_track_csv(run.track, args.track_path);
      std::printf("wrote %s\n", args.track_path.c_str());
    }
    return kExitOk;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
}

struct SweepArgs {
  std::string config_path;
  bool no_timestamp = false;
};

int cmd_sweep(const SweepArgs& args) {
  scar::experiment::ExperimentConfig config;
  try {
    config = scar::experiment::load_config(args.config_path);
    config.validate();
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  try {
    fs::create_directories(config.output_dir);
    const auto result = scar::experiment::run_sweep(config);
    const std::string out_path = (fs::path(config.output_dir) / "results.csv").string();
    scar::experiment::save_sweep_csv(result, out_path);
    prepend_timestamp(out_path, !args.no_timestamp);
    std::printf("rows = %zu\ndivergences = %zu\nlambda = %s\nsigma = %.6g\nwrote %s\n",
                result.rows.size(), result.divergence_count,
                scar::io::format_complex(result.lambda_used).c_str(), result.sigma_used,
                out_path.c_str());
    return kExitOk;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
}

struct ForecastArgs {
  std::string series_path;
  std::string models = "scar3,ar3";
  int lead = 15;
  double train_fraction = 0.7;
  int ensemble = 50;
  uint64_t seed = 7;
  std::string lambda_text;
  double sigma = 0.0;
  std::string pc_path = "pc_curve.csv";
  std::string track_path = "forecast_track.csv";
  bool no_adaptive_r = false;
  bool no_timestamp = false;
};

int cmd_forecast(const ForecastArgs& args) {
  scar::experiment::ForecastConfig config;
  try {
    if (args.lead < 1) throw Error("lead must be >= 1");
    if (args.ensemble < 2) throw Error("ensemble must be >= 2");
    config.models.clear();
    std::stringstream ss(args.models);
    std::string item;
    while (std::getline(ss, item, ',')) {
      scar::experiment::ModelSpec spec;
      if (item == "scar3") spec.kind = scar::experiment::ModelKind::Scar3;
      else if (item == "ar3") spec.kind = scar::experiment::ModelKind::Ar3;
      else if (item == "car") spec.kind = scar::experiment::ModelKind::CarConstrained;
      else if (item == "ar") spec.kind = scar::experiment::ModelKind::ArAic;
      else throw Error("unknown model '" + item + "' (use scar3, ar3, car, ar)");
      config.models.push_back(spec);
    }
    if (config.models.empty()) throw Error("no models requested");
    config.lead_max = args.lead;
    config.train_fraction = args.train_fraction;
    config.ensemble_size = args.ensemble;
    config.seed = args.seed;
    config.adaptive_r = !args.no_adaptive_r;
    if (!args.lambda_text.empty())
      config.lambda_override = scar::io::parse_complex(args.lambda_text);
    if (args.sigma > 0) config.sigma_override = args.sigma;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  try {
    const auto series = scar::load_timeseries(args.series_path);
    const auto result = scar::experiment::run_forecast(series, config);
    for (const auto& model : result.models) {
      std::printf("%s: R_estimate = %.6g\n", model.model_tag.c_str(), model.r_estimate);
      for (const auto& [lead, pc] : model.pc_curve)
        std::printf("  PC(%d) = %.4f\n", lead, pc);
    }
    scar::experiment::save_pc_csv(result, args.pc_path);
    prepend_timestamp(args.pc_path, !args.no_timestamp);
    if (!result.models.empty() && !args.track_path.empty()) {
      scar::experiment::save_track_csv(result.models.front().track, args.track_path);
      std::printf("wrote %s\n", args.track_path.c_str());
    }
    std::printf("wrote %s\n", args.pc_path.c_str());
    return kExitOk;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
}

struct LorenzArgs {
  double forcing = 6.0;
  int dimension = 40;
  double dt = 0.0625;
  size_t samples = 20000;
  double spin_up = 100.0;
  uint64_t seed = 1;
  std::string modes = "1,8";
  std::string out_dir = "lorenz_out";
  bool no_timestamp = false;
};

int cmd_lorenz(const LorenzArgs& args) {
  std::vector<int> modes;
  try {
    if (args.dimension < 4) throw Error("dimension must be >= 4");
    if (!(args.dt > 0)) throw Error("dt must be positive");
    if (args.samples < 2) throw Error("samples must be >= 2");
    std::stringstream ss(args.modes);
    std::string item;
    while (std::getline(ss, item, ',')) modes.push_back(std::stoi(item));
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  try {
    scar::signals::Lorenz96Config config;
    config.dimension = args.dimension;
    config.forcing = args.forcing;
    config.sample_dt = args.dt;
    config.spin_up = args.spin_up;
    config.duration = args.dt * static_cast<double>(args.samples - 1);
    config.seed = args.seed;
    const auto trajectory = scar::signals::integrate_lorenz96(config);
    fs::create_directories(args.out_dir);
    scar::signals::save_multiseries(trajectory, (fs::path(args.out_dir) / "trajectory.csv").string());

    nlohmann::json stats_json = nlohmann::json::array();
    for (int mode : modes) {
      const auto series = scar::signals::fourier_mode(trajectory, mode);
      const std::string tag = "mode" + std::to_string(mode);
      scar::save_timeseries(series, (fs::path(args.out_dir) / (tag + ".csv")).string());
      const auto stats = scar::signals::equilibrium_stats(series);
      const auto msm = scar::armodel::msm_parameters(stats.energy, stats.correlation_time);
      nlohmann::json j;
      j["mode"] = mode;
      j["energy"] = stats.energy;
      j["correlation_time"] = {{"re", stats.correlation_time.real()},
                               {"im", stats.correlation_time.imag()}};
      j["lambda"] = {{"re", msm.lambda.real()}, {"im", msm.lambda.imag()}};
      j["sigma"] = msm.sigma;
      stats_json.push_back(j);
      std::printf("mode %d: energy = %.6g, lambda = %s, sigma = %.6g\n", mode, stats.energy,
                  scar::io::format_complex(msm.lambda).c_str(), msm.sigma);

      std::ofstream acf((fs::path(args.out_dir) / (tag + "_acf.csv")).string());
      acf << "lag,re,im,abs\n";
      char buf[160];
      for (size_t k = 0; k < stats.acf.size(); ++k) {
        std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g,%.17g\n",
                      stats.acf_dt * static_cast<double>(k), stats.acf[k].real(),
                      stats.acf[k].imag(), std::abs(stats.acf[k]));
        acf << buf;
      }
    }
    nlohmann::json top;
    top["modes"] = stats_json;
    if (!args.no_timestamp) top["generated_at"] = timestamp_line();
    std::ofstream stats_out((fs::path(args.out_dir) / "stats.json").string());
    stats_out << top.dump(2) << "\n";
    std::printf("wrote %s\n", args.out_dir.c_str());
    return kExitOk;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"stable consistent AR(3) filter construction and benchmarking"};
  app.require_subcommand(1);

  ScarArgs scar_args;
  auto* scar_cmd = app.add_subcommand("scar", "construct a certificate and model from lambda");
  scar_cmd->add_option("--lambda", scar_args.lambda_text, "decay rate, e.g. -8.312-8.569i")
      ->required();
  scar_cmd->add_option("--sigma", scar_args.sigma, "noise amplitude (default 1)");
  scar_cmd->add_option("--dt", scar_args.dt, "model step; default dt_hat/2");
  scar_cmd->add_option("--out-cert", scar_args.cert_path, "certificate output path");
  scar_cmd->add_option("--out-model", scar_args.model_path, "model output path");
  scar_cmd->add_flag("--no-timestamp", scar_args.no_timestamp, "omit timestamps from outputs");

  FitArgs fit_args;
  auto* fit_cmd = app.add_subcommand("fit", "fit an AR model to a series file");
  fit_cmd->add_option("--series", fit_args.series_path, "input CSV (t,re,im)")->required();
  fit_cmd->add_option("--method", fit_args.method, "yw | cyw");
  fit_cmd->add_option("--p", fit_args.p, "model order");
  fit_cmd->add_option("--lambda", fit_args.lambda_text, "required for cyw");
  fit_cmd->add_option("--aic", fit_args.aic_pmax, "print F(p) table up to p_max and choose p");
  fit_cmd->add_option("--out", fit_args.out_path, "model output path");

  FilterArgs filter_args;
  auto* filter_cmd = app.add_subcommand("filter", "run one Kalman filtering experiment");
  filter_cmd->add_option("--model", filter_args.model_path, "model JSON")->required();
  filter_cmd->add_option("--truth", filter_args.truth_path, "truth CSV")->required();
  filter_cmd->add_option("--n", filter_args.n, "observation interval in model steps");
  filter_cmd->add_option("--r", filter_args.r_value, "observation noise variance");
  filter_cmd->add_option("--r-frac", filter_args.r_fraction, "R as a fraction of truth energy");
  filter_cmd->add_option("--seed", filter_args.seed, "observation noise seed");
  filter_cmd->add_option("--track", filter_args.track_path, "track CSV output");

  SweepArgs sweep_args;
  auto* sweep_cmd = app.add_subcommand("sweep", "run the (model x dt x n x R x seed) grid");
  sweep_cmd->add_option("config", sweep_args.config_path, "TOML or JSON config")->required();
  sweep_cmd->add_flag("--no-timestamp", sweep_args.no_timestamp, "omit timestamps from outputs");

  ForecastArgs forecast_args;
  auto* forecast_cmd = app.add_subcommand("forecast", "EnKF assimilation and lead-time skill");
  forecast_cmd->add_option("--series", forecast_args.series_path, "bivariate series CSV")
      ->required();
  forecast_cmd->add_option("--models", forecast_args.models, "comma list: scar3,ar3,car,ar");
  forecast_cmd->add_option("--lead", forecast_args.lead, "maximum lead (observation intervals)");
  forecast_cmd->add_option("--train-frac", forecast_args.train_fraction, "training fraction");
  forecast_cmd->add_option("--ensemble", forecast_args.ensemble, "ensemble size (default 50)");
  forecast_cmd->add_option("--seed", forecast_args.seed, "ensemble/noise seed");
  forecast_cmd->add_option("--lambda", forecast_args.lambda_text, "override decay rate");
  forecast_cmd->add_option("--sigma", forecast_args.sigma, "override noise amplitude");
  forecast_cmd->add_option("--out-pc", forecast_args.pc_path, "PC curve CSV output");
  forecast_cmd->add_option("--out-track", forecast_args.track_path, "forecast track CSV output");
  forecast_cmd->add_flag("--no-adaptive-r", forecast_args.no_adaptive_r, "freeze R at its initial value");
  forecast_cmd->add_flag("--no-timestamp", forecast_args.no_timestamp, "omit timestamps from outputs");

  LorenzArgs lorenz_args;
  auto* lorenz_cmd = app.add_subcommand("lorenz", "integrate the cyclic lattice system and emit modes");
  lorenz_cmd->add_option("--forcing", lorenz_args.forcing, "forcing constant F");
  lorenz_cmd->add_option("--dimension", lorenz_args.dimension, "lattice size J");
  lorenz_cmd->add_option("--dt", lorenz_args.dt, "sample step");
  lorenz_cmd->add_option("--samples", lorenz_args.samples, "number of samples");
  lorenz_cmd->add_option("--spin-up", lorenz_args.spin_up, "discarded transient (time units)");
  lorenz_cmd->add_option("--seed", lorenz_args.seed, "initial perturbation seed");
  lorenz_cmd->add_option("--modes", lorenz_args.modes, "comma list of wavenumbers");
  lorenz_cmd->add_option("--out-dir", lorenz_args.out_dir, "output directory");
  lorenz_cmd->add_flag("--no-timestamp", lorenz_args.no_timestamp, "omit timestamps from outputs");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (scar_cmd->parsed()) return cmd_scar(scar_args);
  if (fit_cmd->parsed()) return cmd_fit(fit_args);
  if (filter_cmd->parsed()) return cmd_filter(filter_args);
  if (sweep_cmd->parsed()) return cmd_sweep(sweep_args);
  if (forecast_cmd->parsed()) return cmd_forecast(forecast_args);
  if (lorenz_cmd->parsed()) return cmd_lorenz(lorenz_args);
  return kExitUsage;
}
