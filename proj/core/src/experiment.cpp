#include "scar/experiment.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <map>
#include <thread>

#include "scar/enkf.hpp"
#include "scar/lorenz96.hpp"
#include "scar/metrics.hpp"
#include "scar/model_io.hpp"
#include "scar/stats.hpp"
#include "scar/synthetic.hpp"

namespace scar::experiment {

using filtering::TrackPoint;

std::string model_kind_tag(ModelKind kind) {
  switch (kind) {
    case ModelKind::ArAic: return "AR-p";
    case ModelKind::CarConstrained: return "CAR-p";
    case ModelKind::Ar3: return "AR-3";
    case ModelKind::Scar3: return "SCAR-3";
  }
  return "?";
}

void ExperimentConfig::validate() const {
  if (models.empty()) throw Error("config: at least one model spec required");
  if (dt_grid.empty()) throw Error("config: dt grid must be nonempty");
  for (double dt : dt_grid)
    if (!(dt > 0)) throw Error("config: dt grid values must be positive");
  if (obs_intervals.empty()) throw Error("config: obs interval list must be nonempty");
  for (int n : obs_intervals)
    if (n < 1) throw Error("config: obs intervals must be >= 1");
  if (r_fractions.empty()) throw Error("config: R fraction list must be nonempty");
  for (double r : r_fractions)
    if (!(r > 0)) throw Error("config: R fractions must be positive");
  if (seeds.empty()) throw Error("config: seed list must be nonempty");
  if (truth_samples < 200) throw Error("config: truth_samples too small");
  if (truth.kind != "lorenz96" && truth.kind != "ou" && truth.kind != "file")
    throw Error("config: unknown truth kind '" + truth.kind + "'");
}

namespace {

ModelKind kind_from_string(const std::string& s) {
  if (s == "ar" || s == "AR-p" || s == "arp") return ModelKind::ArAic;
  if (s == "car" || s == "CAR-p" || s == "carp") return ModelKind::CarConstrained;
  if (s == "ar3" || s == "AR-3") return ModelKind::Ar3;
  if (s == "scar3" || s == "SCAR-3" || s == "scar") return ModelKind::Scar3;
  throw Error("config: unknown model kind '" + s + "'");
}

void parallel_for(size_t count, int jobs, const std::function<void(size_t)>& fn) {
  int workers = jobs > 0 ? jobs : static_cast<int>(std::thread::hardware_concurrency());
  workers = std::max(1, std::min<int>(workers, static_cast<int>(count)));
  if (workers == 1) {
    for (size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<size_t> next{0};
  std::atomic<bool> failed{false};
  std::string first_error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      while (true) {
        const size_t i = next.fetch_add(1);
        if (i >= count || failed.load()) return;
        try {
          fn(i);
        } catch (const std::exception& e) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!failed.exchange(true)) first_error = e.what();
          return;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failed.load()) throw Error("sweep worker failed: " + first_error);
}

TimeSeries generate_truth(const ExperimentConfig& config, double dt) {
  if (config.truth.kind == "lorenz96") {
    signals::Lorenz96Config lc;
    lc.dimension = config.truth.dimension;
    lc.forcing = config.truth.forcing;
    lc.sample_dt = dt;
    lc.spin_up = config.truth.spin_up;
    lc.duration = dt * static_cast<double>(config.truth_samples - 1);
    lc.seed = config.truth_seed;
    const auto trajectory = signals::integrate_lorenz96(lc);
    return signals::fourier_mode(trajectory, config.truth.mode);
  }
  if (config.truth.kind == "ou")
    return signals::simulate_ou(config.truth.lambda, config.truth.sigma, dt, config.truth_samples,
                                config.truth_seed);
  TimeSeries series = load_timeseries(config.truth.path);
  if (std::abs(series.dt - dt) > 1e-9 * std::max(1.0, dt))
    throw Error("config: file truth dt does not match requested dt");
  return series;
}

}  // namespace

ExperimentConfig config_from_toml(const io::TomlTable& table) {
  ExperimentConfig config;
  const auto get_num = [&](const char* key, double fallback) {
    return table.has(key) ? table.at(key).as_number() : fallback;
  };
  config.models.clear();
  const auto model_tables = table.table_arrays.find("model");
  if (model_tables != table.table_arrays.end()) {
    for (const auto& mt : model_tables->second) {
      ModelSpec spec;
      spec.kind = kind_from_string(mt.at("kind").as_string());
      if (mt.has("p")) spec.p = static_cast<int>(mt.at("p").as_number());
      config.models.push_back(spec);
    }
  }
  if (table.has("dt_grid"))
    for (const auto& v : table.at("dt_grid").as_array()) config.dt_grid.push_back(v.as_number());
  if (table.has("obs_intervals"))
    for (const auto& v : table.at("obs_intervals").as_array())
      config.obs_intervals.push_back(static_cast<int>(v.as_number()));
  if (table.has("r_fractions"))
    for (const auto& v : table.at("r_fractions").as_array())
      config.r_fractions.push_back(v.as_number());
  if (table.has("seeds")) {
    config.seeds.clear();
    for (const auto& v : table.at("seeds").as_array())
      config.seeds.push_back(static_cast<uint64_t>(v.as_number()));
  }
  config.truth_samples = static_cast<size_t>(get_num("truth_samples", 20000));
  config.truth_seed = static_cast<uint64_t>(get_num("truth_seed", 1));
  config.inflation = get_num("inflation", 1.0);
  config.jobs = static_cast<int>(get_num("jobs", 0));
  if (table.has("output_dir")) config.output_dir = table.at("output_dir").as_string();
  if (table.has("write_tracks")) config.write_tracks = table.at("write_tracks").as_bool();
  if (table.has("lambda_re") || table.has("lambda_im"))
    config.lambda_override = Complex(get_num("lambda_re", 0.0), get_num("lambda_im", 0.0));
  if (table.has("sigma")) config.sigma_override = table.at("sigma").as_number();

  const auto truth_table = table.tables.find("truth");
  if (truth_table != table.tables.end()) {
    const auto& tt = truth_table->second;
    if (tt.has("kind")) config.truth.kind = tt.at("kind").as_string();
    if (tt.has("mode")) config.truth.mode = static_cast<int>(tt.at("mode").as_number());
    if (tt.has("forcing")) config.truth.forcing = tt.at("forcing").as_number();
    if (tt.has("dimension")) config.truth.dimension = static_cast<int>(tt.at("dimension").as_number());
    if (tt.has("spin_up")) config.truth.spin_up = tt.at("spin_up").as_number();
    if (tt.has("lambda_re") || tt.has("lambda_im"))
      config.truth.lambda = Complex(tt.has("lambda_re") ? tt.at("lambda_re").as_number() : 0.0,
                                    tt.has("lambda_im") ? tt.at("lambda_im").as_number() : 0.0);
    if (tt.has("sigma")) config.truth.sigma = tt.at("sigma").as_number();
    if (tt.has("path")) config.truth.path = tt.at("path").as_string();
  }
  return config;
}

ExperimentConfig config_from_json_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("config: malformed JSON: ") + e.what());
  }
  ExperimentConfig config;
  if (j.contains("model")) {
    for (const auto& m : j.at("model")) {
      ModelSpec spec;
      spec.kind = kind_from_string(m.at("kind").get<std::string>());
      if (m.contains("p")) spec.p = m.at("p").get<int>();
      config.models.push_back(spec);
    }
  }
  if (j.contains("dt_grid")) config.dt_grid = j.at("dt_grid").get<std::vector<double>>();
  if (j.contains("obs_intervals")) config.obs_intervals = j.at("obs_intervals").get<std::vector<int>>();
  if (j.contains("r_fractions")) config.r_fractions = j.at("r_fractions").get<std::vector<double>>();
  if (j.contains("seeds")) config.seeds = j.at("seeds").get<std::vector<uint64_t>>();
  if (j.contains("truth_samples")) config.truth_samples = j.at("truth_samples").get<size_t>();
  if (j.contains("truth_seed")) config.truth_seed = j.at("truth_seed").get<uint64_t>();
  if (j.contains("inflation")) config.inflation = j.at("inflation").get<double>();
  if (j.contains("jobs")) config.jobs = j.at("jobs").get<int>();
  if (j.contains("output_dir")) config.output_dir = j.at("output_dir").get<std::string>();
  if (j.contains("write_tracks")) config.write_tracks = j.at("write_tracks").get<bool>();
  if (j.contains("lambda_re") || j.contains("lambda_im"))
    config.lambda_override = Complex(j.value("lambda_re", 0.0), j.value("lambda_im", 0.0));
  if (j.contains("sigma")) config.sigma_override = j.at("sigma").get<double>();
  if (j.contains("truth")) {
    const auto& tt = j.at("truth");
    config.truth.kind = tt.value("kind", config.truth.kind);
    config.truth.mode = tt.value("mode", config.truth.mode);
    config.truth.forcing = tt.value("forcing", config.truth.forcing);
    config.truth.dimension = tt.value("dimension", config.truth.dimension);
    config.truth.spin_up = tt.value("spin_up", config.truth.spin_up);
    config.truth.lambda = Complex(tt.value("lambda_re", config.truth.lambda.real()),
                                  tt.value("lambda_im", config.truth.lambda.imag()));
    config.truth.sigma = tt.value("sigma", config.truth.sigma);
    config.truth.path = tt.value("path", config.truth.path);
  }
  return config;
}

ExperimentConfig load_config(const std::string& path) {
  const auto dot = path.rfind('.');
  const std::string ext = dot == std::string::npos ? "" : path.substr(dot + 1);
  if (ext == "toml") return config_from_toml(io::load_toml(path));
  if (ext == "json") {
    std::ifstream in(path);
    if (!in) throw Error("config: cannot open " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return config_from_json_text(text);
  }
  throw Error("config: unsupported extension '" + ext + "' (expected .toml or .json)");
}

SweepResult run_sweep(const ExperimentConfig& config,
                      const std::function<void(const SweepRow&)>& on_row) {
  config.validate();

  // shared truth per dt
  std::map<double, TimeSeries> truths;
  for (double dt : config.dt_grid)
    if (!truths.count(dt)) truths.emplace(dt, generate_truth(config, dt));

  // lambda and sigma: explicit override, the OU truth parameters, or the
  // mean-stochastic-model fit of the reference (finest-dt) truth
  SweepResult result;
  bool need_lambda = false;
  for (const auto& m : config.models)
    if (m.kind == ModelKind::Scar3 || m.kind == ModelKind::CarConstrained) need_lambda = true;
  if (config.lambda_override) {
    result.lambda_used = *config.lambda_override;
    if (config.sigma_override) {
      result.sigma_used = *config.sigma_override;
    } else {
      // couple the noise amplitude to the measured energy
      const double dt_ref = *std::min_element(config.dt_grid.begin(), config.dt_grid.end());
      const double energy = truths.at(dt_ref).variance();
      result.sigma_used = std::sqrt(2.0 * std::abs(result.lambda_used.real()) * energy);
    }
  } else if (config.truth.kind == "ou") {
    result.lambda_used = config.truth.lambda;
    result.sigma_used = config.truth.sigma;
  } else if (need_lambda) {
    const double dt_ref = *std::min_element(config.dt_grid.begin(), config.dt_grid.end());
    const auto stats = signals::equilibrium_stats(truths.at(dt_ref));
    const auto msm = armodel::msm_parameters(stats.energy, stats.correlation_time);
    result.lambda_used = msm.lambda;
    result.sigma_used = config.sigma_override.value_or(msm.sigma);
  }

  // one certificate serves every dt
  std::optional<pipeline::SCARCertificate> certificate;
  std::string certificate_error;
  for (const auto& m : config.models)
    if (m.kind == ModelKind::Scar3) {
      try {
        certificate = pipeline::build_certificate(result.lambda_used);
      } catch (const Error& e) {
        certificate_error = e.what();
      }
      break;
    }

  // fit/build models per (spec, dt) once
  struct CellModel {
    std::optional<armodel::ARModel> model;
    std::string error;
  };
  std::map<std::pair<size_t, double>, CellModel> built;
  for (size_t mi = 0; mi < config.models.size(); ++mi) {
    const auto& spec = config.models[mi];
    for (double dt : config.dt_grid) {
      CellModel cell;
      try {
        const TimeSeries& truth = truths.at(dt);
        switch (spec.kind) {
          case ModelKind::ArAic:
            cell.model = armodel::yule_walker_fit(truth, spec.p).model;
            break;
          case ModelKind::Ar3:
            cell.model = armodel::yule_walker_fit(truth, 3).model;
            break;
          case ModelKind::CarConstrained:
            cell.model =
                armodel::constrained_yule_walker_fit(truth, spec.p, result.lambda_used).model;
            break;
          case ModelKind::Scar3: {
            if (!certificate) throw Error("scar certificate unavailable: " + certificate_error);
            armodel::ARModel model =
                pipeline::model_from_certificate(*certificate, result.sigma_used, dt);
            model.mean_offset = truth.mean();
            cell.model = std::move(model);
            break;
          }
        }
      } catch (const Error& e) {
        cell.error = e.what();
      }
      built.emplace(std::make_pair(mi, dt), std::move(cell));
    }
  }

  // grid cells in deterministic order
  struct Cell {
    size_t model_index;
    double dt;
    int n;
    double r_fraction;
    uint64_t seed;
  };
  std::vector<Cell> cells;
  for (size_t mi = 0; mi < config.models.size(); ++mi)
    for (double dt : config.dt_grid)
      for (int n : config.obs_intervals)
        for (double rf : config.r_fractions)
          for (uint64_t seed : config.seeds) cells.push_back({mi, dt, n, rf, seed});

  result.rows.resize(cells.size());
  parallel_for(cells.size(), config.jobs, [&](size_t i) {
    const Cell& cell = cells[i];
    SweepRow row;
    row.model_tag = model_kind_tag(config.models[cell.model_index].kind);
    row.dt = cell.dt;
    row.n = cell.n;
    row.r_fraction = cell.r_fraction;
    row.seed = cell.seed;
    const TimeSeries& truth = truths.at(cell.dt);
    const auto& built_cell = built.at(std::make_pair(cell.model_index, cell.dt));
    if (!built_cell.model) {
      row.diverged = true;
      row.prior_rmse = row.posterior_rmse = std::numeric_limits<double>::infinity();
    } else {
      filtering::KalmanRunConfig kc;
      kc.obs_interval = cell.n;
      kc.obs_noise = cell.r_fraction * truth.variance();
      kc.seed = cell.seed;
      try {
        const auto run = filtering::run_kalman(*built_cell.model, truth, kc);
        row.prior_rmse = run.skill.prior_rmse;
        row.posterior_rmse = run.skill.posterior_rmse;
        row.diverged = run.skill.diverged;
      } catch (const Error&) {
        row.diverged = true;
        row.prior_rmse = row.posterior_rmse = std::numeric_limits<double>::infinity();
      }
    }
    result.rows[i] = std::move(row);
  });

  for (const auto& row : result.rows)
    if (row.diverged) ++result.divergence_count;
  if (on_row)
    for (const auto& row : result.rows) on_row(row);
  return result;
}

void save_sweep_csv(const SweepResult& result, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("sweep: cannot write " + path);
  out << "model_tag,dt,n,R_fraction,prior_rmse,posterior_rmse,diverged,seed\n";
  char buf[256];
  for (const auto& row : result.rows) {
    std::snprintf(buf, sizeof(buf), "%s,%.17g,%d,%.17g,%.17g,%.17g,%d,%llu\n", row.model_tag.c_str(),
                  row.dt, row.n, row.r_fraction, row.prior_rmse, row.posterior_rmse,
                  row.diverged ? 1 : 0, static_cast<unsigned long long>(row.seed));
    out << buf;
  }
  if (!out) throw Error("sweep: write failed for " + path);
}

void save_track_csv(const std::vector<TrackPoint>& track, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("track: cannot write " + path);
  out << "t,truth_re,truth_im,mean_re,mean_im,prior_var\n";
  char buf[256];
  for (const auto& tp : track) {
    std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n", tp.t, tp.truth.real(),
                  tp.truth.imag(), tp.prior_mean.real(), tp.prior_mean.imag(), tp.prior_var);
    out << buf;
  }
  if (!out) throw Error("track: write failed for " + path);
}

ForecastResult run_forecast(const TimeSeries& series, const ForecastConfig& config) {
  if (series.size() < 200) throw Error("forecast: series too short");
  if (config.lead_max < 1) throw Error("forecast: lead_max must be >= 1");
  if (!(config.train_fraction > 0) || !(config.train_fraction < 1))
    throw Error("forecast: train_fraction must be in (0,1)");
  const size_t train_end = static_cast<size_t>(config.train_fraction * series.size());
  if (train_end < 100 || train_end + static_cast<size_t>(config.lead_max) + 10 > series.size())
    throw Error("forecast: window exceeding data");

  TimeSeries train;
  train.dt = series.dt;
  train.t0 = series.t0;
  train.values.assign(series.values.begin(), series.values.begin() + static_cast<long>(train_end));

  const double energy = train.variance();
  Complex lambda;
  double sigma = 0.0;
  if (config.lambda_override) {
    lambda = *config.lambda_override;
    sigma = config.sigma_override.value_or(std::sqrt(2.0 * std::abs(lambda.real()) * energy));
  } else {
    const auto stats = signals::equilibrium_stats(train);
    const auto msm = armodel::msm_parameters(stats.energy, stats.correlation_time);
    lambda = msm.lambda;
    sigma = config.sigma_override.value_or(msm.sigma);
  }

  ForecastResult result;
  result.train_samples = train_end;
  result.verify_samples = series.size() - train_end;

  for (size_t mi = 0; mi < config.models.size(); ++mi) {
    const auto& spec = config.models[mi];
    armodel::ARModel model;
    switch (spec.kind) {
      case ModelKind::Scar3: {
        const auto cert = pipeline::build_certificate(lambda);
        model = pipeline::model_from_certificate(cert, sigma, series.dt);
        model.mean_offset = train.mean();
        break;
      }
      case ModelKind::Ar3:
        model = armodel::yule_walker_fit(train, 3).model;
        break;
      case ModelKind::ArAic:
        model = armodel::yule_walker_fit(train, spec.p).model;
        break;
      case ModelKind::CarConstrained:
        model = armodel::constrained_yule_walker_fit(train, spec.p, lambda).model;
        break;
    }

    filtering::EnkfOptions enkf_options;
    enkf_options.inflation = config.inflation;
    const uint64_t pass_seed = config.seed + 1000003 * mi;

    // one assimilation pass with a fixed observation-noise variance
    struct PassData {
      std::vector<Complex> innovations;
      std::vector<double> prior_vars;
      std::vector<Eigen::VectorXcd> means;
    };
    const auto run_pass = [&](double r_var, size_t steps) {
      Rng rng(pass_seed);
      filtering::Ensemble ensemble = filtering::make_ensemble(Eigen::VectorXcd::Zero(model.p),
                                                              energy, config.ensemble_size, rng);
      PassData data;
      data.means.reserve(steps);
      for (size_t k = 0; k < steps; ++k) {
        const Complex obs = series.values[k] - model.mean_offset;
        const auto step = filtering::enkf_step(ensemble, model, obs, r_var, 1, rng, enkf_options);
        ensemble = step.analysis;
        data.innovations.push_back(step.innovation);
        data.prior_vars.push_back(step.prior_obs_variance);
        data.means.push_back(ensemble.mean());
      }
      return data;
    };

    // innovation-consistency iteration: the batch identity
    // E|eps|^2 = (prior variance) + R holds only when the filter runs at
    // the true R, so re-estimate and rerun until the value settles
    double r_current = std::max(config.r_init_fraction * energy, 1e-8);
    if (config.adaptive_r) {
      const size_t skip = 30;
      for (int pass = 0; pass < 12; ++pass) {
        const PassData data = run_pass(r_current, train_end);
        if (data.innovations.size() <= skip + 30) break;
        const std::vector<Complex> tail_innovations(data.innovations.begin() + skip,
                                                    data.innovations.end());
        const std::vector<double> tail_vars(data.prior_vars.begin() + skip, data.prior_vars.end());
        const double estimate = filtering::adaptive_noise_estimate(tail_innovations, tail_vars);
        const bool settled = std::abs(estimate - r_current) <= 0.02 * std::max(estimate, 1e-8);
        r_current = estimate;
        if (settled) break;
      }
    }

    const PassData full = run_pass(r_current, series.size());
    std::vector<Eigen::VectorXcd> analysis_means = full.means;

    ForecastModelResult model_result;
    model_result.model_tag = model_kind_tag(spec.kind);
    model_result.r_estimate = r_current;

    if (config.adaptive_r && config.adapt_during_verification) {
      // exponentially forgetting refinement over the verification window
      filtering::AdaptiveNoiseTracker tracker;
      for (size_t k = train_end; k < series.size(); ++k)
        tracker.update(full.innovations[k], full.prior_vars[k]);
      if (tracker.count() >= 30) model_result.r_estimate = tracker.current();
    }

    // deterministic lead-time forecasts of the ensemble mean
    const Eigen::MatrixXcd f = model.companion();
    Eigen::VectorXcd fvec = Eigen::VectorXcd::Zero(model.p);
    fvec(model.p - 1) = model.forcing;
    const auto forecast_last = [&](const Eigen::VectorXcd& state, int lead) {
      Eigen::VectorXcd x = state;
      for (int step = 0; step < lead; ++step) x = f * x + fvec;
      return x(model.p - 1) + model.mean_offset;
    };

    for (int lead = 1; lead <= config.lead_max; ++lead) {
      TimeSeries forecast, verification;
      forecast.dt = verification.dt = series.dt;
      for (size_t k = train_end; k < series.size(); ++k) {
        if (k < static_cast<size_t>(lead)) continue;
        forecast.values.push_back(forecast_last(analysis_means[k - static_cast<size_t>(lead)], lead));
        verification.values.push_back(series.values[k]);
      }
      model_result.pc_curve.emplace_back(
          lead, filtering::pattern_correlation(forecast, verification));
    }

    const int tl = std::min(config.track_lead, config.lead_max);
    for (size_t k = train_end; k < series.size(); ++k) {
      if (k < static_cast<size_t>(tl)) continue;
      TrackPoint tp;
      tp.t = series.time_at(k);
      tp.truth = series.values[k];
      tp.prior_mean = forecast_last(analysis_means[k - static_cast<size_t>(tl)], tl);
      tp.posterior_mean = analysis_means[k](model.p - 1) + model.mean_offset;
      tp.prior_var = 0.0;
      model_result.track.push_back(tp);
    }
    result.models.push_back(std::move(model_result));
  }
  return result;
}

void save_pc_csv(const ForecastResult& result, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("forecast: cannot write " + path);
  out << "model_tag,lead,pc\n";
  char buf[128];
  for (const auto& model : result.models)
    for (const auto& [lead, pc] : model.pc_curve) {
      std::snprintf(buf, sizeof(buf), "%s,%d,%.17g\n", model.model_tag.c_str(), lead, pc);
      out << buf;
    }
  if (!out) throw Error("forecast: write failed for " + path);
}

}  // namespace scar::experiment
