#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "scar/armodel.hpp"
#include "scar/kalman.hpp"
#include "scar/pipeline.hpp"
#include "scar/timeseries.hpp"
#include "scar/toml_lite.hpp"

namespace scar::experiment {

using Complex = std::complex<double>;

enum class ModelKind { ArAic, CarConstrained, Ar3, Scar3 };

std::string model_kind_tag(ModelKind kind);

struct ModelSpec {
  ModelKind kind = ModelKind::Scar3;
  int p = 3;  // order for ArAic / CarConstrained
};

struct TruthSpec {
  std::string kind = "lorenz96";  // lorenz96 | ou | file
  // lorenz96
  int mode = 8;
  double forcing = 6.0;
  int dimension = 40;
  double spin_up = 100.0;
  // ou
  Complex lambda{-1.0, 0.0};
  double sigma = 1.0;
  // file
  std::string path;
};

struct ExperimentConfig {
  std::vector<ModelSpec> models;
  std::vector<double> dt_grid;
  std::vector<int> obs_intervals;
  std::vector<double> r_fractions;  // of the truth energy
  std::vector<uint64_t> seeds{1};
  TruthSpec truth;
  size_t truth_samples = 20000;
  uint64_t truth_seed = 1;
  std::optional<Complex> lambda_override;  // skip statistics estimation
  std::optional<double> sigma_override;
  double inflation = 1.0;
  int jobs = 0;  // 0: hardware concurrency
  std::string output_dir = ".";
  bool write_tracks = false;

  void validate() const;
};

ExperimentConfig config_from_toml(const io::TomlTable& table);
ExperimentConfig config_from_json_text(const std::string& text);
ExperimentConfig load_config(const std::string& path);  // dispatches on extension

struct SweepRow {
  std::string model_tag;
  double dt = 0.0;
  int n = 1;
  double r_fraction = 0.0;
  double prior_rmse = 0.0;
  double posterior_rmse = 0.0;
  bool diverged = false;
  uint64_t seed = 0;
};

struct SweepResult {
  std::vector<SweepRow> rows;  // exactly one per (model, dt, n, R, seed) cell
  size_t divergence_count = 0;
  Complex lambda_used{0.0, 0.0};
  double sigma_used = 0.0;
};

/// Runs the full (model x dt x n x R x seed) grid against a shared truth
/// per dt. Per-cell failures are recorded as diverged rows.
SweepResult run_sweep(const ExperimentConfig& config,
                      const std::function<void(const SweepRow&)>& on_row = nullptr);

void save_sweep_csv(const SweepResult& result, const std::string& path);
void save_track_csv(const std::vector<filtering::TrackPoint>& track, const std::string& path);

struct ForecastConfig {
  std::vector<ModelSpec> models{{ModelKind::Scar3, 3}, {ModelKind::Ar3, 3}};
  int lead_max = 15;             // observation intervals (days for daily data)
  double train_fraction = 0.7;
  int ensemble_size = 50;
  bool adaptive_r = true;
  bool adapt_during_verification = false;
  double r_init_fraction = 0.1;  // of the series energy
  double inflation = 1.0;
  uint64_t seed = 7;
  std::optional<Complex> lambda_override;
  std::optional<double> sigma_override;
  int track_lead = 10;
};

struct ForecastModelResult {
  std::string model_tag;
  std::vector<std::pair<int, double>> pc_curve;  // (lead, PC)
  double r_estimate = 0.0;
  std::vector<filtering::TrackPoint> track;  // track_lead-step forecasts
};

struct ForecastResult {
  std::vector<ForecastModelResult> models;
  size_t train_samples = 0;
  size_t verify_samples = 0;
};

/// EnKF assimilation over the training window with adaptive observation
/// noise, then deterministic lead-time forecasts scored by pattern
/// correlation over the verification window.
ForecastResult run_forecast(const TimeSeries& series, const ForecastConfig& config);

void save_pc_csv(const ForecastResult& result, const std::string& path);

}  // namespace scar::experiment
