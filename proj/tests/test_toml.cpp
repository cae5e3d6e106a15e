#include <doctest.h>

#include "scar/experiment.hpp"
#include "scar/toml_lite.hpp"

using namespace scar::io;
using namespace scar::experiment;

TEST_CASE("subset parsing") {
  const std::string text = R"(
# sweep configuration
truth_samples = 5000   # inline comment
output_dir = "out"
dt_grid = [0.015625, 0.03125]
seeds = [1, 2, 3]
write_tracks = false

[truth]
kind = "lorenz96"
mode = 8

[[model]]
kind = "scar3"

[[model]]
kind = "ar"
p = 15
)";
  const TomlTable table = parse_toml(text);
  CHECK(table.at("truth_samples").as_number() == 5000);
  CHECK(table.at("output_dir").as_string() == "out");
  CHECK(table.at("dt_grid").as_array().size() == 2);
  CHECK(table.at("write_tracks").as_bool() == false);
  CHECK(table.tables.at("truth").at("kind").as_string() == "lorenz96");
  REQUIRE(table.table_arrays.at("model").size() == 2);
  CHECK(table.table_arrays.at("model")[1].at("p").as_number() == 15);
}

TEST_CASE("parse errors carry line numbers") {
  CHECK_THROWS_AS(parse_toml("key\n"), scar::Error);
  CHECK_THROWS_AS(parse_toml("a = [1, 2\n"), scar::Error);
  CHECK_THROWS_AS(parse_toml("x = \"unterminated\n"), scar::Error);
}

TEST_CASE("toml and json mirrors produce the same config") {
  const std::string toml_text = R"(
dt_grid = [0.1, 0.2]
obs_intervals = [1, 10]
r_fractions = [0.1, 1.0]
seeds = [7]
truth_samples = 4000

[truth]
kind = "ou"
lambda_re = -1.0
lambda_im = 0.9
sigma = 1.4

[[model]]
kind = "scar3"
)";
  const std::string json_text = R"({
    "dt_grid": [0.1, 0.2],
    "obs_intervals": [1, 10],
    "r_fractions": [0.1, 1.0],
    "seeds": [7],
    "truth_samples": 4000,
    "truth": {"kind": "ou", "lambda_re": -1.0, "lambda_im": 0.9, "sigma": 1.4},
    "model": [{"kind": "scar3"}]
  })";
  const auto a = config_from_toml(parse_toml(toml_text));
  const auto b = config_from_json_text(json_text);
  CHECK(a.dt_grid == b.dt_grid);
  CHECK(a.obs_intervals == b.obs_intervals);
  CHECK(a.r_fractions == b.r_fractions);
  CHECK(a.seeds == b.seeds);
  CHECK(a.truth.kind == b.truth.kind);
  CHECK(a.truth.lambda == b.truth.lambda);
  CHECK(a.models.size() == b.models.size());
  a.validate();
  b.validate();
}

TEST_CASE("validation rejects an empty model list") {
  ExperimentConfig config;
  config.models.clear();
  config.dt_grid = {0.1};
  config.obs_intervals = {1};
  config.r_fractions = {0.1};
  CHECK_THROWS_WITH_AS(config.validate(), "config: at least one model spec required", scar::Error);
}

TEST_CASE("validation rejects nonpositive grids") {
  ExperimentConfig config;
  config.models = {{ModelKind::Ar3, 3}};
  config.dt_grid = {0.1, -0.5};
  config.obs_intervals = {1};
  config.r_fractions = {0.1};
  CHECK_THROWS_AS(config.validate(), scar::Error);
}
