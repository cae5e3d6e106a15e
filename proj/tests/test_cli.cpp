#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "scar/armodel.hpp"
#include "scar/model_io.hpp"
#include "scar/timeseries.hpp"

namespace fs = std::filesystem;
using Complex = std::complex<double>;

namespace {

struct CommandResult {
  int exit_code = -1;
  std::string output;
};

CommandResult run_command(const std::string& args) {
  const std::string cmd = std::string(SCARKIT_BINARY_PATH) + " " + args + " 2>&1";
  std::array<char, 512> buffer{};
  CommandResult result;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  while (fgets(buffer.data(), buffer.size(), pipe)) result.output += buffer.data();
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

struct TempDir {
  fs::path path;
  TempDir() : path(fs::temp_directory_path() / ("scarkit_cli_" + std::to_string(::getpid()))) {
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("usage errors exit with code 2") {
  CHECK(run_command("fit --series missing.csv --method cyw").exit_code == 2);
  CHECK(run_command("definitely-not-a-command").exit_code == 2);
  const auto unstable = run_command("scar --lambda=1.0");
  CHECK(unstable.exit_code == 2);
  CHECK(unstable.output.find("unstable continuous dynamics") != std::string::npos);
}

TEST_CASE("fit round trip through the binary") {
  TempDir dir;
  scar::armodel::ARModel truth;
  truth.p = 3;
  truth.coeffs = {Complex(-0.2, 0.1), Complex(-0.1, -0.05), Complex(-0.3, 0.0)};
  truth.noise_variance = 0.02;
  truth.dt = 0.25;
  const auto series = scar::armodel::simulate(truth, 4000, 8);
  scar::save_timeseries(series, dir.file("series.csv"));

  const auto result = run_command("fit --series " + dir.file("series.csv") + " --method yw --p 3 --out " +
                                  dir.file("model.json"));
  CHECK(result.exit_code == 0);
  CHECK(result.output.find("a1 =") != std::string::npos);
  CHECK(fs::exists(dir.file("model.json")));

  const auto aic_too_big = run_command("fit --series " + dir.file("series.csv") +
                                       " --method yw --p 3 --aic 2000");
  CHECK(aic_too_big.exit_code == 2);
  CHECK(aic_too_big.output.find("p_max too large") != std::string::npos);
}

TEST_CASE("runtime failures exit with code 1") {
  CHECK(run_command("fit --series /nonexistent.csv --method yw --p 3").exit_code == 1);
}

TEST_CASE("certificate construction through the binary") {
  TempDir dir;
  const auto result = run_command("scar --lambda=-1.246-1.214i --sigma 1.0 --out-cert " +
                                  dir.file("cert.json") + " --out-model " + dir.file("model.json"));
  CHECK(result.exit_code == 0);
  CHECK(result.output.find("dt_hat = 1.00") != std::string::npos);
  CHECK(fs::exists(dir.file("cert.json")));
  CHECK(fs::exists(dir.file("model.json")));

  // the written model round-trips through the filter command
  const auto model = scar::io::load_model(dir.file("model.json"));
  CHECK(model.p == 3);
}
