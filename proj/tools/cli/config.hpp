#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace wakefarm::cli {

/// Bad configuration or usage; maps to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Flat run configuration. Every key is listed in README.md with its default.
struct RunConfig {
  std::string scenario = "channel-1";
  int n_turbines = 8;
  std::string optimizer = "hybrid-ga";  // local | hybrid-ga | hybrid-bh
  int stage1_budget = 100;
  int stage2_budget = 200;
  std::uint64_t seed = 0;
  std::optional<double> alpha;  // empty: derived from the turbine spec
  std::string table_path;
  std::string stage2_table_path;
  double table_spacing = 2.0;
  double stage2_table_spacing = 1.0;
  std::string output_dir = "run";
  int population_size = 100;
  int n_random_seeds = 10;
  int basin_hopping_local_iterations = 50;
  int jobs = 1;
  bool record_timing = false;
  bool snapshots = false;  // decile layout snapshots in the run directory

  std::string taylor_flow = "linear-gradient";  // linear-gradient | scenario
  int taylor_turbines = 2;
  int taylor_directions = 5;
  double taylor_h0 = 0.5;
  int taylor_levels = 6;
  bool corrupt_gradient = false;

  void validate() const;
};

nlohmann::json to_json(const RunConfig& cfg);

/// Applies the keys of `doc` on top of `cfg`. Unknown keys and wrongly typed
/// values throw ConfigError naming the key.
void apply_json(RunConfig& cfg, const nlohmann::json& doc);

/// Reads a JSON object from `path`; missing or malformed files throw ConfigError.
nlohmann::json read_config_file(const std::filesystem::path& path);

/// `key=value` where value is parsed as JSON when possible, else taken as a
/// string.
void apply_assignment(RunConfig& cfg, const std::string& assignment);

std::vector<std::string> config_keys();

}  // namespace wakefarm::cli
