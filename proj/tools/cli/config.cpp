#include "config.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>

#include "wakefarm/scenario.hpp"

namespace wakefarm::cli {

namespace {

using json = nlohmann::json;

template <class T>
T as(const json& v, const std::string& key) {
  try {
    if constexpr (std::is_same_v<T, bool>) {
      if (!v.is_boolean()) throw std::invalid_argument("expected boolean");
    } else if constexpr (std::is_same_v<T, std::string>) {
      if (!v.is_string()) throw std::invalid_argument("expected string");
    } else if constexpr (std::is_integral_v<T>) {
      if (!v.is_number_integer()) throw std::invalid_argument("expected integer");
      if constexpr (std::is_unsigned_v<T>)
        if (v.is_number_integer() && !v.is_number_unsigned()) throw std::invalid_argument("expected non-negative integer");
    } else {
      if (!v.is_number()) throw std::invalid_argument("expected number");
    }
    return v.get<T>();
  } catch (const std::exception& e) {
    throw ConfigError("config key `" + key + "`: " + e.what() + ", got " + v.dump());
  }
}

using Setter = std::function<void(RunConfig&, const json&)>;

#define WAKEFARM_KEY(name) \
  { #name, [](RunConfig& c, const json& v) { c.name = as<decltype(c.name)>(v, #name); } }

const std::map<std::string, Setter>& setters() {
  static const std::map<std::string, Setter> table = {
      WAKEFARM_KEY(scenario),
      WAKEFARM_KEY(n_turbines),
      WAKEFARM_KEY(optimizer),
      WAKEFARM_KEY(stage1_budget),
      WAKEFARM_KEY(stage2_budget),
      WAKEFARM_KEY(seed),
      {"alpha",
       [](RunConfig& c, const json& v) {
         if (v.is_null())
           c.alpha.reset();
         else
           c.alpha = as<double>(v, "alpha");
       }},
      WAKEFARM_KEY(table_path),
      WAKEFARM_KEY(stage2_table_path),
      WAKEFARM_KEY(table_spacing),
      WAKEFARM_KEY(stage2_table_spacing),
      WAKEFARM_KEY(output_dir),
      WAKEFARM_KEY(population_size),
      WAKEFARM_KEY(n_random_seeds),
      WAKEFARM_KEY(basin_hopping_local_iterations),
      WAKEFARM_KEY(jobs),
      WAKEFARM_KEY(record_timing),
      WAKEFARM_KEY(snapshots),
      WAKEFARM_KEY(taylor_flow),
      WAKEFARM_KEY(taylor_turbines),
      WAKEFARM_KEY(taylor_directions),
      WAKEFARM_KEY(taylor_h0),
      WAKEFARM_KEY(taylor_levels),
      WAKEFARM_KEY(corrupt_gradient),
  };
  return table;
}

#undef WAKEFARM_KEY

void require(bool ok, const std::string& key, const std::string& what) {
  if (!ok) throw ConfigError("config key `" + key + "`: " + what);
}

}  // namespace

void RunConfig::validate() const {
  const auto names = scenario_names();
  require(std::find(names.begin(), names.end(), scenario) != names.end(), "scenario",
          "unknown scenario `" + scenario + "`");
  require(n_turbines >= 1, "n_turbines", "must be >= 1");
  require(optimizer == "local" || optimizer == "hybrid-ga" || optimizer == "hybrid-bh", "optimizer",
          "must be local, hybrid-ga or hybrid-bh");
  require(stage1_budget >= 0, "stage1_budget", "must be >= 0");
  require(stage2_budget >= 0, "stage2_budget", "must be >= 0");
  require(!alpha || *alpha > 0.0, "alpha", "must be positive");
  require(table_spacing > 0.0, "table_spacing", "must be positive");
  require(stage2_table_spacing > 0.0, "stage2_table_spacing", "must be positive");
  require(population_size >= 2, "population_size", "must be >= 2");
  require(n_random_seeds >= 0, "n_random_seeds", "must be >= 0");
  require(basin_hopping_local_iterations >= 0, "basin_hopping_local_iterations", "must be >= 0");
  require(jobs >= 1, "jobs", "must be >= 1");
  require(taylor_flow == "linear-gradient" || taylor_flow == "scenario", "taylor_flow",
          "must be linear-gradient or scenario");
  require(taylor_turbines >= 1, "taylor_turbines", "must be >= 1");
  require(taylor_directions >= 1, "taylor_directions", "must be >= 1");
  require(taylor_h0 > 0.0, "taylor_h0", "must be positive");
  require(taylor_levels >= 4, "taylor_levels", "must be >= 4");
}

json to_json(const RunConfig& c) {
  json j;
  j["scenario"] = c.scenario;
  j["n_turbines"] = c.n_turbines;
  j["optimizer"] = c.optimizer;
  j["stage1_budget"] = c.stage1_budget;
  j["stage2_budget"] = c.stage2_budget;
  j["seed"] = c.seed;
  j["alpha"] = c.alpha ? json(*c.alpha) : json(nullptr);
  j["table_path"] = c.table_path;
  j["stage2_table_path"] = c.stage2_table_path;
  j["table_spacing"] = c.table_spacing;
  j["stage2_table_spacing"] = c.stage2_table_spacing;
  j["output_dir"] = c.output_dir;
  j["population_size"] = c.population_size;
  j["n_random_seeds"] = c.n_random_seeds;
  j["basin_hopping_local_iterations"] = c.basin_hopping_local_iterations;
  j["jobs"] = c.jobs;
  j["record_timing"] = c.record_timing;
  j["snapshots"] = c.snapshots;
  j["taylor_flow"] = c.taylor_flow;
  j["taylor_turbines"] = c.taylor_turbines;
  j["taylor_directions"] = c.taylor_directions;
  j["taylor_h0"] = c.taylor_h0;
  j["taylor_levels"] = c.taylor_levels;
  j["corrupt_gradient"] = c.corrupt_gradient;
  return j;
}

void apply_json(RunConfig& cfg, const json& doc) {
  if (!doc.is_object()) throw ConfigError("config: top level must be an object");
  for (const auto& [key, value] : doc.items()) {
    const auto it = setters().find(key);
    if (it == setters().end()) throw ConfigError("config key `" + key + "`: unknown key");
    it->second(cfg, value);
  }
}

json read_config_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config file `" + path.string() + "` cannot be opened");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("config file `" + path.string() + "`: " + e.what());
  }
}

void apply_assignment(RunConfig& cfg, const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos || eq == 0) throw ConfigError("--set expects key=value, got `" + assignment + "`");
  const std::string key = assignment.substr(0, eq);
  const std::string text = assignment.substr(eq + 1);
  json value = json::parse(text, nullptr, false);
  if (value.is_discarded()) value = text;
  apply_json(cfg, json{{key, value}});
}

std::vector<std::string> config_keys() {
  std::vector<std::string> keys;
  for (const auto& [k, _] : setters()) keys.push_back(k);
  return keys;
}

}  // namespace wakefarm::cli
