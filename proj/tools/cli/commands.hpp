#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "config.hpp"

namespace wakefarm::cli {

/// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Environment variable that overrides `output_dir` (the --out flag wins).
inline constexpr const char* kOutputDirEnv = "WAKEFARM_OUT";

struct GlobalOptions {
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out;
  std::optional<int> jobs;
};

struct RunOptions {
  std::optional<std::filesystem::path> config;
  std::optional<std::string> scenario;
  std::optional<int> n_turbines;
  std::optional<std::string> optimizer;
  std::vector<std::string> assignments;  // --set key=value, applied in order
};

/// Defaults, then the config file, then the dedicated flags, then --set,
/// then the global flags. The output directory comes from --out, else
/// $WAKEFARM_OUT, else the config. Throws ConfigError.
RunConfig resolve_run_config(const RunOptions& opts, const GlobalOptions& global);

int cmd_run(const RunOptions& opts, const GlobalOptions& global, std::ostream& out, std::ostream& err);

/// Taylor remainder test of the wake objective. Prints `h,R0,R1` rows, one
/// block of taylor_levels rows per direction, then a `#` slope line per
/// direction; exit 0 iff every plain slope lies in [0.9, 1.1] and every
/// gradient slope in [1.9, 2.1].
int cmd_taylor_test(const RunOptions& opts, const GlobalOptions& global, std::ostream& out, std::ostream& err);

struct TableOptions {
  std::filesystem::path output;
  double diameter = 20.0;
  double thrust_coefficient = 0.8;
  std::optional<double> spacing;  // m; used when nx/ny are absent (default 2)
  std::optional<int> nx;
  std::optional<int> ny;
  std::optional<double> upstream;
  std::optional<double> downstream;
  std::optional<double> half_width;
};

int cmd_gen_wake_table(const TableOptions& opts, std::ostream& out, std::ostream& err);

/// Renders `run_dir` to `svg_path` (default run_dir/render.svg).
int cmd_render(const std::filesystem::path& run_dir, const std::optional<std::filesystem::path>& svg_path,
               std::ostream& out, std::ostream& err);

}  // namespace wakefarm::cli
