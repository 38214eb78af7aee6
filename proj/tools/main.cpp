#include <iostream>

#include <CLI11.hpp>

#include "cli/commands.hpp"

int main(int argc, char** argv) {
  using namespace wakefarm::cli;

  CLI::App app{"Turbine layout optimisation with analytical wake models"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", "wakefarm 0.1.0");

  GlobalOptions global;
  app.add_option("--seed", global.seed, "RNG seed (u64)");
  app.add_option("--out", global.out, "Output directory; overrides $WAKEFARM_OUT and the config");
  app.add_option("--jobs", global.jobs, "Threads for population evaluation")->check(CLI::PositiveNumber);

  RunOptions run_opts;
  auto add_run_flags = [&](CLI::App* cmd) {
    cmd->add_option("--config", run_opts.config, "JSON configuration file");
    cmd->add_option("--scenario", run_opts.scenario, "Scenario preset");
    cmd->add_option("--n", run_opts.n_turbines, "Number of turbines");
    cmd->add_option("--optimizer", run_opts.optimizer, "local, hybrid-ga or hybrid-bh");
    cmd->add_option("--set", run_opts.assignments, "Override a config key: key=value");
  };
  CLI::App* run = app.add_subcommand("run", "Optimise a scenario and write a run directory");
  add_run_flags(run);
  CLI::App* taylor = app.add_subcommand("taylor-test", "Taylor remainder check of the objective gradient");
  add_run_flags(taylor);

  TableOptions table;
  CLI::App* gen = app.add_subcommand("gen-wake-table", "Write a synthetic reduction-factor table");
  gen->add_option("output", table.output, "Output file")->required();
  gen->add_option("--diameter", table.diameter, "Rotor diameter, m");
  gen->add_option("--ct", table.thrust_coefficient, "Thrust coefficient");
  gen->add_option("--spacing", table.spacing, "Node spacing, m (default 2)");
  gen->add_option("--nx", table.nx, "Nodes along the flow");
  gen->add_option("--ny", table.ny, "Nodes across the flow");
  gen->add_option("--upstream", table.upstream, "Extent upstream of the rotor, m");
  gen->add_option("--downstream", table.downstream, "Extent downstream of the rotor, m");
  gen->add_option("--half-width", table.half_width, "Half width across the flow, m");

  std::filesystem::path run_dir;
  std::optional<std::filesystem::path> svg_path;
  CLI::App* render = app.add_subcommand("render", "Render a run directory as SVG");
  render->add_option("run_dir", run_dir, "Run directory")->required();
  render->add_option("svg", svg_path, "Output SVG (default <run_dir>/render.svg)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (*run) return cmd_run(run_opts, global, std::cout, std::cerr);
  if (*taylor) return cmd_taylor_test(run_opts, global, std::cout, std::cerr);
  if (*gen) return cmd_gen_wake_table(table, std::cout, std::cerr);
  if (*render) return cmd_render(run_dir, svg_path, std::cout, std::cerr);
  return kExitUsage;
}
