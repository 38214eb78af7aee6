#include "commands.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <memory>
#include <ostream>

#include "render.hpp"
#include "wakefarm/pipeline.hpp"
#include "wakefarm/taylor.hpp"

namespace wakefarm::cli {

namespace fs = std::filesystem;

namespace {

std::shared_ptr<const ReductionTable> load_table(const std::string& path, double spacing, const TurbineSpec& spec) {
  if (path.empty()) return std::make_shared<const ReductionTable>(synth_swe_like_table(spec, spacing));
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open table `" + path + "`");
  return std::make_shared<const ReductionTable>(read_reduction_table(in));
}

struct Tables {
  std::shared_ptr<const ReductionTable> stage1, stage2;
};

Tables load_tables(const RunConfig& cfg, const TurbineSpec& spec) {
  Tables t;
  t.stage1 = load_table(cfg.table_path, cfg.table_spacing, spec);
  if (cfg.stage2_table_path == cfg.table_path && cfg.stage2_table_spacing == cfg.table_spacing)
    t.stage2 = t.stage1;
  else
    t.stage2 = load_table(cfg.stage2_table_path, cfg.stage2_table_spacing, spec);
  return t;
}

// Wraps a functional with a gradient scaled by 1.1, for exercising the
// failure path of the Taylor test.
struct CorruptedGradient {
  const PowerFunctional& f;
  double value(const Layout& m) const { return f.value(m); }
  GradientVector gradient(const Layout& m) const {
    GradientVector g = f.gradient(m);
    for (double& v : g) v *= 1.1;
    return g;
  }
};

void print_stage(std::ostream& out, const StageSummary& s) {
  char buf[256];
  std::snprintf(buf, sizeof buf, "%-13s iterations %6d  evaluations %8ld  J %.6e -> %.6e  (%.3f s)\n",
                s.name.c_str(), s.iterations, s.evaluations, s.j_initial, s.j_final, s.seconds);
  out << buf;
}

template <class F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}

}  // namespace

RunConfig resolve_run_config(const RunOptions& opts, const GlobalOptions& global) {
  RunConfig cfg;
  if (opts.config) apply_json(cfg, read_config_file(*opts.config));
  if (opts.scenario) cfg.scenario = *opts.scenario;
  if (opts.n_turbines) cfg.n_turbines = *opts.n_turbines;
  if (opts.optimizer) cfg.optimizer = *opts.optimizer;
  for (const auto& a : opts.assignments) apply_assignment(cfg, a);
  if (global.seed) cfg.seed = *global.seed;
  if (global.jobs) cfg.jobs = *global.jobs;
  if (global.out) {
    cfg.output_dir = *global.out;
  } else if (const char* env = std::getenv(kOutputDirEnv); env && *env) {
    cfg.output_dir = env;
  }
  cfg.validate();
  return cfg;
}

int cmd_run(const RunOptions& opts, const GlobalOptions& global, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    RunConfig cfg = resolve_run_config(opts, global);
    const Scenario scenario = make_scenario(cfg.scenario, cfg.n_turbines);
    if (!cfg.alpha) cfg.alpha = default_alpha(scenario.turbine);
    const Tables tables = load_tables(cfg, scenario.turbine);
    const ObjectivePtr obj1 = make_wake_objective(scenario, tables.stage1, *cfg.alpha);
    const ObjectivePtr obj2 = make_wake_objective(scenario, tables.stage2, *cfg.alpha);

    LocalOptConfig local;
    local.max_iterations = cfg.stage2_budget;
    local.record_snapshots = cfg.snapshots;

    const fs::path dir = cfg.output_dir;
    RunReport report;
    try {
      if (cfg.optimizer == "local") {
        report = run_local_only(scenario, obj2, local);
      } else {
        HybridPlan plan;
        plan.stage1 = cfg.optimizer == "hybrid-ga" ? GlobalStage::genetic : GlobalStage::basin_hopping;
        plan.stage1_budget = cfg.stage1_budget;
        plan.ga.population_size = cfg.population_size;
        plan.ga.jobs = cfg.jobs;
        plan.basin_hopping.local.max_iterations = cfg.basin_hopping_local_iterations;
        plan.n_random_seeds = cfg.n_random_seeds;
        plan.ga.record_snapshots = cfg.snapshots;
        plan.basin_hopping.local.record_snapshots = cfg.snapshots;
        plan.stage2 = local;
        plan.stage1_objective = obj1;
        plan.stage2_objective = obj2;
        report = run_hybrid(scenario, plan, RngSeed{cfg.seed});
      }
    } catch (const RunFailure& e) {
      write_run_directory(dir, e.partial(), cfg.record_timing);
      throw;
    }

    write_run_directory(dir, report, cfg.record_timing);
    std::ofstream echo(dir / "config.json", std::ios::binary);
    if (!echo) throw std::runtime_error("cannot write " + (dir / "config.json").string());
    echo << to_json(cfg).dump(2) << "\n";

    out << "scenario " << scenario.name << " (" << scenario.flow_description << "), " << cfg.n_turbines
        << " turbines, optimizer " << cfg.optimizer << ", seed " << cfg.seed << "\n";
    print_stage(out, report.stage1);
    print_stage(out, report.stage2);
    out << "wrote " << dir.string() << "\n";
    return kExitOk;
  });
}

int cmd_taylor_test(const RunOptions& opts, const GlobalOptions& global, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const RunConfig cfg = resolve_run_config(opts, global);
    PowerFunctional f;
    TurbineSpec spec;
    if (cfg.taylor_flow == "scenario") {
      const Scenario s = make_scenario(cfg.scenario, cfg.n_turbines);
      spec = s.turbine;
      f.site = s.site;
      f.ambient = s.ambient;
    } else {
      f.site = Site{0.0, 640.0, 0.0, 320.0};
      f.ambient = linear_gradient_flow();
    }
    f.alpha = cfg.alpha.value_or(default_alpha(spec));
    f.wake = load_table(cfg.table_path, cfg.table_spacing, spec);
    f.validate();

    Rng rng(derive_seed(RngSeed{cfg.seed}, 11));
    const Layout m = random_layout(cfg.taylor_turbines, f.site, rng);
    const CorruptedGradient corrupted{f};

    bool ok = true;
    char buf[160];
    out << "h,R0,R1\n";
    std::vector<TaylorReport> reports;
    for (int d = 0; d < cfg.taylor_directions; ++d) {
      const auto dir = random_unit_direction(m.size(), rng);
      reports.push_back(cfg.corrupt_gradient ? taylor_remainder_test(corrupted, m, dir, cfg.taylor_h0, cfg.taylor_levels)
                                             : taylor_remainder_test(f, m, dir, cfg.taylor_h0, cfg.taylor_levels));
      const TaylorReport& r = reports.back();
      for (std::size_t k = 0; k < r.step.size(); ++k) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", r.step[k], r.remainder_plain[k],
                      r.remainder_gradient[k]);
        out << buf;
      }
    }
    for (std::size_t d = 0; d < reports.size(); ++d) {
      const TaylorReport& r = reports[d];
      const double s0 = r.slope_plain.value_or(NAN);
      const double s1 = r.slope_gradient.value_or(NAN);
      const bool pass = !r.degenerate() && s0 >= 0.9 && s0 <= 1.1 && s1 >= 1.9 && s1 <= 2.1;
      ok = ok && pass;
      std::snprintf(buf, sizeof buf, "# direction %zu slopes: R0 %.4f R1 %.4f %s\n", d, s0, s1, pass ? "ok" : "FAIL");
      out << buf;
    }
    return ok ? kExitOk : kExitFailure;
  });
}

int cmd_gen_wake_table(const TableOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    TurbineSpec spec;
    spec.diameter = opts.diameter;
    spec.thrust_coefficient = opts.thrust_coefficient;
    try {
      spec.validate();
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
    TableExtent extent = TableExtent::for_diameter(spec.diameter);
    if (opts.upstream) extent.upstream = *opts.upstream;
    if (opts.downstream) extent.downstream = *opts.downstream;
    if (opts.half_width) extent.half_width = *opts.half_width;
    if (!(extent.upstream > 0.0 && extent.downstream > 0.0 && extent.half_width > 0.0))
      throw ConfigError("table extent must be positive");
    if (opts.nx.has_value() != opts.ny.has_value()) throw ConfigError("--nx and --ny go together");
    if (opts.nx && opts.spacing) throw ConfigError("give either --spacing or --nx/--ny");

    int nx = 0;
    int ny = 0;
    if (opts.nx) {
      nx = *opts.nx;
      ny = *opts.ny;
    } else {
      const double h = opts.spacing.value_or(2.0);
      if (!(h > 0.0)) throw ConfigError("--spacing must be positive");
      nx = static_cast<int>(std::lround((extent.upstream + extent.downstream) / h)) + 1;
      ny = static_cast<int>(std::lround(2.0 * extent.half_width / h)) + 1;
    }
    if (nx < 4 || ny < 4) throw ConfigError("table needs at least 4 nodes per axis");

    ReductionTable table = [&] {
      try {
        return synth_swe_like_table(spec, nx, ny, extent);
      } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
      }
    }();
    std::ofstream file(opts.output, std::ios::binary);
    if (!file) throw std::runtime_error("cannot write `" + opts.output.string() + "`");
    write_reduction_table(file, table);
    file.close();
    if (!file) throw std::runtime_error("failed writing `" + opts.output.string() + "`");
    out << "wrote " << nx << " x " << ny << " table to " << opts.output.string() << "\n";
    return kExitOk;
  });
}

int cmd_render(const fs::path& run_dir, const std::optional<fs::path>& svg_path, std::ostream& out,
               std::ostream& err) {
  return guarded(err, [&] {
    auto open = [&](const char* name) {
      std::ifstream in(run_dir / name);
      if (!in) throw std::runtime_error("missing `" + (run_dir / name).string() + "`");
      return in;
    };
    RunConfig cfg;
    {
      auto in = open("config.json");
      nlohmann::json doc;
      try {
        doc = nlohmann::json::parse(in);
      } catch (const nlohmann::json::parse_error& e) {
        throw std::runtime_error(std::string("config.json: ") + e.what());
      }
      apply_json(cfg, doc);
    }
    const Scenario scenario = make_scenario(cfg.scenario, cfg.n_turbines);

    RenderInput input;
    input.site = scenario.site;
    input.turbine_radius = 0.5 * scenario.turbine.diameter;
    {
      auto in = open("layout_initial.csv");
      input.initial = read_layout_csv(in);
    }
    {
      auto in = open("layout_final.csv");
      input.final_layout = read_layout_csv(in);
    }
    {
      auto in = open("trace_stage1.csv");
      input.stage1 = read_trace_csv(in);
    }
    {
      auto in = open("trace_stage2.csv");
      input.stage2 = read_trace_csv(in);
    }

    const fs::path target = svg_path.value_or(run_dir / "render.svg");
    std::ofstream svg(target, std::ios::binary);
    if (!svg) throw std::runtime_error("cannot write `" + target.string() + "`");
    render_svg(svg, input);
    out << "wrote " << target.string() << "\n";
    return kExitOk;
  });
}

}  // namespace wakefarm::cli
