#include "wakefarm/pipeline.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <string>

namespace wakefarm {

const char* to_string(GlobalStage stage) {
  switch (stage) {
    case GlobalStage::none: return "none";
    case GlobalStage::genetic: return "genetic";
    case GlobalStage::basin_hopping: return "basin-hopping";
  }
  return "?";
}

void HybridPlan::validate() const {
  if (stage1_budget < 0) throw std::invalid_argument("HybridPlan: stage1_budget must be >= 0");
  if (n_random_seeds < 0) throw std::invalid_argument("HybridPlan: n_random_seeds must be >= 0");
  if (!stage2_objective) throw std::invalid_argument("HybridPlan: no stage-2 objective");
  if (stage1 != GlobalStage::none && stage1_budget > 0 && !stage1_objective)
    throw std::invalid_argument("HybridPlan: no stage-1 objective");
  if (stage1 == GlobalStage::basin_hopping && stage1_budget > 0 && !stage1_objective->has_gradient())
    throw std::invalid_argument("HybridPlan: basin-hopping needs a stage-1 gradient");
  stage2.validate();
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void local_stage(RunReport& report, const Objective& objective, const Site& site, const LocalOptConfig& cfg) {
  const auto t0 = Clock::now();
  OptimizationResult res;
  try {
    res = local_ascent(objective, report.intermediate, site, cfg);
  } catch (const std::exception& e) {
    throw RunFailure(std::string("stage 2 failed: ") + e.what(), report);
  }
  report.stage2 = {"local", res.iterations, res.evaluations, report.j_intermediate, res.value, seconds_since(t0)};
  report.stage2_trace = std::move(res.trace);
  report.final_layout = std::move(res.layout);
  report.j_final = res.value;
}

}  // namespace

RunReport run_hybrid(const Scenario& scenario, HybridPlan plan, RngSeed seed) {
  scenario.validate();
  plan.validate();
  const Objective& final_obj = *plan.stage2_objective;

  RunReport report;
  report.scenario = scenario.name;
  report.initial = scenario.initial_layout();
  report.j_initial = final_obj.value(report.initial);

  const bool global = plan.stage1 != GlobalStage::none && plan.stage1_budget > 0;
  const auto t0 = Clock::now();
  Layout winner = report.initial;
  int iterations = 0;
  long evaluations = 0;
  try {
    if (global && plan.stage1 == GlobalStage::genetic) {
      GAConfig cfg = plan.ga;
      cfg.max_iterations = plan.stage1_budget;
      cfg.seed = derive_seed(seed, 2);
      const auto seeds = scenario.global_seeds(derive_seed(seed, 1), plan.n_random_seeds);
      GAResult res = ga_run(*plan.stage1_objective, scenario.n_turbines, scenario.site, cfg, seeds);
      winner = std::move(res.layout);
      iterations = res.generations;
      evaluations = res.evaluations;
      report.stage1_trace = std::move(res.trace);
    } else if (global) {
      BasinHopConfig cfg = plan.basin_hopping;
      cfg.n_hops = plan.stage1_budget;
      cfg.seed = derive_seed(seed, 3);
      BasinHopResult res = basin_hopping(*plan.stage1_objective, report.initial, scenario.site, cfg);
      winner = std::move(res.layout);
      iterations = res.hops + 1;
      evaluations = res.evaluations;
      report.stage1_trace = std::move(res.trace);
    }
  } catch (const std::exception& e) {
    report.intermediate = report.initial;
    report.j_intermediate = report.j_initial;
    throw RunFailure(std::string("stage 1 failed: ") + e.what(), report);
  }
  report.intermediate = project_to_site(winner, scenario.site);
  report.j_intermediate = final_obj.value(report.intermediate);
  report.stage1 = {global ? to_string(plan.stage1) : "none", iterations, evaluations, report.j_initial,
                   report.j_intermediate, seconds_since(t0)};

  local_stage(report, final_obj, scenario.site, plan.stage2);
  return report;
}

RunReport run_local_only(const Scenario& scenario, const ObjectivePtr& objective, const LocalOptConfig& cfg) {
  HybridPlan plan;
  plan.stage1 = GlobalStage::none;
  plan.stage1_budget = 0;
  plan.stage2 = cfg;
  plan.stage2_objective = objective;
  return run_hybrid(scenario, std::move(plan), RngSeed{0});
}

ObjectivePtr make_wake_objective(const Scenario& scenario, std::shared_ptr<const ReductionTable> table,
                                 double alpha) {
  if (!table) throw std::invalid_argument("make_wake_objective: no table");
  PowerFunctional f;
  f.alpha = alpha;
  f.ambient = scenario.ambient;
  f.wake = std::move(table);
  f.site = scenario.site;
  f.validate();
  return std::make_shared<PowerObjective>(std::move(f));
}

namespace {

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  return out;
}

void write_stage_row(std::ostream& out, const StageSummary& s, bool record_timing) {
  char buf[256];
  std::snprintf(buf, sizeof buf, "%s,%d,%ld,%.17g,%.17g,%.6f\n", s.name.c_str(), s.iterations, s.evaluations,
                s.j_initial, s.j_final, record_timing ? s.seconds : 0.0);
  out << buf;
}

void write_snapshots(const std::filesystem::path& dir, const ConvergenceTrace& trace, int stage) {
  const std::size_t n = trace.records.size();
  if (n == 0 || !trace.records.front().snapshot) return;
  std::size_t last = n;
  for (int d = 0; d <= 10; ++d) {
    const std::size_t k = (static_cast<std::size_t>(d) * (n - 1) + 5) / 10;
    if (k == last) continue;
    last = k;
    const TraceRecord& r = trace.records[k];
    if (!r.snapshot) continue;
    auto out = open_output(dir / ("snapshot_stage" + std::to_string(stage) + "_iter" + std::to_string(r.iteration) + ".csv"));
    write_layout_csv(out, *r.snapshot);
  }
}

}  // namespace

void write_run_directory(const std::filesystem::path& dir, const RunReport& report, bool record_timing) {
  std::filesystem::create_directories(dir);
  {
    auto out = open_output(dir / "report.csv");
    out << "stage,iterations,evaluations,J_initial,J_final,seconds\n";
    write_stage_row(out, report.stage1, record_timing);
    write_stage_row(out, report.stage2, record_timing);
  }
  {
    auto out = open_output(dir / "trace_stage1.csv");
    write_trace_csv(out, report.stage1_trace);
  }
  {
    auto out = open_output(dir / "trace_stage2.csv");
    write_trace_csv(out, report.stage2_trace);
  }
  const std::pair<const char*, const Layout*> layouts[] = {{"layout_initial.csv", &report.initial},
                                                          {"layout_intermediate.csv", &report.intermediate},
                                                          {"layout_final.csv", &report.final_layout}};
  for (const auto& [name, layout] : layouts) {
    auto out = open_output(dir / name);
    write_layout_csv(out, *layout);
  }
  write_snapshots(dir, report.stage1_trace, 1);
  write_snapshots(dir, report.stage2_trace, 2);
}

}  // namespace wakefarm
