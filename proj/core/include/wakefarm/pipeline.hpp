#pragma once

#include <filesystem>
#include <memory>
#include <stdexcept>
#include <string>

#include "wakefarm/objective.hpp"
#include "wakefarm/optimize.hpp"
#include "wakefarm/reduction_table.hpp"
#include "wakefarm/scenario.hpp"

namespace wakefarm {

enum class GlobalStage { none, genetic, basin_hopping };

const char* to_string(GlobalStage stage);

struct HybridPlan {
  GlobalStage stage1 = GlobalStage::genetic;
  /// GA generations or basin-hopping hops. 0 skips the global stage.
  int stage1_budget = 100;
  GAConfig ga;
  BasinHopConfig basin_hopping;
  int n_random_seeds = 10;  // random layouts added to the GA seed family
  LocalOptConfig stage2;
  ObjectivePtr stage1_objective;
  ObjectivePtr stage2_objective;

  void validate() const;
};

struct StageSummary {
  std::string name;
  int iterations = 0;
  long evaluations = 0;
  double j_initial = 0.0;  // stage-2 objective at the stage's start
  double j_final = 0.0;    // stage-2 objective at the stage's result
  double seconds = 0.0;
};

/// All J values are measured with the stage-2 objective. Traces carry each
/// stage's own objective.
struct RunReport {
  std::string scenario;
  ConvergenceTrace stage1_trace;
  ConvergenceTrace stage2_trace;
  Layout initial;
  Layout intermediate;
  Layout final_layout;
  double j_initial = 0.0;
  double j_intermediate = 0.0;
  double j_final = 0.0;
  StageSummary stage1;
  StageSummary stage2;
};

/// Thrown when a stage fails; carries everything completed before it.
class RunFailure : public std::runtime_error {
 public:
  RunFailure(const std::string& what, RunReport partial)
      : std::runtime_error(what), partial_(std::move(partial)) {}
  const RunReport& partial() const { return partial_; }

 private:
  RunReport partial_;
};

/// Stage 1 runs the global optimizer on the stage-1 objective (GA seeded by
/// scenario.global_seeds, basin-hopping from scenario.initial_layout). Its
/// winner starts a local ascent on the stage-2 objective.
RunReport run_hybrid(const Scenario& scenario, HybridPlan plan, RngSeed seed);

/// One local ascent from scenario.initial_layout().
RunReport run_local_only(const Scenario& scenario, const ObjectivePtr& objective, const LocalOptConfig& cfg);

/// PowerObjective over the scenario's flow and site with a shared table.
ObjectivePtr make_wake_objective(const Scenario& scenario, std::shared_ptr<const ReductionTable> table,
                                 double alpha);

/// Writes report.csv, trace_stage1.csv, trace_stage2.csv and
/// layout_{initial,intermediate,final}.csv into `dir`, creating it if needed.
/// Traces that carry layout snapshots also produce
/// snapshot_stage{1,2}_iter<k>.csv at every tenth of their records.
/// With record_timing false the seconds column is written as 0 so the files
/// depend only on the inputs.
void write_run_directory(const std::filesystem::path& dir, const RunReport& report, bool record_timing = true);

}  // namespace wakefarm
