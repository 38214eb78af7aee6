#pragma once

#include <optional>
#include <span>
#include <vector>

#include "wakefarm/layout.hpp"
#include "wakefarm/objective.hpp"
#include "wakefarm/rng.hpp"
#include "wakefarm/trace.hpp"

namespace wakefarm {

// ---------------------------------------------------------------------------
// Local stage: projected gradient ascent with Armijo backtracking.

struct LocalOptConfig {
  int max_iterations = 200;
  /// Projected-gradient norm at which the ascent stops, W/m. Empty means
  /// 1e-6 * |J_0| / L_ref with L_ref the site diagonal.
  std::optional<double> gradient_tolerance;
  double shrink = 0.5;
  double armijo = 1e-4;
  /// Length of the first trial step along the gradient, measured on its
  /// largest component, m. Empty means 5% of the site diagonal.
  std::optional<double> initial_step;
  int max_backtracks = 60;
  /// Hard cap on objective value evaluations per call.
  long max_evaluations = 5000;
  bool record_snapshots = false;

  void validate() const;
};

struct OptimizationResult {
  Layout layout;
  double value = 0.0;
  ConvergenceTrace trace;
  int iterations = 0;
  long evaluations = 0;           // objective value calls
  long gradient_evaluations = 0;
};

/// Iterates m <- P(m + sigma g), halving sigma until
/// J(new) >= J(m) + armijo * g.(new - m). Stops when the projected gradient
/// norm is <= the tolerance, the line search fails, or a cap is reached.
/// sigma carries over between iterations: doubled after an unshortened step
/// that achieved over 3/4 of its predicted gain, halved when under 1/4.
/// The trace holds the start (iteration 0) and every accepted step. Throws
/// std::runtime_error on non-finite values or gradients.
OptimizationResult local_ascent(const Objective& obj, const Layout& start, const Site& site,
                                const LocalOptConfig& cfg);

/// Norm of the gradient with components removed where a bound is active and
/// the gradient points outward.
double projected_gradient_norm(std::span<const double> coords, std::span<const double> gradient,
                               const Site& site);

// ---------------------------------------------------------------------------
// Basin-hopping.

struct BasinHopConfig {
  /// Number of local ascents, counting the first one from `start`.
  int n_hops = 50;
  std::optional<double> step;         // m; empty means a quarter of the site diagonal
  double target_acceptance = 0.5;
  double adaptation = 1.1;            // step *= adaptation above target, /= below
  std::optional<double> temperature;  // W; empty means |J_0| / 10
  RngSeed seed{};
  LocalOptConfig local;

  void validate() const;
};

struct BasinHopResult : OptimizationResult {
  int hops = 0;          // perturbation trials
  int accepted = 0;
  double final_step = 0.0;
  double temperature = 0.0;
  long inner_iterations = 0;  // local ascent iterations summed over hops

  double acceptance_rate() const { return hops > 0 ? static_cast<double>(accepted) / hops : 0.0; }
};

/// Metropolis rule: improvements (delta >= 0) are always accepted without
/// drawing; otherwise one uniform draw u is taken and the move is accepted
/// iff u < exp(delta / temperature).
bool metropolis_accept(double delta, double temperature, Rng& rng);

/// Per hop: perturb every coordinate by uniform(-s, s), project, run
/// local_ascent, apply metropolis_accept against the current point, then
/// adapt s from the running acceptance rate. Returns the best layout ever
/// seen; its value is never below the initial local ascent's.
BasinHopResult basin_hopping(const Objective& obj, const Layout& start, const Site& site,
                             const BasinHopConfig& cfg);

// ---------------------------------------------------------------------------
// Genetic algorithm.

struct GAConfig {
  int population_size = 100;
  double survival_rate = 0.70;
  double max_mutation_probability = 0.07;
  /// Generations, counting the evaluation of the initial population.
  int max_iterations = 10000;
  /// Stop once best - median < tolerance * |best|.
  double convergence_tolerance = 1e-6;
  RngSeed seed{};
  /// Threads used to evaluate a generation; results do not depend on it.
  int jobs = 1;
  bool record_snapshots = false;

  void validate() const;
  int survivor_count() const;
};

struct Chromosome {
  Layout layout;
  double fitness = 0.0;
};

struct GAResult : OptimizationResult {
  int generations = 0;
  bool converged = false;
  std::vector<Chromosome> population;  // final population, unsorted
};

/// Indices of the ceil(rate * M) fittest chromosomes, best first; ties go to
/// the lower index.
std::vector<std::size_t> ga_select(std::span<const double> fitness, double survival_rate);

/// Gene k comes from parent b when a uniform draw is < 0.5, else from a.
/// One draw per gene, in order.
Layout ga_crossover_uniform(const Layout& parent_a, const Layout& parent_b, Rng& rng);

/// Each gene draws u; when u < p_max * (1 - rank_fraction) it is redrawn
/// uniformly on the matching site axis (one further draw). rank_fraction is
/// 1 for the fittest chromosome and 0 for the least fit.
Layout ga_mutate_fitness_proportionate(const Layout& child, double rank_fraction, double p_max,
                                       const Site& site, Rng& rng);

/// Rank fraction of each chromosome: 1 - rank / (M - 1) with rank 0 the
/// fittest (ties to the lower index). A population of one gets 1.
std::vector<double> rank_fractions(std::span<const double> fitness);

/// Population = seeds (truncated to M) padded with random layouts. Each
/// generation after the first:
///   1. survivors = ga_select(fitness)
///   2. for each of the M - n children: parents a = survivors[below(n)],
///      b = survivors[below(n - 1)] shifted past a (b = a when n == 1);
///      crossover; mutate with the mean rank fraction of its parents
///   3. mutate survivors in rank order with their own rank fraction
///   4. evaluate only chromosomes that changed
/// A throwing objective gives fitness -inf. The objective's gradient is never
/// used. Returns the best chromosome ever evaluated.
GAResult ga_run(const Objective& obj, int n_turbines, const Site& site, const GAConfig& cfg,
                std::span<const Layout> seeds);

}  // namespace wakefarm
