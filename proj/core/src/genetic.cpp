#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "wakefarm/optimize.hpp"

namespace wakefarm {

void GAConfig::validate() const {
  if (population_size < 2) throw std::invalid_argument("GAConfig: population_size must be >= 2");
  if (!(survival_rate > 0.0 && survival_rate <= 1.0))
    throw std::invalid_argument("GAConfig: survival_rate must lie in (0, 1]");
  if (!(max_mutation_probability >= 0.0 && max_mutation_probability <= 1.0))
    throw std::invalid_argument("GAConfig: max_mutation_probability must lie in [0, 1]");
  if (max_iterations < 1) throw std::invalid_argument("GAConfig: max_iterations must be >= 1");
  if (!(convergence_tolerance >= 0.0)) throw std::invalid_argument("GAConfig: convergence_tolerance must be >= 0");
  if (jobs < 1) throw std::invalid_argument("GAConfig: jobs must be >= 1");
}

int GAConfig::survivor_count() const {
  const int n = static_cast<int>(std::ceil(survival_rate * population_size - 1e-9));
  return std::clamp(n, 1, population_size);
}

namespace {

std::vector<std::size_t> fitness_order(std::span<const double> fitness) {
  std::vector<std::size_t> order(fitness.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return fitness[a] > fitness[b]; });
  return order;
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

double safe_value(const Objective& obj, const Layout& layout) {
  try {
    const double v = obj.value(layout);
    return std::isnan(v) ? -std::numeric_limits<double>::infinity() : v;
  } catch (const std::exception&) {
    return -std::numeric_limits<double>::infinity();
  }
}

void evaluate(const Objective& obj, std::vector<Chromosome>& pop, const std::vector<std::size_t>& which,
              int jobs) {
  const std::size_t n = which.size();
  const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(jobs), n);
  if (workers <= 1) {
    for (std::size_t k : which) pop[k].fitness = safe_value(obj, pop[k].layout);
    return;
  }
  std::vector<std::jthread> threads;
  threads.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      for (std::size_t t = w; t < n; t += workers) pop[which[t]].fitness = safe_value(obj, pop[which[t]].layout);
    });
  }
}

}  // namespace

std::vector<std::size_t> ga_select(std::span<const double> fitness, double survival_rate) {
  if (fitness.empty()) throw std::invalid_argument("ga_select: empty population");
  GAConfig probe;
  probe.population_size = static_cast<int>(fitness.size());
  probe.survival_rate = survival_rate;
  auto order = fitness_order(fitness);
  order.resize(static_cast<std::size_t>(probe.survivor_count()));
  return order;
}

Layout ga_crossover_uniform(const Layout& parent_a, const Layout& parent_b, Rng& rng) {
  if (parent_a.size() != parent_b.size()) throw std::invalid_argument("ga_crossover_uniform: parent size mismatch");
  Layout child = parent_a;
  for (std::size_t k = 0; k < child.size(); ++k)
    if (rng.uniform() < 0.5) child[k] = parent_b[k];
  return child;
}

Layout ga_mutate_fitness_proportionate(const Layout& child, double rank_fraction, double p_max,
                                       const Site& site, Rng& rng) {
  const double p = p_max * (1.0 - std::clamp(rank_fraction, 0.0, 1.0));
  Layout out = child;
  for (std::size_t k = 0; k < out.size(); ++k)
    if (rng.uniform() < p) out[k] = rng.uniform(site.lower(k), site.upper(k));
  return out;
}

std::vector<double> rank_fractions(std::span<const double> fitness) {
  const std::size_t m = fitness.size();
  std::vector<double> frac(m, 1.0);
  if (m < 2) return frac;
  const auto order = fitness_order(fitness);
  for (std::size_t r = 0; r < m; ++r) frac[order[r]] = 1.0 - static_cast<double>(r) / static_cast<double>(m - 1);
  return frac;
}

GAResult ga_run(const Objective& obj, int n_turbines, const Site& site, const GAConfig& cfg,
                std::span<const Layout> seeds) {
  cfg.validate();
  site.validate();
  if (n_turbines < 1) throw std::invalid_argument("ga_run: n_turbines must be >= 1");
  const auto m = static_cast<std::size_t>(cfg.population_size);
  Rng rng(cfg.seed);

  std::vector<Chromosome> pop;
  pop.reserve(m);
  for (std::size_t k = 0; k < seeds.size() && k < m; ++k) {
    if (seeds[k].turbine_count() != static_cast<std::size_t>(n_turbines))
      throw std::invalid_argument("ga_run: seed layout has the wrong turbine count");
    pop.push_back({project_to_site(seeds[k], site), 0.0});
  }
  while (pop.size() < m) pop.push_back({random_layout(n_turbines, site, rng), 0.0});

  GAResult res;
  std::vector<std::size_t> all(m);
  std::iota(all.begin(), all.end(), std::size_t{0});
  evaluate(obj, pop, all, cfg.jobs);
  res.evaluations = static_cast<long>(m);

  Layout best;
  double best_value = -std::numeric_limits<double>::infinity();
  auto update_best = [&] {
    for (const auto& c : pop)
      if (best.empty() || c.fitness > best_value) {
        best = c.layout;
        best_value = c.fitness;
      }
  };
  auto fitness_of = [&] {
    std::vector<double> f(m);
    for (std::size_t k = 0; k < m; ++k) f[k] = pop[k].fitness;
    return f;
  };

  update_best();
  res.generations = 1;
  res.trace.add(1, res.evaluations, best_value, cfg.record_snapshots ? &best : nullptr);

  while (res.generations < cfg.max_iterations) {
    const auto fitness = fitness_of();
    const double med = median(fitness);
    const double top = *std::max_element(fitness.begin(), fitness.end());
    if (std::isfinite(top) && top - med < cfg.convergence_tolerance * std::abs(top)) {
      res.converged = true;
      break;
    }

    const auto survivors = ga_select(fitness, cfg.survival_rate);
    const auto frac = rank_fractions(fitness);
    const std::size_t n = survivors.size();

    std::vector<Chromosome> next;
    next.reserve(m);
    std::vector<std::size_t> changed;
    for (std::size_t s : survivors) next.push_back(pop[s]);
    for (std::size_t c = n; c < m; ++c) {
      const std::size_t ia = rng.below(n);
      std::size_t ib = ia;
      if (n > 1) {
        ib = rng.below(n - 1);
        if (ib >= ia) ++ib;
      }
      const std::size_t a = survivors[ia];
      const std::size_t b = survivors[ib];
      Layout child = ga_crossover_uniform(pop[a].layout, pop[b].layout, rng);
      child = ga_mutate_fitness_proportionate(child, 0.5 * (frac[a] + frac[b]),
                                              cfg.max_mutation_probability, site, rng);
      next.push_back({std::move(child), 0.0});
      changed.push_back(c);
    }
    for (std::size_t r = 0; r < n; ++r) {
      Layout mutated = ga_mutate_fitness_proportionate(next[r].layout, frac[survivors[r]],
                                                       cfg.max_mutation_probability, site, rng);
      if (!(mutated == next[r].layout)) {
        next[r].layout = std::move(mutated);
        changed.push_back(r);
      }
    }
    std::sort(changed.begin(), changed.end());

    pop = std::move(next);
    evaluate(obj, pop, changed, cfg.jobs);
    res.evaluations += static_cast<long>(changed.size());
    update_best();
    ++res.generations;
    res.trace.add(res.generations, res.evaluations, best_value, cfg.record_snapshots ? &best : nullptr);
  }

  res.iterations = res.generations;
  res.layout = std::move(best);
  res.value = best_value;
  res.population = std::move(pop);
  return res;
}

}  // namespace wakefarm
