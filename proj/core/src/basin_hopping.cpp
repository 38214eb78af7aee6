#include <cmath>
#include <stdexcept>

#include "wakefarm/optimize.hpp"

namespace wakefarm {

void BasinHopConfig::validate() const {
  if (n_hops < 1) throw std::invalid_argument("BasinHopConfig: n_hops must be >= 1");
  if (step && !(*step > 0.0)) throw std::invalid_argument("BasinHopConfig: step must be positive");
  if (!(target_acceptance > 0.0 && target_acceptance < 1.0))
    throw std::invalid_argument("BasinHopConfig: target acceptance must lie in (0, 1)");
  if (!(adaptation > 1.0)) throw std::invalid_argument("BasinHopConfig: adaptation factor must exceed 1");
  if (temperature && !(*temperature > 0.0))
    throw std::invalid_argument("BasinHopConfig: temperature must be positive");
  local.validate();
}

bool metropolis_accept(double delta, double temperature, Rng& rng) {
  if (delta >= 0.0) return true;
  return rng.uniform() < std::exp(delta / temperature);
}

BasinHopResult basin_hopping(const Objective& obj, const Layout& start, const Site& site,
                             const BasinHopConfig& cfg) {
  cfg.validate();
  Rng rng(cfg.seed);

  BasinHopResult res;
  OptimizationResult current = local_ascent(obj, start, site, cfg.local);
  res.evaluations = current.evaluations;
  res.gradient_evaluations = current.gradient_evaluations;
  res.inner_iterations = current.iterations;

  const double j0 = current.trace.records.front().best_value;
  res.temperature = cfg.temperature.value_or(j0 != 0.0 ? std::abs(j0) / 10.0 : 1.0);
  double step = cfg.step.value_or(0.25 * site.diagonal());

  Layout best = current.layout;
  double best_value = current.value;
  res.trace.add(0, res.evaluations, best_value, cfg.local.record_snapshots ? &best : nullptr);

  for (int hop = 1; hop < cfg.n_hops; ++hop) {
    Layout trial = current.layout;
    for (std::size_t k = 0; k < trial.size(); ++k) trial[k] += rng.uniform(-step, step);
    OptimizationResult candidate = local_ascent(obj, project_to_site(trial, site), site, cfg.local);
    res.evaluations += candidate.evaluations;
    res.gradient_evaluations += candidate.gradient_evaluations;
    res.inner_iterations += candidate.iterations;

    ++res.hops;
    if (candidate.value > best_value) {
      best = candidate.layout;
      best_value = candidate.value;
    }
    if (metropolis_accept(candidate.value - current.value, res.temperature, rng)) {
      ++res.accepted;
      current = std::move(candidate);
    }
    if (res.acceptance_rate() > cfg.target_acceptance)
      step *= cfg.adaptation;
    else
      step /= cfg.adaptation;
    res.trace.add(hop, res.evaluations, best_value, cfg.local.record_snapshots ? &best : nullptr);
  }

  res.iterations = res.hops;
  res.final_step = step;
  res.layout = std::move(best);
  res.value = best_value;
  return res;
}

}  // namespace wakefarm
