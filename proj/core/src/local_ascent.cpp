#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "wakefarm/optimize.hpp"

namespace wakefarm {

void LocalOptConfig::validate() const {
  if (max_iterations < 0) throw std::invalid_argument("LocalOptConfig: max_iterations must be >= 0");
  if (gradient_tolerance && !(*gradient_tolerance >= 0.0))
    throw std::invalid_argument("LocalOptConfig: gradient tolerance must be >= 0");
  if (!(shrink > 0.0 && shrink < 1.0)) throw std::invalid_argument("LocalOptConfig: shrink must lie in (0, 1)");
  if (!(armijo > 0.0 && armijo < 1.0)) throw std::invalid_argument("LocalOptConfig: Armijo constant must lie in (0, 1)");
  if (initial_step && !(*initial_step > 0.0)) throw std::invalid_argument("LocalOptConfig: initial step must be positive");
  if (max_backtracks < 1) throw std::invalid_argument("LocalOptConfig: max_backtracks must be >= 1");
  if (max_evaluations < 1) throw std::invalid_argument("LocalOptConfig: max_evaluations must be >= 1");
}

double projected_gradient_norm(std::span<const double> coords, std::span<const double> gradient,
                               const Site& site) {
  double sum = 0.0;
  for (std::size_t k = 0; k < coords.size(); ++k) {
    const double g = gradient[k];
    if (coords[k] <= site.lower(k) && g < 0.0) continue;
    if (coords[k] >= site.upper(k) && g > 0.0) continue;
    sum += g * g;
  }
  return std::sqrt(sum);
}

namespace {

void require_finite(double v, const char* what, int iteration) {
  if (!std::isfinite(v))
    throw std::runtime_error(std::string("local_ascent: non-finite ") + what + " at iteration " +
                             std::to_string(iteration));
}

void require_finite(const GradientVector& g, int iteration) {
  for (double v : g) require_finite(v, "gradient", iteration);
}

}  // namespace

OptimizationResult local_ascent(const Objective& obj, const Layout& start, const Site& site,
                                const LocalOptConfig& cfg) {
  cfg.validate();
  site.validate();
  if (!obj.has_gradient()) throw std::invalid_argument("local_ascent: objective has no gradient");

  OptimizationResult res;
  Layout m = project_to_site(start, site);
  double j = obj.value(m);
  ++res.evaluations;
  require_finite(j, "objective", 0);
  GradientVector g = obj.gradient(m);
  ++res.gradient_evaluations;
  require_finite(g, 0);
  res.trace.add(0, res.evaluations, j, cfg.record_snapshots ? &m : nullptr);

  const double gtol = cfg.gradient_tolerance.value_or(1e-6 * std::abs(j) / site.diagonal());
  const double step0 = cfg.initial_step.value_or(0.05 * site.diagonal());
  double sigma = 0.0;  // step multiplier carried between iterations

  for (int it = 1; it <= cfg.max_iterations; ++it) {
    if (projected_gradient_norm(m.coords(), g, site) <= gtol) break;
    double gmax = 0.0;
    for (double v : g) gmax = std::max(gmax, std::abs(v));
    if (sigma == 0.0) sigma = step0 / gmax;
    sigma = std::min(sigma, site.diagonal() / gmax);

    bool accepted = false;
    bool backtracked = false;
    Layout trial;
    double j_trial = 0.0;
    double predicted = 0.0;
    for (int b = 0; b < cfg.max_backtracks && res.evaluations < cfg.max_evaluations; ++b) {
      trial = m;
      for (std::size_t k = 0; k < trial.size(); ++k) trial[k] += sigma * g[k];
      trial = project_to_site(trial, site);
      if (trial == m) break;
      j_trial = obj.value(trial);
      ++res.evaluations;
      require_finite(j_trial, "objective", it);
      predicted = 0.0;
      for (std::size_t k = 0; k < trial.size(); ++k) predicted += g[k] * (trial[k] - m[k]);
      if (j_trial >= j + cfg.armijo * predicted) {
        accepted = true;
        break;
      }
      sigma *= cfg.shrink;
      backtracked = true;
    }
    if (!accepted) break;

    const double gain = j_trial - j;
    m = std::move(trial);
    j = j_trial;
    g = obj.gradient(m);
    ++res.gradient_evaluations;
    require_finite(g, it);
    res.iterations = it;
    res.trace.add(it, res.evaluations, j, cfg.record_snapshots ? &m : nullptr);
    // Grow only when the step delivered most of its predicted gain; a barely
    // accepted step (ratio near 0) overshoots and is halved for next time.
    const double ratio = predicted > 0.0 ? gain / predicted : 1.0;
    if (!backtracked && ratio > 0.75)
      sigma *= 2.0;
    else if (ratio < 0.25)
      sigma *= 0.5;
  }

  res.layout = std::move(m);
  res.value = j;
  return res;
}

}  // namespace wakefarm
