#pragma once

#include <concepts>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "wakefarm/layout.hpp"

namespace wakefarm {

template <class F>
concept DifferentiableFunctional = requires(const F& f, const Layout& m) {
  { f.value(m) } -> std::convertible_to<double>;
  { f.gradient(m) } -> std::convertible_to<std::vector<double>>;
};

/// Remainders of a Taylor test at steps h_k = h0 / 2^k:
///   R0(h) = |J(m + h d) - J(m)|
///   R1(h) = |J(m + h d) - J(m) - grad J . h d|
/// Slopes are least-squares fits of log R against log h over the strictly
/// positive remainders; they are empty when fewer than two remain.
struct TaylorReport {
  std::vector<double> step;
  std::vector<double> remainder_plain;
  std::vector<double> remainder_gradient;
  std::optional<double> slope_plain;
  std::optional<double> slope_gradient;

  /// True when any remainder is exactly zero or a slope could not be fitted.
  bool degenerate() const;
};

/// Least-squares slope of log(y) against log(x) over pairs with y > 0.
std::optional<double> fit_loglog_slope(std::span<const double> x, std::span<const double> y);

/// Random direction of unit Euclidean norm (isotropic, via normal draws).
std::vector<double> random_unit_direction(std::size_t dim, Rng& rng);

TaylorReport make_taylor_report(std::vector<double> step, double base_value,
                                std::span<const double> perturbed_values,
                                std::span<const double> linear_terms);

template <DifferentiableFunctional F>
TaylorReport taylor_remainder_test(const F& f, const Layout& m, std::span<const double> direction,
                                   double h0, int n_levels) {
  if (n_levels < 4) throw std::invalid_argument("taylor_remainder_test: need at least 4 levels");
  if (direction.size() != m.size()) throw std::invalid_argument("taylor_remainder_test: direction length mismatch");
  const double j0 = f.value(m);
  const std::vector<double> g = f.gradient(m);
  double slope = 0.0;
  for (std::size_t k = 0; k < g.size(); ++k) slope += g[k] * direction[k];

  std::vector<double> steps, values, linear;
  double h = h0;
  for (int level = 0; level < n_levels; ++level, h *= 0.5) {
    Layout p = m;
    for (std::size_t k = 0; k < p.size(); ++k) p[k] += h * direction[k];
    steps.push_back(h);
    values.push_back(f.value(p));
    linear.push_back(h * slope);
  }
  return make_taylor_report(std::move(steps), j0, values, linear);
}

}  // namespace wakefarm
