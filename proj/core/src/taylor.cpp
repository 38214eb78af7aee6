#include "wakefarm/taylor.hpp"

#include <cmath>

namespace wakefarm {

bool TaylorReport::degenerate() const {
  if (!slope_plain || !slope_gradient) return true;
  for (double r : remainder_plain)
    if (r == 0.0) return true;
  for (double r : remainder_gradient)
    if (r == 0.0) return true;
  return false;
}

std::optional<double> fit_loglog_slope(std::span<const double> x, std::span<const double> y) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int n = 0;
  for (std::size_t k = 0; k < x.size() && k < y.size(); ++k) {
    if (!(y[k] > 0.0) || !(x[k] > 0.0)) continue;
    const double lx = std::log(x[k]), ly = std::log(y[k]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    ++n;
  }
  if (n < 2) return std::nullopt;
  const double denom = n * sxx - sx * sx;
  if (denom == 0.0) return std::nullopt;
  return (n * sxy - sx * sy) / denom;
}

std::vector<double> random_unit_direction(std::size_t dim, Rng& rng) {
  std::vector<double> d(dim);
  double len = 0.0;
  while (len == 0.0) {
    for (double& v : d) v = rng.normal();
    len = 0.0;
    for (double v : d) len += v * v;
    len = std::sqrt(len);
  }
  for (double& v : d) v /= len;
  return d;
}

TaylorReport make_taylor_report(std::vector<double> step, double base_value,
                                std::span<const double> perturbed_values,
                                std::span<const double> linear_terms) {
  TaylorReport rep;
  rep.step = std::move(step);
  for (std::size_t k = 0; k < rep.step.size(); ++k) {
    const double diff = perturbed_values[k] - base_value;
    rep.remainder_plain.push_back(std::abs(diff));
    rep.remainder_gradient.push_back(std::abs(diff - linear_terms[k]));
  }
  rep.slope_plain = fit_loglog_slope(rep.step, rep.remainder_plain);
  rep.slope_gradient = fit_loglog_slope(rep.step, rep.remainder_gradient);
  return rep;
}

}  // namespace wakefarm
