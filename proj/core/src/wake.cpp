#include "wakefarm/wake.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace wakefarm {

LocalFrame to_local_frame(Vec2 turbine, Vec2 query, Vec2 flow_dir) {
  const double len = norm(flow_dir);
  if (len == 0.0) throw std::invalid_argument("to_local_frame: zero-length flow direction");
  if (std::abs(len - 1.0) > 1e-9) throw std::invalid_argument("to_local_frame: flow direction is not a unit vector");
  const Vec2 d = query - turbine;
  return {dot(d, flow_dir), dot(d, perp(flow_dir))};
}

Vec2 flow_direction(const AmbientFlowField& ambient, Vec2 p) {
  const Vec2 u = ambient.velocity(p);
  const double s = norm(u);
  if (!(s > 0.0)) throw std::domain_error("wake frame undefined: zero ambient speed at turbine");
  return (1.0 / s) * u;
}

JensenWake::JensenWake(TurbineSpec spec, double decay) : spec_(spec), decay_(decay) {
  spec_.validate();
  if (!(decay > 0.0)) throw std::invalid_argument("JensenWake: decay must be positive");
}

double JensenWake::factor(LocalFrame frame) const {
  const double d = spec_.diameter;
  const double x0 = frame.downstream;
  if (!(x0 > 0.0) || std::abs(frame.cross) > 0.5 * d + decay_ * x0) return 1.0;
  const double deficit = 1.0 - std::sqrt(1.0 - spec_.thrust_coefficient);
  const double ratio = d / (d + 2.0 * decay_ * x0);
  return 1.0 - deficit * ratio * ratio;
}

Vec2 JensenWake::gradient(LocalFrame frame) const {
  const double d = spec_.diameter;
  const double x0 = frame.downstream;
  if (!(x0 > 0.0) || std::abs(frame.cross) > 0.5 * d + decay_ * x0) return {};
  const double deficit = 1.0 - std::sqrt(1.0 - spec_.thrust_coefficient);
  const double w = d + 2.0 * decay_ * x0;
  return {4.0 * deficit * decay_ * d * d / (w * w * w), 0.0};
}

double combined_factor(std::span<const WakeModel* const> models, const Layout& layout, Vec2 query,
                       const AmbientFlowField& ambient) {
  if (models.size() != layout.turbine_count())
    throw std::invalid_argument("combined_factor: need one wake model per turbine");
  std::vector<double> factors;
  factors.reserve(layout.turbine_count());
  for (std::size_t j = 0; j < layout.turbine_count(); ++j) {
    const Vec2 pj = layout.position(j);
    if (pj == query) continue;
    const Vec2 f = flow_direction(ambient, pj);
    factors.push_back(models[j]->factor(to_local_frame(pj, query, f)));
  }
  // Sorted so the product does not depend on turbine order.
  std::sort(factors.begin(), factors.end());
  double c = 1.0;
  for (double r : factors) c *= r;
  return c;
}

Vec2 reduced_velocity(std::span<const WakeModel* const> models, const Layout& layout, Vec2 query,
                      const AmbientFlowField& ambient) {
  return combined_factor(models, layout, query, ambient) * ambient.velocity(query);
}

}  // namespace wakefarm
