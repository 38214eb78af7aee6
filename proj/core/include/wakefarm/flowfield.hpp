#pragma once

#include <memory>

#include "wakefarm/bathymetry.hpp"
#include "wakefarm/geometry.hpp"
#include "wakefarm/grid.hpp"

namespace wakefarm {

/// Turbine-free velocity field u_a(x, y) and its spatial Jacobian.
/// Implementations are immutable; concurrent reads are safe.
class AmbientFlowField {
 public:
  virtual ~AmbientFlowField() = default;
  virtual Vec2 velocity(Vec2 p) const = 0;
  /// {du/dx, du/dy, dv/dx, dv/dy}, 1/s.
  virtual Mat2 jacobian(Vec2 p) const = 0;

  double speed(Vec2 p) const { return norm(velocity(p)); }
};

using FlowPtr = std::shared_ptr<const AmbientFlowField>;

/// Constant inflow. Throws if |u0| == 0.
FlowPtr uniform_flow(Vec2 u0);

/// (1 + x/1280, 1 + y/640) m/s: a field with a non-zero gradient everywhere.
FlowPtr linear_gradient_flow();

/// Quasi-1D channel: speed = u_in * H_in / H(x, y), directed along `axis`
/// (normalised here). Mass flux speed * depth is constant.
FlowPtr channel_continuity_flow(BathymetryPtr profile, double u_in, double h_in, Vec2 axis);

/// Bilinear interpolation of gridded samples; queries outside the grid are
/// clamped to the nearest edge, so the Jacobian there has zero derivative
/// along each clamped axis.
FlowPtr gridded_flow(GriddedField field);

/// Samples `flow` on `grid` (used to build fixture fields).
GriddedField sample_flow(const AmbientFlowField& flow, const GridGeometry& grid);

}  // namespace wakefarm
