#include "wakefarm/flowfield.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "grid_locate.hpp"

namespace wakefarm {

namespace {

class UniformFlow final : public AmbientFlowField {
 public:
  explicit UniformFlow(Vec2 u0) : u0_(u0) {}
  Vec2 velocity(Vec2) const override { return u0_; }
  Mat2 jacobian(Vec2) const override { return Mat2::zero(); }

 private:
  Vec2 u0_;
};

class LinearGradientFlow final : public AmbientFlowField {
 public:
  Vec2 velocity(Vec2 p) const override { return {1.0 + p.x / 1280.0, 1.0 + p.y / 640.0}; }
  Mat2 jacobian(Vec2) const override { return Mat2::diag(1.0 / 1280.0, 1.0 / 640.0); }
};

class ChannelContinuityFlow final : public AmbientFlowField {
 public:
  ChannelContinuityFlow(BathymetryPtr profile, double flux, Vec2 axis)
      : profile_(std::move(profile)), flux_(flux), axis_(axis) {}

  Vec2 velocity(Vec2 p) const override { return (flux_ / profile_->depth(p)) * axis_; }

  Mat2 jacobian(Vec2 p) const override {
    const double h = profile_->depth(p);
    const Vec2 ds = (-flux_ / (h * h)) * profile_->depth_gradient(p);
    return outer(axis_, ds);
  }

 private:
  BathymetryPtr profile_;
  double flux_;
  Vec2 axis_;
};

class GriddedFlow final : public AmbientFlowField {
 public:
  explicit GriddedFlow(GriddedField field) : f_(std::move(field)) {}

  Vec2 velocity(Vec2 p) const override {
    const auto cx = detail::locate(p.x, f_.grid.x0, f_.grid.dx, f_.grid.nx);
    const auto cy = detail::locate(p.y, f_.grid.y0, f_.grid.dy, f_.grid.ny);
    const Vec2 a = at(cx.cell, cy.cell), b = at(cx.cell + 1, cy.cell);
    const Vec2 c = at(cx.cell, cy.cell + 1), d = at(cx.cell + 1, cy.cell + 1);
    const double t = cx.t, s = cy.t;
    return ((1 - t) * (1 - s)) * a + (t * (1 - s)) * b + ((1 - t) * s) * c + (t * s) * d;
  }

  Mat2 jacobian(Vec2 p) const override {
    const auto cx = detail::locate(p.x, f_.grid.x0, f_.grid.dx, f_.grid.nx);
    const auto cy = detail::locate(p.y, f_.grid.y0, f_.grid.dy, f_.grid.ny);
    const Vec2 a = at(cx.cell, cy.cell), b = at(cx.cell + 1, cy.cell);
    const Vec2 c = at(cx.cell, cy.cell + 1), d = at(cx.cell + 1, cy.cell + 1);
    const double t = cx.t, s = cy.t;
    Vec2 ddx = (1.0 / f_.grid.dx) * ((1 - s) * (b - a) + s * (d - c));
    Vec2 ddy = (1.0 / f_.grid.dy) * ((1 - t) * (c - a) + t * (d - b));
    if (cx.clamped) ddx = {};
    if (cy.clamped) ddy = {};
    return {ddx.x, ddy.x, ddx.y, ddy.y};
  }

 private:
  Vec2 at(int i, int j) const { return f_.samples[f_.grid.index(i, j)]; }
  GriddedField f_;
};

}  // namespace

FlowPtr uniform_flow(Vec2 u0) {
  if (!(norm(u0) > 0.0)) throw std::invalid_argument("uniform_flow: inflow speed must be non-zero");
  return std::make_shared<UniformFlow>(u0);
}

FlowPtr linear_gradient_flow() { return std::make_shared<LinearGradientFlow>(); }

FlowPtr channel_continuity_flow(BathymetryPtr profile, double u_in, double h_in, Vec2 axis) {
  if (!profile) throw std::invalid_argument("channel_continuity_flow: null bathymetry");
  if (!(u_in > 0.0) || !(h_in > 0.0))
    throw std::invalid_argument("channel_continuity_flow: u_in and H_in must be positive");
  const double len = norm(axis);
  if (!(len > 0.0)) throw std::invalid_argument("channel_continuity_flow: zero axis");
  return std::make_shared<ChannelContinuityFlow>(std::move(profile), u_in * h_in,
                                                 (1.0 / len) * axis);
}

FlowPtr gridded_flow(GriddedField field) {
  field.validate();
  return std::make_shared<GriddedFlow>(std::move(field));
}

GriddedField sample_flow(const AmbientFlowField& flow, const GridGeometry& grid) {
  grid.validate();
  GriddedField out{grid, std::vector<Vec2>(grid.node_count())};
  for (int j = 0; j < grid.ny; ++j)
    for (int i = 0; i < grid.nx; ++i) out.samples[grid.index(i, j)] = flow.velocity(grid.node(i, j));
  return out;
}

}  // namespace wakefarm
