#include "wakefarm/reduction_table.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "grid_locate.hpp"

namespace wakefarm {

namespace {

/// Node first derivatives of the natural cubic spline through `f` sampled
/// at uniform spacing h. Reads/writes with a stride so rows and columns of a
/// row-major grid can share the routine.
void spline_derivatives(const double* f, double* out, int n, std::size_t stride, double h) {
  if (n == 2) {
    const double s = (f[stride] - f[0]) / h;
    out[0] = s;
    out[stride] = s;
    return;
  }
  // Second derivatives M_1..M_{n-2}; M_0 = M_{n-1} = 0. Thomas algorithm on
  // M_{i-1} + 4 M_i + M_{i+1} = 6 (f_{i+1} - 2 f_i + f_{i-1}) / h^2.
  std::vector<double> m(static_cast<std::size_t>(n), 0.0);
  std::vector<double> c(static_cast<std::size_t>(n), 0.0);
  const double k = 6.0 / (h * h);
  auto val = [&](int i) { return f[static_cast<std::size_t>(i) * stride]; };
  for (int i = 1; i <= n - 2; ++i) {
    const double rhs = k * (val(i + 1) - 2.0 * val(i) + val(i - 1));
    const double denom = 4.0 - (i > 1 ? c[i - 1] : 0.0);
    c[i] = 1.0 / denom;
    m[i] = (rhs - (i > 1 ? m[i - 1] : 0.0)) / denom;
  }
  for (int i = n - 3; i >= 1; --i) m[i] -= c[i] * m[i + 1];
  for (int i = 0; i < n - 1; ++i)
    out[static_cast<std::size_t>(i) * stride] = (val(i + 1) - val(i)) / h - h * (2.0 * m[i] + m[i + 1]) / 6.0;
  out[static_cast<std::size_t>(n - 1) * stride] =
      (val(n - 1) - val(n - 2)) / h + h * (m[n - 2] + 2.0 * m[n - 1]) / 6.0;
}

double smoothstep(double t) {
  t = std::clamp(t, 0.0, 1.0);
  return t * t * (3.0 - 2.0 * t);
}

struct Hermite {
  double h0, h1, g0, g1;      // value basis for end values / end slopes
  double dh0, dh1, dg0, dg1;  // d/dt of the above
};

Hermite hermite(double t) {
  const double t2 = t * t, t3 = t2 * t;
  return {2 * t3 - 3 * t2 + 1, -2 * t3 + 3 * t2, t3 - 2 * t2 + t, t3 - t2,
          6 * t2 - 6 * t,      -6 * t2 + 6 * t,  3 * t2 - 4 * t + 1, 3 * t2 - 2 * t};
}

}  // namespace

struct ReductionTable::Patch {
  bool inside = false;
  double value = 1.0;
  Vec2 grad{};
};

ReductionTable::ReductionTable(ScalarGrid samples) : samples_(std::move(samples)) {
  samples_.validate();
  const GridGeometry& g = samples_.grid;
  for (double v : samples_.values)
    if (!(v > 0.0) || !std::isfinite(v))
      throw std::invalid_argument("ReductionTable: factors must be finite and positive");
  for (int j = 0; j < g.ny; ++j)
    for (int i = 0; i < g.nx; ++i) {
      if (i != 0 && i != g.nx - 1 && j != 0 && j != g.ny - 1) continue;
      if (std::abs(samples_.values[g.index(i, j)] - 1.0) > kBoundaryTolerance)
        throw std::invalid_argument("ReductionTable: boundary factor differs from 1 by more than " +
                                    std::to_string(kBoundaryTolerance));
    }

  const std::size_t n = g.node_count();
  fx_.assign(n, 0.0);
  fy_.assign(n, 0.0);
  fxy_.assign(n, 0.0);
  const double* f = samples_.values.data();
  for (int j = 0; j < g.ny; ++j)
    spline_derivatives(f + g.index(0, j), fx_.data() + g.index(0, j), g.nx, 1, g.dx);
  const auto row = static_cast<std::size_t>(g.nx);
  for (int i = 0; i < g.nx; ++i) {
    spline_derivatives(f + i, fy_.data() + i, g.ny, row, g.dy);
    spline_derivatives(fx_.data() + i, fxy_.data() + i, g.ny, row, g.dy);
  }
}

ReductionTable::Patch ReductionTable::patch(LocalFrame frame) const {
  const GridGeometry& g = samples_.grid;
  const Vec2 q{frame.downstream, frame.cross};
  if (!g.contains(q)) return {};
  const auto cx = detail::locate(q.x, g.x0, g.dx, g.nx);
  const auto cy = detail::locate(q.y, g.y0, g.dy, g.ny);
  const Hermite hx = hermite(cx.t), hy = hermite(cy.t);

  const double vx[2] = {hx.h0, hx.h1}, sx[2] = {hx.g0 * g.dx, hx.g1 * g.dx};
  const double dvx[2] = {hx.dh0, hx.dh1}, dsx[2] = {hx.dg0 * g.dx, hx.dg1 * g.dx};
  const double vy[2] = {hy.h0, hy.h1}, sy[2] = {hy.g0 * g.dy, hy.g1 * g.dy};
  const double dvy[2] = {hy.dh0, hy.dh1}, dsy[2] = {hy.dg0 * g.dy, hy.dg1 * g.dy};

  Patch p;
  p.inside = true;
  double value = 0.0, dt = 0.0, ds = 0.0;
  for (int b = 0; b < 2; ++b)
    for (int a = 0; a < 2; ++a) {
      const std::size_t k = g.index(cx.cell + a, cy.cell + b);
      const double f = samples_.values[k], fx = fx_[k], fy = fy_[k], fxy = fxy_[k];
      value += f * vx[a] * vy[b] + fx * sx[a] * vy[b] + fy * vx[a] * sy[b] + fxy * sx[a] * sy[b];
      dt += f * dvx[a] * vy[b] + fx * dsx[a] * vy[b] + fy * dvx[a] * sy[b] + fxy * dsx[a] * sy[b];
      ds += f * vx[a] * dvy[b] + fx * sx[a] * dvy[b] + fy * vx[a] * dsy[b] + fxy * sx[a] * dsy[b];
    }
  p.value = value;
  p.grad = {dt / g.dx, ds / g.dy};
  return p;
}

double ReductionTable::factor(LocalFrame frame) const { return patch(frame).value; }

Vec2 ReductionTable::gradient(LocalFrame frame) const { return patch(frame).grad; }

SyntheticWakeShape SyntheticWakeShape::for_diameter(double d) {
  SyntheticWakeShape s;
  s.decay_length = 8.0 * d;
  s.sigma0 = 0.5 * d;
  s.lobe_offset = 0.9 * d;
  s.lobe_width = 0.25 * d;
  s.lobe_half_length = d;
  s.taper = 2.0 * d;
  s.onset_start = -0.5 * d;
  s.onset_length = 1.5 * d;
  return s;
}

double SyntheticWakeShape::evaluate(double x0, double y0) const {
  double r = 1.0;
  const double onset = smoothstep((x0 - onset_start) / onset_length);
  if (onset > 0.0) {
    const double sigma = sigma0 + widening * std::max(x0, 0.0);
    r -= deficit * onset * std::exp(-x0 / decay_length) * std::exp(-y0 * y0 / (2.0 * sigma * sigma));
  }
  if (std::abs(x0) < lobe_half_length) {
    const double c = std::cos(0.5 * std::numbers::pi * x0 / lobe_half_length);
    auto gauss = [&](double t) { return std::exp(-t * t / (2.0 * lobe_width * lobe_width)); };
    r += lobe_strength * c * c * (gauss(y0 - lobe_offset) + gauss(y0 + lobe_offset));
  }
  return r;
}

ReductionTable synth_swe_like_table(const TurbineSpec& spec, int nx, int ny, const TableExtent& extent) {
  return synth_swe_like_table(spec, nx, ny, extent, SyntheticWakeShape::for_diameter(spec.diameter));
}

ReductionTable synth_swe_like_table(const TurbineSpec& spec, int nx, int ny, const TableExtent& extent,
                                    const SyntheticWakeShape& shape) {
  spec.validate();
  if (!(extent.downstream >= 10.0 * spec.diameter))
    throw std::invalid_argument("synth_swe_like_table: extent must cover at least 10 diameters downstream");
  if (!(extent.upstream > 0.0) || !(extent.half_width > 0.0))
    throw std::invalid_argument("synth_swe_like_table: extent must be positive");
  if (!(shape.deficit > 0.0 && shape.deficit < 1.0))
    throw std::invalid_argument("synth_swe_like_table: deficit amplitude must lie in (0, 1)");

  ScalarGrid grid;
  grid.grid = {nx, ny, -extent.upstream, -extent.half_width,
               (extent.upstream + extent.downstream) / (nx - 1), 2.0 * extent.half_width / (ny - 1)};
  grid.grid.validate();
  grid.values.resize(grid.grid.node_count());
  const double x_lo = -extent.upstream, x_hi = extent.downstream;
  const double y_lo = -extent.half_width, y_hi = extent.half_width;
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i) {
      const Vec2 p = grid.grid.node(i, j);
      // Exact 1 on the last node avoids roundoff in the node position.
      const double ex = (i == 0 || i == nx - 1) ? 0.0 : std::min(p.x - x_lo, x_hi - p.x);
      const double ey = (j == 0 || j == ny - 1) ? 0.0 : std::min(p.y - y_lo, y_hi - p.y);
      const double w = smoothstep(ex / shape.taper) * smoothstep(ey / shape.taper);
      grid.values[grid.grid.index(i, j)] = 1.0 + w * (shape.evaluate(p.x, p.y) - 1.0);
    }
  return ReductionTable(std::move(grid));
}

ReductionTable synth_swe_like_table(const TurbineSpec& spec, double spacing) {
  if (!(spacing > 0.0)) throw std::invalid_argument("synth_swe_like_table: spacing must be positive");
  const TableExtent extent = TableExtent::for_diameter(spec.diameter);
  const int nx = static_cast<int>(std::lround((extent.upstream + extent.downstream) / spacing)) + 1;
  const int ny = static_cast<int>(std::lround(2.0 * extent.half_width / spacing)) + 1;
  return synth_swe_like_table(spec, nx, ny, extent);
}

void write_reduction_table(std::ostream& out, const ReductionTable& table) {
  write_scalar_grid(out, table.samples());
}

ReductionTable read_reduction_table(std::istream& in) { return ReductionTable(read_scalar_grid(in)); }

}  // namespace wakefarm
