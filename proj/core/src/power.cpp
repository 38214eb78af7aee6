#include "wakefarm/power.hpp"

#include <cmath>
#include <stdexcept>

namespace wakefarm {

namespace {

struct TurbineState {
  Vec2 pos;
  double speed;
  Vec2 speed_grad;  // d|u_a|/dp
  Vec2 dir;         // unit ambient direction (valid when speed > 0)
  Mat2 dir_jac;     // d dir / dp
};

TurbineState turbine_state(const AmbientFlowField& ambient, Vec2 p, bool need_dir) {
  TurbineState s{};
  s.pos = p;
  const Vec2 u = ambient.velocity(p);
  s.speed = norm(u);
  if (s.speed > 0.0) {
    s.dir = (1.0 / s.speed) * u;
    const Mat2 ja = ambient.jacobian(p);
    s.speed_grad = left_multiply(s.dir, ja);
    // (I - f f^T) Ja / |u|
    const Mat2 proj{1.0 - s.dir.x * s.dir.x, -s.dir.x * s.dir.y, -s.dir.y * s.dir.x,
                    1.0 - s.dir.y * s.dir.y};
    const double inv = 1.0 / s.speed;
    s.dir_jac = {inv * (proj.xx * ja.xx + proj.xy * ja.yx), inv * (proj.xx * ja.xy + proj.xy * ja.yy),
                 inv * (proj.yx * ja.xx + proj.yy * ja.yx), inv * (proj.yx * ja.xy + proj.yy * ja.yy)};
  } else if (need_dir) {
    throw std::domain_error("wake frame undefined: zero ambient speed at a turbine");
  }
  return s;
}

std::vector<TurbineState> turbine_states(const PowerFunctional& f, const Layout& layout) {
  const std::size_t n = layout.turbine_count();
  std::vector<TurbineState> st(n);
  for (std::size_t i = 0; i < n; ++i) st[i] = turbine_state(*f.ambient, layout.position(i), n > 1);
  return st;
}

LocalFrame frame_of(const TurbineState& source, Vec2 query) {
  const Vec2 d = query - source.pos;
  return {dot(d, source.dir), dot(d, perp(source.dir))};
}

}  // namespace

void PowerFunctional::validate() const {
  if (!(alpha > 0.0)) throw std::invalid_argument("PowerFunctional: alpha must be positive");
  if (!ambient) throw std::invalid_argument("PowerFunctional: missing ambient flow");
  if (!wake) throw std::invalid_argument("PowerFunctional: missing wake model");
  site.validate();
}

double PowerFunctional::value(const Layout& layout) const {
  const auto st = turbine_states(*this, layout);
  double total = 0.0;
  for (std::size_t i = 0; i < st.size(); ++i) {
    double c = 1.0;
    for (std::size_t j = 0; j < st.size(); ++j)
      if (j != i) c *= wake->factor(frame_of(st[j], st[i].pos));
    const double s = c * st[i].speed;
    total += s * s * s;
  }
  return alpha * total;
}

PowerFunctional::ValueAndGradient PowerFunctional::value_and_gradient(const Layout& layout) const {
  const auto st = turbine_states(*this, layout);
  const std::size_t n = st.size();
  std::vector<Vec2> grad(n);
  std::vector<double> r(n);
  std::vector<Vec2> dr(n);  // d r_ij / d x0, y0
  double total = 0.0;

  for (std::size_t i = 0; i < n; ++i) {
    double c = 1.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      const LocalFrame fr = frame_of(st[j], st[i].pos);
      r[j] = wake->factor(fr);
      dr[j] = wake->gradient(fr);
      c *= r[j];
    }
    const double s = st[i].speed;
    const double c3 = c * c * c;
    total += s * s * s * c3;

    const double dj_ds = 3.0 * alpha * s * s * c3;
    const double dj_dc = 3.0 * alpha * s * s * s * c * c;
    grad[i] += dj_ds * st[i].speed_grad;

    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      const double w = dj_dc * c / r[j];
      const Vec2 f = st[j].dir;
      const Vec2 d = st[i].pos - st[j].pos;
      // Displacement part: x0 = d.f, y0 = d.perp(f).
      const Vec2 dr_dquery = dr[j].x * f + dr[j].y * perp(f);
      grad[i] += w * dr_dquery;
      // Source motion: -displacement part plus rotation of the frame.
      const Vec2 dr_ddir = dr[j].x * d + dr[j].y * Vec2{d.y, -d.x};
      grad[j] += w * (left_multiply(dr_ddir, st[j].dir_jac) - dr_dquery);
    }
  }

  ValueAndGradient out{alpha * total, GradientVector(2 * n)};
  for (std::size_t i = 0; i < n; ++i) {
    out.gradient[2 * i] = grad[i].x;
    out.gradient[2 * i + 1] = grad[i].y;
  }
  return out;
}

GradientVector PowerFunctional::gradient(const Layout& layout) const {
  return value_and_gradient(layout).gradient;
}

double evaluate_power(const PowerFunctional& f, const Layout& layout) { return f.value(layout); }

GradientVector evaluate_gradient(const PowerFunctional& f, const Layout& layout) {
  return f.gradient(layout);
}

double bump_footprint_area(double radius) {
  // Composite Simpson; the integrand and all its derivatives vanish at +-1.
  constexpr int kIntervals = 4000;
  auto bump = [](double t) {
    const double q = 1.0 - t * t;
    return q <= 0.0 ? 0.0 : std::exp(1.0 - 1.0 / q);
  };
  const double h = 2.0 / kIntervals;
  double sum = bump(-1.0) + bump(1.0);
  for (int k = 1; k < kIntervals; ++k) sum += (k % 2 == 1 ? 4.0 : 2.0) * bump(-1.0 + k * h);
  const double line = sum * h / 3.0;
  return radius * radius * line * line;
}

double default_alpha(const TurbineSpec& spec) {
  constexpr double kDensity = 1000.0;
  constexpr double kTurbineFriction = 21.0;
  return 0.5 * kDensity * kTurbineFriction * bump_footprint_area(0.5 * spec.diameter);
}

}  // namespace wakefarm
