#include "wakefarm/bathymetry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace wakefarm {

namespace {

class FlatBathymetry final : public BathymetryProfile {
 public:
  explicit FlatBathymetry(double h) : h_(h) {}
  double depth(Vec2) const override { return h_; }
  Vec2 depth_gradient(Vec2) const override { return {}; }
  std::string describe() const override { return "flat " + std::to_string(h_) + " m"; }

 private:
  double h_;
};

class RampBathymetry final : public BathymetryProfile {
 public:
  RampBathymetry(double x_start, double x_peak, double x_drop_end, double shallow, double deep)
      : x_start_(x_start), x_peak_(x_peak), x_end_(x_drop_end), shallow_(shallow), deep_(deep) {}

  double depth(Vec2 p) const override {
    if (p.x <= x_start_ || p.x >= x_end_) return shallow_;
    if (p.x <= x_peak_) return shallow_ + (deep_ - shallow_) * (p.x - x_start_) / (x_peak_ - x_start_);
    return deep_ + (shallow_ - deep_) * (p.x - x_peak_) / (x_end_ - x_peak_);
  }

  Vec2 depth_gradient(Vec2 p) const override {
    if (p.x < x_start_ || p.x >= x_end_) return {};
    if (p.x < x_peak_) return {(deep_ - shallow_) / (x_peak_ - x_start_), 0.0};
    return {(shallow_ - deep_) / (x_end_ - x_peak_), 0.0};
  }

  std::string describe() const override {
    std::ostringstream s;
    s << "ramp " << shallow_ << "->" << deep_ << " m over x in [" << x_start_ << ", " << x_peak_
      << "], back to " << shallow_ << " m by x=" << x_end_;
    return s.str();
  }

 private:
  double x_start_, x_peak_, x_end_, shallow_, deep_;
};

struct Bump {
  Vec2 centre;
  double amplitude;
  double radius;
};

class BumpBathymetry final : public BathymetryProfile {
 public:
  BumpBathymetry(double base, std::vector<Bump> bumps) : base_(base), bumps_(std::move(bumps)) {}

  double depth(Vec2 p) const override { return std::max(raw_depth(p), kDepthFloor); }

  Vec2 depth_gradient(Vec2 p) const override {
    if (raw_depth(p) < kDepthFloor) return {};
    Vec2 g;
    for (const Bump& b : bumps_) {
      const Vec2 d = p - b.centre;
      const double r = norm(d);
      if (r >= b.radius || r == 0.0) continue;
      const double th = 0.5 * std::numbers::pi * r / b.radius;
      const double c = std::cos(th);
      const double dfdr = -4.0 * b.amplitude * c * c * c * std::sin(th) * 0.5 * std::numbers::pi / b.radius;
      g += (dfdr / r) * d;
    }
    return g;
  }

  std::string describe() const override {
    std::ostringstream s;
    s << bumps_.size() << " cos^4 bumps on " << base_ << " m";
    return s.str();
  }

 private:
  double raw_depth(Vec2 p) const {
    double h = base_;
    for (const Bump& b : bumps_) {
      const double r = norm(p - b.centre);
      if (r >= b.radius) continue;
      const double c = std::cos(0.5 * std::numbers::pi * r / b.radius);
      h += b.amplitude * c * c * c * c;
    }
    return h;
  }

  double base_;
  std::vector<Bump> bumps_;
};

class SpeedProfileBathymetry final : public BathymetryProfile {
 public:
  SpeedProfileBathymetry(std::vector<std::pair<double, double>> knots, double flux)
      : knots_(std::move(knots)), flux_(flux) {}

  double depth(Vec2 p) const override { return flux_ / speed(p.x).first; }

  Vec2 depth_gradient(Vec2 p) const override {
    const auto [s, ds] = speed(p.x);
    return {-flux_ * ds / (s * s), 0.0};
  }

  std::string describe() const override {
    std::ostringstream s;
    s << "speed profile through";
    for (const auto& [x, v] : knots_) s << " (" << x << ", " << v << ")";
    return s.str();
  }

 private:
  std::pair<double, double> speed(double x) const {
    if (x <= knots_.front().first) return {knots_.front().second, 0.0};
    if (x >= knots_.back().first) return {knots_.back().second, 0.0};
    auto hi = std::upper_bound(knots_.begin(), knots_.end(), x,
                               [](double v, const auto& k) { return v < k.first; });
    auto lo = hi - 1;
    const double len = hi->first - lo->first;
    const double t = (x - lo->first) / len;
    const double jump = hi->second - lo->second;
    return {lo->second + jump * t * t * (3.0 - 2.0 * t), jump * 6.0 * t * (1.0 - t) / len};
  }

  std::vector<std::pair<double, double>> knots_;
  double flux_;
};

}  // namespace

BathymetryPtr flat_bathymetry(double depth) {
  if (!(depth >= kDepthFloor)) throw std::invalid_argument("flat_bathymetry: depth below floor");
  return std::make_shared<FlatBathymetry>(depth);
}

BathymetryPtr ramp_bathymetry(double x_start, double x_peak, double x_drop_end, double shallow,
                              double deep) {
  if (!(x_start < x_peak && x_peak < x_drop_end))
    throw std::invalid_argument("ramp_bathymetry: need x_start < x_peak < x_drop_end");
  if (!(shallow >= kDepthFloor && deep >= kDepthFloor))
    throw std::invalid_argument("ramp_bathymetry: depth below floor");
  return std::make_shared<RampBathymetry>(x_start, x_peak, x_drop_end, shallow, deep);
}

BathymetryPtr random_bump_bathymetry(RngSeed seed, const Site& box, int n_bumps, double base,
                                     double amplitude, double radius_min, double radius_max) {
  box.validate();
  if (!(base >= kDepthFloor)) throw std::invalid_argument("random_bump_bathymetry: base below floor");
  if (!(radius_min > 0.0 && radius_min <= radius_max))
    throw std::invalid_argument("random_bump_bathymetry: bad radius range");
  Rng rng(seed);
  std::vector<Bump> bumps;
  for (int k = 0; k < n_bumps; ++k) {
    Bump b;
    b.centre.x = rng.uniform(box.x_min, box.x_max);
    b.centre.y = rng.uniform(box.y_min, box.y_max);
    b.amplitude = rng.uniform(-amplitude, amplitude);
    b.radius = rng.uniform(radius_min, radius_max);
    bumps.push_back(b);
  }
  return std::make_shared<BumpBathymetry>(base, std::move(bumps));
}

BathymetryPtr speed_profile_bathymetry(std::vector<std::pair<double, double>> knots, double flux) {
  if (knots.empty()) throw std::invalid_argument("speed_profile_bathymetry: no knots");
  if (!(flux > 0.0)) throw std::invalid_argument("speed_profile_bathymetry: flux must be positive");
  std::sort(knots.begin(), knots.end());
  for (std::size_t k = 0; k < knots.size(); ++k) {
    if (!(knots[k].second > 0.0)) throw std::invalid_argument("speed_profile_bathymetry: speed must be positive");
    if (flux / knots[k].second < kDepthFloor)
      throw std::invalid_argument("speed_profile_bathymetry: implied depth below floor");
    if (k > 0 && !(knots[k].first > knots[k - 1].first))
      throw std::invalid_argument("speed_profile_bathymetry: duplicate knot position");
  }
  return std::make_shared<SpeedProfileBathymetry>(std::move(knots), flux);
}

}  // namespace wakefarm
