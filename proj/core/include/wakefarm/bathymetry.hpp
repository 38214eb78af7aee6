#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "wakefarm/geometry.hpp"
#include "wakefarm/layout.hpp"
#include "wakefarm/rng.hpp"

namespace wakefarm {

/// Depth never drops below this, m.
inline constexpr double kDepthFloor = 5.0;

/// Seabed depth H(x, y) at rest, m.
class BathymetryProfile {
 public:
  virtual ~BathymetryProfile() = default;
  virtual double depth(Vec2 p) const = 0;
  virtual Vec2 depth_gradient(Vec2 p) const = 0;
  virtual std::string describe() const = 0;
};

using BathymetryPtr = std::shared_ptr<const BathymetryProfile>;

BathymetryPtr flat_bathymetry(double depth);

/// Case 1: depth grows linearly from `shallow` at x_start to `deep` at x_peak,
/// falls linearly back to `shallow` by x_drop_end and stays there.
/// Constant `shallow` upstream of x_start.
BathymetryPtr ramp_bathymetry(double x_start, double x_peak, double x_drop_end,
                              double shallow = 25.0, double deep = 30.0);

/// Cases 2 and 3: `base` plus n_bumps compactly supported cos^4 bumps with
/// centres uniform in `box`, amplitudes uniform in [-amplitude, amplitude]
/// and radii uniform in [radius_min, radius_max]. Clamped at kDepthFloor.
/// Draw order per bump: centre x, centre y, amplitude, radius.
BathymetryPtr random_bump_bathymetry(RngSeed seed, const Site& box, int n_bumps = 6,
                                     double base = 25.0, double amplitude = 5.0,
                                     double radius_min = 60.0, double radius_max = 160.0);

/// Depth chosen so that continuity along x yields a prescribed speed profile:
/// H(x) = flux / s(x). The speed s(x) passes through the (x, speed) knots with
/// zero slope at each knot (C1 cubic plateau blend) and is constant beyond
/// the first and last knot.
BathymetryPtr speed_profile_bathymetry(std::vector<std::pair<double, double>> knots,
                                       double flux);

}  // namespace wakefarm
