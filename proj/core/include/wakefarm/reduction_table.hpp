#pragma once

#include <iosfwd>
#include <vector>

#include "wakefarm/grid.hpp"
#include "wakefarm/layout.hpp"
#include "wakefarm/wake.hpp"

namespace wakefarm {

/// Tabulated reduction factor r(x0, y0) with the turbine at the local origin.
///
/// Interpolation is the tensor-product natural cubic spline through the
/// samples, evaluated as a bicubic Hermite patch per cell. It reproduces
/// node values exactly and is C2 inside the table. Outside the table the
/// factor is exactly 1 with zero gradient.
class ReductionTable final : public WakeModel {
 public:
  /// Tolerance on |r - 1| along the table boundary.
  static constexpr double kBoundaryTolerance = 1e-3;

  /// Throws std::invalid_argument unless the grid is valid, every sample is
  /// positive and every boundary sample is within kBoundaryTolerance of 1.
  explicit ReductionTable(ScalarGrid samples);

  double factor(LocalFrame frame) const override;
  Vec2 gradient(LocalFrame frame) const override;

  const ScalarGrid& samples() const { return samples_; }

 private:
  struct Patch;
  Patch patch(LocalFrame frame) const;

  ScalarGrid samples_;
  std::vector<double> fx_, fy_, fxy_;  // spline node derivatives
};

/// Shape parameters of the synthetic wake, lengths in metres.
/// Deficit: A * onset(x0) * exp(-x0/lambda) * exp(-y0^2 / (2 sigma(x0)^2)),
/// sigma(x0) = sigma0 + beta * max(x0, 0); onset rises smoothly from 0 at
/// x0 = onset_start to 1 at x0 = onset_start + onset_length.
/// Side lobes: B * window(x0) * [G(y0 - c) + G(y0 + c)], G a Gaussian of
/// width lobe_width, window a cos^2 bump over |x0| <= lobe_half_length.
/// The whole perturbation r - 1 is faded to zero over `taper` metres inside
/// every table edge.
struct SyntheticWakeShape {
  double deficit = 0.6;         // A
  double decay_length = 160.0;  // lambda
  double sigma0 = 10.0;
  double widening = 0.06;       // beta
  double lobe_strength = 0.05;  // B
  double lobe_offset = 18.0;    // c
  double lobe_width = 5.0;
  double lobe_half_length = 20.0;
  double taper = 40.0;
  double onset_start = -10.0;
  double onset_length = 30.0;

  /// The documented defaults scaled to a rotor of diameter D: lambda = 8D,
  /// sigma0 = D/2, c = 0.9D, lobe width D/4, lobe half-length D, taper 2D,
  /// onset from -D/2 over 1.5D.
  static SyntheticWakeShape for_diameter(double diameter);

  /// Closed-form r(x0, y0) before tapering and tabulation.
  double evaluate(double x0, double y0) const;
};

/// Table footprint around the turbine, metres.
struct TableExtent {
  double upstream = 60.0;
  double downstream = 800.0;
  double half_width = 200.0;

  static TableExtent for_diameter(double diameter) {
    return {3.0 * diameter, 40.0 * diameter, 10.0 * diameter};
  }
};

/// Samples the synthetic shallow-water-like wake on an nx x ny grid covering
/// x0 in [-upstream, downstream], y0 in [-half_width, half_width].
/// Requires downstream >= 10 diameters.
ReductionTable synth_swe_like_table(const TurbineSpec& spec, int nx, int ny,
                                    const TableExtent& extent);
ReductionTable synth_swe_like_table(const TurbineSpec& spec, int nx, int ny,
                                    const TableExtent& extent, const SyntheticWakeShape& shape);

/// Convenience: node count chosen for the given spacing (m) over the default
/// extent for this rotor.
ReductionTable synth_swe_like_table(const TurbineSpec& spec, double spacing);

void write_reduction_table(std::ostream& out, const ReductionTable& table);
ReductionTable read_reduction_table(std::istream& in);

}  // namespace wakefarm
