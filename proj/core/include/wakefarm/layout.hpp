#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "wakefarm/geometry.hpp"
#include "wakefarm/rng.hpp"

namespace wakefarm {

/// Rotor description shared by the wake models.
struct TurbineSpec {
  double diameter = 20.0;           // m
  double thrust_coefficient = 0.8;  // dimensionless, in (0, 1)
  double hub_exclusion_radius = 10.0;  // m, informational only

  /// Throws std::invalid_argument when diameter <= 0 or C_T is outside (0, 1).
  void validate() const;
};

/// Axis-aligned box the turbines must stay inside.
struct Site {
  double x_min = 0.0;
  double x_max = 320.0;
  double y_min = 0.0;
  double y_max = 160.0;

  void validate() const;

  double width() const { return x_max - x_min; }
  double height() const { return y_max - y_min; }
  double diagonal() const;
  Vec2 centre() const { return {0.5 * (x_min + x_max), 0.5 * (y_min + y_max)}; }
  bool contains(Vec2 p) const {
    return p.x >= x_min && p.x <= x_max && p.y >= y_min && p.y <= y_max;
  }

  /// Bounds for flat coordinate k of a layout: even k is x, odd k is y.
  double lower(std::size_t k) const { return k % 2 == 0 ? x_min : y_min; }
  double upper(std::size_t k) const { return k % 2 == 0 ? x_max : y_max; }

  friend bool operator==(const Site&, const Site&) = default;
};

/// Flattened turbine coordinates (x1, y1, ..., xN, yN) in metres.
class Layout {
 public:
  Layout() = default;
  /// Throws std::invalid_argument if the length is odd.
  explicit Layout(std::vector<double> coords);

  static Layout pack(std::span<const Vec2> positions);
  std::vector<Vec2> unpack() const;

  std::size_t turbine_count() const { return coords_.size() / 2; }
  std::size_t size() const { return coords_.size(); }
  bool empty() const { return coords_.empty(); }

  Vec2 position(std::size_t i) const { return {coords_[2 * i], coords_[2 * i + 1]}; }
  void set_position(std::size_t i, Vec2 p) {
    coords_[2 * i] = p.x;
    coords_[2 * i + 1] = p.y;
  }

  double operator[](std::size_t k) const { return coords_[k]; }
  double& operator[](std::size_t k) { return coords_[k]; }

  std::span<const double> coords() const { return coords_; }
  std::span<double> coords() { return coords_; }
  const std::vector<double>& vector() const { return coords_; }

  friend bool operator==(const Layout&, const Layout&) = default;

 private:
  std::vector<double> coords_;
};

/// Componentwise clamp of every turbine into the site box.
Layout project_to_site(const Layout& layout, const Site& site);

/// Cell-centred n_rows x n_cols grid; turbines are ordered row by row,
/// x varying fastest.
Layout regular_grid_layout(int n_rows, int n_cols, const Site& site);

/// The deterministic seed family followed by n_random uniform layouts:
///   1. four edge lines (bottom, top, left, right), inset by `margin`
///   2. the two diagonals (lower-left to upper-right, then upper-left to
///      lower-right), inset by `margin`
///   3. every factor-pair grid rows x cols = n_turbines, rows ascending
///   4. n_random layouts, each coordinate uniform on the site axis
/// Points on a line are equispaced with both ends included; a single turbine
/// sits at the midpoint. The margin is capped at half the smaller side.
std::vector<Layout> seeded_layouts(int n_turbines, const Site& site, RngSeed seed, int n_random,
                                   double margin = 20.0);

/// Uniform random layout drawn x then y for each turbine in order.
Layout random_layout(int n_turbines, const Site& site, Rng& rng);

/// Smallest Euclidean distance between two turbines. Throws for N < 2.
double min_pairwise_distance(const Layout& layout);

/// Layout CSV: header `turbine,x,y`, 1-based turbine index, 6 decimals.
void write_layout_csv(std::ostream& out, const Layout& layout);
Layout read_layout_csv(std::istream& in);

}  // namespace wakefarm
