#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "wakefarm/geometry.hpp"

namespace wakefarm {

/// Regular lattice: node (i, j) sits at (x0 + i*dx, y0 + j*dy), stored
/// row-major with i (x) varying fastest.
struct GridGeometry {
  int nx = 2;
  int ny = 2;
  double x0 = 0.0;
  double y0 = 0.0;
  double dx = 1.0;
  double dy = 1.0;

  /// Rejects nx, ny < 2 and non-increasing (or non-finite) axes.
  void validate() const;

  std::size_t node_count() const { return static_cast<std::size_t>(nx) * ny; }
  std::size_t index(int i, int j) const { return static_cast<std::size_t>(j) * nx + i; }
  Vec2 node(int i, int j) const { return {x0 + i * dx, y0 + j * dy}; }
  double x_max() const { return x0 + (nx - 1) * dx; }
  double y_max() const { return y0 + (ny - 1) * dy; }
  bool contains(Vec2 p) const { return p.x >= x0 && p.x <= x_max() && p.y >= y0 && p.y <= y_max(); }

  friend bool operator==(const GridGeometry&, const GridGeometry&) = default;
};

/// Samples of (u, v) on a grid, m/s.
struct GriddedField {
  GridGeometry grid;
  std::vector<Vec2> samples;

  void validate() const;
};

/// One scalar per node.
struct ScalarGrid {
  GridGeometry grid;
  std::vector<double> values;

  void validate() const;
};

/// Text format: line 1 `nx ny x0 y0 dx dy`, then nx*ny lines of samples.
/// Values are written with 17 significant digits so a reload is lossless.
void write_gridded_field(std::ostream& out, const GriddedField& field);
GriddedField read_gridded_field(std::istream& in);
void write_scalar_grid(std::ostream& out, const ScalarGrid& grid);
ScalarGrid read_scalar_grid(std::istream& in);

}  // namespace wakefarm
