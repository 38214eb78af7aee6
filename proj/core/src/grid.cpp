#include "wakefarm/grid.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

namespace wakefarm {

void GridGeometry::validate() const {
  if (nx < 2 || ny < 2) throw std::invalid_argument("grid: need at least 2 nodes per axis");
  if (!(dx > 0.0) || !(dy > 0.0) || !std::isfinite(dx) || !std::isfinite(dy))
    throw std::invalid_argument("grid: axes must be strictly increasing (dx, dy > 0)");
  if (!std::isfinite(x0) || !std::isfinite(y0)) throw std::invalid_argument("grid: non-finite origin");
}

void GriddedField::validate() const {
  grid.validate();
  if (samples.size() != grid.node_count())
    throw std::invalid_argument("gridded field: sample count does not match nx*ny");
}

void ScalarGrid::validate() const {
  grid.validate();
  if (values.size() != grid.node_count())
    throw std::invalid_argument("scalar grid: value count does not match nx*ny");
}

namespace {

void write_header(std::ostream& out, const GridGeometry& g) {
  char buf[256];
  std::snprintf(buf, sizeof buf, "%d %d %.17g %.17g %.17g %.17g\n", g.nx, g.ny, g.x0, g.y0, g.dx,
                g.dy);
  out << buf;
}

GridGeometry read_header(std::istream& in) {
  GridGeometry g;
  if (!(in >> g.nx >> g.ny >> g.x0 >> g.y0 >> g.dx >> g.dy))
    throw std::runtime_error("grid file: malformed header, expected `nx ny x0 y0 dx dy`");
  g.validate();
  return g;
}

}  // namespace

void write_gridded_field(std::ostream& out, const GriddedField& field) {
  field.validate();
  write_header(out, field.grid);
  char buf[96];
  for (const Vec2& s : field.samples) {
    std::snprintf(buf, sizeof buf, "%.17g %.17g\n", s.x, s.y);
    out << buf;
  }
}

GriddedField read_gridded_field(std::istream& in) {
  GriddedField f;
  f.grid = read_header(in);
  f.samples.resize(f.grid.node_count());
  for (std::size_t k = 0; k < f.samples.size(); ++k) {
    if (!(in >> f.samples[k].x >> f.samples[k].y))
      throw std::runtime_error("grid file: expected " + std::to_string(f.samples.size()) +
                               " samples, read " + std::to_string(k));
  }
  return f;
}

void write_scalar_grid(std::ostream& out, const ScalarGrid& grid) {
  grid.validate();
  write_header(out, grid.grid);
  char buf[48];
  for (double v : grid.values) {
    std::snprintf(buf, sizeof buf, "%.17g\n", v);
    out << buf;
  }
}

ScalarGrid read_scalar_grid(std::istream& in) {
  ScalarGrid s;
  s.grid = read_header(in);
  s.values.resize(s.grid.node_count());
  for (std::size_t k = 0; k < s.values.size(); ++k) {
    if (!(in >> s.values[k]))
      throw std::runtime_error("grid file: expected " + std::to_string(s.values.size()) +
                               " values, read " + std::to_string(k));
  }
  return s;
}

}  // namespace wakefarm
