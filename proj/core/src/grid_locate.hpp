#pragma once

#include <algorithm>
#include <cmath>

namespace wakefarm::detail {

struct CellCoord {
  int cell;       // lower node index, in [0, n - 2]
  double t;       // local coordinate in [0, 1]
  bool clamped;   // query lay strictly outside the axis range
};

/// Locates `x` on the axis x0 + k*h, k = 0..n-1, clamping outside queries to
/// the nearest end. Offsets within 1e-9 cells of a node snap onto it so node
/// queries reproduce stored samples exactly.
inline CellCoord locate(double x, double x0, double h, int n) {
  double u = (x - x0) / h;
  bool clamped = false;
  if (u < 0.0) {
    u = 0.0;
    clamped = true;
  } else if (u > n - 1) {
    u = n - 1;
    clamped = true;
  }
  const double r = std::round(u);
  if (std::abs(u - r) < 1e-9) u = r;
  const int cell = std::clamp(static_cast<int>(std::floor(u)), 0, n - 2);
  return {cell, u - cell, clamped};
}

}  // namespace wakefarm::detail
