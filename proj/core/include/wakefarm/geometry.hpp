#pragma once

#include <cmath>

namespace wakefarm {

/// A point or displacement in the horizontal plane, metres.
struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  friend constexpr Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
  friend constexpr Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
  friend constexpr Vec2 operator*(Vec2 a, double s) { return {s * a.x, s * a.y}; }
  constexpr Vec2& operator+=(Vec2 o) {
    x += o.x;
    y += o.y;
    return *this;
  }
  friend constexpr bool operator==(Vec2, Vec2) = default;
};

constexpr double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }

/// Left-hand normal: (x, y) -> (-y, x).
constexpr Vec2 perp(Vec2 a) { return {-a.y, a.x}; }

/// 2x2 matrix, row-major. As a flow Jacobian, row r is velocity component r
/// and column c is the derivative with respect to coordinate c:
/// {du/dx, du/dy, dv/dx, dv/dy}.
struct Mat2 {
  double xx = 0.0;
  double xy = 0.0;
  double yx = 0.0;
  double yy = 0.0;

  static constexpr Mat2 zero() { return {}; }
  static constexpr Mat2 diag(double a, double b) { return {a, 0.0, 0.0, b}; }

  friend constexpr Vec2 operator*(const Mat2& m, Vec2 v) {
    return {m.xx * v.x + m.xy * v.y, m.yx * v.x + m.yy * v.y};
  }
  friend constexpr bool operator==(const Mat2&, const Mat2&) = default;
};

/// v^T M, i.e. M^T v.
constexpr Vec2 left_multiply(Vec2 v, const Mat2& m) {
  return {v.x * m.xx + v.y * m.yx, v.x * m.xy + v.y * m.yy};
}

constexpr Mat2 outer(Vec2 a, Vec2 b) { return {a.x * b.x, a.x * b.y, a.y * b.x, a.y * b.y}; }

}  // namespace wakefarm
