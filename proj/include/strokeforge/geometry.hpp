#pragma once

#include <cmath>
#include <compare>

namespace strokeforge {

// 2D position or displacement in pixel units. y grows downward (image rows).
struct Point {
  double x = 0.0;
  double y = 0.0;

  friend constexpr Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
  friend constexpr Point operator*(Point a, double s) { return {a.x * s, a.y * s}; }
  friend constexpr bool operator==(Point a, Point b) = default;
};

inline double norm(Point v) { return std::hypot(v.x, v.y); }
inline double distance(Point a, Point b) { return norm(a - b); }

/// Distance from `p` to the infinite line through `a` and `b`.
/// Degenerates to the point distance |p - a| when a == b.
inline double distance_to_line(Point p, Point a, Point b) {
  const Point dir = b - a;
  const double len = norm(dir);
  if (len == 0.0) return distance(p, a);
  const Point rel = p - a;
  return std::abs(dir.x * rel.y - dir.y * rel.x) / len;
}

}  // namespace strokeforge
