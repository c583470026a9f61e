#pragma once

#include <cmath>

namespace sltr {

struct Point {
  double x = 0;
  double y = 0;

  friend Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
  friend Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
  friend Point operator*(double s, Point a) { return {s * a.x, s * a.y}; }
  friend bool operator==(const Point&, const Point&) = default;
};

inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double norm(Point a) { return std::hypot(a.x, a.y); }
inline double dist(Point a, Point b) { return norm(a - b); }

/// Twice the signed area of (a, b, c), positive if counterclockwise.
/// Evaluated in long double.
double orient(Point a, Point b, Point c);

/// Unsigned angle between directions a and b, in [0, pi].
double angle_between(Point a, Point b);

/// Counterclockwise angle turning direction a into direction b, in [0, 2pi).
double ccw_angle(Point a, Point b);

/// Distance from p to the segment [a, b].
double point_segment_distance(Point p, Point a, Point b);

inline constexpr double kPi = 3.14159265358979323846;

}  // namespace sltr
