#include "sltr/geometry.hpp"

#include <algorithm>

namespace sltr {

double orient(Point a, Point b, Point c) {
  const long double abx = static_cast<long double>(b.x) - a.x;
  const long double aby = static_cast<long double>(b.y) - a.y;
  const long double acx = static_cast<long double>(c.x) - a.x;
  const long double acy = static_cast<long double>(c.y) - a.y;
  return static_cast<double>(abx * acy - aby * acx);
}

double angle_between(Point a, Point b) { return std::atan2(std::abs(cross(a, b)), dot(a, b)); }

double ccw_angle(Point a, Point b) {
  double t = std::atan2(cross(a, b), dot(a, b));
  if (t < 0) t += 2 * kPi;
  return t;
}

double point_segment_distance(Point p, Point a, Point b) {
  const Point ab = b - a;
  const double len2 = dot(ab, ab);
  if (len2 == 0) return dist(p, a);
  const double t = std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
  return dist(p, a + t * ab);
}

}  // namespace sltr
