#ifndef PLANTUNE_GEOMETRY_HPP_
#define PLANTUNE_GEOMETRY_HPP_

#include <algorithm>
#include <cmath>

namespace plantune {

struct Vec3 {
  double x = 0.0, y = 0.0, z = 0.0;

  Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
  double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
  double norm() const { return std::sqrt(dot(*this)); }
};

inline bool operator==(const Vec3& a, const Vec3& b) {
  return a.x == b.x && a.y == b.y && a.z == b.z;
}

/// A straight workspace segment; robot links are capsules around these.
struct Segment {
  Vec3 a, b;
};

inline double dist_point_segment(const Vec3& p, const Segment& s) {
  Vec3 d = s.b - s.a;
  double len_sq = d.dot(d);
  if (len_sq == 0.0) return (p - s.a).norm();
  double t = std::clamp((p - s.a).dot(d) / len_sq, 0.0, 1.0);
  return (p - (s.a + d * t)).norm();
}

/// Closest distance between two segments (Ericson, Real-Time Collision
/// Detection, 5.1.9), robust for degenerate/parallel cases.
inline double dist_segment_segment(const Segment& s1, const Segment& s2) {
  const Vec3 d1 = s1.b - s1.a;
  const Vec3 d2 = s2.b - s2.a;
  const Vec3 r = s1.a - s2.a;
  const double a = d1.dot(d1);
  const double e = d2.dot(d2);
  const double f = d2.dot(r);

  double s, t;
  if (a == 0.0 && e == 0.0) {
    return r.norm();
  }
  if (a == 0.0) {
    s = 0.0;
    t = std::clamp(f / e, 0.0, 1.0);
  } else {
    const double c = d1.dot(r);
    if (e == 0.0) {
      t = 0.0;
      s = std::clamp(-c / a, 0.0, 1.0);
    } else {
      const double b = d1.dot(d2);
      const double denom = a * e - b * b;
      s = denom != 0.0 ? std::clamp((b * f - c * e) / denom, 0.0, 1.0) : 0.0;
      t = (b * s + f) / e;
      if (t < 0.0) {
        t = 0.0;
        s = std::clamp(-c / a, 0.0, 1.0);
      } else if (t > 1.0) {
        t = 1.0;
        s = std::clamp((b - c) / a, 0.0, 1.0);
      }
    }
  }
  const Vec3 c1 = s1.a + d1 * s;
  const Vec3 c2 = s2.a + d2 * t;
  return (c1 - c2).norm();
}

struct Aabb {
  Vec3 lo, hi;
};

inline double dist_point_aabb(const Vec3& p, const Aabb& box) {
  double dx = std::max({box.lo.x - p.x, 0.0, p.x - box.hi.x});
  double dy = std::max({box.lo.y - p.y, 0.0, p.y - box.hi.y});
  double dz = std::max({box.lo.z - p.z, 0.0, p.z - box.hi.z});
  return std::sqrt(dx * dx + dy * dy + dz * dz);
}

/// Distance from a segment to a box. The point-to-box distance is convex along
/// the segment, so a ternary search over the parameter converges to the
/// minimum; 100 halvings push the bracket far below geometric tolerances.
inline double dist_segment_aabb(const Segment& s, const Aabb& box) {
  auto f = [&](double t) { return dist_point_aabb(s.a + (s.b - s.a) * t, box); };
  double lo = 0.0, hi = 1.0;
  for (int i = 0; i < 100; ++i) {
    double m1 = lo + (hi - lo) / 3.0;
    double m2 = hi - (hi - lo) / 3.0;
    if (f(m1) <= f(m2))
      hi = m2;
    else
      lo = m1;
  }
  return f(0.5 * (lo + hi));
}

}  // namespace plantune

#endif  // PLANTUNE_GEOMETRY_HPP_
