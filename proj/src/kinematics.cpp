#include "plantune/kinematics.hpp"

#include <cmath>
#include <string>

#include "plantune/errors.hpp"

namespace plantune {
namespace {

struct Mat3 {
  // row-major
  double m[9] = {1, 0, 0, 0, 1, 0, 0, 0, 1};

  Vec3 apply(const Vec3& v) const {
    return {m[0] * v.x + m[1] * v.y + m[2] * v.z,
            m[3] * v.x + m[4] * v.y + m[5] * v.z,
            m[6] * v.x + m[7] * v.y + m[8] * v.z};
  }

  Mat3 mul(const Mat3& o) const {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        double s = 0.0;
        for (int k = 0; k < 3; ++k) s += m[3 * i + k] * o.m[3 * k + j];
        r.m[3 * i + j] = s;
      }
    return r;
  }
};

Mat3 rot_z(double a) {
  double c = std::cos(a), s = std::sin(a);
  Mat3 r;
  r.m[0] = c; r.m[1] = -s; r.m[3] = s; r.m[4] = c;
  return r;
}

Mat3 rot_y(double a) {
  double c = std::cos(a), s = std::sin(a);
  Mat3 r;
  r.m[0] = c; r.m[2] = s; r.m[6] = -s; r.m[8] = c;
  return r;
}

bool capsule_hits(const Segment& link, double radius, const Obstacle& obstacle) {
  struct Visitor {
    const Segment& link;
    double radius;
    bool operator()(const SphereObstacle& s) const {
      return dist_point_segment(s.center, link) <= radius + s.radius;
    }
    bool operator()(const BoxObstacle& b) const {
      return dist_segment_aabb(link, {b.min_corner, b.max_corner}) <= radius;
    }
    bool operator()(const CapsuleObstacle& c) const {
      return dist_segment_segment(link, {c.a, c.b}) <= radius + c.radius;
    }
  };
  return std::visit(Visitor{link, radius}, obstacle);
}

}  // namespace

void RobotModel::validate() const {
  if (joint_count < 2) throw InvalidInput("robot needs at least 2 joints");
  if (static_cast<int>(joint_limits.size()) != joint_count)
    throw InvalidInput("joint_limits size must equal joint_count");
  if (static_cast<int>(link_lengths.size()) != joint_count)
    throw InvalidInput("link_lengths size must equal joint_count");
  for (const auto& [lo, hi] : joint_limits)
    if (!(lo < hi)) throw InvalidInput("every joint limit needs lower < upper");
  for (double len : link_lengths)
    if (!(len > 0.0)) throw InvalidInput("link lengths must be positive");
  if (!(link_radius > 0.0)) throw InvalidInput("link_radius must be positive");
}

void validate_obstacle(const Obstacle& obstacle) {
  struct Visitor {
    void operator()(const SphereObstacle& s) const {
      if (!(s.radius > 0.0)) throw InvalidInput("sphere radius must be positive");
    }
    void operator()(const BoxObstacle& b) const {
      if (!(b.min_corner.x < b.max_corner.x && b.min_corner.y < b.max_corner.y &&
            b.min_corner.z < b.max_corner.z))
        throw InvalidInput("box min corner must be componentwise below max corner");
    }
    void operator()(const CapsuleObstacle& c) const {
      if (!(c.radius > 0.0)) throw InvalidInput("capsule radius must be positive");
    }
  };
  std::visit(Visitor{}, obstacle);
}

std::vector<Segment> forward_kinematics(const RobotModel& model, const JointConfig& q) {
  if (static_cast<int>(q.size()) != model.joint_count)
    throw InvalidInput("configuration has " + std::to_string(q.size()) + " angles, robot has " +
                       std::to_string(model.joint_count) + " joints");

  std::vector<Segment> links;
  links.reserve(model.joint_count);
  Vec3 p = model.base_pose;

  if (model.joint_count <= 3) {
    // Planar chain: cumulative z rotations, links in the xy plane.
    double heading = 0.0;
    for (int i = 0; i < model.joint_count; ++i) {
      heading += q[i];
      Vec3 end = p + Vec3{std::cos(heading), std::sin(heading), 0.0} * model.link_lengths[i];
      links.push_back({p, end});
      p = end;
    }
  } else {
    // Spatial chain: joint i rotates about the local z axis (even i) or the
    // local y axis (odd i); each link extends along the local x axis.
    Mat3 frame;
    for (int i = 0; i < model.joint_count; ++i) {
      frame = frame.mul(i % 2 == 0 ? rot_z(q[i]) : rot_y(q[i]));
      Vec3 end = p + frame.apply({model.link_lengths[i], 0.0, 0.0});
      links.push_back({p, end});
      p = end;
    }
  }
  return links;
}

bool config_collides(const RobotModel& model, const Scene& scene, const JointConfig& q) {
  if (scene.obstacles.empty()) {
    if (static_cast<int>(q.size()) != model.joint_count)
      throw InvalidInput("configuration size does not match joint count");
    return false;
  }
  const auto links = forward_kinematics(model, q);
  for (const auto& link : links)
    for (const auto& obstacle : scene.obstacles)
      if (capsule_hits(link, model.link_radius, obstacle)) return true;
  return false;
}

bool motion_collides(const RobotModel& model, const Scene& scene, const JointConfig& q_a,
                     const JointConfig& q_b, double resolution) {
  if (!(resolution > 0.0)) throw InvalidInput("edge resolution must be positive");
  const double dist = config_distance(q_a, q_b);
  const int steps = dist > 0.0 ? static_cast<int>(std::ceil(dist / resolution)) : 0;

  if (config_collides(model, scene, q_a)) return true;
  if (steps == 0) return false;
  if (config_collides(model, scene, q_b)) return true;

  JointConfig q(q_a.size());
  for (int k = 1; k < steps; ++k) {
    const double t = static_cast<double>(k) / steps;
    for (std::size_t i = 0; i < q.size(); ++i) q[i] = q_a[i] + t * (q_b[i] - q_a[i]);
    if (config_collides(model, scene, q)) return true;
  }
  return false;
}

double config_distance(const JointConfig& q_a, const JointConfig& q_b) {
  if (q_a.size() != q_b.size())
    throw InvalidInput("config_distance requires equal-length configurations");
  double sum = 0.0;
  for (std::size_t i = 0; i < q_a.size(); ++i) {
    const double d = q_a[i] - q_b[i];
    sum += d * d;
  }
  return std::sqrt(sum);
}

bool within_limits(const RobotModel& model, const JointConfig& q) {
  if (static_cast<int>(q.size()) != model.joint_count) return false;
  for (int i = 0; i < model.joint_count; ++i)
    if (q[i] < model.joint_limits[i].first || q[i] > model.joint_limits[i].second) return false;
  return true;
}

}  // namespace plantune
