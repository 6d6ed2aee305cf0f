#ifndef PLANTUNE_ROBOT_HPP_
#define PLANTUNE_ROBOT_HPP_

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "plantune/geometry.hpp"

namespace plantune {

/// A point in configuration space: one angle (radians) per joint.
using JointConfig = std::vector<double>;

/// Serial manipulator with capsule links.
///
/// Kinematic convention: for 2-3 joints the chain is planar (all joints rotate
/// about the workspace z axis, links extend in the xy plane). For 4+ joints the
/// joint axes alternate between the local z and y axes, giving a spatial chain.
struct RobotModel {
  int joint_count = 0;
  std::vector<std::pair<double, double>> joint_limits;  // (lower, upper), radians
  std::vector<double> link_lengths;                     // meters
  double link_radius = 0.0;                             // shared capsule radius
  Vec3 base_pose;                                       // position of joint 0

  /// Throws InvalidInput when any structural invariant is violated.
  void validate() const;
};

struct SphereObstacle {
  Vec3 center;
  double radius = 0.0;
};

struct BoxObstacle {
  Vec3 min_corner;
  Vec3 max_corner;
};

struct CapsuleObstacle {
  Vec3 a, b;
  double radius = 0.0;
};

using Obstacle = std::variant<SphereObstacle, BoxObstacle, CapsuleObstacle>;

void validate_obstacle(const Obstacle& obstacle);

struct Scene {
  std::string name;
  std::vector<Obstacle> obstacles;  // may be empty (trivial environment)
};

}  // namespace plantune

#endif  // PLANTUNE_ROBOT_HPP_
