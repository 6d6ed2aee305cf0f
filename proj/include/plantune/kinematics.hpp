#ifndef PLANTUNE_KINEMATICS_HPP_
#define PLANTUNE_KINEMATICS_HPP_

#include <vector>

#include "plantune/robot.hpp"

namespace plantune {

/// Workspace segments of each link, in order from the base. Segment i starts
/// where segment i-1 ends.
std::vector<Segment> forward_kinematics(const RobotModel& model, const JointConfig& q);

/// True iff any link capsule (segment inflated by link_radius) intersects any
/// obstacle. An empty scene never collides.
bool config_collides(const RobotModel& model, const Scene& scene, const JointConfig& q);

/// Discretized sweep test: checks interpolated configurations along the
/// straight C-space segment q_a -> q_b at spacing <= resolution, endpoints
/// included.
bool motion_collides(const RobotModel& model, const Scene& scene, const JointConfig& q_a,
                     const JointConfig& q_b, double resolution);

/// Euclidean norm of the joint-angle difference (radians).
double config_distance(const JointConfig& q_a, const JointConfig& q_b);

/// True iff every angle lies inside the model's joint limits.
bool within_limits(const RobotModel& model, const JointConfig& q);

}  // namespace plantune

#endif  // PLANTUNE_KINEMATICS_HPP_
