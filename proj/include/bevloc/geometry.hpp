// Copyright 2025 the bevloc authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>
#include <string>
#include <vector>

namespace bevloc {

/// Wraps an angle into [-pi, pi).
double wrap_angle(double angle);

/// Planar rigid pose, yaw kept normalized in [-pi, pi).
struct Pose2D {
  double x = 0.0;
  double y = 0.0;
  double yaw = 0.0;

  Pose2D() = default;
  Pose2D(double x_, double y_, double yaw_) : x(x_), y(y_), yaw(wrap_angle(yaw_)) {}

  Eigen::Vector2d translation() const { return {x, y}; }
  Eigen::Matrix2d rotation() const;
};

/// 3D pose with unit quaternion orientation (normalized on construction).
struct Pose3D {
  Eigen::Vector3d position = Eigen::Vector3d::Zero();
  Eigen::Quaterniond orientation = Eigen::Quaterniond::Identity();

  Pose3D() = default;
  Pose3D(const Eigen::Vector3d& p, const Eigen::Quaterniond& q);

  /// Heading about +z extracted from the quaternion.
  double yaw() const;
  /// Planar shadow of this pose (x, y, yaw).
  Pose2D planar() const;
};

/// Single LiDAR return in the sensor frame.
struct LidarPoint {
  float x = 0.f;
  float y = 0.f;
  float z = 0.f;
  float intensity = 0.f;
};

/// Timestamped scan in the sensor frame at capture time.
struct PointCloud {
  std::vector<LidarPoint> points;
  double stamp = 0.0;
  std::string frame_id = "lidar";
};

struct TrajectoryNode {
  double stamp = 0.0;
  Pose3D pose;
};

/// Stamped pose sequence, stamps strictly increasing.
struct Trajectory {
  std::vector<TrajectoryNode> nodes;

  bool empty() const { return nodes.empty(); }
  std::size_t size() const { return nodes.size(); }

  /// Index of the node whose stamp is nearest to `stamp`.
  std::size_t nearest(double stamp) const;
};

Eigen::Vector2d se2_apply(const Pose2D& pose, const Eigen::Vector2d& point);
std::vector<Eigen::Vector2d> se2_apply(const Pose2D& pose,
                                       const std::vector<Eigen::Vector2d>& points);

/// Rigid composition a * b (apply b first, then a).
Pose2D se2_compose(const Pose2D& a, const Pose2D& b);
Pose2D se2_inverse(const Pose2D& pose);

/// Quaternion from a pure yaw rotation.
Eigen::Quaterniond yaw_to_quaternion(double yaw);

}  // namespace bevloc
