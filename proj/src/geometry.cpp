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

#include "bevloc/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace bevloc {

double wrap_angle(double angle) {
  double wrapped = std::fmod(angle + M_PI, 2.0 * M_PI);
  if (wrapped < 0.0) {
    wrapped += 2.0 * M_PI;
  }
  return wrapped - M_PI;
}

Eigen::Matrix2d Pose2D::rotation() const {
  const double c = std::cos(yaw);
  const double s = std::sin(yaw);
  Eigen::Matrix2d r;
  r << c, -s, s, c;
  return r;
}

Pose3D::Pose3D(const Eigen::Vector3d& p, const Eigen::Quaterniond& q)
    : position(p), orientation(q.normalized()) {}

double Pose3D::yaw() const {
  const Eigen::Matrix3d r = orientation.toRotationMatrix();
  return std::atan2(r(1, 0), r(0, 0));
}

Pose2D Pose3D::planar() const { return {position.x(), position.y(), yaw()}; }

std::size_t Trajectory::nearest(double stamp) const {
  const auto it = std::lower_bound(
      nodes.begin(), nodes.end(), stamp,
      [](const TrajectoryNode& n, double s) { return n.stamp < s; });
  if (it == nodes.begin()) return 0;
  if (it == nodes.end()) return nodes.size() - 1;
  const std::size_t hi = static_cast<std::size_t>(it - nodes.begin());
  const std::size_t lo = hi - 1;
  return (stamp - nodes[lo].stamp) <= (nodes[hi].stamp - stamp) ? lo : hi;
}

Eigen::Vector2d se2_apply(const Pose2D& pose, const Eigen::Vector2d& point) {
  return pose.rotation() * point + pose.translation();
}

std::vector<Eigen::Vector2d> se2_apply(const Pose2D& pose,
                                       const std::vector<Eigen::Vector2d>& points) {
  std::vector<Eigen::Vector2d> out;
  out.reserve(points.size());
  const Eigen::Matrix2d r = pose.rotation();
  const Eigen::Vector2d t = pose.translation();
  for (const auto& p : points) {
    out.emplace_back(r * p + t);
  }
  return out;
}

Pose2D se2_compose(const Pose2D& a, const Pose2D& b) {
  const Eigen::Vector2d t = a.rotation() * b.translation() + a.translation();
  return {t.x(), t.y(), wrap_angle(a.yaw + b.yaw)};
}

Pose2D se2_inverse(const Pose2D& pose) {
  const Eigen::Vector2d t = -(pose.rotation().transpose() * pose.translation());
  return {t.x(), t.y(), wrap_angle(-pose.yaw)};
}

Eigen::Quaterniond yaw_to_quaternion(double yaw) {
  return Eigen::Quaterniond(Eigen::AngleAxisd(yaw, Eigen::Vector3d::UnitZ()));
}

}  // namespace bevloc
