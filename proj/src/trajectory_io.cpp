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

#include "bevloc/trajectory_io.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>

#include "bevloc/errors.hpp"

namespace bevloc {

namespace {

constexpr double kQuatNormTolerance = 1e-3;

bool is_comment_or_blank(const std::string& line) {
  for (char c : line) {
    if (c == '#') return true;
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

Eigen::Quaterniond checked_quaternion(double qx, double qy, double qz, double qw,
                                      int line_no) {
  Eigen::Quaterniond q(qw, qx, qy, qz);
  const double norm = q.norm();
  if (std::abs(norm - 1.0) >= kQuatNormTolerance) {
    throw MalformedFileError("quaternion norm " + std::to_string(norm) +
                             " out of tolerance at line " + std::to_string(line_no));
  }
  q.normalize();
  return q;
}

void check_monotonic(const Trajectory& t, double stamp, int line_no) {
  if (!t.nodes.empty() && stamp <= t.nodes.back().stamp) {
    throw MalformedFileError("non-increasing stamp at line " + std::to_string(line_no) +
                             ": " + std::to_string(stamp) + " after " +
                             std::to_string(t.nodes.back().stamp));
  }
}

}  // namespace

TrajectoryFormat trajectory_format_from_string(const std::string& name) {
  if (name == "tum") return TrajectoryFormat::kTum;
  if (name == "kitti_mat") return TrajectoryFormat::kKittiMat;
  throw ConfigError("unknown trajectory format: " + name);
}

Trajectory load_trajectory(const std::string& path, TrajectoryFormat format) {
  std::ifstream in(path);
  if (!in) {
    throw MalformedFileError("cannot open trajectory file: " + path);
  }

  Trajectory trajectory;
  std::string line;
  int line_no = 0;
  int kitti_index = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_comment_or_blank(line)) continue;
    std::istringstream ss(line);
    if (format == TrajectoryFormat::kTum) {
      double stamp, tx, ty, tz, qx, qy, qz, qw;
      if (!(ss >> stamp >> tx >> ty >> tz >> qx >> qy >> qz >> qw)) {
        throw MalformedFileError("unparseable TUM line " + std::to_string(line_no) +
                                 " in " + path);
      }
      check_monotonic(trajectory, stamp, line_no);
      trajectory.nodes.push_back(
          {stamp, Pose3D({tx, ty, tz}, checked_quaternion(qx, qy, qz, qw, line_no))});
    } else {
      double m[12];
      for (int i = 0; i < 12; ++i) {
        if (!(ss >> m[i])) {
          throw MalformedFileError("unparseable pose-matrix line " +
                                   std::to_string(line_no) + " in " + path);
        }
      }
      Eigen::Matrix3d r;
      r << m[0], m[1], m[2], m[4], m[5], m[6], m[8], m[9], m[10];
      Eigen::Quaterniond q(r);
      if (std::abs(q.norm() - 1.0) >= kQuatNormTolerance) {
        throw MalformedFileError("non-orthonormal rotation at line " +
                                 std::to_string(line_no));
      }
      q.normalize();
      trajectory.nodes.push_back(
          {static_cast<double>(kitti_index), Pose3D({m[3], m[7], m[11]}, q)});
      ++kitti_index;
    }
  }
  return trajectory;
}

void save_trajectory(const std::string& path, const Trajectory& trajectory,
                     TrajectoryFormat format) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) {
    throw Error("cannot open file for writing: " + path);
  }
  out << std::setprecision(std::numeric_limits<double>::max_digits10);
  for (const auto& node : trajectory.nodes) {
    if (format == TrajectoryFormat::kTum) {
      const auto& p = node.pose.position;
      const auto& q = node.pose.orientation;
      out << node.stamp << ' ' << p.x() << ' ' << p.y() << ' ' << p.z() << ' '
          << q.x() << ' ' << q.y() << ' ' << q.z() << ' ' << q.w() << '\n';
    } else {
      const Eigen::Matrix3d r = node.pose.orientation.toRotationMatrix();
      const auto& p = node.pose.position;
      out << r(0, 0) << ' ' << r(0, 1) << ' ' << r(0, 2) << ' ' << p.x() << ' '
          << r(1, 0) << ' ' << r(1, 1) << ' ' << r(1, 2) << ' ' << p.y() << ' '
          << r(2, 0) << ' ' << r(2, 1) << ' ' << r(2, 2) << ' ' << p.z() << '\n';
    }
  }
}

}  // namespace bevloc
