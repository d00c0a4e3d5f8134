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

#include <string>

#include "bevloc/geometry.hpp"

namespace bevloc {

enum class TrajectoryFormat {
  kTum,       // "stamp tx ty tz qx qy qz qw" per line
  kKittiMat,  // 12 floats of a 3x4 row-major pose matrix, stamps 0,1,2,...
};

TrajectoryFormat trajectory_format_from_string(const std::string& name);

/// Parses a trajectory file. Stamps must be strictly increasing; quaternions
/// with |norm - 1| < 1e-3 are renormalized, anything worse is rejected.
Trajectory load_trajectory(const std::string& path, TrajectoryFormat format);

void save_trajectory(const std::string& path, const Trajectory& trajectory,
                     TrajectoryFormat format);

}  // namespace bevloc
