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

/// Reads a raw binary cloud: consecutive little-endian float32 quadruples
/// (x, y, z, intensity). File size must be a multiple of 16 bytes and all
/// values finite; intensity must be >= 0.
PointCloud load_pointcloud_bin(const std::string& path);

/// Writes the cloud in the same quadruple layout.
void save_pointcloud_bin(const std::string& path, const PointCloud& cloud);

}  // namespace bevloc
