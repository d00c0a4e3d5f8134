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

#include "bevloc/pointcloud_io.hpp"

#include <cmath>
#include <cstdint>
#include <fstream>
#include <vector>

#include "bevloc/errors.hpp"

namespace bevloc {

PointCloud load_pointcloud_bin(const std::string& path) {
  std::ifstream in(path, std::ios::binary | std::ios::ate);
  if (!in) {
    throw MalformedFileError("cannot open point cloud file: " + path);
  }
  const std::streamoff size = in.tellg();
  if (size % 16 != 0) {
    throw MalformedFileError("point cloud file size " + std::to_string(size) +
                             " is not a multiple of 16 bytes: " + path);
  }
  in.seekg(0);

  PointCloud cloud;
  const std::size_t n = static_cast<std::size_t>(size / 16);
  cloud.points.resize(n);
  if (n > 0) {
    in.read(reinterpret_cast<char*>(cloud.points.data()),
            static_cast<std::streamsize>(n * sizeof(LidarPoint)));
    if (!in) {
      throw MalformedFileError("short read on point cloud file: " + path);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    const LidarPoint& p = cloud.points[i];
    if (!std::isfinite(p.x) || !std::isfinite(p.y) || !std::isfinite(p.z) ||
        !std::isfinite(p.intensity) || p.intensity < 0.f) {
      throw MalformedFileError("non-finite or negative-intensity point at index " +
                               std::to_string(i) + " in " + path);
    }
  }
  return cloud;
}

void save_pointcloud_bin(const std::string& path, const PointCloud& cloud) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw Error("cannot open file for writing: " + path);
  }
  static_assert(sizeof(LidarPoint) == 16, "LidarPoint must pack to 16 bytes");
  out.write(reinterpret_cast<const char*>(cloud.points.data()),
            static_cast<std::streamsize>(cloud.points.size() * sizeof(LidarPoint)));
  if (!out) {
    throw Error("short write on point cloud file: " + path);
  }
}

}  // namespace bevloc
