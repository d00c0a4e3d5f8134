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

#include <cstdint>
#include <vector>

#include "bevloc/config.hpp"
#include "bevloc/geometry.hpp"

namespace bevloc {

enum class PointLabel : std::uint8_t { kGround, kNonGround, kOutOfGrid };

/// Value snapshot of one grid cell.
struct GridCell {
  float intensity_mean = 0.f;    // mean over ground points; defined iff weight > 0
  float intensity_weight = 0.f;  // accumulated ground point count
  float ground_height = 0.f;     // robust ground estimate [m]; defined iff point_count > 0
  float height_variance = 0.f;   // population variance of ground-point z [m^2]
  int point_count = 0;           // all points binned into the cell
  float ground_confidence = 0.f; // in [0, 1]
  float slope_min = -1.f;        // min of nonzero slope observations; < 0 = unset
  bool ground_candidate = false;
};

/// Sensor-centered square grid of per-cell ground statistics. Cells are fixed
/// in the world; recentering scrolls contents by whole cells only.
///
/// Raster convention used across the project: index u grows with world x,
/// index v grows against world y (north-up image layout). `origin()` is the
/// world position of the outer (north-west) corner of cell (0, 0).
class GroundGridMap {
public:
  explicit GroundGridMap(const SegmenterConfig& config);

  /// Scrolls the grid so the sensor lies in the center cell. Surviving cells
  /// keep their world position and contents; exposed cells reset to empty.
  void recenter(const Eigen::Vector2d& sensor_xy);

  struct IntegrationResult {
    std::vector<PointLabel> labels;  // one per input point, same order
    int ground = 0;
    int non_ground = 0;
    int out_of_grid = 0;
  };

  /// Bins a scan, classifies its points against the updated cell statistics,
  /// and folds ground returns into the per-cell accumulators. Cell statistics
  /// are updated before any point is labeled, so labels do not depend on
  /// point order.
  IntegrationResult integrate_scan(const PointCloud& cloud, const Pose3D& sensor_pose);

  /// Value copy of cell (u, v); throws std::out_of_range outside the grid.
  GridCell cell_stats(int u, int v) const;

  int dim() const { return dim_; }
  double cell_size() const { return config_.cell_size; }
  Eigen::Vector2d origin() const { return origin_; }
  const SegmenterConfig& config() const { return config_; }

  bool in_bounds(int u, int v) const {
    return u >= 0 && u < dim_ && v >= 0 && v < dim_;
  }
  std::size_t index(int u, int v) const {
    return static_cast<std::size_t>(v) * dim_ + u;
  }

  // Plane views for rendering. Heights are valid where point_count > 0;
  // intensity/variance where intensity weight (ground count) > 0.
  const std::vector<int>& point_count_plane() const { return point_count_; }
  const std::vector<float>& ground_height_plane() const { return z_min_; }
  const std::vector<float>& confidence_plane() const { return confidence_; }
  const std::vector<float>& intensity_weight_plane() const { return ground_count_; }
  const std::vector<double>& intensity_mean_plane() const { return intensity_mean_; }
  /// Population variance of ground-point z for every cell (0 where undefined).
  std::vector<float> ground_variance_plane() const;
  /// Persistent per-cell slope minimum, mutated by the BEV renderer.
  std::vector<float>& slope_min_plane() { return slope_min_; }
  const std::vector<float>& slope_min_plane() const { return slope_min_; }

private:
  void reset_cell(std::size_t i);
  bool neighborhood_consistent(int u, int v) const;

  SegmenterConfig config_;
  int dim_;
  Eigen::Vector2d origin_{0.0, 0.0};
  bool origin_valid_ = false;

  // SoA cell planes, index = v * dim + u.
  std::vector<int> point_count_;
  std::vector<float> z_min_;
  std::vector<float> z_max_;
  std::vector<float> ground_count_;
  std::vector<double> intensity_mean_;
  std::vector<double> z_mean_;
  std::vector<double> z_m2_;
  std::vector<float> confidence_;
  std::vector<std::uint8_t> candidate_;
  std::vector<float> slope_min_;

  // Scratch reused across integrate calls.
  std::vector<std::int32_t> cell_of_point_;
  std::vector<std::int32_t> touched_;
};

}  // namespace bevloc
