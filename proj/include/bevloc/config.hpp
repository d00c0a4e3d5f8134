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
#include <map>
#include <string>
#include <vector>

namespace bevloc {

/// Ground segmenter parameters. The key names follow the upstream grid
/// mapping convention so existing tuning files stay loadable; keys the
/// simplified segmenter does not consume are accepted and reported via
/// `ignored_keys`.
struct SegmenterConfig {
  double cell_size = 0.33;  // [m] world-aligned cell edge
  int grid_dim = 301;       // cells per side of the rolling grid

  // Consumed keys.
  double h_g = 0.30;     // [m] max in-cell z spread for ground candidacy
  double h_o = 0.10;     // [m] band above cell ground height labeled ground
  double o_minc = 1.25;  // [m] max deviation from 8-neighborhood median ground
  int v_np = 10;         // [count] 2*v_np points normalize full confidence

  // Accepted-but-ignored legacy keys (kept for config compatibility).
  std::map<std::string, double> legacy;
  std::vector<std::string> ignored_keys;
};

/// Per-sensor BEV normalization factors.
struct SensorProfile {
  double intensity_factor = 1.0;  // I_c
  double slope_factor = 0.10;     // S_c
  double variance_factor = 0.35;  // V_c
};

struct FeatureConfig {
  std::string extractor = "sift";  // "sift" or "external"
  int max_keypoints = 1000;
  int octaves = 4;  // advisory; the detector derives octave count from image size
  int scales_per_octave = 3;
  double contrast_threshold = 0.01;  // on [0,1] images; BEV textures are faint
  double edge_threshold = 10.0;
  double max_invalid_window_fraction = 0.5;
  std::string external_dir;  // sidecar directory for the external extractor
};

struct MatcherConfig {
  double r_min = 1.0;    // [m] search radius clamp
  double r_max = 20.0;   // [m]
  double r_floor = 0.5;  // [m] additive floor in the radius policy
  int history_capacity = 10;
  int high_watermark = 3000;
  int low_watermark = 300;
  double hysteresis_scale = 0.9;
  int backtrack_leaves = 64;  // kd-tree leaf visits per query
  double max_feature_distance = 250.0;
  double feature_distance_min = 100.0;
  double feature_distance_max = 500.0;
  int keypoints_min = 200;
  int keypoints_max = 2000;
  bool ratio_test = false;
  double ratio = 0.8;
};

enum class EstimatorKind { kGnc, kRansac };

struct RegistrationParams {
  double noise_bound = 0.66;  // [m] 2x map resolution
  double kappa = 1.39;        // GNC surrogate annealing factor
  double c_bar = 0.5;         // truncation scaling
  int max_gnc_iterations = 100;
  int min_inliers = 5;
  std::uint64_t seed = 0;
  EstimatorKind estimator = EstimatorKind::kGnc;
  int ransac_iterations = 500;
};

struct FilterConfig {
  double gamma = 0.3;        // dampening factor
  double f_i_sift = 25.0;    // correction factor, built-in extractor profile
  double f_i_external = 15.0;
};

struct MapConfig {
  double resolution = 0.33;  // [m/px]
  int tile_cache = 64;
};

struct BevConfig {
  double slope_display_scale = 10.0;  // spreads S_c-scaled slopes over 8 bits
};

/// Full pipeline configuration; file values override the built-in defaults,
/// command-line flags override the file.
struct RunConfig {
  std::string sensor = "OS1-64";
  std::uint64_t seed = 7;
  SegmenterConfig segmenter;
  BevConfig bev;
  FeatureConfig features;
  MatcherConfig matcher;
  RegistrationParams registration;
  FilterConfig filter;
  MapConfig map;
  std::map<std::string, SensorProfile> profiles;

  const SensorProfile& profile() const;
  /// Correction factor for the active extractor.
  double correction_factor() const;
};

/// Built-in defaults, including the stock sensor profile table.
RunConfig default_run_config();

/// Loads a YAML config; missing sections keep their defaults.
RunConfig load_run_config(const std::string& path);

void save_run_config(const std::string& path, const RunConfig& config);

}  // namespace bevloc
