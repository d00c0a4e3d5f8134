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

#include "bevloc/config.hpp"

#include <yaml-cpp/yaml.h>

#include <fstream>
#include <iostream>
#include <set>

#include "bevloc/errors.hpp"

namespace bevloc {

namespace {

const std::set<std::string> kConsumedSegmenterKeys = {
    "cell_size", "grid_dim", "h_g", "h_o", "o_minc", "v_np"};

template <typename T>
void read_if(const YAML::Node& node, const char* key, T& value) {
  if (node && node[key]) {
    value = node[key].as<T>();
  }
}

void load_segmenter(const YAML::Node& node, SegmenterConfig& cfg) {
  if (!node) return;
  read_if(node, "cell_size", cfg.cell_size);
  read_if(node, "grid_dim", cfg.grid_dim);
  read_if(node, "h_g", cfg.h_g);
  read_if(node, "h_o", cfg.h_o);
  read_if(node, "o_minc", cfg.o_minc);
  read_if(node, "v_np", cfg.v_np);
  for (const auto& kv : node) {
    const std::string key = kv.first.as<std::string>();
    if (kConsumedSegmenterKeys.count(key)) continue;
    cfg.legacy[key] = kv.second.as<double>();
    cfg.ignored_keys.push_back(key);
  }
  if (cfg.cell_size <= 0.0 || cfg.grid_dim < 3 || cfg.h_g <= 0.0 || cfg.h_o <= 0.0 ||
      cfg.o_minc <= 0.0 || cfg.v_np < 1) {
    throw ConfigError("segmenter config values must be positive");
  }
}

}  // namespace

const SensorProfile& RunConfig::profile() const {
  const auto it = profiles.find(sensor);
  if (it == profiles.end()) {
    throw ConfigError("unknown sensor profile: " + sensor);
  }
  return it->second;
}

double RunConfig::correction_factor() const {
  return features.extractor == "external" ? filter.f_i_external : filter.f_i_sift;
}

RunConfig default_run_config() {
  RunConfig cfg;
  cfg.profiles = {
      {"HDL-64E", {2.670, 0.09, 0.35}},
      {"OS1-64", {1.000, 0.10, 0.35}},
      {"OS2-128", {0.005, 0.10, 0.35}},
      {"Aeva", {0.013, 0.10, 0.35}},
      {"Avia", {0.020, 0.09, 0.35}},
  };
  return cfg;
}

RunConfig load_run_config(const std::string& path) {
  RunConfig cfg = default_run_config();
  YAML::Node root;
  try {
    root = YAML::LoadFile(path);
  } catch (const YAML::Exception& e) {
    throw ConfigError("cannot parse config " + path + ": " + e.what());
  }

  read_if(root, "sensor", cfg.sensor);
  read_if(root, "seed", cfg.seed);

  load_segmenter(root["segmenter"], cfg.segmenter);
  if (!cfg.segmenter.ignored_keys.empty()) {
    std::cerr << "config: ignoring legacy segmenter keys:";
    for (const auto& k : cfg.segmenter.ignored_keys) std::cerr << ' ' << k;
    std::cerr << '\n';
  }

  if (const auto bev = root["bev"]) {
    read_if(bev, "slope_display_scale", cfg.bev.slope_display_scale);
  }
  if (const auto f = root["features"]) {
    read_if(f, "extractor", cfg.features.extractor);
    read_if(f, "max_keypoints", cfg.features.max_keypoints);
    read_if(f, "octaves", cfg.features.octaves);
    read_if(f, "scales_per_octave", cfg.features.scales_per_octave);
    read_if(f, "contrast_threshold", cfg.features.contrast_threshold);
    read_if(f, "edge_threshold", cfg.features.edge_threshold);
    read_if(f, "max_invalid_window_fraction", cfg.features.max_invalid_window_fraction);
    read_if(f, "external_dir", cfg.features.external_dir);
    if (cfg.features.extractor != "sift" && cfg.features.extractor != "external") {
      throw ConfigError("features.extractor must be 'sift' or 'external'");
    }
  }
  if (const auto m = root["matcher"]) {
    read_if(m, "r_min", cfg.matcher.r_min);
    read_if(m, "r_max", cfg.matcher.r_max);
    read_if(m, "r_floor", cfg.matcher.r_floor);
    read_if(m, "history_capacity", cfg.matcher.history_capacity);
    read_if(m, "high_watermark", cfg.matcher.high_watermark);
    read_if(m, "low_watermark", cfg.matcher.low_watermark);
    read_if(m, "hysteresis_scale", cfg.matcher.hysteresis_scale);
    read_if(m, "backtrack_leaves", cfg.matcher.backtrack_leaves);
    read_if(m, "max_feature_distance", cfg.matcher.max_feature_distance);
    read_if(m, "feature_distance_min", cfg.matcher.feature_distance_min);
    read_if(m, "feature_distance_max", cfg.matcher.feature_distance_max);
    read_if(m, "keypoints_min", cfg.matcher.keypoints_min);
    read_if(m, "keypoints_max", cfg.matcher.keypoints_max);
    read_if(m, "ratio_test", cfg.matcher.ratio_test);
    read_if(m, "ratio", cfg.matcher.ratio);
  }
  if (const auto r = root["registrar"]) {
    read_if(r, "noise_bound", cfg.registration.noise_bound);
    read_if(r, "kappa", cfg.registration.kappa);
    read_if(r, "c_bar", cfg.registration.c_bar);
    read_if(r, "max_gnc_iterations", cfg.registration.max_gnc_iterations);
    read_if(r, "min_inliers", cfg.registration.min_inliers);
    read_if(r, "ransac_iterations", cfg.registration.ransac_iterations);
    std::string estimator = "gnc";
    read_if(r, "estimator", estimator);
    if (estimator == "gnc") {
      cfg.registration.estimator = EstimatorKind::kGnc;
    } else if (estimator == "ransac") {
      cfg.registration.estimator = EstimatorKind::kRansac;
    } else {
      throw ConfigError("registrar.estimator must be 'gnc' or 'ransac'");
    }
    if (cfg.registration.noise_bound <= 0.0 || cfg.registration.kappa <= 1.0) {
      throw ConfigError("registrar requires noise_bound > 0 and kappa > 1");
    }
  }
  if (const auto f = root["filter"]) {
    read_if(f, "gamma", cfg.filter.gamma);
    read_if(f, "f_i_sift", cfg.filter.f_i_sift);
    read_if(f, "f_i_external", cfg.filter.f_i_external);
    if (cfg.filter.gamma <= 0.0 || cfg.filter.gamma > 1.0) {
      throw ConfigError("filter.gamma must be in (0, 1]");
    }
    if (cfg.filter.f_i_sift <= 0.0 || cfg.filter.f_i_external <= 0.0) {
      throw ConfigError("filter correction factors must be positive");
    }
  }
  if (const auto m = root["map"]) {
    read_if(m, "resolution", cfg.map.resolution);
    read_if(m, "tile_cache", cfg.map.tile_cache);
  }
  if (const auto p = root["profiles"]) {
    for (const auto& kv : p) {
      SensorProfile profile;
      read_if(kv.second, "I_c", profile.intensity_factor);
      read_if(kv.second, "S_c", profile.slope_factor);
      read_if(kv.second, "V_c", profile.variance_factor);
      if (profile.intensity_factor <= 0.0 || profile.slope_factor <= 0.0 ||
          profile.variance_factor <= 0.0) {
        throw ConfigError("sensor profile factors must be > 0");
      }
      cfg.profiles[kv.first.as<std::string>()] = profile;
    }
  }
  cfg.profile();  // validates the sensor name
  return cfg;
}

void save_run_config(const std::string& path, const RunConfig& cfg) {
  YAML::Emitter out;
  out << YAML::BeginMap;
  out << YAML::Key << "sensor" << YAML::Value << cfg.sensor;
  out << YAML::Key << "seed" << YAML::Value << cfg.seed;
  out << YAML::Key << "segmenter" << YAML::Value << YAML::BeginMap;
  out << YAML::Key << "cell_size" << YAML::Value << cfg.segmenter.cell_size;
  out << YAML::Key << "grid_dim" << YAML::Value << cfg.segmenter.grid_dim;
  out << YAML::Key << "h_g" << YAML::Value << cfg.segmenter.h_g;
  out << YAML::Key << "h_o" << YAML::Value << cfg.segmenter.h_o;
  out << YAML::Key << "o_minc" << YAML::Value << cfg.segmenter.o_minc;
  out << YAML::Key << "v_np" << YAML::Value << cfg.segmenter.v_np;
  out << YAML::EndMap;
  out << YAML::Key << "features" << YAML::Value << YAML::BeginMap;
  out << YAML::Key << "extractor" << YAML::Value << cfg.features.extractor;
  out << YAML::Key << "max_keypoints" << YAML::Value << cfg.features.max_keypoints;
  out << YAML::EndMap;
  out << YAML::Key << "profiles" << YAML::Value << YAML::BeginMap;
  for (const auto& [name, p] : cfg.profiles) {
    out << YAML::Key << name << YAML::Value << YAML::BeginMap;
    out << YAML::Key << "I_c" << YAML::Value << p.intensity_factor;
    out << YAML::Key << "S_c" << YAML::Value << p.slope_factor;
    out << YAML::Key << "V_c" << YAML::Value << p.variance_factor;
    out << YAML::EndMap;
  }
  out << YAML::EndMap;
  out << YAML::EndMap;

  std::ofstream file(path, std::ios::trunc);
  if (!file) {
    throw Error("cannot open file for writing: " + path);
  }
  file << out.c_str() << '\n';
}

}  // namespace bevloc
