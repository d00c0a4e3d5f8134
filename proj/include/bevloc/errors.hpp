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

#include <stdexcept>
#include <string>

namespace bevloc {

/// Base class for all bevloc error conditions.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// File exists but does not conform to its declared format.
class MalformedFileError : public Error {
public:
  using Error::Error;
};

/// Feature sidecar declares a descriptor layout we cannot consume.
class UnsupportedDescriptorError : public Error {
public:
  using Error::Error;
};

/// Raster file uses a compression scheme outside the supported subset.
class UnsupportedCompressionError : public Error {
public:
  using Error::Error;
};

/// Raster file lacks the georeferencing tags required for localization.
class NotGeoreferencedError : public Error {
public:
  using Error::Error;
};

/// Two rasters or grids that must share a world anchor do not.
class AlignmentError : public Error {
public:
  using Error::Error;
};

/// Operation needs more input data than was provided.
class InsufficientDataError : public Error {
public:
  using Error::Error;
};

/// Configuration file or value rejected.
class ConfigError : public Error {
public:
  using Error::Error;
};

}  // namespace bevloc
