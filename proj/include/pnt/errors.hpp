// Copyright 2026 The pntomo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PNT_ERRORS_HPP
#define PNT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pnt {

/// A structurally malformed input file (CSV grid, density-matrix JSON).
struct FileFormatError : std::runtime_error {
  explicit FileFormatError(const std::string& what) : std::runtime_error(what) {}
};

/// An invalid run configuration (node counts, cutoffs, ordering parameter).
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// A reconstruction or star-product sum that failed its settling check.
struct DivergenceError : std::runtime_error {
  explicit DivergenceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace pnt

#endif  // PNT_ERRORS_HPP
