// SPDX-License-Identifier: Apache-2.0
//
// diffcoh - diffuse-field coherence of directional sensors and arrays
// Copyright (C) 2026 the diffcoh authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef DIFFCOH_ERRORS_HPP
#define DIFFCOH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace diffcoh {

/// Thrown when a sensor response has zero angular energy. Coherence
/// denominators vanish for such sensors, so they are rejected instead of
/// propagating NaNs.
class degenerate_sensor_error : public std::runtime_error {
  public:
    explicit degenerate_sensor_error(const std::string &what) : std::runtime_error(what) {}
};

/// Thrown on malformed input files (schema violations, dimension mismatches).
class parse_error : public std::runtime_error {
  public:
    explicit parse_error(const std::string &what) : std::runtime_error(what) {}
};

} // namespace diffcoh

#endif
