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

#ifndef DIFFCOH_IO_HPP
#define DIFFCOH_IO_HPP

#include <ostream>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "diffcoh/coherence.hpp"
#include "diffcoh/direction.hpp"

namespace diffcoh {

/// A parsed two-sensor configuration, resolved to placed spectra.
/// sound_speed_mps is negative when the file declares none.
struct PairSpec {
    SensorPlacement first;
    SensorPlacement second;
    double sound_speed_mps = -1.0;
};

/// One sensor object from the JSON schema, resolved to a placed spectrum.
/// Exactly one pattern variant ("analytic", "differential", "axisymmetric",
/// or "spectrum") must be present, plus optional "orientation"/"euler" and
/// "position". With `degrees`, angle fields are converted from degrees.
/// Malformed input raises parse_error naming the offending field.
SensorPlacement parse_sensor_spec(const std::string &json_text, bool degrees = false);

/// Pair file: {"sensors": [<sensor>, <sensor>]}.
PairSpec parse_pair_spec(const std::string &json_text, bool degrees = false);
PairSpec load_pair_spec(const std::string &path, bool degrees = false);

/// Calibration measurements of an array's directional responses:
/// per-frequency response matrices (grid point x sensor) on a common grid.
/// radius_m is negative when the file declares no enclosing radius.
struct MeasurementSet {
    std::vector<double> frequencies_hz;
    double sound_speed_mps;
    double radius_m;
    SphereGrid grid;
    std::vector<Eigen::MatrixXcd> responses;
};

MeasurementSet parse_measurement_set(const std::string &json_text, bool degrees = false);
MeasurementSet load_measurement_set(const std::string &path, bool degrees = false);

/// Fixed 12-significant-digit rendering used by all machine-readable
/// outputs, so identical runs emit identical bytes.
std::string format_number(double value);

/// Full-precision rendering (17 significant digits) for values meant to be
/// re-ingested without loss, e.g. dumped spectra.
std::string format_number_full(double value);

/// CSV sweep output: header plus one row per result, columns
/// frequency_hz, kd, re_gamma, im_gamma, abs_gamma.
void write_pair_csv(std::ostream &out, const std::vector<CoherenceResult> &results);

} // namespace diffcoh

#endif
