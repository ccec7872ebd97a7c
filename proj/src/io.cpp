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

#include "diffcoh/io.hpp"

#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "diffcoh/differential.hpp"
#include "diffcoh/errors.hpp"
#include "diffcoh/sh_core.hpp"

namespace diffcoh {

namespace {

using nlohmann::json;

double to_radians(double angle, bool degrees) { return degrees ? angle * M_PI / 180.0 : angle; }

const json &require_field(const json &j, const char *name, const std::string &path) {
    auto it = j.find(name);
    if (it == j.end())
        throw parse_error(path + ": missing required field \"" + name + "\"");
    return *it;
}

double as_number(const json &j, const std::string &path) {
    if (!j.is_number())
        throw parse_error(path + ": expected a number");
    return j.get<double>();
}

std::complex<double> as_complex(const json &j, const std::string &path) {
    if (j.is_number())
        return {j.get<double>(), 0.0};
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
        return {j[0].get<double>(), j[1].get<double>()};
    throw parse_error(path + ": expected a number or a [re, im] pair");
}

Eigen::VectorXd as_real_vector(const json &j, const std::string &path) {
    if (!j.is_array() || j.empty())
        throw parse_error(path + ": expected a non-empty array of numbers");
    Eigen::VectorXd v(static_cast<Eigen::Index>(j.size()));
    for (std::size_t i = 0; i < j.size(); ++i)
        v(static_cast<Eigen::Index>(i)) = as_number(j[i], path + "[" + std::to_string(i) + "]");
    return v;
}

json parse_text(const std::string &text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded())
        throw parse_error("invalid JSON input");
    return j;
}

Direction parse_direction_pair(const json &j, const std::string &path, bool degrees) {
    if (!j.is_array() || j.size() != 2)
        throw parse_error(path + ": expected a [theta, phi] pair");
    const double theta = to_radians(as_number(j[0], path + "[0]"), degrees);
    const double phi = to_radians(as_number(j[1], path + "[1]"), degrees);
    if (theta < 0.0 || theta > M_PI)
        throw parse_error(path + ": theta must lie in [0, pi] radians");
    return make_direction(theta, phi);
}

SensorPlacement parse_sensor_json(const json &j, const std::string &path, bool degrees) {
    if (!j.is_object())
        throw parse_error(path + ": expected a sensor object");

    const bool has_analytic = j.contains("analytic");
    const bool has_differential = j.contains("differential");
    const bool has_axisymmetric = j.contains("axisymmetric");
    const bool has_spectrum = j.contains("spectrum");
    const int variants = int(has_analytic) + int(has_differential) + int(has_axisymmetric) + int(has_spectrum);
    if (variants != 1)
        throw parse_error(path + ": exactly one of \"analytic\", \"differential\", \"axisymmetric\", "
                                 "\"spectrum\" must be present");

    const bool has_orientation = j.contains("orientation");
    const bool has_euler = j.contains("euler");
    if (has_orientation && has_euler)
        throw parse_error(path + ": \"orientation\" and \"euler\" are mutually exclusive");

    EulerAngles euler{0.0, 0.0, 0.0};
    if (has_euler) {
        const json &e = j.at("euler");
        const std::string epath = path + ".euler";
        euler.alpha = to_radians(as_number(require_field(e, "alpha", epath), epath + ".alpha"), degrees);
        euler.beta = to_radians(as_number(require_field(e, "beta", epath), epath + ".beta"), degrees);
        euler.gamma = to_radians(as_number(require_field(e, "gamma", epath), epath + ".gamma"), degrees);
    }
    Direction aim{0.0, 0.0};
    if (has_orientation) {
        const json &o = j.at("orientation");
        const std::string opath = path + ".orientation";
        const double theta = to_radians(as_number(require_field(o, "theta", opath), opath + ".theta"), degrees);
        const double phi = to_radians(as_number(require_field(o, "phi", opath), opath + ".phi"), degrees);
        if (theta < 0.0 || theta > M_PI)
            throw parse_error(opath + ".theta: must lie in [0, pi] radians");
        aim = make_direction(theta, phi);
    }

    SphericalSpectrum spectrum(0);
    if (has_spectrum) {
        const json &s = j.at("spectrum");
        const std::string spath = path + ".spectrum";
        const double order_raw = as_number(require_field(s, "order", spath), spath + ".order");
        const int order = static_cast<int>(order_raw);
        if (order < 0 || order != order_raw)
            throw parse_error(spath + ".order: must be a nonnegative integer");
        const json &coeffs = require_field(s, "coeffs", spath);
        if (!coeffs.is_array() || static_cast<int>(coeffs.size()) != sh_count(order))
            throw parse_error(spath + ".coeffs: expected (order+1)^2 = " + std::to_string(sh_count(order)) +
                              " entries");
        Eigen::VectorXcd c(sh_count(order));
        for (std::size_t i = 0; i < coeffs.size(); ++i)
            c(static_cast<Eigen::Index>(i)) = as_complex(coeffs[i], spath + ".coeffs[" + std::to_string(i) + "]");
        spectrum = SphericalSpectrum(order, std::move(c));
        if (has_orientation)
            spectrum = rotate_spectrum(spectrum, EulerAngles{aim.phi, aim.theta, 0.0});
        else if (has_euler)
            spectrum = rotate_spectrum(spectrum, euler);
    } else {
        AxisymmetricSpectrum axi(0);
        if (has_analytic) {
            const json &a = j.at("analytic");
            const std::string apath = path + ".analytic";
            if (!a.is_object())
                throw parse_error(apath + ": expected an object with a \"kind\" field");
            const json &kindj = require_field(a, "kind", apath);
            if (!kindj.is_string())
                throw parse_error(apath + ".kind: expected a pattern name string");
            const std::string kind = kindj.get<std::string>();
            Eigen::VectorXd w;
            if (kind == "omni") {
                w = Eigen::VectorXd::Constant(1, 1.0);
            } else if (kind == "dipole") {
                w = Eigen::VectorXd::Zero(2);
                w(1) = 1.0;
            } else if (kind == "cardioid") {
                w = Eigen::VectorXd::Constant(2, 0.5);
            } else {
                throw parse_error(apath + ".kind: unknown pattern \"" + kind +
                                  "\" (use omni, dipole, cardioid, or the differential variant)");
            }
            axi = diff_weights_to_spectrum(w);
        } else if (has_differential) {
            const json &d = j.at("differential");
            const std::string dpath = path + ".differential";
            axi = diff_weights_to_spectrum(as_real_vector(require_field(d, "weights", dpath), dpath + ".weights"));
        } else {
            const json &a = j.at("axisymmetric");
            const std::string apath = path + ".axisymmetric";
            const json &coeffs = require_field(a, "coeffs", apath);
            if (!coeffs.is_array() || coeffs.empty())
                throw parse_error(apath + ".coeffs: expected a non-empty array");
            Eigen::VectorXcd c(static_cast<Eigen::Index>(coeffs.size()));
            for (std::size_t i = 0; i < coeffs.size(); ++i)
                c(static_cast<Eigen::Index>(i)) = as_complex(coeffs[i], apath + ".coeffs[" + std::to_string(i) + "]");
            axi = AxisymmetricSpectrum(static_cast<int>(coeffs.size()) - 1, std::move(c));
        }
        spectrum = steer_axisymmetric(axi, aim);
        if (has_euler)
            spectrum = rotate_spectrum(spectrum, euler);
    }

    SensorPlacement out{std::move(spectrum), Eigen::Vector3d::Zero()};
    if (j.contains("position")) {
        const json &p = j.at("position");
        const std::string ppath = path + ".position";
        out.position.x() = as_number(require_field(p, "x", ppath), ppath + ".x");
        out.position.y() = as_number(require_field(p, "y", ppath), ppath + ".y");
        out.position.z() = as_number(require_field(p, "z", ppath), ppath + ".z");
    }
    return out;
}

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw parse_error("cannot open file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

} // namespace

SensorPlacement parse_sensor_spec(const std::string &json_text, bool degrees) {
    return parse_sensor_json(parse_text(json_text), "sensor", degrees);
}

PairSpec parse_pair_spec(const std::string &json_text, bool degrees) {
    const json j = parse_text(json_text);
    const json &sensors = require_field(j, "sensors", "pair");
    if (!sensors.is_array() || sensors.size() != 2)
        throw parse_error("pair.sensors: expected exactly two sensor objects");
    double sound_speed = -1.0;
    if (j.contains("sound_speed")) {
        sound_speed = as_number(j.at("sound_speed"), "pair.sound_speed");
        if (sound_speed <= 0.0)
            throw parse_error("pair.sound_speed: must be positive");
    }
    return PairSpec{parse_sensor_json(sensors[0], "pair.sensors[0]", degrees),
                    parse_sensor_json(sensors[1], "pair.sensors[1]", degrees), sound_speed};
}

PairSpec load_pair_spec(const std::string &path, bool degrees) { return parse_pair_spec(read_file(path), degrees); }

MeasurementSet parse_measurement_set(const std::string &json_text, bool degrees) {
    const json j = parse_text(json_text);

    const json &freqs = require_field(j, "frequencies", "measurement");
    if (!freqs.is_array() || freqs.empty())
        throw parse_error("measurement.frequencies: expected a non-empty array");
    std::vector<double> frequencies;
    for (std::size_t i = 0; i < freqs.size(); ++i) {
        const double f = as_number(freqs[i], "measurement.frequencies[" + std::to_string(i) + "]");
        if (f <= 0.0)
            throw parse_error("measurement.frequencies[" + std::to_string(i) + "]: must be positive");
        frequencies.push_back(f);
    }

    double sound_speed = 343.0;
    if (j.contains("sound_speed")) {
        sound_speed = as_number(j.at("sound_speed"), "measurement.sound_speed");
        if (sound_speed <= 0.0)
            throw parse_error("measurement.sound_speed: must be positive");
    }
    double radius = -1.0;
    if (j.contains("radius")) {
        radius = as_number(j.at("radius"), "measurement.radius");
        if (radius < 0.0)
            throw parse_error("measurement.radius: must be nonnegative");
    }

    const json &gridj = require_field(j, "grid", "measurement");
    const json &dirsj = require_field(gridj, "directions", "measurement.grid");
    if (!dirsj.is_array() || dirsj.size() < 4)
        throw parse_error("measurement.grid.directions: need at least 4 directions");
    std::vector<Direction> dirs;
    for (std::size_t i = 0; i < dirsj.size(); ++i)
        dirs.push_back(parse_direction_pair(dirsj[i], "measurement.grid.directions[" + std::to_string(i) + "]",
                                            degrees));

    const bool weighted = gridj.contains("weights");
    std::vector<double> weights;
    if (weighted) {
        const json &wj = gridj.at("weights");
        if (!wj.is_array() || wj.size() != dirs.size())
            throw parse_error("measurement.grid.weights: must match the direction count");
        for (std::size_t i = 0; i < wj.size(); ++i)
            weights.push_back(as_number(wj[i], "measurement.grid.weights[" + std::to_string(i) + "]"));
    }

    const json &resp = require_field(j, "responses", "measurement");
    if (!resp.is_array() || resp.size() != frequencies.size())
        throw parse_error("measurement.responses: expected one response matrix per frequency");

    std::vector<Eigen::MatrixXcd> responses;
    Eigen::Index sensor_count = -1;
    for (std::size_t fi = 0; fi < resp.size(); ++fi) {
        const std::string fpath = "measurement.responses[" + std::to_string(fi) + "]";
        const json &mat = resp[fi];
        if (!mat.is_array() || mat.size() != dirs.size())
            throw parse_error(fpath + ": expected one row per grid direction");
        for (std::size_t r = 0; r < mat.size(); ++r) {
            const json &row = mat[r];
            if (!row.is_array() || row.empty())
                throw parse_error(fpath + "[" + std::to_string(r) + "]: expected a non-empty sensor row");
            if (sensor_count < 0)
                sensor_count = static_cast<Eigen::Index>(row.size());
            if (static_cast<Eigen::Index>(row.size()) != sensor_count)
                throw parse_error(fpath + "[" + std::to_string(r) + "]: inconsistent sensor count");
        }
        Eigen::MatrixXcd m(static_cast<Eigen::Index>(dirs.size()), sensor_count);
        for (std::size_t r = 0; r < mat.size(); ++r)
            for (Eigen::Index c = 0; c < sensor_count; ++c)
                m(static_cast<Eigen::Index>(r), c) =
                    as_complex(mat[r][static_cast<std::size_t>(c)],
                               fpath + "[" + std::to_string(r) + "][" + std::to_string(c) + "]");
        responses.push_back(std::move(m));
    }

    try {
        SphereGrid grid = weighted ? SphereGrid::with_weights(dirs, weights) : SphereGrid::from_directions(dirs);
        return MeasurementSet{std::move(frequencies), sound_speed, radius, std::move(grid), std::move(responses)};
    } catch (const std::exception &e) {
        throw parse_error(std::string("measurement.grid: ") + e.what());
    }
}

MeasurementSet load_measurement_set(const std::string &path, bool degrees) {
    return parse_measurement_set(read_file(path), degrees);
}

std::string format_number(double value) {
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.12g", value);
    return buffer;
}

std::string format_number_full(double value) {
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    return buffer;
}

void write_pair_csv(std::ostream &out, const std::vector<CoherenceResult> &results) {
    out << "frequency_hz,kd,re_gamma,im_gamma,abs_gamma\n";
    for (const CoherenceResult &r : results) {
        out << format_number(r.frequency_hz) << ',' << format_number(r.kd) << ',' << format_number(r.gamma.real())
            << ',' << format_number(r.gamma.imag()) << ',' << format_number(std::abs(r.gamma)) << '\n';
    }
}

} // namespace diffcoh
