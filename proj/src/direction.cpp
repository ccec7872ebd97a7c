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

#include "diffcoh/direction.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace diffcoh {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kFourPi = 4.0 * std::numbers::pi;
} // namespace

Direction make_direction(double theta, double phi) {
    if (!(theta >= 0.0 && theta <= std::numbers::pi))
        throw std::domain_error("Direction: theta must lie in [0, pi]");
    if (!std::isfinite(phi))
        throw std::domain_error("Direction: phi must be finite");
    phi = std::fmod(phi, kTwoPi);
    if (phi < 0.0)
        phi += kTwoPi;
    if (phi >= kTwoPi) // fmod can land exactly on 2*pi after the wrap
        phi = 0.0;
    return Direction{theta, phi};
}

Eigen::Vector3d unit_vector(const Direction &dir) {
    const double st = std::sin(dir.theta);
    return {st * std::cos(dir.phi), st * std::sin(dir.phi), std::cos(dir.theta)};
}

Direction direction_of(const Eigen::Vector3d &v) {
    const double r = v.norm();
    if (!(r > 0.0))
        throw std::domain_error("direction_of: zero vector has no direction");
    const double theta = std::atan2(std::hypot(v.x(), v.y()), v.z());
    double phi = std::atan2(v.y(), v.x());
    if (phi < 0.0)
        phi += kTwoPi;
    return Direction{theta, phi};
}

Direction antipode(const Direction &dir) {
    return make_direction(std::numbers::pi - dir.theta, dir.phi + std::numbers::pi);
}

Eigen::Matrix3d euler_rotation_matrix(const EulerAngles &angles) {
    using Eigen::Matrix3d;
    const Matrix3d rz_a = Eigen::AngleAxisd(angles.alpha, Eigen::Vector3d::UnitZ()).toRotationMatrix();
    const Matrix3d ry_b = Eigen::AngleAxisd(angles.beta, Eigen::Vector3d::UnitY()).toRotationMatrix();
    const Matrix3d rz_g = Eigen::AngleAxisd(angles.gamma, Eigen::Vector3d::UnitZ()).toRotationMatrix();
    return rz_a * ry_b * rz_g;
}

namespace {

void check_directions(const std::vector<Direction> &dirs) {
    if (dirs.empty())
        throw std::invalid_argument("SphereGrid: needs at least one direction");
    std::vector<Eigen::Vector3d> units;
    units.reserve(dirs.size());
    for (const auto &d : dirs) {
        if (!(d.theta >= 0.0 && d.theta <= std::numbers::pi))
            throw std::domain_error("SphereGrid: theta must lie in [0, pi]");
        units.push_back(unit_vector(d));
    }
    // 1e-12 rad great-circle distance; compare squared chord which equals the
    // squared angle to leading order.
    const double tol2 = 1e-24;
    for (std::size_t i = 0; i < units.size(); ++i)
        for (std::size_t j = i + 1; j < units.size(); ++j)
            if ((units[i] - units[j]).squaredNorm() < tol2)
                throw std::invalid_argument("SphereGrid: duplicate directions at indices " +
                                            std::to_string(i) + " and " + std::to_string(j));
}

} // namespace

SphereGrid SphereGrid::from_directions(std::vector<Direction> directions) {
    check_directions(directions);
    SphereGrid grid;
    grid.directions_ = std::move(directions);
    return grid;
}

SphereGrid SphereGrid::with_weights(std::vector<Direction> directions, std::vector<double> weights) {
    check_directions(directions);
    if (weights.size() != directions.size())
        throw std::invalid_argument("SphereGrid: weight count must match direction count");
    double sum = 0.0;
    for (double w : weights) {
        if (!(w >= 0.0))
            throw std::invalid_argument("SphereGrid: weights must be nonnegative");
        sum += w;
    }
    if (std::abs(sum - kFourPi) >= 1e-9)
        throw std::invalid_argument("SphereGrid: weights must sum to 4*pi");
    SphereGrid grid;
    grid.directions_ = std::move(directions);
    grid.weights_ = std::move(weights);
    return grid;
}

SphereGrid SphereGrid::gauss_legendre(int band_limit) {
    if (band_limit < 0)
        throw std::invalid_argument("SphereGrid: band limit must be nonnegative");
    const int n_theta = band_limit + 1;
    const int n_phi = 2 * band_limit + 2;
    std::vector<double> nodes, gl_weights;
    gauss_legendre_nodes(n_theta, nodes, gl_weights);

    std::vector<Direction> dirs;
    std::vector<double> weights;
    dirs.reserve(static_cast<std::size_t>(n_theta) * n_phi);
    weights.reserve(dirs.capacity());
    const double w_phi = kTwoPi / n_phi;
    for (int it = 0; it < n_theta; ++it) {
        const double theta = std::acos(nodes[it]);
        for (int ip = 0; ip < n_phi; ++ip)
            dirs.push_back(Direction{theta, ip * w_phi * 1.0});
        for (int ip = 0; ip < n_phi; ++ip)
            weights.push_back(gl_weights[it] * w_phi);
    }
    // Renormalize away the last few ulps so the 4*pi invariant holds exactly
    // enough for downstream checks.
    double sum = 0.0;
    for (double w : weights)
        sum += w;
    const double scale = kFourPi / sum;
    for (double &w : weights)
        w *= scale;

    SphereGrid grid;
    grid.directions_ = std::move(dirs);
    grid.weights_ = std::move(weights);
    return grid;
}

void gauss_legendre_nodes(int count, std::vector<double> &nodes, std::vector<double> &weights) {
    if (count < 1)
        throw std::invalid_argument("gauss_legendre_nodes: count must be positive");
    nodes.assign(count, 0.0);
    weights.assign(count, 0.0);
    const int half = (count + 1) / 2;
    for (int i = 0; i < half; ++i) {
        // Newton iteration from the Chebyshev estimate of the i-th root.
        double z = std::cos(std::numbers::pi * (i + 0.75) / (count + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p1 = 1.0, p2 = 0.0;
            for (int j = 1; j <= count; ++j) {
                const double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / j;
            }
            pp = count * (z * p1 - p2) / (z * z - 1.0);
            const double dz = p1 / pp;
            z -= dz;
            if (std::abs(dz) < 1e-15)
                break;
        }
        nodes[i] = -z;
        nodes[count - 1 - i] = z;
        const double w = 2.0 / ((1.0 - z * z) * pp * pp);
        weights[i] = w;
        weights[count - 1 - i] = w;
    }
}

} // namespace diffcoh
