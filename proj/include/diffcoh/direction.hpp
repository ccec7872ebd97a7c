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

#ifndef DIFFCOH_DIRECTION_HPP
#define DIFFCOH_DIRECTION_HPP

#include <Eigen/Dense>
#include <vector>

namespace diffcoh {

/// A point on the unit sphere. theta is the inclination from +z in [0, pi],
/// phi the azimuth in [0, 2*pi).
struct Direction {
    double theta = 0.0;
    double phi = 0.0;
};

/// Validating constructor: rejects theta outside [0, pi], wraps phi into
/// [0, 2*pi). Internal code that produces angles already in range may build
/// the aggregate directly.
Direction make_direction(double theta, double phi);

Eigen::Vector3d unit_vector(const Direction &dir);

/// Direction of a nonzero vector. Throws std::domain_error for the zero vector.
Direction direction_of(const Eigen::Vector3d &v);

Direction antipode(const Direction &dir);

/// z-y-z Euler angles. beta must lie in [0, pi].
struct EulerAngles {
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 0.0;
};

/// Rotation matrix Rz(alpha) * Ry(beta) * Rz(gamma). A z-aligned axis maps to
/// the direction (theta = beta, phi = alpha) when gamma = 0, matching the
/// convention used by rotate_spectrum.
Eigen::Matrix3d euler_rotation_matrix(const EulerAngles &angles);

/// A set of directions used for transforms, measurements and quadrature.
/// Weighted grids carry nonnegative quadrature weights summing to 4*pi.
/// Duplicate directions (within 1e-12 rad great-circle distance) are rejected.
class SphereGrid {
  public:
    static SphereGrid from_directions(std::vector<Direction> directions);
    static SphereGrid with_weights(std::vector<Direction> directions, std::vector<double> weights);

    /// Gauss-Legendre nodes in theta (band_limit+1 points) crossed with a
    /// uniform azimuth grid (2*band_limit+2 points). Integrates spherical
    /// polynomials up to order 2*band_limit+1 exactly.
    static SphereGrid gauss_legendre(int band_limit);

    const std::vector<Direction> &directions() const { return directions_; }
    bool has_weights() const { return !weights_.empty(); }
    const std::vector<double> &weights() const { return weights_; }
    std::size_t size() const { return directions_.size(); }

  private:
    SphereGrid() = default;
    std::vector<Direction> directions_;
    std::vector<double> weights_;
};

/// Nodes and weights of the K-point Gauss-Legendre rule on [-1, 1].
void gauss_legendre_nodes(int count, std::vector<double> &nodes, std::vector<double> &weights);

} // namespace diffcoh

#endif
