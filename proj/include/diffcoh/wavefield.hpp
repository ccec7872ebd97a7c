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

#ifndef DIFFCOH_WAVEFIELD_HPP
#define DIFFCOH_WAVEFIELD_HPP

#include <Eigen/Dense>

#include "diffcoh/direction.hpp"
#include "diffcoh/spectrum.hpp"

namespace diffcoh {

/// Spherical Bessel function of the first kind, j_n(x), for n >= 0 and
/// x >= 0. Accurate to about 1e-12 relative (1e-14 absolute near zeros)
/// through n = 70, x = 200.
double spherical_bessel_j(int n, double x);

/// j_0(x) .. j_max_order(x) in one pass. Orders above x come from the
/// downward (Miller) recurrence, which stays stable where the upward
/// direction blows up; a fully oscillatory range recurs upward from the
/// closed forms.
Eigen::VectorXd spherical_bessel_j_sequence(int max_order, double x);

/// Angular spectrum of the unit plane-wave phase factor e^{i kd cos(alpha)},
/// alpha the angle from `direction`: entry (n, m) is
/// 4 pi i^n j_n(kd) conj(Y_nm(direction)). Band-limiting to `order` leaves
/// a residual that decays with |j_n(kd)| beyond n ~ kd.
struct PlaneWaveSpectrum {
    int order = 0;
    double kd = 0.0;
    Direction direction;
    Eigen::VectorXcd coeffs;
};

PlaneWaveSpectrum plane_wave_spectrum(double kd, const Direction &direction, int order);

} // namespace diffcoh

#endif
