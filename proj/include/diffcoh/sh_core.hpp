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

#ifndef DIFFCOH_SH_CORE_HPP
#define DIFFCOH_SH_CORE_HPP

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "diffcoh/direction.hpp"
#include "diffcoh/spectrum.hpp"

namespace diffcoh {

/// Orthonormalized associated Legendre values P_nm(x) including the
/// sqrt((2n+1)/(4pi) (n-m)!/(n+m)!) factor, for all 0 <= m <= n <= order.
/// Row n, column m of the result; entries with m > n are zero. Uses the
/// standard three-term recurrences on the normalized functions, which stay
/// stable at high orders where the unnormalized P_nm overflow.
Eigen::MatrixXd normalized_legendre(int order, double x);

/// Complex orthonormal spherical harmonic Y_nm evaluated at one direction.
/// Condon-Shortley phase is included, so Y_{n,-m} = (-1)^m conj(Y_{nm}).
std::complex<double> eval_sh(int n, int m, const Direction &dir);

/// Matrix of all harmonics up to `order` at each direction: entry (k, q)
/// is Y_q(dir_k) with q the sh_index mode position. Size K x (order+1)^2.
Eigen::MatrixXcd sh_basis(int order, const std::vector<Direction> &dirs);

/// Synthesis (inverse transform): pattern values at the given directions
/// from its angular spectrum.
Eigen::VectorXcd isht(const SphericalSpectrum &spectrum, const std::vector<Direction> &dirs);

/// Outcome of a forward spherical-harmonic transform. `condition_number`
/// is the ratio of extreme singular values of the basis matrix in the
/// least-squares route and exactly 1 in the quadrature route;
/// `well_conditioned` is false when it exceeds ls_condition_threshold().
struct ShtResult {
    SphericalSpectrum spectrum;
    double condition_number = 1.0;
    bool well_conditioned = true;
};

/// Condition-number threshold above which a least-squares analysis is
/// flagged (but still returned). Chosen so roughly half of the double
/// mantissa survives the solve.
constexpr double ls_condition_threshold() { return 1e8; }

/// Analysis (forward transform): angular spectrum of a pattern sampled at
/// the grid directions, band-limited to `order`. A grid with quadrature
/// weights uses the weighted inner product directly; an unweighted grid is
/// solved in the least-squares sense through a rank-revealing SVD, which
/// requires at least (order+1)^2 samples.
ShtResult sht(int order, const SphereGrid &grid, const Eigen::VectorXcd &samples);

/// Spectrum of the complex-conjugated pattern: g = conj(f) has
/// g_nm = (-1)^m conj(f_{n,-m}). Involutive.
SphericalSpectrum conjugate_spectrum(const SphericalSpectrum &spectrum);

/// Full spectrum of a rotationally symmetric pattern re-aimed from the z
/// axis to `aim`: f_nm = sqrt(4pi/(2n+1)) c_n conj(Y_nm(aim)).
SphericalSpectrum steer_axisymmetric(const AxisymmetricSpectrum &pattern, const Direction &aim);

/// Wigner small-d matrix entry d^n_{mp,m}(beta). Exposed for tests; the
/// evaluation is the explicit Jacobi-polynomial sum with log-factorials,
/// accurate through order 32.
double wigner_d_entry(int n, int mp, int m, double beta);

/// Spectrum of the pattern rotated by the given intrinsic z-y-z Euler
/// angles (the rotation acting on the pattern, not the frame): degrees mix
/// within each order through the Wigner-D matrix.
SphericalSpectrum rotate_spectrum(const SphericalSpectrum &spectrum, const EulerAngles &euler);

} // namespace diffcoh

#endif
