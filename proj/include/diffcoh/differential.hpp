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

#ifndef DIFFCOH_DIFFERENTIAL_HPP
#define DIFFCOH_DIFFERENTIAL_HPP

#include <Eigen/Dense>

#include "diffcoh/coherence.hpp"
#include "diffcoh/direction.hpp"
#include "diffcoh/spectrum.hpp"

namespace diffcoh {

/// Differential pattern weights: entry n is the coefficient of cos^n(theta)
/// in sum_n w_n cos^n(theta). A pattern with unity response on its axis has
/// weights summing to 1; that normalization is conventional, not enforced,
/// since coherence is scale-free.
using DifferentialWeights = Eigen::VectorXd;

/// Monomial coefficients of the Legendre polynomials: column n holds the
/// coefficients of P_n(x) over {1, x, ..., x^order}. Assembled with the
/// Bonnet recurrence in exact rational arithmetic and rounded once at the
/// end, so the alternating entries carry no accumulated cancellation.
Eigen::MatrixXd legendre_coeff_matrix(int order);

/// Axisymmetric angular spectrum of the differential pattern
/// sum_n w_n cos^n(theta): rewrites the monomial weights in the Legendre
/// basis and rescales each degree to the orthonormal-harmonic convention.
AxisymmetricSpectrum diff_weights_to_spectrum(const DifferentialWeights &weights);

/// Exact inverse of diff_weights_to_spectrum. Differential patterns have
/// real axisymmetric spectra; any imaginary part of the input is ignored.
DifferentialWeights spectrum_to_diff_weights(const AxisymmetricSpectrum &pattern);

/// Coherence between two differential patterns with independent aim
/// directions and positions, at wavenumber k (rad/m).
CoherenceResult differential_pair_coherence(const DifferentialWeights &w1, const Direction &aim1,
                                            const Eigen::Vector3d &position1, const DifferentialWeights &w2,
                                            const Direction &aim2, const Eigen::Vector3d &position2, double k);

} // namespace diffcoh

#endif
