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

#ifndef DIFFCOH_ORACLE_HPP
#define DIFFCOH_ORACLE_HPP

#include <complex>
#include <cstdint>
#include <functional>

#include <Eigen/Dense>

#include "diffcoh/direction.hpp"
#include "diffcoh/spectrum.hpp"

namespace diffcoh {

/// An arbitrary directional response, evaluable anywhere on the sphere.
using DirectionalFunction = std::function<std::complex<double>(const Direction &)>;

/// Wraps a band-limited spectrum as a pointwise-evaluable response.
DirectionalFunction spectrum_function(const SphericalSpectrum &spectrum);

/// Reference coherence by direct numerical integration of the defining
/// angular integrals on a Gauss-Legendre grid of the given band limit.
/// Exact (to rounding) once quad_order covers the integrand band, roughly
/// the pattern orders plus kd plus 10. Keeps no code in common with the
/// spectral route beyond direction handling, so agreement between the two
/// is meaningful evidence.
std::complex<double> coherence_quadrature(const DirectionalFunction &f, const DirectionalFunction &g,
                                          const Eigen::Vector3d &r12, double k, int quad_order);

/// Sample coherence from a simulated diffuse field plus its jackknife
/// standard error (real and imaginary scatter combined).
struct MonteCarloCoherence {
    std::complex<double> gamma;
    double standard_error = 0.0;
    int trials = 0;
    int waves_per_trial = 0;
};

/// Simulates `trials` independent realizations of `waves` uniformly
/// distributed plane waves with i.i.d. unit-variance circular complex
/// amplitudes, accumulates sample CSD/PSDs of the two sensor signals at
/// displacement r12, and returns the sample coherence. Deterministic for a
/// given seed; each trial draws from its own counter-derived stream, so
/// results do not depend on evaluation order.
MonteCarloCoherence diffuse_field_montecarlo(const DirectionalFunction &f, const DirectionalFunction &g,
                                             const Eigen::Vector3d &r12, double k, int waves, int trials,
                                             std::uint64_t seed);

/// Uniformly distributed direction via inverse-CDF sampling of cos(theta)
/// and uniform phi, from two unit-interval variates.
Direction direction_from_uniforms(double u, double v);

} // namespace diffcoh

#endif
