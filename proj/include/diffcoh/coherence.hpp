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

#ifndef DIFFCOH_COHERENCE_HPP
#define DIFFCOH_COHERENCE_HPP

#include <complex>

#include <Eigen/Dense>

#include "diffcoh/direction.hpp"
#include "diffcoh/spectrum.hpp"

namespace diffcoh {

/// A sensor in the array frame: its directional response as an angular
/// spectrum (already steered or rotated) and its position in meters.
struct SensorPlacement {
    SphericalSpectrum spectrum;
    Eigen::Vector3d position = Eigen::Vector3d::Zero();
};

/// Per-sensor angular spectra of a measured array: column q holds the
/// spectrum of sensor q's directional response at one frequency.
/// `condition_number` reports the conditioning of the analysis that
/// produced the columns (1 for a quadrature grid).
struct ArraySpectra {
    int order = 0;
    Eigen::MatrixXcd spectra;
    double condition_number = 1.0;
    bool well_conditioned = true;
};

/// A single coherence evaluation. The diffuse-field power density is
/// normalized to 1 throughout; coherence itself is scale-free.
/// frequency_hz and sound_speed_mps are carried for reporting and stay 0
/// unless the caller fills them.
struct CoherenceResult {
    std::complex<double> gamma;
    double kd = 0.0;
    double distance_m = 0.0;
    double frequency_hz = 0.0;
    double sound_speed_mps = 0.0;
};

/// Geometric mean of the two pattern energies: sqrt(|f|^2 |g|^2) in the
/// coefficient norm, which by Parseval equals the product of the angular
/// energy integrals' square roots.
double psd_pair_norm(const SphericalSpectrum &f, const SphericalSpectrum &g);

/// Cross-spectral density between the two placed sensors in an isotropic
/// diffuse field of unit power density, at wavenumber k (rad/m). Coincident
/// sensors (kd below 1e-12) reduce to the plain spectral inner product
/// g^H f. `plane_wave_order` overrides the expansion order of the
/// displacement phase term; the default (-1) uses the product band limit,
/// beyond which additional terms are exactly zero.
std::complex<double> csd_pair(const SensorPlacement &f, const SensorPlacement &g, double k,
                              int plane_wave_order = -1);

/// Diffuse-field coherence between the two placed sensors: the CSD
/// normalized by psd_pair_norm. |gamma| <= 1 up to rounding.
CoherenceResult coherence_pair(const SensorPlacement &f, const SensorPlacement &g, double k,
                               int plane_wave_order = -1);

/// Coherence of two sensors at the same point: g^H f / sqrt(|f|^2 |g|^2).
std::complex<double> coherence_coincident(const SphericalSpectrum &f, const SphericalSpectrum &g);

/// Per-sensor spectra from directional response measurements: column q of
/// `responses` holds sensor q's measured response at the grid directions.
/// Needs at least (order+1)^2 measurement directions.
ArraySpectra array_spectra_from_measurements(const Eigen::MatrixXcd &responses, const SphereGrid &grid, int order);

/// Rule-of-thumb analysis order for an array enclosed in radius R (meters)
/// at maximum wavenumber k_max, with the matching measurement-count
/// guidance: at least (N+1)^2 points, around 4(N+1)^2 for equiangular grids.
struct OrderGuidance {
    int order = 0;
    int min_measurements = 1;
    int equiangular_measurements = 4;
};

OrderGuidance suggested_order(double k_max, double radius);

/// Q x Q diffuse-field coherence matrix of a measured array: Hermitian,
/// unit diagonal, positive semidefinite. Positional phase differences are
/// part of the measured responses, so no separate displacement term enters.
Eigen::MatrixXcd array_coherence_matrix(const ArraySpectra &array);

} // namespace diffcoh

#endif
