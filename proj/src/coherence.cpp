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

#include "diffcoh/coherence.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include <Eigen/SVD>

#include "diffcoh/coupling.hpp"
#include "diffcoh/errors.hpp"
#include "diffcoh/sh_core.hpp"
#include "diffcoh/wavefield.hpp"

namespace diffcoh {

namespace {

// Below this kd the displacement phase is indistinguishable from 1 at
// double precision, so the coincident reduction is used instead.
constexpr double kCoincidentKd = 1e-12;

void require_nonzero(const SphericalSpectrum &s, const char *role) {
    if (s.norm() == 0.0)
        throw degenerate_sensor_error(std::string(role) + " sensor has a zero-norm spectrum");
}

std::complex<double> coincident_csd(const SphericalSpectrum &f, const SphericalSpectrum &g) {
    const int order = std::max(f.order(), g.order());
    return g.resized(order).coeffs().dot(f.resized(order).coeffs());
}

} // namespace

double psd_pair_norm(const SphericalSpectrum &f, const SphericalSpectrum &g) {
    require_nonzero(f, "first");
    require_nonzero(g, "second");
    return std::sqrt(f.squared_norm() * g.squared_norm());
}

std::complex<double> csd_pair(const SensorPlacement &f, const SensorPlacement &g, double k, int plane_wave_order) {
    if (k < 0.0)
        throw std::domain_error("csd_pair: wavenumber must be nonnegative");
    require_nonzero(f.spectrum, "first");
    require_nonzero(g.spectrum, "second");

    const Eigen::Vector3d r12 = g.position - f.position;
    const double kd = k * r12.norm();
    if (kd < kCoincidentKd)
        return coincident_csd(f.spectrum, g.spectrum);

    const SphericalSpectrum c = product_spectrum(f.spectrum, conjugate_spectrum(g.spectrum));
    const int order = (plane_wave_order < 0) ? c.order() : plane_wave_order;
    const PlaneWaveSpectrum b = plane_wave_spectrum(kd, direction_of(r12), order);

    const Eigen::Index shared = std::min(b.coeffs.size(), c.coeffs().size());
    return b.coeffs.head(shared).dot(c.coeffs().head(shared));
}

CoherenceResult coherence_pair(const SensorPlacement &f, const SensorPlacement &g, double k, int plane_wave_order) {
    CoherenceResult out;
    out.distance_m = (g.position - f.position).norm();
    out.kd = k * out.distance_m;
    out.gamma = csd_pair(f, g, k, plane_wave_order) / psd_pair_norm(f.spectrum, g.spectrum);
    return out;
}

std::complex<double> coherence_coincident(const SphericalSpectrum &f, const SphericalSpectrum &g) {
    return coincident_csd(f, g) / psd_pair_norm(f, g);
}

ArraySpectra array_spectra_from_measurements(const Eigen::MatrixXcd &responses, const SphereGrid &grid, int order) {
    if (order < 0)
        throw std::invalid_argument("array_spectra_from_measurements: order must be nonnegative");
    if (responses.cols() < 1)
        throw std::invalid_argument("array_spectra_from_measurements: need at least one sensor column");
    if (responses.rows() != static_cast<Eigen::Index>(grid.size()))
        throw std::invalid_argument("array_spectra_from_measurements: response rows must match grid size");
    if (static_cast<Eigen::Index>(grid.size()) < sh_count(order))
        throw std::invalid_argument("array_spectra_from_measurements: order " + std::to_string(order) +
                                    " needs at least " + std::to_string(sh_count(order)) +
                                    " measurement directions, got " + std::to_string(grid.size()));

    const Eigen::MatrixXcd B = sh_basis(order, grid.directions());
    ArraySpectra out;
    out.order = order;

    if (grid.has_weights()) {
        Eigen::Map<const Eigen::VectorXd> w(grid.weights().data(), static_cast<Eigen::Index>(grid.weights().size()));
        out.spectra = B.adjoint() * (w.asDiagonal() * responses);
        return out;
    }

    Eigen::BDCSVD<Eigen::MatrixXcd> svd(B, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto &sv = svd.singularValues();
    const double smin = sv(sv.size() - 1);
    out.condition_number = (smin > 0.0) ? sv(0) / smin : std::numeric_limits<double>::infinity();
    out.well_conditioned = out.condition_number <= ls_condition_threshold();
    out.spectra = svd.solve(responses);
    return out;
}

OrderGuidance suggested_order(double k_max, double radius) {
    if (k_max < 0.0 || radius < 0.0)
        throw std::domain_error("suggested_order: wavenumber and radius must be nonnegative");
    OrderGuidance out;
    out.order = 2 * static_cast<int>(std::floor(k_max * radius));
    out.min_measurements = sh_count(out.order);
    out.equiangular_measurements = 4 * sh_count(out.order);
    return out;
}

Eigen::MatrixXcd array_coherence_matrix(const ArraySpectra &array) {
    const Eigen::Index sensors = array.spectra.cols();
    if (sensors < 1)
        throw std::invalid_argument("array_coherence_matrix: need at least one sensor");
    if (array.spectra.rows() != sh_count(array.order))
        throw std::invalid_argument("array_coherence_matrix: spectra rows must equal (order+1)^2");

    Eigen::MatrixXcd conjugated(array.spectra.rows(), sensors);
    for (Eigen::Index q = 0; q < sensors; ++q) {
        if (array.spectra.col(q).norm() == 0.0)
            throw degenerate_sensor_error("sensor " + std::to_string(q) + " has a zero-norm spectrum");
        conjugated.col(q) =
            conjugate_spectrum(SphericalSpectrum(array.order, array.spectra.col(q))).coeffs();
    }

    const Eigen::MatrixXcd csd = conjugated.adjoint() * conjugated;
    Eigen::MatrixXcd gamma(sensors, sensors);
    for (Eigen::Index i = 0; i < sensors; ++i) {
        gamma(i, i) = 1.0;
        for (Eigen::Index j = i + 1; j < sensors; ++j) {
            const std::complex<double> g =
                csd(i, j) / std::sqrt(csd(i, i).real() * csd(j, j).real());
            gamma(i, j) = g;
            gamma(j, i) = std::conj(g);
        }
    }
    return gamma;
}

} // namespace diffcoh
