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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "diffcoh/coherence.hpp"
#include "diffcoh/errors.hpp"
#include "diffcoh/sh_core.hpp"

using namespace diffcoh;

namespace {

SphericalSpectrum random_spectrum(int order, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    SphericalSpectrum s(order);
    for (Eigen::Index q = 0; q < s.size(); ++q)
        s.coeffs()(q) = std::complex<double>(gauss(rng), gauss(rng));
    return s;
}

SphericalSpectrum omni_spectrum() {
    SphericalSpectrum s(0);
    s.coeffs()(0) = std::sqrt(4.0 * M_PI);
    return s;
}

} // namespace

TEST_CASE("omni pair coherence is the sinc of kd") {
    const SensorPlacement a{omni_spectrum(), Eigen::Vector3d::Zero()};
    const SensorPlacement b{omni_spectrum(), Eigen::Vector3d(0.0, 0.0, 0.5)};
    const CoherenceResult r = coherence_pair(a, b, 2.0); // kd = 1
    CHECK(std::abs(r.gamma - std::complex<double>(0.84147098480789650665, 0.0)) < 1e-13);
    CHECK(r.kd == doctest::Approx(1.0));
    CHECK(r.distance_m == doctest::Approx(0.5));
}

TEST_CASE("swapping the sensors conjugates the CSD") {
    const SensorPlacement f{random_spectrum(3, 0x1111u), Eigen::Vector3d(0.1, -0.2, 0.3)};
    const SensorPlacement g{random_spectrum(2, 0x2222u), Eigen::Vector3d(-0.4, 0.0, 0.6)};
    const std::complex<double> fg = csd_pair(f, g, 5.0);
    const std::complex<double> gf = csd_pair(g, f, 5.0);
    CHECK(std::abs(fg - std::conj(gf)) < 1e-13 * std::abs(fg));
}

TEST_CASE("coincident placements reduce to the spectral inner product") {
    const SphericalSpectrum f = random_spectrum(3, 0x3333u);
    const SphericalSpectrum g = random_spectrum(4, 0x4444u);
    const Eigen::Vector3d at(0.7, 0.7, -0.7);
    const CoherenceResult r = coherence_pair({f, at}, {g, at}, 9.0);
    CHECK(std::abs(r.gamma - coherence_coincident(f, g)) < 1e-14);
    CHECK(r.kd == 0.0);
}

TEST_CASE("coherence is invariant under a common translation") {
    const SensorPlacement f{random_spectrum(2, 0x5555u), Eigen::Vector3d(0.0, 0.1, 0.0)};
    const SensorPlacement g{random_spectrum(3, 0x6666u), Eigen::Vector3d(0.3, -0.1, 0.5)};
    const Eigen::Vector3d shift(1.0, -2.0, 0.25);
    const CoherenceResult base = coherence_pair(f, g, 4.0);
    const CoherenceResult moved =
        coherence_pair({f.spectrum, f.position + shift}, {g.spectrum, g.position + shift}, 4.0);
    CHECK(std::abs(base.gamma - moved.gamma) < 1e-12);
}

TEST_CASE("coherence is invariant under a common rotation") {
    const SphericalSpectrum f = random_spectrum(3, 0x7777u);
    const SphericalSpectrum g = random_spectrum(2, 0x8888u);
    const Eigen::Vector3d r1(0.0, 0.0, 0.0);
    const Eigen::Vector3d r2(0.4, 0.3, -0.2);
    const double k = 6.0;

    const EulerAngles euler{1.9, 0.8, 4.1};
    const Eigen::Matrix3d R = euler_rotation_matrix(euler);
    const CoherenceResult base = coherence_pair({f, r1}, {g, r2}, k);
    const CoherenceResult rotated =
        coherence_pair({rotate_spectrum(f, euler), R * r1}, {rotate_spectrum(g, euler), R * r2}, k);
    CHECK(std::abs(base.gamma - rotated.gamma) < 1e-10);
}

TEST_CASE("raising the plane-wave expansion order changes nothing") {
    const SensorPlacement f{random_spectrum(3, 0x9999u), Eigen::Vector3d::Zero()};
    const SensorPlacement g{random_spectrum(2, 0xaaaau), Eigen::Vector3d(0.0, 0.7, 0.4)};
    const CoherenceResult base = coherence_pair(f, g, 5.0);
    const CoherenceResult raised = coherence_pair(f, g, 5.0, 5 + 8);
    CHECK(std::abs(base.gamma - raised.gamma) < 1e-13);
}

TEST_CASE("pair energy norm is the product of pattern norms") {
    const SphericalSpectrum f = random_spectrum(2, 0xbbbbu);
    const SphericalSpectrum g = random_spectrum(4, 0xccccu);
    CHECK(psd_pair_norm(f, g) == doctest::Approx(f.norm() * g.norm()).epsilon(1e-13));
}

TEST_CASE("degenerate sensors are rejected") {
    const SensorPlacement zero{SphericalSpectrum(2), Eigen::Vector3d::Zero()};
    const SensorPlacement fine{omni_spectrum(), Eigen::Vector3d(0.0, 0.0, 0.1)};
    CHECK_THROWS_AS(coherence_pair(zero, fine, 1.0), degenerate_sensor_error);
    CHECK_THROWS_AS(coherence_pair(fine, zero, 1.0), degenerate_sensor_error);
}

TEST_CASE("negative wavenumbers are rejected") {
    const SensorPlacement a{omni_spectrum(), Eigen::Vector3d::Zero()};
    CHECK_THROWS_AS(csd_pair(a, a, -1.0), std::domain_error);
}

TEST_CASE("zero wavenumber behaves as coincident") {
    const SphericalSpectrum f = random_spectrum(2, 0xddddu);
    const SphericalSpectrum g = random_spectrum(2, 0xeeeeu);
    const CoherenceResult r = coherence_pair({f, Eigen::Vector3d::Zero()}, {g, Eigen::Vector3d::UnitX()}, 0.0);
    CHECK(std::abs(r.gamma - coherence_coincident(f, g)) < 1e-14);
}

TEST_CASE("suggested order follows the radius rule of thumb") {
    const OrderGuidance tight = suggested_order(50.0, 0.05); // kR = 2.5
    CHECK(tight.order == 4);
    CHECK(tight.min_measurements == 25);
    CHECK(tight.equiangular_measurements == 100);
    CHECK(suggested_order(20.0, 0.05).order == 2); // kR = 1
    CHECK(suggested_order(100.0, 0.0).order == 0);
    CHECK(suggested_order(100.0, 0.0).min_measurements == 1);
}

TEST_CASE("measured spectra round-trip through a synthesis grid") {
    const SphereGrid grid = SphereGrid::gauss_legendre(6);
    const SphericalSpectrum s0 = random_spectrum(3, 0xf00du);
    const SphericalSpectrum s1 = random_spectrum(3, 0xf00eu);

    Eigen::MatrixXcd responses(static_cast<Eigen::Index>(grid.size()), 2);
    responses.col(0) = isht(s0, grid.directions());
    responses.col(1) = isht(s1, grid.directions());

    const ArraySpectra spectra = array_spectra_from_measurements(responses, grid, 3);
    CHECK(spectra.order == 3);
    CHECK(spectra.condition_number == doctest::Approx(1.0));
    CHECK((spectra.spectra.col(0) - s0.coeffs()).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((spectra.spectra.col(1) - s1.coeffs()).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("underdetermined measurement grids are rejected with the required count") {
    std::vector<Direction> nine;
    std::mt19937_64 rng(0x90eu);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    for (int i = 0; i < 9; ++i)
        nine.push_back(make_direction(std::acos(1.0 - 2.0 * uni(rng)), 2.0 * M_PI * uni(rng)));
    const SphereGrid grid = SphereGrid::from_directions(nine);
    try {
        array_spectra_from_measurements(Eigen::MatrixXcd::Ones(9, 1), grid, 3);
        FAIL("expected invalid_argument");
    } catch (const std::invalid_argument &e) {
        CHECK(std::string(e.what()).find("16") != std::string::npos);
    }
}

TEST_CASE("single-sensor arrays give the trivial coherence matrix") {
    const SphereGrid grid = SphereGrid::gauss_legendre(4);
    const Eigen::MatrixXcd responses = Eigen::MatrixXcd::Ones(static_cast<Eigen::Index>(grid.size()), 1);
    const ArraySpectra spectra = array_spectra_from_measurements(responses, grid, 1);
    const Eigen::MatrixXcd gamma = array_coherence_matrix(spectra);
    CHECK(gamma.rows() == 1);
    CHECK(std::abs(gamma(0, 0) - std::complex<double>(1.0, 0.0)) == 0.0);
}

TEST_CASE("synthetic two-sensor array reproduces the sinc coherence") {
    // The order rule N = 2*floor(kR) leaves a truncated pattern-energy tail
    // that only drops below 1e-6 once kR exceeds about 5.
    const double k = 126.0;
    const double d = 0.04;
    const OrderGuidance guidance = suggested_order(k, d); // kR = 5.04 -> N = 10
    const SphereGrid grid = SphereGrid::gauss_legendre(2 * guidance.order);

    const Eigen::Vector3d p0 = Eigen::Vector3d::Zero();
    const Eigen::Vector3d p1(0.0, 0.0, d);
    Eigen::MatrixXcd responses(static_cast<Eigen::Index>(grid.size()), 2);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const Eigen::Vector3d n = unit_vector(grid.directions()[i]);
        responses(static_cast<Eigen::Index>(i), 0) = std::exp(std::complex<double>(0.0, k * n.dot(p0)));
        responses(static_cast<Eigen::Index>(i), 1) = std::exp(std::complex<double>(0.0, k * n.dot(p1)));
    }

    const ArraySpectra spectra = array_spectra_from_measurements(responses, grid, guidance.order);
    const Eigen::MatrixXcd gamma = array_coherence_matrix(spectra);
    const double expected = std::sin(k * d) / (k * d);
    CHECK(std::abs(gamma(0, 1) - std::complex<double>(expected, 0.0)) < 1e-6);
    CHECK(std::abs(gamma(1, 0) - std::conj(gamma(0, 1))) < 1e-15);
}

TEST_CASE("arrays with a silent sensor are rejected") {
    ArraySpectra spectra;
    spectra.order = 1;
    spectra.spectra = Eigen::MatrixXcd::Zero(4, 2);
    spectra.spectra(0, 0) = 1.0; // sensor 1 stays all-zero
    try {
        array_coherence_matrix(spectra);
        FAIL("expected degenerate_sensor_error");
    } catch (const degenerate_sensor_error &e) {
        CHECK(std::string(e.what()).find("1") != std::string::npos);
    }
}
