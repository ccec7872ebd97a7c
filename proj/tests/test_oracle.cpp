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
#include "diffcoh/oracle.hpp"
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

DirectionalFunction omni_function() {
    return [](const Direction &) { return std::complex<double>(1.0, 0.0); };
}

} // namespace

TEST_CASE("quadrature oracle reproduces the omni sinc coherence") {
    const std::complex<double> gamma =
        coherence_quadrature(omni_function(), omni_function(), Eigen::Vector3d(0.0, 0.0, 1.0), 2.0, 16);
    CHECK(std::abs(gamma - std::complex<double>(0.4546487134128408477, 0.0)) < 1e-12); // j0(2)
}

TEST_CASE("identical coincident responses give unit coherence") {
    const DirectionalFunction f = spectrum_function(random_spectrum(3, 0xabcu));
    const std::complex<double> gamma = coherence_quadrature(f, f, Eigen::Vector3d::Zero(), 3.0, 24);
    CHECK(std::abs(gamma - std::complex<double>(1.0, 0.0)) < 1e-13);
}

TEST_CASE("the quadrature result is stable in the rule order") {
    const DirectionalFunction f = spectrum_function(random_spectrum(3, 0x111u));
    const DirectionalFunction g = spectrum_function(random_spectrum(2, 0x222u));
    const Eigen::Vector3d r12(0.2, -0.4, 0.7);
    const std::complex<double> a = coherence_quadrature(f, g, r12, 4.0, 32);
    const std::complex<double> b = coherence_quadrature(f, g, r12, 4.0, 48);
    CHECK(std::abs(a - b) < 1e-10);
}

TEST_CASE("oracle and spectral routes agree on a random pair") {
    const SphericalSpectrum fs = random_spectrum(4, 0x333u);
    const SphericalSpectrum gs = random_spectrum(3, 0x444u);
    const Eigen::Vector3d r12(0.1, 0.5, -0.3);
    const double k = 5.5;
    const CoherenceResult spectral = coherence_pair({fs, Eigen::Vector3d::Zero()}, {gs, r12}, k);
    const std::complex<double> oracle =
        coherence_quadrature(spectrum_function(fs), spectrum_function(gs), r12, k, 40);
    CHECK(std::abs(spectral.gamma - oracle) < 1e-10);
}

TEST_CASE("spectrum_function matches the synthesis transform pointwise") {
    const SphericalSpectrum s = random_spectrum(4, 0x555u);
    const DirectionalFunction f = spectrum_function(s);
    const std::vector<Direction> dirs = {make_direction(0.7, 1.9), make_direction(2.9, 5.6),
                                         make_direction(1.5707, 0.0)};
    const Eigen::VectorXcd synth = isht(s, dirs);
    for (std::size_t i = 0; i < dirs.size(); ++i)
        CHECK(std::abs(f(dirs[i]) - synth(static_cast<Eigen::Index>(i))) < 1e-12);
}

TEST_CASE("degenerate responses are rejected by the oracle") {
    const DirectionalFunction zero = [](const Direction &) { return std::complex<double>(0.0, 0.0); };
    CHECK_THROWS_AS(coherence_quadrature(zero, omni_function(), Eigen::Vector3d::UnitZ(), 1.0, 8),
                    degenerate_sensor_error);
}

TEST_CASE("uniform direction sampling covers the usual parametrization") {
    const Direction mid = direction_from_uniforms(0.5, 0.0);
    CHECK(mid.theta == doctest::Approx(M_PI / 2.0));
    CHECK(mid.phi == doctest::Approx(0.0));
    const Direction pole = direction_from_uniforms(0.0, 0.25);
    CHECK(pole.theta == doctest::Approx(0.0));
    for (double u = 0.05; u < 1.0; u += 0.1)
        for (double v = 0.05; v < 1.0; v += 0.2) {
            const Direction d = direction_from_uniforms(u, v);
            CHECK(d.theta >= 0.0);
            CHECK(d.theta <= M_PI);
            CHECK(d.phi >= 0.0);
            CHECK(d.phi < 2.0 * M_PI);
        }
}

TEST_CASE("Monte-Carlo coherence of identical coincident sensors is exactly one") {
    const DirectionalFunction f = spectrum_function(random_spectrum(2, 0x666u));
    const MonteCarloCoherence mc = diffuse_field_montecarlo(f, f, Eigen::Vector3d::Zero(), 2.0, 64, 16, 7u);
    CHECK(std::abs(mc.gamma - std::complex<double>(1.0, 0.0)) < 1e-12);
    CHECK(mc.standard_error >= 0.0);
    CHECK(mc.trials == 16);
    CHECK(mc.waves_per_trial == 64);
}

TEST_CASE("Monte-Carlo runs are reproducible for a fixed seed") {
    const DirectionalFunction f = spectrum_function(random_spectrum(2, 0x777u));
    const DirectionalFunction g = spectrum_function(random_spectrum(1, 0x888u));
    const Eigen::Vector3d r12(0.0, 0.0, 0.8);
    const MonteCarloCoherence a = diffuse_field_montecarlo(f, g, r12, 3.0, 32, 8, 1234u);
    const MonteCarloCoherence b = diffuse_field_montecarlo(f, g, r12, 3.0, 32, 8, 1234u);
    CHECK(a.gamma == b.gamma);
    CHECK(a.standard_error == b.standard_error);
    const MonteCarloCoherence c = diffuse_field_montecarlo(f, g, r12, 3.0, 32, 8, 4321u);
    CHECK(a.gamma != c.gamma);
}

TEST_CASE("Monte-Carlo estimate brackets the quadrature oracle") {
    const Eigen::Vector3d r12(0.0, 0.0, M_PI / 2.0);
    const double k = 2.0; // kd = pi
    const std::complex<double> reference = coherence_quadrature(omni_function(), omni_function(), r12, k, 16);
    const MonteCarloCoherence mc = diffuse_field_montecarlo(omni_function(), omni_function(), r12, k, 256, 200, 99u);
    CHECK(std::abs(mc.gamma - reference) < 5.0 * mc.standard_error);
}

TEST_CASE("Monte-Carlo parameter validation") {
    CHECK_THROWS_AS(diffuse_field_montecarlo(omni_function(), omni_function(), Eigen::Vector3d::Zero(), 1.0, 0, 8, 1u),
                    std::invalid_argument);
    CHECK_THROWS_AS(diffuse_field_montecarlo(omni_function(), omni_function(), Eigen::Vector3d::Zero(), 1.0, 8, 1, 1u),
                    std::invalid_argument);
}
