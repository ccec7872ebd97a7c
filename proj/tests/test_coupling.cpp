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

#include "diffcoh/coupling.hpp"
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

} // namespace

TEST_CASE("Wigner 3j symbols match closed forms") {
    CHECK(wigner3j(1, 1, 2, 0, 0, 0) == doctest::Approx(std::sqrt(2.0 / 15.0)).epsilon(1e-14));
    CHECK(wigner3j(1, 1, 0, 1, -1, 0) == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-14));
    CHECK(wigner3j(2, 2, 0, 0, 0, 0) == doctest::Approx(1.0 / std::sqrt(5.0)).epsilon(1e-14));
    // (j j 0; m -m 0) = (-1)^(j-m) / sqrt(2j+1)
    CHECK(wigner3j(3, 3, 0, 2, -2, 0) == doctest::Approx(-1.0 / std::sqrt(7.0)).epsilon(1e-14));
}

TEST_CASE("Wigner 3j selection rules give exact zeros") {
    CHECK(wigner3j(1, 1, 1, 0, 0, 0) == 0.0); // odd degree sum with zero m's
    CHECK(wigner3j(1, 1, 2, 1, 1, 0) == 0.0); // m's do not sum to zero
    CHECK(wigner3j(1, 1, 5, 0, 0, 0) == 0.0); // triangle violation
    CHECK(wigner3j(2, 2, 2, 3, -3, 0) == 0.0); // |m| beyond degree
}

TEST_CASE("Wigner 3j is invariant under even column permutations") {
    const double a = wigner3j(2, 3, 4, 1, -2, 1);
    CHECK(a == doctest::Approx(wigner3j(3, 4, 2, -2, 1, 1)).epsilon(1e-14));
    CHECK(a == doctest::Approx(wigner3j(4, 2, 3, 1, 1, -2)).epsilon(1e-14));
}

TEST_CASE("Gaunt coefficients match an extended-precision reference") {
    // Integral of Y_10 Y_10 conj(Y_20), computed independently.
    CHECK(gaunt(1, 0, 1, 0, 2, 0) == doctest::Approx(0.25231325220201600482).epsilon(1e-14));
    // Coupling with the constant mode reduces to normalization.
    CHECK(gaunt(3, 2, 0, 0, 3, 2) == doctest::Approx(1.0 / std::sqrt(4.0 * M_PI)).epsilon(1e-13));
    CHECK(gaunt(2, 1, 3, -1, 5, 0) == doctest::Approx(gaunt(3, -1, 2, 1, 5, 0)).epsilon(1e-14));
}

TEST_CASE("Gaunt coefficients agree with quadrature on a spot sample") {
    const SphereGrid grid = SphereGrid::gauss_legendre(10);
    const Eigen::MatrixXcd B = sh_basis(4, grid.directions());
    const struct {
        int n1, m1, n2, m2, n3, m3;
    } combos[] = {{1, 1, 1, -1, 2, 0}, {2, 2, 2, -1, 4, 1}, {3, 0, 1, 0, 4, 0}, {4, -3, 3, 3, 1, 0}};
    for (const auto &c : combos) {
        std::complex<double> integral(0.0, 0.0);
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const Eigen::Index k = static_cast<Eigen::Index>(i);
            integral += grid.weights()[i] * B(k, sh_index(c.n1, c.m1)) * B(k, sh_index(c.n2, c.m2)) *
                        std::conj(B(k, sh_index(c.n3, c.m3)));
        }
        CHECK(std::abs(integral - gaunt(c.n1, c.m1, c.n2, c.m2, c.n3, c.m3)) < 1e-13);
    }
}

TEST_CASE("product spectrum synthesizes to the pointwise product") {
    const SphericalSpectrum f = random_spectrum(2, 0xaaaau);
    const SphericalSpectrum g = random_spectrum(3, 0xbbbbu);
    const SphericalSpectrum product = product_spectrum(f, g);
    CHECK(product.order() == 5);

    std::mt19937_64 rng(0x1357u);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    std::vector<Direction> dirs;
    for (int i = 0; i < 24; ++i)
        dirs.push_back(make_direction(std::acos(1.0 - 2.0 * uni(rng)), 2.0 * M_PI * uni(rng)));

    const Eigen::VectorXcd fv = isht(f, dirs);
    const Eigen::VectorXcd gv = isht(g, dirs);
    const Eigen::VectorXcd pv = isht(product, dirs);
    CHECK((pv - fv.cwiseProduct(gv)).cwiseAbs().maxCoeff() < 1e-11);
}

TEST_CASE("multiplying by the constant pattern is the identity") {
    const SphericalSpectrum f = random_spectrum(3, 0xd00du);
    SphericalSpectrum unit(0);
    unit.coeffs()(0) = std::sqrt(4.0 * M_PI); // pattern identically 1
    const SphericalSpectrum product = product_spectrum(f, unit);
    CHECK(product.order() == 3);
    CHECK((product.coeffs() - f.coeffs()).cwiseAbs().maxCoeff() < 1e-13);
}

TEST_CASE("gaunt_matrix applies the same linear map as product_spectrum") {
    const GauntTable table(2, 3);
    const SphericalSpectrum f = random_spectrum(2, 0x2222u);
    const SphericalSpectrum g = random_spectrum(3, 0x3333u);
    const Eigen::MatrixXcd A = gaunt_matrix(table, g);
    const Eigen::VectorXcd via_matrix = A * f.coeffs();
    const SphericalSpectrum direct = product_spectrum(table, f, g);
    CHECK((via_matrix - direct.coeffs()).cwiseAbs().maxCoeff() < 1e-13);
}

TEST_CASE("shared Gaunt tables are cached and bounded") {
    const GauntTable &a = shared_gaunt_table(2, 2);
    const GauntTable &b = shared_gaunt_table(2, 2);
    CHECK(&a == &b);
    CHECK(a.product_order() == 4);
    CHECK_THROWS_AS(shared_gaunt_table(9, 1), std::invalid_argument);
}

TEST_CASE("product order mismatches are rejected") {
    const GauntTable table(2, 2);
    CHECK_THROWS_AS(product_spectrum(table, SphericalSpectrum(1), SphericalSpectrum(2)), std::invalid_argument);
    CHECK_THROWS_AS(gaunt_matrix(table, SphericalSpectrum(3)), std::invalid_argument);
}
