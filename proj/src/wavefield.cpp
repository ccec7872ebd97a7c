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

#include "diffcoh/wavefield.hpp"

#include <cmath>
#include <stdexcept>

#include "diffcoh/sh_core.hpp"

namespace diffcoh {

namespace {

double bessel_j0(double x) { return (x == 0.0) ? 1.0 : std::sin(x) / x; }

double bessel_j1(double x) { return (x == 0.0) ? 0.0 : std::sin(x) / (x * x) - std::cos(x) / x; }

} // namespace

Eigen::VectorXd spherical_bessel_j_sequence(int max_order, double x) {
    if (max_order < 0)
        throw std::invalid_argument("spherical_bessel_j_sequence: order must be nonnegative");
    if (!(x >= 0.0))
        throw std::domain_error("spherical_bessel_j_sequence: argument must be nonnegative");

    Eigen::VectorXd j = Eigen::VectorXd::Zero(max_order + 1);
    j(0) = bessel_j0(x);
    if (max_order == 0)
        return j;
    j(1) = bessel_j1(x);
    if (max_order == 1 || x == 0.0)
        return j;

    if (x < 1e-6) {
        // Leading series term; the first correction bounds the relative
        // error by x^2 / (2(2n+3)) < 1e-13 here.
        double odd_fact = 3.0;
        double xn = x;
        for (int n = 2; n <= max_order; ++n) {
            odd_fact *= 2.0 * n + 1.0;
            xn *= x;
            j(n) = xn / odd_fact * (1.0 - x * x / (2.0 * (2.0 * n + 3.0)));
        }
        return j;
    }

    if (static_cast<double>(max_order) < x) {
        // Entire range is oscillatory; the upward three-term recurrence is
        // stable here and needs no normalization pass.
        for (int n = 2; n <= max_order; ++n)
            j(n) = (2.0 * n - 1.0) / x * j(n - 1) - j(n - 2);
        return j;
    }

    // Miller's algorithm: run the recurrence downward from well above the
    // requested order (where j_n is negligible), then scale the whole
    // sequence to the closed form. Normalizing against the larger of j_0
    // and j_1 keeps the scale factor well defined at zeros of either.
    const int start = max_order + std::max(20, static_cast<int>(std::ceil(1.3 * x)));
    constexpr double kRescaleAt = 1e250;

    double above = 0.0;
    double here = 1e-300;
    for (int n = start; n > max_order; --n) {
        double below = (2.0 * n + 1.0) / x * here - above;
        above = here;
        here = below;
        if (std::abs(here) > kRescaleAt) {
            here /= kRescaleAt;
            above /= kRescaleAt;
        }
    }
    // here = unnormalized j at max_order, above = at max_order + 1.
    j(max_order) = here;
    for (int n = max_order; n >= 1; --n) {
        double below = (2.0 * n + 1.0) / x * j(n) - ((n == max_order) ? above : j(n + 1));
        if (std::abs(below) > kRescaleAt) {
            below /= kRescaleAt;
            for (int i = n; i <= max_order; ++i)
                j(i) /= kRescaleAt;
        }
        j(n - 1) = below;
    }

    const double ref0 = bessel_j0(x);
    const double ref1 = bessel_j1(x);
    const double scale = (std::abs(j(0)) >= std::abs(j(1))) ? ref0 / j(0) : ref1 / j(1);
    j *= scale;
    j(0) = ref0;
    j(1) = ref1;
    return j;
}

double spherical_bessel_j(int n, double x) {
    if (n < 0)
        throw std::invalid_argument("spherical_bessel_j: order must be nonnegative");
    if (!(x >= 0.0))
        throw std::domain_error("spherical_bessel_j: argument must be nonnegative");
    if (n == 0)
        return bessel_j0(x);
    if (n == 1)
        return bessel_j1(x);
    return spherical_bessel_j_sequence(n, x)(n);
}

PlaneWaveSpectrum plane_wave_spectrum(double kd, const Direction &direction, int order) {
    if (!(kd >= 0.0))
        throw std::domain_error("plane_wave_spectrum: kd must be nonnegative");
    if (order < 0)
        throw std::invalid_argument("plane_wave_spectrum: order must be nonnegative");

    const Eigen::VectorXd j = spherical_bessel_j_sequence(order, kd);
    const Eigen::MatrixXcd basis = sh_basis(order, {direction});

    PlaneWaveSpectrum out;
    out.order = order;
    out.kd = kd;
    out.direction = direction;
    out.coeffs.resize(sh_count(order));
    static const std::complex<double> unit_powers[4] = {{1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};
    for (int n = 0; n <= order; ++n) {
        const std::complex<double> radial = 4.0 * M_PI * unit_powers[n % 4] * j(n);
        for (int m = -n; m <= n; ++m)
            out.coeffs(sh_index(n, m)) = radial * std::conj(basis(0, sh_index(n, m)));
    }
    return out;
}

} // namespace diffcoh
