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

#include "diffcoh/sh_core.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include <Eigen/SVD>

namespace diffcoh {

namespace {

constexpr double kFourPi = 4.0 * M_PI;

// Largest degree the explicit Wigner-d factorial sum resolves to full
// double accuracy; beyond it the alternating sum loses too many digits.
constexpr int kMaxRotationOrder = 32;

int parity(int m) { return (m % 2 == 0) ? 1 : -1; }

// x^k for integer k >= 0 without the pow(0, 0) edge case.
long double powi(long double x, int k) {
    long double r = 1.0L;
    for (int i = 0; i < k; ++i)
        r *= x;
    return r;
}

// log(k!) in extended precision, memoized. The Wigner-d sum alternates, so
// the extra mantissa bits of long double directly reduce cancellation loss.
long double log_factorial(int k) {
    static const std::vector<long double> table = [] {
        std::vector<long double> t(4 * kMaxRotationOrder + 2, 0.0L);
        for (std::size_t i = 2; i < t.size(); ++i)
            t[i] = t[i - 1] + std::log(static_cast<long double>(i));
        return t;
    }();
    return table[static_cast<std::size_t>(k)];
}

// Unit-modulus phases e^{i m phi} for m = 0..order, built by repeated
// multiplication (cheaper than order trig calls, error growth negligible
// at the orders used here).
std::vector<std::complex<double>> phase_table(int order, double phi) {
    std::vector<std::complex<double>> e(static_cast<std::size_t>(order) + 1);
    const std::complex<double> step(std::cos(phi), std::sin(phi));
    e[0] = 1.0;
    for (int m = 1; m <= order; ++m)
        e[static_cast<std::size_t>(m)] = e[static_cast<std::size_t>(m - 1)] * step;
    return e;
}

// Fills one basis row: all Y_nm(dir) for n <= order, in sh_index order.
template <typename RowXpr> void fill_sh_row(int order, const Direction &dir, RowXpr &&row) {
    const Eigen::MatrixXd P = normalized_legendre(order, std::cos(dir.theta));
    const auto e = phase_table(order, dir.phi);
    for (int n = 0; n <= order; ++n) {
        row(sh_index(n, 0)) = P(n, 0);
        for (int m = 1; m <= n; ++m) {
            const std::complex<double> pos = P(n, m) * e[static_cast<std::size_t>(m)];
            row(sh_index(n, m)) = pos;
            row(sh_index(n, -m)) = static_cast<double>(parity(m)) * std::conj(pos);
        }
    }
}

} // namespace

Eigen::MatrixXd normalized_legendre(int order, double x) {
    if (order < 0)
        throw std::invalid_argument("normalized_legendre: order must be nonnegative");
    if (!(x >= -1.0 && x <= 1.0))
        throw std::domain_error("normalized_legendre: argument must lie in [-1, 1]");

    Eigen::MatrixXd P = Eigen::MatrixXd::Zero(order + 1, order + 1);
    const double s = std::sqrt(std::max(0.0, 1.0 - x * x));

    // Diagonal seed carries the Condon-Shortley sign, so the returned rows
    // satisfy Y_nm(theta, 0) = P(n, m) for m >= 0 directly.
    P(0, 0) = 1.0 / std::sqrt(kFourPi);
    for (int m = 1; m <= order; ++m)
        P(m, m) = -std::sqrt((2.0 * m + 1.0) / (2.0 * m)) * s * P(m - 1, m - 1);

    for (int m = 0; m < order; ++m)
        P(m + 1, m) = std::sqrt(2.0 * m + 3.0) * x * P(m, m);

    for (int m = 0; m <= order; ++m) {
        for (int n = m + 2; n <= order; ++n) {
            const double a = std::sqrt((4.0 * n * n - 1.0) / (static_cast<double>(n) * n - static_cast<double>(m) * m));
            const double b =
                std::sqrt((static_cast<double>(n - 1) * (n - 1) - static_cast<double>(m) * m) /
                          (4.0 * static_cast<double>(n - 1) * (n - 1) - 1.0));
            P(n, m) = a * (x * P(n - 1, m) - b * P(n - 2, m));
        }
    }
    return P;
}

std::complex<double> eval_sh(int n, int m, const Direction &dir) {
    if (n < 0 || std::abs(m) > n)
        throw std::domain_error("eval_sh: require n >= 0 and |m| <= n");
    const int mu = std::abs(m);
    const Eigen::MatrixXd P = normalized_legendre(n, std::cos(dir.theta));
    const std::complex<double> val =
        P(n, mu) * std::complex<double>(std::cos(m * dir.phi), std::sin(m * dir.phi));
    return (m >= 0) ? val : static_cast<double>(parity(mu)) * val;
}

Eigen::MatrixXcd sh_basis(int order, const std::vector<Direction> &dirs) {
    if (order < 0)
        throw std::invalid_argument("sh_basis: order must be nonnegative");
    Eigen::MatrixXcd B(static_cast<Eigen::Index>(dirs.size()), sh_count(order));
    for (Eigen::Index k = 0; k < B.rows(); ++k) {
        auto row = B.row(k);
        fill_sh_row(order, dirs[static_cast<std::size_t>(k)], row);
    }
    return B;
}

Eigen::VectorXcd isht(const SphericalSpectrum &spectrum, const std::vector<Direction> &dirs) {
    return sh_basis(spectrum.order(), dirs) * spectrum.coeffs();
}

ShtResult sht(int order, const SphereGrid &grid, const Eigen::VectorXcd &samples) {
    if (order < 0)
        throw std::invalid_argument("sht: order must be nonnegative");
    if (samples.size() != static_cast<Eigen::Index>(grid.size()))
        throw std::invalid_argument("sht: sample count must match grid size");

    const Eigen::MatrixXcd B = sh_basis(order, grid.directions());
    ShtResult out{SphericalSpectrum(order), 1.0, true};

    if (grid.has_weights()) {
        Eigen::Map<const Eigen::VectorXd> w(grid.weights().data(), static_cast<Eigen::Index>(grid.weights().size()));
        out.spectrum.coeffs() = B.adjoint() * (w.asDiagonal() * samples);
        return out;
    }

    if (samples.size() < sh_count(order))
        throw std::invalid_argument("sht: least-squares analysis needs at least (order+1)^2 samples");

    Eigen::BDCSVD<Eigen::MatrixXcd> svd(B, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto &sv = svd.singularValues();
    const double smin = sv(sv.size() - 1);
    out.condition_number = (smin > 0.0) ? sv(0) / smin : std::numeric_limits<double>::infinity();
    out.well_conditioned = out.condition_number <= ls_condition_threshold();
    out.spectrum.coeffs() = svd.solve(samples);
    return out;
}

SphericalSpectrum conjugate_spectrum(const SphericalSpectrum &spectrum) {
    const int order = spectrum.order();
    SphericalSpectrum out(order);
    for (int n = 0; n <= order; ++n)
        for (int m = -n; m <= n; ++m)
            out.at(n, m) = static_cast<double>(parity(std::abs(m))) * std::conj(spectrum.at(n, -m));
    return out;
}

SphericalSpectrum steer_axisymmetric(const AxisymmetricSpectrum &pattern, const Direction &aim) {
    const int order = pattern.order();
    SphericalSpectrum out(order);
    Eigen::VectorXcd row(sh_count(order));
    fill_sh_row(order, aim, row);
    for (int n = 0; n <= order; ++n) {
        const std::complex<double> scale = std::sqrt(kFourPi / (2.0 * n + 1.0)) * pattern.at(n);
        for (int m = -n; m <= n; ++m)
            out.at(n, m) = scale * std::conj(row(sh_index(n, m)));
    }
    return out;
}

double wigner_d_entry(int n, int mp, int m, double beta) {
    if (n < 0 || n > kMaxRotationOrder || std::abs(mp) > n || std::abs(m) > n)
        throw std::domain_error("wigner_d_entry: require 0 <= n <= 32 and |m'|, |m| <= n");

    const long double c = std::cos(static_cast<long double>(beta) / 2.0L);
    const long double si = std::sin(static_cast<long double>(beta) / 2.0L);
    const long double logpre =
        0.5L * (log_factorial(n + mp) + log_factorial(n - mp) + log_factorial(n + m) + log_factorial(n - m));

    const int s_lo = std::max(0, m - mp);
    const int s_hi = std::min(n + m, n - mp);
    long double sum = 0.0L;
    for (int s = s_lo; s <= s_hi; ++s) {
        const long double logden =
            log_factorial(n + m - s) + log_factorial(s) + log_factorial(mp - m + s) + log_factorial(n - mp - s);
        const long double mag =
            std::exp(logpre - logden) * powi(c, 2 * n + m - mp - 2 * s) * powi(si, mp - m + 2 * s);
        sum += static_cast<long double>(parity(mp - m + s)) * mag;
    }
    return static_cast<double>(sum);
}

SphericalSpectrum rotate_spectrum(const SphericalSpectrum &spectrum, const EulerAngles &euler) {
    const int order = spectrum.order();
    if (order > kMaxRotationOrder)
        throw std::domain_error("rotate_spectrum: supported through order 32");

    SphericalSpectrum out(order);
    for (int n = 0; n <= order; ++n) {
        for (int mp = -n; mp <= n; ++mp) {
            const std::complex<double> ea(std::cos(mp * euler.alpha), -std::sin(mp * euler.alpha));
            std::complex<double> acc(0.0, 0.0);
            for (int m = -n; m <= n; ++m) {
                const std::complex<double> eg(std::cos(m * euler.gamma), -std::sin(m * euler.gamma));
                acc += wigner_d_entry(n, mp, m, euler.beta) * eg * spectrum.at(n, m);
            }
            out.at(n, mp) = ea * acc;
        }
    }
    return out;
}

} // namespace diffcoh
