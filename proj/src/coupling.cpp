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

#include "diffcoh/coupling.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <utility>

#include <gmpxx.h>

namespace diffcoh {

namespace {

constexpr int kMaxCachedOrder = 8;

int parity(int m) { return (m % 2 == 0) ? 1 : -1; }

// Exact k! as a big integer. 200 covers every degree combination the
// library admits (rotations cap at 32, products at 64 total).
const mpz_class &factorial(int k) {
    constexpr int kMax = 200;
    static const std::vector<mpz_class> table = [] {
        std::vector<mpz_class> t(kMax + 1);
        t[0] = 1;
        for (int i = 1; i <= kMax; ++i)
            t[static_cast<std::size_t>(i)] = t[static_cast<std::size_t>(i - 1)] * i;
        return t;
    }();
    if (k < 0 || k > kMax)
        throw std::domain_error("factorial: argument out of table range");
    return table[static_cast<std::size_t>(k)];
}

} // namespace

double wigner3j(int j1, int j2, int j3, int m1, int m2, int m3) {
    if (j1 < 0 || j2 < 0 || j3 < 0)
        throw std::domain_error("wigner3j: degrees must be nonnegative");
    if (m1 + m2 + m3 != 0)
        return 0.0;
    if (std::abs(m1) > j1 || std::abs(m2) > j2 || std::abs(m3) > j3)
        return 0.0;
    if (j3 < std::abs(j1 - j2) || j3 > j1 + j2)
        return 0.0;

    // Racah's single-sum form, evaluated in exact rationals; the only
    // rounding is the final square root.
    const int t_lo = std::max({0, j2 - j3 - m1, j1 - j3 + m2});
    const int t_hi = std::min({j1 + j2 - j3, j1 - m1, j2 + m2});
    mpq_class series = 0;
    for (int t = t_lo; t <= t_hi; ++t) {
        mpz_class den = factorial(t) * factorial(j1 + j2 - j3 - t) * factorial(j1 - m1 - t) *
                        factorial(j2 + m2 - t) * factorial(j3 - j2 + m1 + t) * factorial(j3 - j1 - m2 + t);
        mpq_class term(mpz_class(parity(t)), den);
        term.canonicalize();
        series += term;
    }
    if (series == 0)
        return 0.0;

    mpq_class triangle(factorial(j1 + j2 - j3) * factorial(j1 - j2 + j3) * factorial(-j1 + j2 + j3),
                       factorial(j1 + j2 + j3 + 1));
    triangle.canonicalize();
    const mpz_class moments = factorial(j1 + m1) * factorial(j1 - m1) * factorial(j2 + m2) *
                              factorial(j2 - m2) * factorial(j3 + m3) * factorial(j3 - m3);
    const mpq_class square = triangle * moments * series * series;

    mpf_class value(square.get_num(), 256);
    value /= mpf_class(square.get_den(), 256);
    const mpf_class root = sqrt(value);
    return parity(j1 - j2 - m3) * sgn(series) * root.get_d();
}

double gaunt(int n1, int m1, int n2, int m2, int n3, int m3) {
    if (n1 < 0 || n2 < 0 || n3 < 0)
        throw std::domain_error("gaunt: degrees must be nonnegative");
    if (m1 + m2 != m3)
        return 0.0;
    const double scale =
        std::sqrt((2.0 * n1 + 1.0) * (2.0 * n2 + 1.0) * (2.0 * n3 + 1.0) / (4.0 * M_PI));
    return parity(m3) * scale * wigner3j(n1, n2, n3, 0, 0, 0) * wigner3j(n1, n2, n3, m1, m2, -m3);
}

GauntTable::GauntTable(int order_a, int order_b) : order_a_(order_a), order_b_(order_b) {
    if (order_a < 0 || order_b < 0)
        throw std::invalid_argument("GauntTable: orders must be nonnegative");
    by_output_.resize(static_cast<std::size_t>(sh_count(order_a + order_b)));

    for (int n1 = 0; n1 <= order_a; ++n1) {
        for (int n2 = 0; n2 <= order_b; ++n2) {
            // Parity and triangle rules leave every second degree in range.
            for (int n3 = std::abs(n1 - n2); n3 <= n1 + n2; n3 += 2) {
                const double w000 = wigner3j(n1, n2, n3, 0, 0, 0);
                if (w000 == 0.0)
                    continue;
                const double scale =
                    std::sqrt((2.0 * n1 + 1.0) * (2.0 * n2 + 1.0) * (2.0 * n3 + 1.0) / (4.0 * M_PI)) * w000;
                for (int m1 = -n1; m1 <= n1; ++m1) {
                    for (int m2 = -n2; m2 <= n2; ++m2) {
                        const int m3 = m1 + m2;
                        if (std::abs(m3) > n3)
                            continue;
                        const double w = wigner3j(n1, n2, n3, m1, m2, -m3);
                        if (w == 0.0)
                            continue;
                        const double value = parity(m3) * scale * w;
                        by_output_[static_cast<std::size_t>(sh_index(n3, m3))].push_back(
                            {sh_index(n1, m1), sh_index(n2, m2), value});
                    }
                }
            }
        }
    }
}

const GauntTable &shared_gaunt_table(int order_a, int order_b) {
    if (order_a > kMaxCachedOrder || order_b > kMaxCachedOrder)
        throw std::invalid_argument("shared_gaunt_table: cached tables cover orders up to 8");
    static std::mutex mutex;
    static std::map<std::pair<int, int>, std::unique_ptr<GauntTable>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto &slot = cache[{order_a, order_b}];
    if (!slot)
        slot = std::make_unique<GauntTable>(order_a, order_b);
    return *slot;
}

SphericalSpectrum product_spectrum(const GauntTable &table, const SphericalSpectrum &f, const SphericalSpectrum &g) {
    if (f.order() != table.order_a() || g.order() != table.order_b())
        throw std::invalid_argument("product_spectrum: spectra orders must match the table");
    SphericalSpectrum out(table.product_order());
    for (int q3 = 0; q3 < sh_count(table.product_order()); ++q3) {
        std::complex<double> acc(0.0, 0.0);
        for (const GauntEntry &e : table.couplings_to(q3))
            acc += e.value * f.coeffs()(e.q1) * g.coeffs()(e.q2);
        out.coeffs()(q3) = acc;
    }
    return out;
}

SphericalSpectrum product_spectrum(const SphericalSpectrum &f, const SphericalSpectrum &g) {
    if (f.order() <= kMaxCachedOrder && g.order() <= kMaxCachedOrder)
        return product_spectrum(shared_gaunt_table(f.order(), g.order()), f, g);
    return product_spectrum(GauntTable(f.order(), g.order()), f, g);
}

Eigen::MatrixXcd gaunt_matrix(const GauntTable &table, const SphericalSpectrum &g) {
    if (g.order() != table.order_b())
        throw std::invalid_argument("gaunt_matrix: right factor order must match the table");
    Eigen::MatrixXcd A = Eigen::MatrixXcd::Zero(sh_count(table.product_order()), sh_count(table.order_a()));
    for (int q3 = 0; q3 < A.rows(); ++q3)
        for (const GauntEntry &e : table.couplings_to(q3))
            A(q3, e.q1) += e.value * g.coeffs()(e.q2);
    return A;
}

} // namespace diffcoh
