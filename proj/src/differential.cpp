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

#include "diffcoh/differential.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

#include "diffcoh/sh_core.hpp"

namespace diffcoh {

namespace {

constexpr long double kPiL = 3.141592653589793238462643383279502884L;

using LongMatrix = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;
using LongVector = Eigen::Matrix<long double, Eigen::Dynamic, 1>;

using RationalMatrix = std::vector<std::vector<mpq_class>>;

// Column n = monomial coefficients of P_n via the Bonnet recurrence
// (n+1) P_{n+1} = (2n+1) x P_n - n P_{n-1}, kept exact.
RationalMatrix rational_legendre_coeffs(int order) {
    RationalMatrix P(static_cast<std::size_t>(order) + 1,
                     std::vector<mpq_class>(static_cast<std::size_t>(order) + 1, mpq_class(0)));
    P[0][0] = 1;
    if (order >= 1)
        P[1][1] = 1;
    for (int n = 1; n < order; ++n) {
        const std::size_t next = static_cast<std::size_t>(n) + 1;
        for (int row = 0; row <= n + 1; ++row) {
            mpq_class val(0);
            if (row >= 1)
                val += mpq_class(2 * n + 1) * P[static_cast<std::size_t>(row - 1)][static_cast<std::size_t>(n)];
            val -= mpq_class(n) * P[static_cast<std::size_t>(row)][static_cast<std::size_t>(n - 1)];
            P[static_cast<std::size_t>(row)][next] = val / mpq_class(n + 1);
        }
    }
    return P;
}

// Exact inverse by back-substitution on the upper-triangular structure
// (column n of P has zero entries above degree n only in the parity sense,
// but every entry below row n is zero, which is what the solve needs).
RationalMatrix rational_inverse(const RationalMatrix &P) {
    const std::size_t dim = P.size();
    RationalMatrix X(dim, std::vector<mpq_class>(dim, mpq_class(0)));
    for (std::size_t col = 0; col < dim; ++col) {
        for (std::size_t i = dim; i-- > 0;) {
            mpq_class rhs = (i == col) ? mpq_class(1) : mpq_class(0);
            for (std::size_t k = i + 1; k < dim; ++k)
                rhs -= P[i][k] * X[k][col];
            X[i][col] = rhs / P[i][i];
        }
    }
    return X;
}

struct TransformPair {
    LongMatrix legendre;         // P
    LongMatrix legendre_inverse; // P^-1
    Eigen::MatrixXd legendre_double;
};

// The spectral rescaling sqrt(4pi/(2n+1)) applied around the exact-rational
// basis change is done in long double so the documented 1e-12 round-trip
// holds through order 16.
const TransformPair &transform_pair(int order) {
    static std::mutex mutex;
    static std::map<int, TransformPair> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(order);
    if (it != cache.end())
        return it->second;

    const RationalMatrix P = rational_legendre_coeffs(order);
    const RationalMatrix Pinv = rational_inverse(P);
    TransformPair pair;
    pair.legendre.resize(order + 1, order + 1);
    pair.legendre_inverse.resize(order + 1, order + 1);
    pair.legendre_double.resize(order + 1, order + 1);
    for (int r = 0; r <= order; ++r) {
        for (int c = 0; c <= order; ++c) {
            const mpf_class pf(P[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)], 128);
            const mpf_class qf(Pinv[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)], 128);
            const mpf_class p_residual = pf - pf.get_d();
            const mpf_class q_residual = qf - qf.get_d();
            pair.legendre(r, c) = static_cast<long double>(pf.get_d()) +
                                  static_cast<long double>(p_residual.get_d());
            pair.legendre_inverse(r, c) = static_cast<long double>(qf.get_d()) +
                                          static_cast<long double>(q_residual.get_d());
            pair.legendre_double(r, c) = pf.get_d();
        }
    }
    return cache.emplace(order, std::move(pair)).first->second;
}

} // namespace

Eigen::MatrixXd legendre_coeff_matrix(int order) {
    if (order < 0)
        throw std::invalid_argument("legendre_coeff_matrix: order must be nonnegative");
    return transform_pair(order).legendre_double;
}

AxisymmetricSpectrum diff_weights_to_spectrum(const DifferentialWeights &weights) {
    if (weights.size() < 1)
        throw std::invalid_argument("diff_weights_to_spectrum: need at least one weight");
    const int order = static_cast<int>(weights.size()) - 1;
    const TransformPair &pair = transform_pair(order);

    const LongVector legendre_coeffs = pair.legendre_inverse * weights.cast<long double>();
    AxisymmetricSpectrum out(order);
    for (int n = 0; n <= order; ++n) {
        const long double scale = std::sqrt(4.0L * kPiL / (2.0L * n + 1.0L));
        out.coeffs()(n) = static_cast<double>(scale * legendre_coeffs(n));
    }
    return out;
}

DifferentialWeights spectrum_to_diff_weights(const AxisymmetricSpectrum &pattern) {
    const int order = pattern.order();
    const TransformPair &pair = transform_pair(order);

    LongVector legendre_coeffs(order + 1);
    for (int n = 0; n <= order; ++n) {
        const long double scale = std::sqrt((2.0L * n + 1.0L) / (4.0L * kPiL));
        legendre_coeffs(n) = scale * static_cast<long double>(pattern.at(n).real());
    }
    const LongVector monomial = pair.legendre * legendre_coeffs;
    return monomial.cast<double>();
}

CoherenceResult differential_pair_coherence(const DifferentialWeights &w1, const Direction &aim1,
                                            const Eigen::Vector3d &position1, const DifferentialWeights &w2,
                                            const Direction &aim2, const Eigen::Vector3d &position2, double k) {
    const SensorPlacement f{steer_axisymmetric(diff_weights_to_spectrum(w1), aim1), position1};
    const SensorPlacement g{steer_axisymmetric(diff_weights_to_spectrum(w2), aim2), position2};
    return coherence_pair(f, g, k);
}

} // namespace diffcoh
