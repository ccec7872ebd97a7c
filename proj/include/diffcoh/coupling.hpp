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

#ifndef DIFFCOH_COUPLING_HPP
#define DIFFCOH_COUPLING_HPP

#include <vector>

#include <Eigen/Dense>

#include "diffcoh/spectrum.hpp"

namespace diffcoh {

/// Wigner 3j symbol (j1 j2 j3; m1 m2 m3) for integer arguments. Evaluated
/// from the Racah sum in exact rational arithmetic, so the result is
/// correctly rounded for every argument combination this library reaches.
/// Selection-rule violations return 0.
double wigner3j(int j1, int j2, int j3, int m1, int m2, int m3);

/// Gaunt coefficient: the integral of Y_{n1 m1} Y_{n2 m2} conj(Y_{n3 m3})
/// over the sphere. Nonzero only for m3 = m1 + m2, degrees satisfying the
/// triangle inequality, and even n1 + n2 + n3.
double gaunt(int n1, int m1, int n2, int m2, int n3, int m3);

/// One coupling term: product coefficient q3 receives value * f(q1) * g(q2).
struct GauntEntry {
    int q1;
    int q2;
    double value;
};

/// All nonzero Gaunt couplings between spectra of orders (order_a, order_b),
/// grouped by output mode. Construction cost grows quickly with order;
/// see shared_gaunt_table for the cached sizes.
class GauntTable {
  public:
    GauntTable(int order_a, int order_b);

    int order_a() const { return order_a_; }
    int order_b() const { return order_b_; }
    int product_order() const { return order_a_ + order_b_; }

    /// Couplings feeding output mode q3 (sh_index position, order <= a+b).
    const std::vector<GauntEntry> &couplings_to(int q3) const { return by_output_[static_cast<std::size_t>(q3)]; }

  private:
    int order_a_;
    int order_b_;
    std::vector<std::vector<GauntEntry>> by_output_;
};

/// Process-wide table cache, thread safe. Tables with both orders <= 8 are
/// built once and retained; larger requests are refused so callers don't
/// silently grow an unbounded cache (build a GauntTable directly instead).
const GauntTable &shared_gaunt_table(int order_a, int order_b);

/// Spectrum of the pointwise product of two patterns, exact at order
/// f.order() + g.order().
SphericalSpectrum product_spectrum(const GauntTable &table, const SphericalSpectrum &f, const SphericalSpectrum &g);

/// Convenience overload: uses the shared cache for small orders and a
/// transient table otherwise.
SphericalSpectrum product_spectrum(const SphericalSpectrum &f, const SphericalSpectrum &g);

/// Linear map of the product with a fixed right factor: A * f.coeffs() is
/// the product spectrum of f (order table.order_a()) with g. Rows span the
/// product order, columns the left factor's modes.
Eigen::MatrixXcd gaunt_matrix(const GauntTable &table, const SphericalSpectrum &g);

} // namespace diffcoh

#endif
