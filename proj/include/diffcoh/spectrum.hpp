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

#ifndef DIFFCOH_SPECTRUM_HPP
#define DIFFCOH_SPECTRUM_HPP

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <utility>

namespace diffcoh {

/// Number of spherical-harmonic modes up to and including `order`.
constexpr int sh_count(int order) { return (order + 1) * (order + 1); }

/// Zero-based position of mode (n, m) in a coefficient vector. The layout is
/// (0,0), (1,-1), (1,0), (1,1), (2,-2), ... i.e. index n*n + n + m.
constexpr int sh_index(int n, int m) { return n * n + n + m; }

/// Inverse of sh_index: (n, m) of the zero-based position q.
inline std::pair<int, int> sh_mode(int q) {
    int n = static_cast<int>(std::sqrt(static_cast<double>(q)));
    while (n * n > q) --n;
    while ((n + 1) * (n + 1) <= q) ++n;
    return {n, q - n * n - n};
}

/// Angular spectrum of a square-integrable function on the sphere,
/// band-limited to `order`: the complex coefficients f_nm of its expansion in
/// orthonormal spherical harmonics, stored in sh_index order.
class SphericalSpectrum {
  public:
    explicit SphericalSpectrum(int order)
        : order_(checked_order(order)), coeffs_(Eigen::VectorXcd::Zero(sh_count(order))) {}

    SphericalSpectrum(int order, Eigen::VectorXcd coeffs) : order_(checked_order(order)), coeffs_(std::move(coeffs)) {
        if (coeffs_.size() != sh_count(order_))
            throw std::invalid_argument("SphericalSpectrum: coefficient vector must have (order+1)^2 entries");
    }

    int order() const { return order_; }
    Eigen::Index size() const { return coeffs_.size(); }
    const Eigen::VectorXcd &coeffs() const { return coeffs_; }
    Eigen::VectorXcd &coeffs() { return coeffs_; }

    std::complex<double> at(int n, int m) const { return coeffs_(checked_index(n, m)); }
    std::complex<double> &at(int n, int m) { return coeffs_(checked_index(n, m)); }

    double squared_norm() const { return coeffs_.squaredNorm(); }
    double norm() const { return coeffs_.norm(); }

    /// Copy extended (zero-padded) or truncated to a new order.
    SphericalSpectrum resized(int order) const {
        SphericalSpectrum out(order);
        const Eigen::Index n = std::min(out.coeffs_.size(), coeffs_.size());
        out.coeffs_.head(n) = coeffs_.head(n);
        return out;
    }

  private:
    static int checked_order(int order) {
        if (order < 0)
            throw std::invalid_argument("SphericalSpectrum: order must be nonnegative");
        return order;
    }
    int checked_index(int n, int m) const {
        if (n < 0 || n > order_ || std::abs(m) > n)
            throw std::domain_error("SphericalSpectrum: mode (n, m) out of range");
        return sh_index(n, m);
    }

    int order_;
    Eigen::VectorXcd coeffs_;
};

/// Reduced spectrum of a rotationally symmetric (z-aligned) pattern: the m=0
/// coefficients only, one per order.
class AxisymmetricSpectrum {
  public:
    explicit AxisymmetricSpectrum(int order)
        : order_(checked_order(order)), coeffs_(Eigen::VectorXcd::Zero(order + 1)) {}

    AxisymmetricSpectrum(int order, Eigen::VectorXcd coeffs) : order_(checked_order(order)), coeffs_(std::move(coeffs)) {
        if (coeffs_.size() != order_ + 1)
            throw std::invalid_argument("AxisymmetricSpectrum: coefficient vector must have order+1 entries");
    }

    int order() const { return order_; }
    const Eigen::VectorXcd &coeffs() const { return coeffs_; }
    Eigen::VectorXcd &coeffs() { return coeffs_; }
    std::complex<double> at(int n) const { return coeffs_(n); }

  private:
    static int checked_order(int order) {
        if (order < 0)
            throw std::invalid_argument("AxisymmetricSpectrum: order must be nonnegative");
        return order;
    }

    int order_;
    Eigen::VectorXcd coeffs_;
};

} // namespace diffcoh

#endif
