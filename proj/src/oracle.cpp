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

#include "diffcoh/oracle.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "diffcoh/errors.hpp"
#include "diffcoh/sh_core.hpp"

namespace diffcoh {

namespace {

// splitmix64 step; used to derive independent per-trial seeds so trials
// can be reordered or parallelized without changing results.
std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Uniform variate in (0, 1), identical across platforms (avoids the
// implementation-defined std::uniform_real_distribution).
double unit_uniform(std::mt19937_64 &rng) { return (static_cast<double>(rng() >> 11) + 0.5) * 0x1p-53; }

} // namespace

DirectionalFunction spectrum_function(const SphericalSpectrum &spectrum) {
    return [spectrum](const Direction &dir) {
        std::complex<double> acc(0.0, 0.0);
        const Eigen::MatrixXd P = normalized_legendre(spectrum.order(), std::cos(dir.theta));
        for (int n = 0; n <= spectrum.order(); ++n) {
            acc += spectrum.at(n, 0) * P(n, 0);
            for (int m = 1; m <= n; ++m) {
                const std::complex<double> e(std::cos(m * dir.phi), std::sin(m * dir.phi));
                const double sign = (m % 2 == 0) ? 1.0 : -1.0;
                acc += spectrum.at(n, m) * P(n, m) * e;
                acc += spectrum.at(n, -m) * sign * P(n, m) * std::conj(e);
            }
        }
        return acc;
    };
}

std::complex<double> coherence_quadrature(const DirectionalFunction &f, const DirectionalFunction &g,
                                          const Eigen::Vector3d &r12, double k, int quad_order) {
    if (k < 0.0)
        throw std::domain_error("coherence_quadrature: wavenumber must be nonnegative");

    const SphereGrid grid = SphereGrid::gauss_legendre(quad_order);
    std::complex<double> numerator(0.0, 0.0);
    double energy_f = 0.0;
    double energy_g = 0.0;

    for (std::size_t i = 0; i < grid.size(); ++i) {
        const Direction &dir = grid.directions()[i];
        const double w = grid.weights()[i];
        const std::complex<double> fv = f(dir);
        const std::complex<double> gv = g(dir);
        const double phase = -k * unit_vector(dir).dot(r12);
        numerator += w * fv * std::conj(gv) * std::complex<double>(std::cos(phase), std::sin(phase));
        energy_f += w * std::norm(fv);
        energy_g += w * std::norm(gv);
    }

    const double denominator = std::sqrt(energy_f * energy_g);
    if (denominator == 0.0)
        throw degenerate_sensor_error("coherence_quadrature: a sensor integrates to zero energy");
    return numerator / denominator;
}

Direction direction_from_uniforms(double u, double v) {
    const double cos_theta = 1.0 - 2.0 * u;
    return Direction{std::acos(std::min(1.0, std::max(-1.0, cos_theta))), 2.0 * M_PI * v};
}

MonteCarloCoherence diffuse_field_montecarlo(const DirectionalFunction &f, const DirectionalFunction &g,
                                             const Eigen::Vector3d &r12, double k, int waves, int trials,
                                             std::uint64_t seed) {
    if (waves < 1 || trials < 2)
        throw std::invalid_argument("diffuse_field_montecarlo: need at least 1 wave and 2 trials");
    if (k < 0.0)
        throw std::domain_error("diffuse_field_montecarlo: wavenumber must be nonnegative");

    std::vector<std::complex<double>> csd(static_cast<std::size_t>(trials));
    std::vector<double> psd_f(static_cast<std::size_t>(trials));
    std::vector<double> psd_g(static_cast<std::size_t>(trials));

    for (int t = 0; t < trials; ++t) {
        std::mt19937_64 rng(mix64(seed + static_cast<std::uint64_t>(t)));
        std::complex<double> xf(0.0, 0.0);
        std::complex<double> xg(0.0, 0.0);
        for (int wv = 0; wv < waves; ++wv) {
            const Direction dir = direction_from_uniforms(unit_uniform(rng), unit_uniform(rng));
            // Circular complex Gaussian amplitude, E|a|^2 = 1.
            const double radius = std::sqrt(-std::log(unit_uniform(rng)));
            const double angle = 2.0 * M_PI * unit_uniform(rng);
            const std::complex<double> amp = radius * std::complex<double>(std::cos(angle), std::sin(angle));

            const double phase = k * unit_vector(dir).dot(r12);
            xf += amp * f(dir);
            xg += amp * g(dir) * std::complex<double>(std::cos(phase), std::sin(phase));
        }
        const std::size_t ti = static_cast<std::size_t>(t);
        csd[ti] = xf * std::conj(xg);
        psd_f[ti] = std::norm(xf);
        psd_g[ti] = std::norm(xg);
    }

    std::complex<double> csd_sum(0.0, 0.0);
    double f_sum = 0.0;
    double g_sum = 0.0;
    for (std::size_t t = 0; t < csd.size(); ++t) {
        csd_sum += csd[t];
        f_sum += psd_f[t];
        g_sum += psd_g[t];
    }

    MonteCarloCoherence out;
    out.trials = trials;
    out.waves_per_trial = waves;
    out.gamma = csd_sum / std::sqrt(f_sum * g_sum);

    // Delete-one jackknife over trials on the ratio estimator.
    std::vector<std::complex<double>> leave_out(csd.size());
    std::complex<double> jack_mean(0.0, 0.0);
    for (std::size_t t = 0; t < csd.size(); ++t) {
        leave_out[t] = (csd_sum - csd[t]) / std::sqrt((f_sum - psd_f[t]) * (g_sum - psd_g[t]));
        jack_mean += leave_out[t];
    }
    jack_mean /= static_cast<double>(csd.size());
    double scatter = 0.0;
    for (const auto &v : leave_out)
        scatter += std::norm(v - jack_mean);
    const double n = static_cast<double>(csd.size());
    out.standard_error = std::sqrt((n - 1.0) / n * scatter);
    return out;
}

} // namespace diffcoh
