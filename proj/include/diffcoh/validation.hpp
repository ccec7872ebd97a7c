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

#ifndef DIFFCOH_VALIDATION_HPP
#define DIFFCOH_VALIDATION_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace diffcoh {

/// Outcome of one validation check. `max_error` is the worst deviation
/// observed across the check's cases, compared against the fixed
/// `tolerance`; `seconds` is wall time for the whole check.
struct CheckResult {
    std::string name;
    double max_error = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    double seconds = 0.0;
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;
    bool pass = false;
};

/// Fixed-value checks against analytically known results: sinc coherence
/// of omni pairs, collinear dipoles, Gaunt coefficients vs dense
/// quadrature, differential-weight transforms, closed-form Bessel values.
SuiteReport run_closed_forms_suite();

/// Seeded randomized cross-validation of the spectral route against the
/// independent quadrature oracle, plane-wave truncation stability, and the
/// synthetic measured-array path against the sinc closed form.
SuiteReport run_oracle_random_suite(std::uint64_t seed);

/// Seeded Monte-Carlo diffuse-field simulations compared with the
/// quadrature oracle within reported standard errors, plus an isotropy
/// check of the direction sampler.
SuiteReport run_montecarlo_suite(std::uint64_t seed);

/// Finds a check by name across reports; returns nullptr when absent.
const CheckResult *find_check(const std::vector<SuiteReport> &reports, const std::string &name);

} // namespace diffcoh

#endif
