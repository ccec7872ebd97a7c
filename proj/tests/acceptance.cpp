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

// Acceptance gate: every release-blocking requirement of the library as one
// pass/fail line. Runs the validation suites at the pinned seed and checks
// the CLI for byte-identical repeated output. Usage:
//
//   acceptance <path-to-diffcoh-cli>
//
// Exit code is the number of failed requirements.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "diffcoh/direction.hpp"
#include "diffcoh/io.hpp"
#include "diffcoh/validation.hpp"

using namespace diffcoh;

namespace {

constexpr std::uint64_t kSeed = 42;

struct Requirement {
    std::string label;
    bool pass = false;
    std::string detail;
};

std::string describe(const CheckResult &check) {
    std::ostringstream out;
    out << check.name << " max_error=" << format_number(check.max_error)
        << " tolerance=" << format_number(check.tolerance);
    return out.str();
}

// Combines named checks plus an optional wall-time budget on their total.
Requirement from_checks(const std::vector<SuiteReport> &reports, const std::string &label,
                        const std::vector<std::string> &names, double seconds_budget = -1.0) {
    Requirement req;
    req.label = label;
    req.pass = true;
    double seconds = 0.0;
    std::ostringstream detail;
    for (std::size_t i = 0; i < names.size(); ++i) {
        const CheckResult *check = find_check(reports, names[i]);
        if (check == nullptr) {
            req.pass = false;
            detail << (i > 0 ? "; " : "") << names[i] << " missing";
            continue;
        }
        req.pass = req.pass && check->pass;
        seconds += check->seconds;
        detail << (i > 0 ? "; " : "") << describe(*check);
    }
    if (seconds_budget > 0.0) {
        char buffer[64];
        std::snprintf(buffer, sizeof(buffer), "; %.2f s of %.0f s budget", seconds, seconds_budget);
        detail << buffer;
        if (seconds >= seconds_budget)
            req.pass = false;
    }
    req.detail = detail.str();
    return req;
}

std::string read_all(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_all(const std::string &path, const std::string &content) {
    std::ofstream out(path, std::ios::binary);
    out << content;
}

bool run_command(const std::string &command) {
    return std::system(command.c_str()) == 0;
}

std::string measurement_json() {
    // Synthetic two-omni array on a weighted quadrature grid, radius 5 cm.
    const SphereGrid grid = SphereGrid::gauss_legendre(2);
    const double k1 = 2.0 * M_PI * 1000.0 / 343.0;
    const double k2 = 2.0 * M_PI * 2000.0 / 343.0;
    const Eigen::Vector3d d(0.0, 0.0, 0.04);

    std::ostringstream out;
    out << "{\n  \"frequencies\": [1000, 2000],\n  \"radius\": 0.05,\n  \"grid\": {\n    \"directions\": [";
    for (std::size_t i = 0; i < grid.size(); ++i)
        out << (i > 0 ? ", " : "") << "[" << format_number_full(grid.directions()[i].theta) << ", "
            << format_number_full(grid.directions()[i].phi) << "]";
    out << "],\n    \"weights\": [";
    for (std::size_t i = 0; i < grid.size(); ++i)
        out << (i > 0 ? ", " : "") << format_number_full(grid.weights()[i]);
    out << "]\n  },\n  \"responses\": [\n";
    for (int fi = 0; fi < 2; ++fi) {
        const double k = (fi == 0) ? k1 : k2;
        out << "    [";
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const double phase = k * unit_vector(grid.directions()[i]).dot(d);
            out << (i > 0 ? ", " : "") << "[[1, 0], [" << format_number_full(std::cos(phase)) << ", "
                << format_number_full(std::sin(phase)) << "]]";
        }
        out << "]" << (fi == 0 ? "," : "") << "\n";
    }
    out << "  ]\n}\n";
    return out.str();
}

Requirement cli_determinism(const std::string &cli) {
    Requirement req;
    req.label = "CLI repeats are byte-identical";

    const std::string pair_spec = R"({
        "sensors": [
            {"analytic": {"kind": "cardioid"}, "orientation": {"theta": 1.1, "phi": 0.4}},
            {"differential": {"weights": [0.25, 0.25, 0.5]},
             "euler": {"alpha": 0.2, "beta": 0.9, "gamma": 1.7},
             "position": {"x": 0.0, "y": 0.02, "z": 0.05}}
        ]
    })";
    namespace fs = std::filesystem;
    const fs::path scratch = fs::temp_directory_path() / ("diffcoh_acceptance_" + std::to_string(::getpid()));
    fs::create_directories(scratch);
    const auto at = [&scratch](const char *name) { return (scratch / name).string(); };
    const auto quote = [](const std::string &s) { return "\"" + s + "\""; };

    write_all(at("pair.json"), pair_spec);
    write_all(at("meas.json"), measurement_json());

    const std::string quoted = quote(cli);
    std::ostringstream detail;
    bool ok = true;

    const std::string pair_cmd = quoted + " pair --spec " + quote(at("pair.json")) + " --freqs 200:200:4000";
    ok = ok && run_command(pair_cmd + " --out " + quote(at("pair_a.csv")));
    ok = ok && run_command(pair_cmd + " --out " + quote(at("pair_b.csv")));
    const std::string pair_a = read_all(at("pair_a.csv"));
    if (ok && (pair_a.empty() || pair_a != read_all(at("pair_b.csv")))) {
        ok = false;
        detail << "pair CSV runs differ; ";
    }

    const std::string array_cmd = quoted + " array --meas " + quote(at("meas.json"));
    ok = ok && run_command(array_cmd + " --out " + quote(at("array_a.json")));
    ok = ok && run_command(array_cmd + " --out " + quote(at("array_b.json")));
    const std::string array_a = read_all(at("array_a.json"));
    if (ok && (array_a.empty() || array_a != read_all(at("array_b.json")))) {
        ok = false;
        detail << "array JSON runs differ; ";
    }

    const std::string diff_cmd = quoted + " diffpattern --weights 0.25,0.25,0.5 --orient 1.2,0.7";
    ok = ok && run_command(diff_cmd + " > " + quote(at("diff_a.json")) + " 2>/dev/null");
    ok = ok && run_command(diff_cmd + " > " + quote(at("diff_b.json")) + " 2>/dev/null");
    const std::string diff_a = read_all(at("diff_a.json"));
    if (ok && (diff_a.empty() || diff_a != read_all(at("diff_b.json")))) {
        ok = false;
        detail << "diffpattern runs differ; ";
    }

    if (!ok && detail.str().empty())
        detail << "a CLI invocation failed; ";
    if (ok) {
        detail << "pair CSV, array JSON and diffpattern dumps identical across repeated runs";
        fs::remove_all(scratch);
    } else {
        detail << "artifacts kept in " << scratch.string();
    }
    req.pass = ok;
    req.detail = detail.str();
    return req;
}

} // namespace

int main(int argc, char **argv) {
    if (argc != 2) {
        std::cerr << "usage: acceptance <path-to-diffcoh-cli>\n";
        return 64;
    }

    std::vector<SuiteReport> reports;
    reports.push_back(run_closed_forms_suite());
    reports.push_back(run_oracle_random_suite(kSeed));
    reports.push_back(run_montecarlo_suite(kSeed));

    std::vector<Requirement> requirements;
    requirements.push_back(
        from_checks(reports, "omni pair coherence is the sinc closed form", {"omni_pair_sinc"}, 1.0));
    requirements.push_back(
        from_checks(reports, "collinear dipole pair matches its closed form", {"dipole_pair_collinear"}, 1.0));
    requirements.push_back(from_checks(reports, "random pairs match the quadrature oracle",
                                       {"random_pair_oracle_match"}, 30.0));
    requirements.push_back(from_checks(reports, "plane-wave order increases leave results unchanged",
                                       {"plane_wave_truncation_stability"}));
    requirements.push_back(from_checks(reports, "Gaunt coefficients are exact",
                                       {"gaunt_selection_zeros", "gaunt_triple_product_quadrature"}, 60.0));
    requirements.push_back(from_checks(reports, "measured-array path reproduces the sinc matrix",
                                       {"synthetic_array_sinc", "synthetic_array_structure"}));
    requirements.push_back(from_checks(
        reports, "differential weight transform is exact",
        {"cardioid_weight_transform", "differential_weight_roundtrip", "cardioid_omni_coincident"}));
    requirements.push_back(
        from_checks(reports, "Monte-Carlo agrees with the oracle within error bars",
                    {"montecarlo_vs_quadrature"}, 60.0));
    requirements.push_back(cli_determinism(argv[1]));

    int failures = 0;
    for (std::size_t i = 0; i < requirements.size(); ++i) {
        const Requirement &req = requirements[i];
        std::cout << "acceptance " << (i + 1) << " (" << req.label << "): " << (req.pass ? "PASS" : "FAIL")
                  << "  [" << req.detail << "]\n";
        if (!req.pass)
            ++failures;
    }
    std::cout << (failures == 0 ? "acceptance gate: all requirements pass\n"
                                : "acceptance gate: FAILURES present\n");
    return failures;
}
