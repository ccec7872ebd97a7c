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

// diffcoh command-line front end.
//
//   diffcoh pair --spec pair.json --freqs 100:100:8000 [--c 343] [--degrees] [--out gamma.csv]
//   diffcoh array --meas array.json [--order N] [--degrees] [--out gamma.json]
//   diffcoh diffpattern --weights 0.5,0.5 [--orient theta,phi] [--degrees]
//   diffcoh validate --suite closed-forms|oracle-random|montecarlo [--seed 42]
//
// Exit codes: 0 success, 1 parse/validation error, 2 degenerate sensor,
// 3 validation-suite failure.

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "diffcoh/coherence.hpp"
#include "diffcoh/differential.hpp"
#include "diffcoh/errors.hpp"
#include "diffcoh/io.hpp"
#include "diffcoh/sh_core.hpp"
#include "diffcoh/validation.hpp"

namespace {

using namespace diffcoh;

constexpr double kDefaultSoundSpeed = 343.0;

double parse_double_token(const std::string &token, const std::string &what) {
    const char *begin = token.c_str();
    char *end = nullptr;
    const double value = std::strtod(begin, &end);
    while (end != nullptr && *end != '\0' && std::isspace(static_cast<unsigned char>(*end)))
        ++end;
    if (end == begin || end == nullptr || *end != '\0' || !std::isfinite(value))
        throw parse_error(what + ": expected a number, got \"" + token + "\"");
    return value;
}

std::vector<std::string> split(const std::string &text, char separator) {
    std::vector<std::string> parts;
    std::string::size_type start = 0;
    while (true) {
        const std::string::size_type pos = text.find(separator, start);
        if (pos == std::string::npos) {
            parts.push_back(text.substr(start));
            return parts;
        }
        parts.push_back(text.substr(start, pos - start));
        start = pos + 1;
    }
}

// Frequencies as "start:step:stop" (inclusive arithmetic range) or a comma
// list; either way the sweep is emitted in ascending frequency order.
std::vector<double> parse_frequencies(const std::string &text) {
    std::vector<double> freqs;
    if (text.find(':') != std::string::npos) {
        const std::vector<std::string> parts = split(text, ':');
        if (parts.size() != 3)
            throw parse_error("--freqs: range must be start:step:stop");
        const double start = parse_double_token(parts[0], "--freqs start");
        const double step = parse_double_token(parts[1], "--freqs step");
        const double stop = parse_double_token(parts[2], "--freqs stop");
        if (start < 0.0)
            throw parse_error("--freqs: start must be nonnegative");
        if (step <= 0.0)
            throw parse_error("--freqs: step must be positive");
        if (stop < start)
            throw parse_error("--freqs: stop must not be below start");
        const int count = static_cast<int>(std::floor((stop - start) / step + 1e-9)) + 1;
        freqs.reserve(static_cast<std::size_t>(count));
        for (int i = 0; i < count; ++i)
            freqs.push_back(start + step * i);
    } else {
        for (const std::string &token : split(text, ',')) {
            if (token.empty())
                throw parse_error("--freqs: empty entry in frequency list");
            const double f = parse_double_token(token, "--freqs");
            if (f < 0.0)
                throw parse_error("--freqs: frequencies must be nonnegative");
            freqs.push_back(f);
        }
    }
    if (freqs.empty())
        throw parse_error("--freqs: empty frequency list");
    std::stable_sort(freqs.begin(), freqs.end());
    return freqs;
}

// Runs fn(0..count-1) on a small thread pool; rethrows the first failure
// once all workers have drained.
template <typename Fn> void parallel_for(std::size_t count, Fn &&fn) {
    const unsigned hw = std::thread::hardware_concurrency();
    const std::size_t workers = std::min<std::size_t>(count, hw == 0 ? 1 : hw);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::mutex error_mutex;
    std::exception_ptr first_error;
    auto drain = [&] {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count)
                return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error)
                    first_error = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back(drain);
    for (std::thread &t : pool)
        t.join();
    if (first_error)
        std::rethrow_exception(first_error);
}

void write_output(const std::string &path, const std::string &content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw parse_error("cannot open output file: " + path);
    out << content;
    if (!out.flush())
        throw parse_error("cannot write output file: " + path);
}

std::string json_complex_array(const Eigen::VectorXcd &values, std::string (*fmt)(double)) {
    std::string out = "[";
    for (Eigen::Index i = 0; i < values.size(); ++i) {
        if (i > 0)
            out += ", ";
        out += "[" + fmt(values(i).real()) + ", " + fmt(values(i).imag()) + "]";
    }
    return out + "]";
}

std::string json_string(const std::string &text) {
    std::string out = "\"";
    for (const char c : text) {
        if (c == '"' || c == '\\')
            out += '\\';
        out += c;
    }
    return out + "\"";
}

int run_pair(const std::string &spec_path, const std::string &freqs_text, double flag_c, bool flag_c_given,
             bool degrees, const std::string &out_path) {
    const PairSpec pair = load_pair_spec(spec_path, degrees);
    const std::vector<double> frequencies = parse_frequencies(freqs_text);
    const double c = flag_c_given ? flag_c : (pair.sound_speed_mps > 0.0 ? pair.sound_speed_mps : kDefaultSoundSpeed);
    if (c <= 0.0)
        throw parse_error("--c: sound speed must be positive");

    std::vector<CoherenceResult> results(frequencies.size());
    parallel_for(frequencies.size(), [&](std::size_t i) {
        const double k = 2.0 * M_PI * frequencies[i] / c;
        CoherenceResult r = coherence_pair(pair.first, pair.second, k);
        r.frequency_hz = frequencies[i];
        r.sound_speed_mps = c;
        results[i] = r;
    });

    std::ostringstream csv;
    write_pair_csv(csv, results);
    write_output(out_path, csv.str());
    return 0;
}

int max_order_for_grid(std::size_t grid_size) {
    int order = 0;
    while (static_cast<std::size_t>(sh_count(order + 1)) <= grid_size)
        ++order;
    return order;
}

int run_array(const std::string &meas_path, int order_override, bool degrees, const std::string &out_path) {
    const MeasurementSet set = load_measurement_set(meas_path, degrees);
    const Eigen::Index sensors = set.responses.front().cols();

    int order = order_override;
    if (order < 0) {
        if (set.radius_m > 0.0) {
            const double f_max = *std::max_element(set.frequencies_hz.begin(), set.frequencies_hz.end());
            const double k_max = 2.0 * M_PI * f_max / set.sound_speed_mps;
            order = suggested_order(k_max, set.radius_m).order;
        } else {
            order = max_order_for_grid(set.grid.size());
        }
    }

    std::vector<ArraySpectra> spectra(set.frequencies_hz.size());
    std::vector<Eigen::MatrixXcd> matrices(set.frequencies_hz.size());
    parallel_for(set.frequencies_hz.size(), [&](std::size_t i) {
        spectra[i] = array_spectra_from_measurements(set.responses[i], set.grid, order);
        matrices[i] = array_coherence_matrix(spectra[i]);
    });

    std::ostringstream out;
    out << "{\n";
    out << "  \"order\": " << order << ",\n";
    out << "  \"sensor_count\": " << sensors << ",\n";
    out << "  \"sound_speed\": " << format_number(set.sound_speed_mps) << ",\n";
    out << "  \"results\": [\n";
    std::vector<std::string> warnings;
    for (std::size_t i = 0; i < matrices.size(); ++i) {
        const Eigen::MatrixXcd &gamma = matrices[i];
        out << "    {\n";
        out << "      \"frequency_hz\": " << format_number(set.frequencies_hz[i]) << ",\n";
        if (std::isfinite(spectra[i].condition_number))
            out << "      \"condition_number\": " << format_number(spectra[i].condition_number) << ",\n";
        else
            out << "      \"condition_number\": null,\n";
        out << "      \"well_conditioned\": " << (spectra[i].well_conditioned ? "true" : "false") << ",\n";
        out << "      \"gamma_re\": [";
        for (Eigen::Index r = 0; r < gamma.rows(); ++r) {
            out << (r > 0 ? ", [" : "[");
            for (Eigen::Index col = 0; col < gamma.cols(); ++col)
                out << (col > 0 ? ", " : "") << format_number(gamma(r, col).real());
            out << "]";
        }
        out << "],\n";
        out << "      \"gamma_im\": [";
        for (Eigen::Index r = 0; r < gamma.rows(); ++r) {
            out << (r > 0 ? ", [" : "[");
            for (Eigen::Index col = 0; col < gamma.cols(); ++col)
                out << (col > 0 ? ", " : "") << format_number(gamma(r, col).imag());
            out << "]";
        }
        out << "]\n";
        out << "    }" << (i + 1 < matrices.size() ? "," : "") << "\n";
        if (!spectra[i].well_conditioned) {
            std::ostringstream w;
            w << "frequency " << format_number(set.frequencies_hz[i])
              << " Hz: least-squares response fit is ill-conditioned (condition number "
              << format_number(spectra[i].condition_number) << ")";
            warnings.push_back(w.str());
        }
    }
    out << "  ],\n";
    out << "  \"warnings\": [";
    for (std::size_t i = 0; i < warnings.size(); ++i)
        out << (i > 0 ? ", " : "") << json_string(warnings[i]);
    out << "]\n";
    out << "}\n";

    write_output(out_path, out.str());
    for (const std::string &w : warnings)
        std::cerr << "warning: " << w << "\n";
    return 0;
}

int run_diffpattern(const std::string &weights_text, const std::string &orient_text, bool degrees) {
    const std::vector<std::string> tokens = split(weights_text, ',');
    DifferentialWeights weights(static_cast<Eigen::Index>(tokens.size()));
    for (std::size_t i = 0; i < tokens.size(); ++i)
        weights(static_cast<Eigen::Index>(i)) = parse_double_token(tokens[i], "--weights");

    const double sum = weights.sum();
    if (std::abs(sum - 1.0) > 1e-12)
        std::cerr << "warning: weights sum to " << format_number(sum)
                  << "; the on-axis response is conventionally normalized to 1\n";

    const AxisymmetricSpectrum axi = diff_weights_to_spectrum(weights);

    std::ostringstream out;
    out << "{\n";
    out << "  \"weights\": [";
    for (Eigen::Index i = 0; i < weights.size(); ++i)
        out << (i > 0 ? ", " : "") << format_number_full(weights(i));
    out << "],\n";
    out << "  \"axisymmetric_coeffs\": [";
    for (Eigen::Index n = 0; n < axi.coeffs().size(); ++n)
        out << (n > 0 ? ", " : "") << format_number_full(axi.at(static_cast<int>(n)).real());
    out << "],\n";

    if (orient_text.empty()) {
        out << "  \"sensor\": {\"axisymmetric\": {\"coeffs\": [";
        for (Eigen::Index n = 0; n < axi.coeffs().size(); ++n)
            out << (n > 0 ? ", " : "") << format_number_full(axi.at(static_cast<int>(n)).real());
        out << "]}}\n";
    } else {
        const std::vector<std::string> angles = split(orient_text, ',');
        if (angles.size() != 2)
            throw parse_error("--orient: expected theta,phi");
        double theta = parse_double_token(angles[0], "--orient theta");
        double phi = parse_double_token(angles[1], "--orient phi");
        if (degrees) {
            theta *= M_PI / 180.0;
            phi *= M_PI / 180.0;
        }
        const SphericalSpectrum steered = steer_axisymmetric(axi, make_direction(theta, phi));
        out << "  \"sensor\": {\"spectrum\": {\"order\": " << steered.order() << ", \"coeffs\": "
            << json_complex_array(steered.coeffs(), format_number_full) << "}}\n";
    }
    out << "}\n";
    std::cout << out.str();
    return 0;
}

int run_validate(const std::string &suite, std::uint64_t seed) {
    SuiteReport report;
    if (suite == "closed-forms")
        report = run_closed_forms_suite();
    else if (suite == "oracle-random")
        report = run_oracle_random_suite(seed);
    else if (suite == "montecarlo")
        report = run_montecarlo_suite(seed);
    else
        throw parse_error("--suite: unknown suite \"" + suite +
                          "\" (expected closed-forms, oracle-random, or montecarlo)");

    for (const CheckResult &check : report.checks) {
        std::ostringstream line;
        line << "  " << (check.pass ? "PASS" : "FAIL") << "  " << check.name
             << "  max_error=" << format_number(check.max_error) << "  tolerance=" << format_number(check.tolerance);
        std::cout << line.str() << "  (" << std::fixed << std::setprecision(3) << check.seconds << " s)\n";
        std::cout.unsetf(std::ios_base::floatfield);
    }
    std::cout << "suite " << report.suite << ": " << (report.pass ? "PASS" : "FAIL") << "\n";
    return report.pass ? 0 : 3;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"diffuse-field coherence of directional sensors and arrays"};
    app.require_subcommand(1);

    std::string spec_path;
    std::string freqs_text;
    double sound_speed = kDefaultSoundSpeed;
    bool degrees = false;
    std::string out_path;
    CLI::App *pair = app.add_subcommand("pair", "coherence of a sensor pair over a frequency sweep");
    pair->add_option("--spec", spec_path, "pair specification JSON file")->required();
    pair->add_option("--freqs", freqs_text, "frequencies in Hz: comma list or start:step:stop")->required();
    CLI::Option *c_opt = pair->add_option("--c", sound_speed, "sound speed in m/s (overrides the file)");
    pair->add_flag("--degrees", degrees, "interpret angles in input files as degrees");
    pair->add_option("--out", out_path, "output CSV path (default: stdout)");

    std::string meas_path;
    int order_override = -1;
    bool array_degrees = false;
    std::string array_out;
    CLI::App *array = app.add_subcommand("array", "diffuse-field coherence matrix of a measured array");
    array->add_option("--meas", meas_path, "measurement set JSON file")->required();
    array->add_option("--order", order_override, "analysis order override");
    array->add_flag("--degrees", array_degrees, "interpret angles in input files as degrees");
    array->add_option("--out", array_out, "output JSON path (default: stdout)");

    std::string weights_text;
    std::string orient_text;
    bool diff_degrees = false;
    CLI::App *diffpattern = app.add_subcommand("diffpattern", "angular spectrum of a differential pattern");
    diffpattern->add_option("--weights", weights_text, "comma-separated pattern weights w0,w1,...")->required();
    diffpattern->add_option("--orient", orient_text, "aim direction theta,phi (radians unless --degrees)");
    diffpattern->add_flag("--degrees", diff_degrees, "interpret --orient as degrees");

    std::string suite;
    std::uint64_t seed = 42;
    CLI::App *validate = app.add_subcommand("validate", "run a validation suite");
    validate->add_option("--suite", suite, "closed-forms, oracle-random, or montecarlo")->required();
    validate->add_option("--seed", seed, "seed for the randomized suites");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (pair->parsed())
            return run_pair(spec_path, freqs_text, sound_speed, c_opt->count() > 0, degrees, out_path);
        if (array->parsed())
            return run_array(meas_path, order_override, array_degrees, array_out);
        if (diffpattern->parsed())
            return run_diffpattern(weights_text, orient_text, diff_degrees);
        if (validate->parsed())
            return run_validate(suite, seed);
    } catch (const degenerate_sensor_error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
