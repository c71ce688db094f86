// Copyright 2026 The wwpi Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "wwpi/analysis.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "wwpi/errors.hpp"
#include "wwpi/path_engine.hpp"
#include "wwpi/random.hpp"

namespace wwpi {

BlochAngles random_bloch(Rng& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const double theta = std::acos(std::clamp(1.0 - 2.0 * u(rng), -1.0, 1.0));
    return BlochAngles(theta, kTwoPi * u(rng));
}

SchmidtForm random_schmidt_form(Rng& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const double t = (kPi / 2.0) * u(rng);
    return SchmidtForm(std::cos(t), std::sin(t), kTwoPi * u(rng));
}

Spinor random_spinor(Rng& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    Complex a{g(rng), g(rng)};
    Complex b{g(rng), g(rng)};
    const double n = std::sqrt(std::norm(a) + std::norm(b));
    return {a / n, b / n};
}

const char* engine_name(Engine e) noexcept { return e == Engine::Path ? "path" : "oracle"; }

Marginal marginals(const OutcomeDistribution& dist, std::size_t qubit) {
    if (qubit >= dist.num_qubits()) {
        throw DomainError("qubit index " + std::to_string(qubit) + " out of range for a " +
                          std::to_string(dist.num_qubits()) + "-qubit distribution");
    }
    Marginal m{0.0, 0.0};
    for (std::size_t i = 0; i < dist.size(); ++i) {
        (dist.key(i)[qubit] == Sign::Plus ? m.plus : m.minus) += dist.probability(i);
    }
    return m;
}

namespace {

double sign_product_expectation(const OutcomeDistribution& dist) {
    double e = 0.0;
    for (std::size_t i = 0; i < dist.size(); ++i) {
        int product = 1;
        const OutcomeKey key = dist.key(i);
        for (Sign s : key.signs()) {
            product *= sign_value(s);
        }
        e += product * dist.probability(i);
    }
    return e;
}

double correlator(const SchmidtForm& sf, const BlochAngles& m1, const BlochAngles& m2, Engine engine) {
    return correlation(run_engine(TwoQubitScenario{sf, m1, m2}, engine));
}

}  // namespace

double correlation(const OutcomeDistribution& dist) {
    if (dist.num_qubits() != 2) {
        throw ShapeError("correlation needs a two-qubit distribution, got " + std::to_string(dist.num_qubits()));
    }
    return sign_product_expectation(dist);
}

double ghz_parity(const OutcomeDistribution& dist) {
    if (dist.num_qubits() != 3) {
        throw ShapeError("GHZ parity needs a three-qubit distribution, got " + std::to_string(dist.num_qubits()));
    }
    return sign_product_expectation(dist);
}

OutcomeDistribution run_engine(const Scenario& scenario, Engine engine) {
    if (const auto* two = std::get_if<TwoQubitScenario>(&scenario)) {
        return engine == Engine::Path ? outcome_distribution(build_two_qubit_circuit(two->state, two->m1, two->m2))
                                      : two_qubit_distribution(two->state, two->m1, two->m2);
    }
    const auto& g = std::get<GhzScenario>(scenario);
    return engine == Engine::Path ? outcome_distribution(build_ghz_circuit(g.m1, g.m2, g.m3))
                                  : ghz_distribution(g.m1, g.m2, g.m3);
}

std::string describe(const Scenario& scenario) {
    char buf[256];
    auto angles = [](const BlochAngles& m) {
        char b[64];
        std::snprintf(b, sizeof b, "(%.17g, %.17g)", m.theta(), m.phi());
        return std::string(b);
    };
    if (const auto* two = std::get_if<TwoQubitScenario>(&scenario)) {
        std::snprintf(buf, sizeof buf, "two_qubit A=%.17g B=%.17g delta=%.17g", two->state.A(), two->state.B(),
                      two->state.delta());
        return std::string(buf) + " m1=" + angles(two->m1) + " m2=" + angles(two->m2);
    }
    const auto& g = std::get<GhzScenario>(scenario);
    return "ghz m1=" + angles(g.m1) + " m2=" + angles(g.m2) + " m3=" + angles(g.m3);
}

ComparisonReport compare_engines(const Scenario& scenario) {
    const OutcomeDistribution path = run_engine(scenario, Engine::Path);
    const OutcomeDistribution oracle = run_engine(scenario, Engine::Oracle);
    ComparisonReport report;
    report.scenario = describe(scenario);
    report.path_raw_norm = path.raw_norm();
    for (std::size_t i = 0; i < path.size(); ++i) {
        const double diff = std::abs(path.probability(i) - oracle.probability(i));
        report.rows.push_back({path.key(i).to_string(), path.probability(i), oracle.probability(i), diff});
        report.max_abs_diff = std::max(report.max_abs_diff, diff);
    }
    return report;
}

std::string render_table(const ComparisonReport& report) {
    std::ostringstream out;
    char line[160];
    out << "# " << report.scenario << '\n';
    std::snprintf(line, sizeof line, "%-8s  %-14s  %-14s  %s\n", "outcome", "path", "oracle", "abs_diff");
    out << line;
    for (const auto& r : report.rows) {
        std::snprintf(line, sizeof line, "%-8s  %.12f  %.12f  %.3e\n", r.outcome.c_str(), r.path_prob, r.oracle_prob,
                      r.abs_diff);
        out << line;
    }
    std::snprintf(line, sizeof line, "max_abs_diff %.3e\n", report.max_abs_diff);
    out << line;
    return out.str();
}

std::string render_csv(const ComparisonReport& report) {
    std::ostringstream out;
    char line[160];
    out << "outcome,path_prob,oracle_prob,abs_diff\n";
    for (const auto& r : report.rows) {
        std::snprintf(line, sizeof line, "%s,%.12f,%.12f,%.6e\n", r.outcome.c_str(), r.path_prob, r.oracle_prob,
                      r.abs_diff);
        out << line;
    }
    return out.str();
}

double chsh(const SchmidtForm& sf, const ChshSettings& s, Engine engine) {
    return correlator(sf, s.a, s.b, engine) + correlator(sf, s.a, s.b_prime, engine) +
           correlator(sf, s.a_prime, s.b, engine) - correlator(sf, s.a_prime, s.b_prime, engine);
}

ChshSearchResult chsh_search(const SchmidtForm& sf, Engine engine, std::size_t grid) {
    if (grid == 0) {
        throw DomainError("CHSH grid needs at least one point per axis");
    }
    const double equator = kPi / 2.0;
    auto settings_of = [&](const std::array<double, 3>& x) {
        return ChshSettings{BlochAngles(equator, 0.0), BlochAngles(equator, x[0]), BlochAngles(equator, x[1]),
                            BlochAngles(equator, x[2])};
    };
    auto score = [&](const std::array<double, 3>& x) { return std::abs(chsh(sf, settings_of(x), engine)); };

    std::array<double, 3> best{0.0, 0.0, 0.0};
    double best_s = -1.0;
    const double step0 = kTwoPi / static_cast<double>(grid);
    for (std::size_t i = 0; i < grid; ++i) {
        for (std::size_t j = 0; j < grid; ++j) {
            for (std::size_t k = 0; k < grid; ++k) {
                const std::array<double, 3> x{step0 * i, step0 * j, step0 * k};
                const double s = score(x);
                if (s > best_s) {
                    best_s = s;
                    best = x;
                }
            }
        }
    }

    // Compass search: try +-step on each axis, halve the step when stuck.
    for (double step = step0 / 2.0; step > 1e-10;) {
        bool improved = false;
        for (std::size_t axis = 0; axis < 3; ++axis) {
            for (double dir : {1.0, -1.0}) {
                std::array<double, 3> x = best;
                x[axis] += dir * step;
                const double s = score(x);
                if (s > best_s) {
                    best_s = s;
                    best = x;
                    improved = true;
                }
            }
        }
        if (!improved) {
            step /= 2.0;
        }
    }
    return {best_s, settings_of(best)};
}

double chsh_random_sweep(const SchmidtForm& sf, std::size_t trials, std::uint64_t seed, Engine engine) {
    Rng rng(seed);
    double best = 0.0;
    for (std::size_t t = 0; t < trials; ++t) {
        const ChshSettings s{random_bloch(rng), random_bloch(rng), random_bloch(rng), random_bloch(rng)};
        best = std::max(best, std::abs(chsh(sf, s, engine)));
    }
    return best;
}

double no_signalling_sweep(const SchmidtForm& sf, const BlochAngles& m1, std::span<const BlochAngles> far_settings,
                           Engine engine) {
    if (far_settings.empty()) {
        throw DomainError("no-signalling sweep needs at least one far setting");
    }
    double lo = 2.0;
    double hi = -1.0;
    for (const auto& m2 : far_settings) {
        const double p = marginals(run_engine(TwoQubitScenario{sf, m1, m2}, engine), 0).plus;
        lo = std::min(lo, p);
        hi = std::max(hi, p);
    }
    return hi - lo;
}

}  // namespace wwpi
