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

#pragma once

// Derived quantities and cross-engine checks. Outcome '+' maps to +1 and
// '-' to -1 in every correlator.

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "wwpi/hilbert.hpp"
#include "wwpi/outcome.hpp"

namespace wwpi {

enum class Engine { Path, Oracle };

const char* engine_name(Engine e) noexcept;

struct Marginal {
    double plus;
    double minus;
};

/// Throws DomainError if qubit >= dist.num_qubits().
Marginal marginals(const OutcomeDistribution& dist, std::size_t qubit);

/// E = P(++) + P(--) - P(+-) - P(-+). Throws ShapeError unless two qubits.
double correlation(const OutcomeDistribution& dist);

/// Expectation of the product of the three outcome signs. Throws ShapeError unless three qubits.
double ghz_parity(const OutcomeDistribution& dist);

struct TwoQubitScenario {
    SchmidtForm state;
    BlochAngles m1;
    BlochAngles m2;
};

struct GhzScenario {
    BlochAngles m1;
    BlochAngles m2;
    BlochAngles m3;
};

using Scenario = std::variant<TwoQubitScenario, GhzScenario>;

OutcomeDistribution run_engine(const Scenario& scenario, Engine engine);

std::string describe(const Scenario& scenario);

struct ComparisonRow {
    std::string outcome;
    double path_prob;
    double oracle_prob;
    double abs_diff;
};

struct ComparisonReport {
    std::string scenario;
    std::vector<ComparisonRow> rows;
    double max_abs_diff = 0.0;
    double path_raw_norm = 1.0;
};

ComparisonReport compare_engines(const Scenario& scenario);

/// Fixed-width table, probabilities with 12 decimals.
std::string render_table(const ComparisonReport& report);
/// Header `outcome,path_prob,oracle_prob,abs_diff`.
std::string render_csv(const ComparisonReport& report);

struct ChshSettings {
    BlochAngles a;
    BlochAngles a_prime;
    BlochAngles b;
    BlochAngles b_prime;
};

/// S = E(a,b) + E(a,b') + E(a',b) - E(a',b')
double chsh(const SchmidtForm& sf, const ChshSettings& s, Engine engine);

struct ChshSearchResult {
    double best_abs_s;
    ChshSettings settings;
};

/// Equatorial search: phi_a = 0 fixed, a 16^3 grid over (phi_a', phi_b,
/// phi_b'), then coordinate refinement around the best grid point.
ChshSearchResult chsh_search(const SchmidtForm& sf, Engine engine, std::size_t grid = 16);

/// Largest |S| over uniformly random settings on the full sphere.
double chsh_random_sweep(const SchmidtForm& sf, std::size_t trials, std::uint64_t seed, Engine engine);

/// Largest spread of the qubit-1 marginal over the far settings. Throws
/// DomainError on an empty sweep.
double no_signalling_sweep(const SchmidtForm& sf, const BlochAngles& m1, std::span<const BlochAngles> far_settings,
                           Engine engine);

}  // namespace wwpi
