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

#include <gtest/gtest.h>

#include <cmath>
#include <map>

#include "oracles.hpp"
#include "wwpi/errors.hpp"
#include "wwpi/hilbert.hpp"
#include "wwpi/path_engine.hpp"

using namespace wwpi;

namespace {

BlochAngles to_bloch(oracle::Angles a) { return BlochAngles(a.theta, a.phi); }

// Balanced Mach-Zehnder with an optional plate on the upper arm.
Circuit mach_zehnder(double plate) {
    Circuit c;
    c.sources.push_back({{{Complex{1.0, 0.0}, {"in"}}}});
    c.segments = {{"in", {}}, {"vac", {}}, {"up", {plate}}, {"down", {}}, {"out+", {}}, {"out-", {}}};
    c.beamsplitters.push_back({kPi / 2, {{"in", {"up", "down"}}, {"vac", {"down", "up"}}}});
    c.beamsplitters.push_back({kPi / 2, {{"up", {"out+", "out-"}}, {"down", {"out-", "out+"}}}});
    c.detectors = {{"out+", 0, Sign::Plus, false}, {"out-", 0, Sign::Minus, false}};
    return c;
}

int outcome_index(const Circuit& c, const History& h) {
    return static_cast<int>(history_outcome(c, h).index());
}

}  // namespace

TEST(Presets, SingleQubitFourHistories) {
    const Circuit c = build_single_qubit_circuit(0.6, Complex{0, 0.8}, BlochAngles(1.0, 2.0));
    EXPECT_EQ(enumerate_histories(c).size(), 4u);
    EXPECT_EQ(num_qubits(c), 1u);
}

TEST(Presets, TwoQubitEightHistories) {
    const Circuit c = build_two_qubit_circuit(SchmidtForm(0.6, 0.8, 0.3), BlochAngles(1, 1), BlochAngles(2, 2));
    const auto hs = enumerate_histories(c);
    ASSERT_EQ(hs.size(), 8u);
    std::map<int, int> per_outcome;
    for (const auto& h : hs) {
        ++per_outcome[outcome_index(c, h)];
        EXPECT_EQ(h.photons.size(), 2u);
    }
    for (int k = 0; k < 4; ++k) {
        EXPECT_EQ(per_outcome[k], 2);
    }
}

TEST(Presets, TwoQubitHistoryAmplitudesMatchClosedForms) {
    oracle::Gen gen(31);
    for (int t = 0; t < 300; ++t) {
        const auto s = gen.schmidt();
        const auto m1 = gen.angles(), m2 = gen.angles();
        const Circuit c = build_two_qubit_circuit(SchmidtForm(s[0], s[1], s[2]), to_bloch(m1), to_bloch(m2));
        for (const auto& h : enumerate_histories(c)) {
            const int branch = static_cast<int>(h.branch_choice[0]);
            const auto want = oracle::two_qubit_history(s[0], s[1], s[2], m1, m2, branch, outcome_index(c, h));
            ASSERT_NEAR(std::abs(h.amplitude - want), 0.0, 1e-12);
        }
    }
}

TEST(Presets, TwoQubitMatchesOracle) {
    oracle::Gen gen(41);
    for (int t = 0; t < 1000; ++t) {
        const auto s = gen.schmidt();
        const auto m1 = gen.angles(), m2 = gen.angles();
        const auto got = outcome_distribution(
            build_two_qubit_circuit(SchmidtForm(s[0], s[1], s[2]), to_bloch(m1), to_bloch(m2)));
        const auto want = oracle::two_qubit_born(s[0], s[1], s[2], m1, m2);
        for (int k = 0; k < 4; ++k) {
            ASSERT_NEAR(got.probability(static_cast<std::size_t>(k)), want[k], 1e-12);
        }
        ASSERT_NEAR(got.raw_norm(), 1.0, 1e-12);
    }
}

TEST(Presets, GhzSixteenRetainedHistories) {
    const Circuit c = build_ghz_circuit(BlochAngles(1, 2), BlochAngles(0.5, 1), BlochAngles(2.5, 4));
    const auto kept = enumerate_histories(c);
    ASSERT_EQ(kept.size(), 16u);
    std::map<int, int> per_outcome;
    for (const auto& h : kept) {
        ++per_outcome[outcome_index(c, h)];
        EXPECT_TRUE(passes_postselection(c, h));
    }
    for (int k = 0; k < 8; ++k) {
        EXPECT_EQ(per_outcome[k], 2) << oracle::label(k, 3);
    }
    // Mixed emission patterns put 0 or 2 photons on the center.
    const auto all = enumerate_histories(c, HistoryFilter::All);
    EXPECT_EQ(all.size(), 36u);
    std::size_t rejected = 0;
    for (const auto& h : all) {
        rejected += passes_postselection(c, h) ? 0 : 1;
    }
    EXPECT_EQ(rejected, 20u);
}

TEST(Presets, GhzHistoryAmplitudesMatchTable) {
    oracle::Gen gen(51);
    for (int t = 0; t < 200; ++t) {
        const auto m1 = gen.angles(), m2 = gen.angles(), m3 = gen.angles();
        const Circuit c = build_ghz_circuit(to_bloch(m1), to_bloch(m2), to_bloch(m3));
        const auto kept = enumerate_histories(c);
        for (const auto& h : kept) {
            const int branch = h.branch_choice[0] == kSolidBranch ? 0 : 1;
            EXPECT_EQ(h.branch_choice[0], h.branch_choice[1]);
            const oracle::C want = oracle::ghz_history(m1, m2, m3, branch, outcome_index(c, h));
            ASSERT_NEAR(std::abs(h.amplitude / std::sqrt(0.5) - want), 0.0, 1e-12);
        }
        const auto d = outcome_distribution(c);
        ASSERT_NEAR(d.raw_norm(), 0.5, 1e-12);
        ASSERT_NEAR(d.total(), 1.0, 1e-12);
    }
}

TEST(Presets, GhzMatchesBornRule) {
    oracle::Gen gen(61);
    for (int t = 0; t < 1000; ++t) {
        const auto m1 = gen.angles(), m2 = gen.angles(), m3 = gen.angles();
        const auto got = outcome_distribution(build_ghz_circuit(to_bloch(m1), to_bloch(m2), to_bloch(m3)));
        const auto want = oracle::ghz_born(m1, m2, m3);
        for (int k = 0; k < 8; ++k) {
            ASSERT_NEAR(got.probability(static_cast<std::size_t>(k)), want[k], 1e-12);
        }
    }
}

TEST(Presets, HistoryOrderIsBranchMajorReflectFirst) {
    const Circuit c = build_two_qubit_circuit(SchmidtForm(0.6, 0.8, 0), BlochAngles(1, 1), BlochAngles(2, 2));
    const auto hs = enumerate_histories(c);
    for (std::size_t i = 0; i < hs.size(); ++i) {
        EXPECT_EQ(hs[i].branch_choice[0], i / 4);
        EXPECT_EQ(hs[i].photons[0].steps.at(0).route, (i / 2) % 2 == 0 ? Route::Reflect : Route::Transmit);
        EXPECT_EQ(hs[i].photons[1].steps.at(0).route, i % 2 == 0 ? Route::Reflect : Route::Transmit);
    }
}

TEST(Engine, HistoryAmplitudeRecomputes) {
    const Circuit c = build_ghz_circuit(BlochAngles(1, 2), BlochAngles(0.5, 1), BlochAngles(2.5, 4));
    for (const auto& h : enumerate_histories(c, HistoryFilter::All)) {
        EXPECT_NEAR(std::abs(history_amplitude(c, h) - h.amplitude), 0.0, 1e-15);
    }
    History bogus = enumerate_histories(c).front();
    bogus.photons[0].steps[0].route =
        bogus.photons[0].steps[0].route == Route::Reflect ? Route::Transmit : Route::Reflect;
    EXPECT_THROW(history_amplitude(c, bogus), DomainError);
}

TEST(Engine, MachZehnderDarkPort) {
    const auto d = outcome_distribution(mach_zehnder(0.0));
    EXPECT_NEAR(d.probability("+"), 0.0, 1e-15);
    EXPECT_NEAR(d.probability("-"), 1.0, 1e-15);
    for (double beta : {0.3, 1.0, 2.0, kPi}) {
        const auto e = outcome_distribution(mach_zehnder(beta));
        EXPECT_NEAR(e.probability("+"), std::pow(std::sin(beta / 2), 2), 1e-12);
    }
}

TEST(Engine, DeviceIntensitiesMatchClosedForms) {
    oracle::Gen gen(71);
    for (int t = 0; t < 1000; ++t) {
        const auto q = gen.qubit();
        const auto m = gen.angles();
        const auto got = single_qubit_device_intensities(q[0], q[1], to_bloch(m));
        EXPECT_NEAR(got.plus, oracle::intensity_plus(q[0], q[1], m), 1e-12);
        EXPECT_NEAR(got.minus, oracle::intensity_minus(q[0], q[1], m), 1e-12);
        EXPECT_NEAR(got.plus, oracle::born_plus(q[0], q[1], m), 1e-12);
        EXPECT_NEAR(got.plus + got.minus, 1.0, 1e-12);
        const auto d = outcome_distribution(build_single_qubit_circuit(q[0], q[1], to_bloch(m)));
        EXPECT_NEAR(d.probability("+"), got.plus, 1e-12);
    }
    EXPECT_THROW(single_qubit_device_intensities(1.0, 1.0, BlochAngles(1, 1)), NormalizationError);
}

TEST(Engine, ZeroAmplitudeIsDegenerate) {
    EXPECT_THROW(outcome_distribution(build_single_qubit_circuit(0.0, 0.0, BlochAngles(1, 1))),
                 DegenerateDistributionError);
}

TEST(Engine, GlobalSourcePhaseIsInvisible) {
    oracle::Gen gen(81);
    for (int t = 0; t < 100; ++t) {
        const auto s = gen.schmidt();
        const auto m1 = gen.angles(), m2 = gen.angles();
        Circuit c = build_two_qubit_circuit(SchmidtForm(s[0], s[1], s[2]), to_bloch(m1), to_bloch(m2));
        const auto before = outcome_distribution(c);
        const Complex g = std::polar(1.0, gen.uniform(0, 6.28));
        for (auto& b : c.sources[0].branches) {
            b.amplitude *= g;
        }
        const auto after = outcome_distribution(c);
        for (std::size_t k = 0; k < 4; ++k) {
            EXPECT_NEAR(before.probability(k), after.probability(k), 1e-12);
        }
    }
}

// ---------------------------------------------------------------------------
// Topology validation.

TEST(Topology, PresetsValidate) {
    EXPECT_NO_THROW(validate(mach_zehnder(0)));
    EXPECT_NO_THROW(validate(build_ghz_circuit(BlochAngles(1, 2), BlochAngles(0.5, 1), BlochAngles(2.5, 4))));
}

TEST(Topology, Cycle) {
    Circuit c = mach_zehnder(0);
    // Feed the second beamsplitter's output back into the first.
    c.detectors.pop_back();
    c.beamsplitters[0].inputs[1].segment = "out-";
    EXPECT_THROW(validate(c), TopologyError);
    EXPECT_THROW(outcome_distribution(c), TopologyError);
}

TEST(Topology, DanglingPath) {
    Circuit c = mach_zehnder(0);
    c.detectors.pop_back();
    EXPECT_THROW(validate(c), TopologyError);
}

TEST(Topology, UnknownSegment) {
    Circuit c = mach_zehnder(0);
    c.sources[0].branches[0].paths[0] = "nowhere";
    EXPECT_THROW(validate(c), TopologyError);
}

TEST(Topology, BeamsplitterShape) {
    Circuit c = mach_zehnder(0);
    c.beamsplitters[0].inputs.pop_back();
    EXPECT_THROW(validate(c), TopologyError);

    Circuit d = mach_zehnder(0);
    d.beamsplitters[0].inputs[1].ports = {"up", "down"};
    EXPECT_THROW(validate(d), TopologyError);

    Circuit e = mach_zehnder(0);
    e.beamsplitters[0].theta = 4.0;
    EXPECT_THROW(validate(e), TopologyError);
}

TEST(Topology, DuplicateIdsAndLabels) {
    Circuit c = mach_zehnder(0);
    c.segments.push_back({"up", {}});
    EXPECT_THROW(validate(c), TopologyError);

    Circuit d = mach_zehnder(0);
    d.detectors[1].sign = Sign::Plus;
    EXPECT_THROW(validate(d), TopologyError);
}

TEST(Topology, PostselectionOnUnknownDetector) {
    Circuit c = mach_zehnder(0);
    c.postselection = PostselectionRule{{{"ghost", 1}}};
    EXPECT_THROW(validate(c), TopologyError);
}

TEST(Topology, DoubleOccupancyOfAQubit) {
    // Two photons end on the same qubit's detectors.
    Circuit c = mach_zehnder(0);
    c.sources[0].branches[0].paths = {"in", "vac"};
    EXPECT_THROW(outcome_distribution(c), TopologyError);
}
