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
#include <vector>

#include "oracles.hpp"
#include "wwpi/errors.hpp"
#include "wwpi/outcome.hpp"
#include "wwpi/qmath.hpp"

using namespace wwpi;

TEST(BlochAngles, ValidatesTheta) {
    EXPECT_NO_THROW(BlochAngles(0.0, 0.0));
    EXPECT_NO_THROW(BlochAngles(kPi, 0.0));
    EXPECT_THROW(BlochAngles(-0.1, 0.0), DomainError);
    EXPECT_THROW(BlochAngles(kPi + 0.1, 0.0), DomainError);
    EXPECT_THROW(BlochAngles(std::nan(""), 0.0), DomainError);
    EXPECT_THROW(BlochAngles(1.0, INFINITY), DomainError);
}

TEST(BlochAngles, WrapsPhi) {
    EXPECT_NEAR(BlochAngles(1.0, -kPi / 2).phi(), 3 * kPi / 2, 1e-15);
    EXPECT_NEAR(BlochAngles(1.0, 5 * kPi).phi(), kPi, 1e-14);
    EXPECT_DOUBLE_EQ(BlochAngles(1.0, 0.25).phi(), 0.25);
}

TEST(BlochAngles, ClampsRoundoffAtThetaBounds) {
    EXPECT_EQ(BlochAngles(kPi + 1e-14, 0.0).theta(), kPi);
    EXPECT_EQ(BlochAngles(-1e-14, 0.0).theta(), 0.0);
}

TEST(Basis, NorthPole) {
    const BlochAngles north(0.0, 0.0);
    const Spinor p = basis_plus(north);
    const Spinor m = basis_minus(north);
    EXPECT_NEAR(std::abs(p.c0 - Complex{1, 0}), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(p.c1), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(m.c0), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(m.c1 - Complex{-1, 0}), 0.0, 1e-15);
}

TEST(Basis, OrthonormalForRandomDirections) {
    oracle::Gen gen(11);
    for (int t = 0; t < 500; ++t) {
        const auto a = gen.angles();
        const BlochAngles m(a.theta, a.phi);
        const Spinor p = basis_plus(m);
        const Spinor q = basis_minus(m);
        EXPECT_NEAR(p.norm_squared(), 1.0, 1e-14);
        EXPECT_NEAR(q.norm_squared(), 1.0, 1e-14);
        EXPECT_NEAR(std::abs(inner(p, q)), 0.0, 1e-14);
    }
}

TEST(Tensor, BigEndianOrdering) {
    // |0> (x) |1> sits at index 1.
    const std::vector<Spinor> f{{1.0, 0.0}, {0.0, 1.0}};
    const StateVector v = tensor(f);
    ASSERT_EQ(v.dim(), 4u);
    EXPECT_EQ(v.num_qubits(), 2u);
    EXPECT_EQ(v[1], Complex(1.0, 0.0));
    EXPECT_EQ(v[2], Complex(0.0, 0.0));
}

TEST(Tensor, SizeLimits) {
    EXPECT_THROW(tensor(std::vector<Spinor>{}), SizeError);
    const std::vector<Spinor> many(11, Spinor{1.0, 0.0});
    EXPECT_THROW(tensor(many), SizeError);
    EXPECT_NO_THROW(tensor(many, 11));
}

TEST(StateVector, RejectsBadLengths) {
    EXPECT_THROW(StateVector(std::vector<Complex>{1.0}), ShapeError);
    EXPECT_THROW(StateVector(std::vector<Complex>(3, 0.0)), ShapeError);
    EXPECT_THROW(StateVector(std::vector<Complex>{}), ShapeError);
    EXPECT_THROW(StateVector(std::vector<Complex>(2, 0.0)).normalized(), NormalizationError);
}

TEST(Born, MatchesClosedForms) {
    oracle::Gen gen(3);
    for (int t = 0; t < 500; ++t) {
        const auto q = gen.qubit();
        const auto a = gen.angles();
        const BlochAngles m(a.theta, a.phi);
        const StateVector psi(Spinor{q[0], q[1]});
        const double pp = born_probability(psi, StateVector(basis_plus(m)));
        const double pm = born_probability(psi, StateVector(basis_minus(m)));
        EXPECT_NEAR(pp, oracle::born_plus(q[0], q[1], a), 1e-12);
        EXPECT_NEAR(pm, oracle::born_minus(q[0], q[1], a), 1e-12);
        EXPECT_NEAR(pp + pm, 1.0, 1e-12);
    }
}

TEST(Born, ShapeMismatch) {
    const StateVector one(Spinor{1.0, 0.0});
    const StateVector two(std::vector<Complex>{1.0, 0.0, 0.0, 0.0});
    EXPECT_THROW(born_probability(one, two), ShapeError);
    EXPECT_THROW(inner(one, two), ShapeError);
}

TEST(Tolerance, SetAndRestore) {
    const double saved = tolerance();
    EXPECT_EQ(saved, 1e-12);
    set_tolerance(1e-9);
    EXPECT_EQ(tolerance(), 1e-9);
    EXPECT_THROW(set_tolerance(-1.0), DomainError);
    set_tolerance(saved);
}

TEST(OutcomeKey, RoundTrips) {
    for (std::size_t n = 1; n <= 4; ++n) {
        for (std::size_t i = 0; i < (1u << n); ++i) {
            const OutcomeKey k = OutcomeKey::from_index(i, n);
            EXPECT_EQ(k.index(), i);
            EXPECT_EQ(k.to_string(), oracle::label(static_cast<int>(i), static_cast<int>(n)));
            EXPECT_EQ(OutcomeKey::parse(k.to_string()), k);
        }
    }
    EXPECT_THROW(OutcomeKey::parse("+x"), DomainError);
}

TEST(OutcomeDistribution, NormalizesAndKeepsRawMass) {
    const auto d = OutcomeDistribution::from_weights(1, {0.1, 0.4});
    EXPECT_NEAR(d.raw_norm(), 0.5, 1e-15);
    EXPECT_NEAR(d.probability("+"), 0.2, 1e-15);
    EXPECT_NEAR(d.total(), 1.0, 1e-15);
    EXPECT_TRUE(d.normalized());
    EXPECT_THROW(OutcomeDistribution::from_weights(1, {0.0, 0.0}), DegenerateDistributionError);
    EXPECT_THROW(OutcomeDistribution::from_weights(2, {1.0}), ShapeError);
}
