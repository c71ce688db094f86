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

#include <array>
#include <cmath>

#include "oracles.hpp"
#include "wwpi/errors.hpp"
#include "wwpi/hilbert.hpp"
#include "wwpi/schmidt.hpp"

using namespace wwpi;

namespace {

const double h = 1.0 / std::sqrt(2.0);

GeneralTwoQubit from(const std::array<oracle::C, 4>& v) { return GeneralTwoQubit(v[0], v[1], v[2], v[3]); }

// Probabilities in the given frame vs. the Schmidt frame after rotating both settings.
double frame_gap(const GeneralTwoQubit& s, const SchmidtDecomposition& dec, const BlochAngles& m1,
                 const BlochAngles& m2) {
    const std::array<BlochAngles, 2> given{m1, m2};
    const auto direct = product_basis_distribution(s.to_state(), given);
    const auto schmidt =
        two_qubit_distribution(dec.form, rotate_measurement(m1, dec.first), rotate_measurement(m2, dec.second));
    double gap = 0.0;
    for (std::size_t k = 0; k < 4; ++k) {
        gap = std::max(gap, std::abs(direct.probability(k) - schmidt.probability(k)));
    }
    return gap;
}

bool same_direction(const BasisRotation& r, double alpha, double beta) {
    return std::abs(r.alpha() - alpha) < 1e-12 && std::abs(std::remainder(r.beta() - beta, 2 * kPi)) < 1e-12;
}

}  // namespace

TEST(Concurrence, Examples) {
    EXPECT_NEAR(concurrence_like(GeneralTwoQubit(1, 0, 0, 0)), 0.0, 1e-15);
    EXPECT_NEAR(concurrence_like(GeneralTwoQubit(h, 0, 0, h)), 0.5, 1e-15);
    EXPECT_NEAR(concurrence_like(GeneralTwoQubit(0, std::sqrt(0.8), std::sqrt(0.2), 0)), 0.4, 1e-15);
}

TEST(GeneralTwoQubit, RejectsUnnormalized) {
    EXPECT_THROW(GeneralTwoQubit(1, 1, 0, 0), NormalizationError);
    EXPECT_THROW(GeneralTwoQubit::normalized(0, 0, 0, 0), NormalizationError);
    EXPECT_NO_THROW(GeneralTwoQubit::normalized(1, 1, 0, 0));
}

TEST(SchmidtAngles, AlreadySchmidtForm) {
    const auto r = schmidt_angles(GeneralTwoQubit(0, std::sqrt(0.8), std::sqrt(0.2), 0));
    EXPECT_TRUE(same_direction(r.first, 0.0, 0.0));
    // For the second qubit the reversed expression makes alpha = pi the identity.
    EXPECT_TRUE(same_direction(r.second, kPi, 0.0));
    EXPECT_NEAR(std::abs(r.second.zero().c0 - oracle::C{1, 0}), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(r.second.one().c1 - oracle::C{1, 0}), 0.0, 1e-15);
}

TEST(SchmidtAngles, ProductStateOnSecondQubit) {
    const auto r = schmidt_angles(GeneralTwoQubit(h, h, 0, 0));
    EXPECT_TRUE(same_direction(r.first, 0.0, 0.0));
    EXPECT_TRUE(same_direction(r.second, kPi / 2, 0.0));
}

TEST(SchmidtAngles, TrivialFirstQubitWhenCAndDVanish) {
    oracle::Gen gen(4);
    for (int t = 0; t < 100; ++t) {
        const auto q = gen.qubit();
        EXPECT_NEAR(schmidt_angles(GeneralTwoQubit(q[0], q[1], 0, 0)).first.alpha(), 0.0, 1e-7);
    }
}

TEST(SchmidtAngles, SignalsMaximalEntanglement) {
    EXPECT_THROW(schmidt_angles(GeneralTwoQubit(0, h, h, 0)), MaxEntangledError);
    EXPECT_THROW(schmidt_angles(GeneralTwoQubit(h, 0, 0, -h)), MaxEntangledError);
}

TEST(SchmidtAngles, SinAlphaUsesUnsquaredModulus) {
    oracle::Gen gen(6);
    for (int t = 0; t < 1000; ++t) {
        const auto v = gen.two_qubit();
        const GeneralTwoQubit s = from(v);
        const double root = std::sqrt(1.0 - 4.0 * std::pow(concurrence_like(s), 2));
        const double w1 = std::abs(v[0] * std::conj(v[2]) + v[1] * std::conj(v[3]));
        const double z1 = std::norm(v[0]) + std::norm(v[1]) - std::norm(v[2]) - std::norm(v[3]);
        const auto r = schmidt_angles(s);
        EXPECT_NEAR(std::sin(r.first.alpha()), 2.0 * w1 / root, 1e-10);
        EXPECT_NEAR(std::cos(r.first.alpha()), z1 / root, 1e-10);
    }
}

TEST(SchmidtForm, Examples) {
    const auto a = to_schmidt_form(GeneralTwoQubit(0, std::sqrt(0.8), std::sqrt(0.2), 0));
    EXPECT_FALSE(a.maximally_entangled);
    EXPECT_NEAR(a.form.A(), 0.894427190999916, 1e-12);
    EXPECT_NEAR(a.form.B(), 0.447213595499958, 1e-12);
    EXPECT_NEAR(a.form.delta(), 0.0, 1e-12);
    EXPECT_TRUE(same_direction(a.first, 0.0, 0.0));
    EXPECT_TRUE(same_direction(a.second, kPi, 0.0));

    const auto b = to_schmidt_form(GeneralTwoQubit(0, h, h, 0));
    EXPECT_TRUE(b.maximally_entangled);
    ASSERT_TRUE(b.params && b.pair);
    EXPECT_NEAR(b.params->gamma, kPi / 2, 1e-12);
    EXPECT_NEAR(std::abs(b.pair->f - oracle::C{1, 0}), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(b.pair->g), 0.0, 1e-12);
    EXPECT_NEAR(b.form.A(), h, 1e-12);
    EXPECT_NEAR(b.form.B(), h, 1e-12);
    EXPECT_NEAR(b.form.delta(), 0.0, 1e-12);
    EXPECT_TRUE(same_direction(b.first, 0.0, 0.0));
    EXPECT_TRUE(same_direction(b.second, kPi, 0.0));

    const auto c = to_schmidt_form(GeneralTwoQubit(h, h, 0, 0));
    EXPECT_NEAR(c.form.A(), 1.0, 1e-12);
    EXPECT_NEAR(c.form.B(), 0.0, 1e-12);
    EXPECT_NEAR(c.second.alpha(), kPi / 2, 1e-12);

    const auto d = to_schmidt_form(GeneralTwoQubit(1, 0, 0, 0));
    EXPECT_NEAR(d.form.A(), 1.0, 1e-12);
    EXPECT_NEAR(d.form.B(), 0.0, 1e-12);
    EXPECT_LE(std::max(d.residual_00, d.residual_11), 1e-12);
}

TEST(SchmidtForm, RandomStatesHaveVanishingCorners) {
    oracle::Gen gen(7);
    int general = 0;
    for (int t = 0; t < 2000; ++t) {
        const GeneralTwoQubit s = from(gen.two_qubit());
        const auto dec = to_schmidt_form(s);
        general += dec.maximally_entangled ? 0 : 1;
        ASSERT_LE(dec.residual_00, 1e-10) << t;
        ASSERT_LE(dec.residual_11, 1e-10) << t;
        ASSERT_GE(dec.form.A(), dec.form.B());
        // Reconstruct the corners independently of the reported residuals.
        EXPECT_LE(std::abs(frame_coefficient(s, dec.first.zero(), dec.second.zero())), 1e-10);
        EXPECT_LE(std::abs(frame_coefficient(s, dec.first.one(), dec.second.one())), 1e-10);
        EXPECT_NEAR(std::abs(frame_coefficient(s, dec.first.zero(), dec.second.one())), dec.form.A(), 1e-10);
    }
    EXPECT_EQ(general, 2000);
}

TEST(SchmidtForm, FrameCovariance) {
    oracle::Gen gen(9);
    for (int t = 0; t < 1000; ++t) {
        const GeneralTwoQubit s = from(gen.two_qubit());
        const auto a1 = gen.angles(), a2 = gen.angles();
        const auto dec = to_schmidt_form(s);
        ASSERT_LE(frame_gap(s, dec, BlochAngles(a1.theta, a1.phi), BlochAngles(a2.theta, a2.phi)), 1e-10) << t;
    }
}

TEST(SchmidtForm, BasisRotationsAreOrthonormal) {
    oracle::Gen gen(10);
    for (int t = 0; t < 200; ++t) {
        for (auto conv : {QubitConvention::First, QubitConvention::Second}) {
            const BasisRotation r(gen.uniform(0, kPi), gen.uniform(0, 2 * kPi), conv);
            EXPECT_NEAR(r.zero().norm_squared(), 1.0, 1e-14);
            EXPECT_NEAR(r.one().norm_squared(), 1.0, 1e-14);
            EXPECT_NEAR(std::abs(inner(r.zero(), r.one())), 0.0, 1e-14);
            const BasisRotation sw = r.swapped();
            EXPECT_NEAR(std::abs(inner(sw.zero(), r.one())), 1.0, 1e-12);
        }
    }
    EXPECT_THROW(BasisRotation(-1.0, 0.0, QubitConvention::First), DomainError);
}

TEST(MaxEntangled, BellStatesIncludingSinglet) {
    oracle::Gen gen(12);
    const std::array<std::array<oracle::C, 4>, 5> bells{{
        {h, 0, 0, h},
        {h, 0, 0, -h},
        {0, h, h, 0},
        {0, h, -h, 0},
        {oracle::C{0, h}, 0, 0, oracle::C{h, 0}},
    }};
    for (const auto& v : bells) {
        const GeneralTwoQubit s = from(v);
        const auto dec = to_schmidt_form(s);
        EXPECT_TRUE(dec.maximally_entangled);
        EXPECT_LE(std::max(dec.residual_00, dec.residual_11), 1e-10);
        EXPECT_NEAR(dec.form.A(), h, 1e-10);
        EXPECT_NO_THROW(max_entangled_params(s));
        const auto a1 = gen.angles(), a2 = gen.angles();
        EXPECT_LE(frame_gap(s, dec, BlochAngles(a1.theta, a1.phi), BlochAngles(a2.theta, a2.phi)), 1e-10);
    }
    // The singlet is reached with a global phase of i.
    const auto singlet = max_entangled_params(GeneralTwoQubit(0, h, -h, 0));
    EXPECT_NEAR(singlet.gamma, kPi / 2, 1e-12);
    EXPECT_NEAR(std::abs(std::remainder(singlet.chi2 - singlet.chi1, 2 * kPi)), kPi / 2, 1e-12);
}

TEST(MaxEntangled, ParamsRoundTrip) {
    oracle::Gen gen(13);
    for (int t = 0; t < 500; ++t) {
        const double g = gen.uniform(0, kPi / 2), x1 = gen.uniform(0, 2 * kPi), x2 = gen.uniform(0, 2 * kPi);
        const oracle::C glob = oracle::ph(gen.uniform(0, 2 * kPi));
        const GeneralTwoQubit s(glob * oracle::ph(x1) * std::cos(g) * h, glob * oracle::ph(x2) * std::sin(g) * h,
                                glob * oracle::ph(-x2) * std::sin(g) * h, -glob * oracle::ph(-x1) * std::cos(g) * h);
        const auto p = max_entangled_params(s);
        const double c = std::cos(p.gamma) * h, sn = std::sin(p.gamma) * h;
        const std::array<oracle::C, 4> model{oracle::ph(p.chi1) * c, oracle::ph(p.chi2) * sn,
                                             oracle::ph(-p.chi2) * sn, -oracle::ph(-p.chi1) * c};
        const std::array<oracle::C, 4> given{s.a(), s.b(), s.c(), s.d()};
        oracle::C overlap = 0;
        for (int i = 0; i < 4; ++i) {
            overlap += std::conj(model[i]) * given[i];
        }
        EXPECT_NEAR(std::abs(overlap), 1.0, 1e-10);
        const auto dec = to_schmidt_form(s);
        EXPECT_LE(std::max(dec.residual_00, dec.residual_11), 1e-10);
    }
}

TEST(MaxEntangled, ProductStateDoesNotFit) {
    EXPECT_THROW(max_entangled_params(GeneralTwoQubit(1, 0, 0, 0)), ParametrizationError);
}

TEST(MaxEntangled, SchmidtPairExamples) {
    const auto a = max_entangled_schmidt({kPi / 2, 0, 0});
    EXPECT_NEAR(std::abs(a.f - oracle::C{1, 0}), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(a.g), 0.0, 1e-15);
    const auto b = max_entangled_schmidt({0, 0, 0});
    EXPECT_NEAR(std::abs(b.f), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(b.g - oracle::C{-1, 0}), 0.0, 1e-15);
    const auto c = max_entangled_schmidt({kPi / 4, kPi / 2, 0});
    EXPECT_NEAR(std::abs(c.f - oracle::C{h, 0}), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(c.g - (-oracle::ph(-kPi / 2) * h)), 0.0, 1e-15);
    EXPECT_NEAR(std::norm(c.f) + std::norm(c.g), 1.0, 1e-12);
}

TEST(RotateMeasurement, IdentityAndSwap) {
    oracle::Gen gen(14);
    for (int t = 0; t < 200; ++t) {
        const auto a = gen.angles();
        const BlochAngles m(a.theta, a.phi);
        const BlochAngles same = rotate_measurement(m, BasisRotation::identity(QubitConvention::First));
        EXPECT_NEAR(same.theta(), m.theta(), 1e-12);
        EXPECT_NEAR(std::abs(std::remainder(same.phi() - m.phi(), 2 * kPi)), 0.0, 1e-9);
        const BlochAngles same2 = rotate_measurement(m, BasisRotation::identity(QubitConvention::Second));
        EXPECT_NEAR(same2.theta(), m.theta(), 1e-12);
        const BlochAngles flipped = rotate_measurement(m, BasisRotation(kPi, 0.0, QubitConvention::First));
        EXPECT_NEAR(flipped.theta(), kPi - m.theta(), 1e-12);
    }
}

TEST(SchmidtForm, DegenerateContinuity) {
    // |a c* + b d*| = eps on the first qubit; eps = 0 snaps beta to 0.
    oracle::Gen gen(15);
    const double p = std::sqrt(0.7);
    auto state = [&](double eps) {
        const double c = eps / p;
        return GeneralTwoQubit(p, 0, c, std::sqrt(0.3 - c * c));
    };
    const auto exact = to_schmidt_form(state(0.0));
    const auto near = to_schmidt_form(state(1e-6));
    EXPECT_EQ(exact.first.beta(), 0.0);
    for (int t = 0; t < 100; ++t) {
        const auto a1 = gen.angles(), a2 = gen.angles();
        const BlochAngles m1(a1.theta, a1.phi), m2(a2.theta, a2.phi);
        const auto d0 = two_qubit_distribution(exact.form, rotate_measurement(m1, exact.first),
                                               rotate_measurement(m2, exact.second));
        const auto d1 = two_qubit_distribution(near.form, rotate_measurement(m1, near.first),
                                               rotate_measurement(m2, near.second));
        for (std::size_t k = 0; k < 4; ++k) {
            EXPECT_NEAR(d0.probability(k), d1.probability(k), 1e-5);
        }
        EXPECT_LE(frame_gap(state(1e-6), near, m1, m2), 1e-10);
        EXPECT_LE(frame_gap(state(0.0), exact, m1, m2), 1e-10);
    }
}
