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

#include "wwpi/schmidt.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "wwpi/errors.hpp"

namespace wwpi {

namespace {

double arg_or_zero(Complex z, double eps) { return std::abs(z) < eps ? 0.0 : std::arg(z); }

// Bloch (alpha, beta) of the dominant eigenvector of a reduced density
// matrix with diagonal difference z and off-diagonal w = rho_01:
// cos(alpha) = z / r, sin(alpha) = 2|w| / r, e^{-i beta} = w / |w|.
std::pair<double, double> reduced_axis(double z, Complex w) {
    if (std::abs(w) < kUndefinedBetaThreshold) {
        return {z >= 0.0 ? 0.0 : kPi, 0.0};
    }
    return {std::atan2(2.0 * std::abs(w), z), wrap_angle(-std::arg(w))};
}

struct MaxEntangledFit {
    MaxEntangledParams params;
    double residual;
};

MaxEntangledFit fit_max_entangled(const GeneralTwoQubit& s) {
    const double root2 = std::sqrt(2.0);
    std::array<Complex, 4> u{root2 * s.a(), root2 * s.b(), root2 * s.c(), root2 * s.d()};
    // The form has det = -1; pick the global phase that makes it so.
    const Complex det = u[0] * u[3] - u[1] * u[2];
    const double omega = std::abs(det) < 1e-300 ? 0.0 : (kPi - std::arg(det)) / 2.0;
    const Complex g = phase(omega);
    const Complex p = g * u[0];
    const Complex q = g * u[1];
    MaxEntangledParams out{std::atan2(std::abs(q), std::abs(p)), wrap_angle(arg_or_zero(p, 1e-12)),
                           wrap_angle(arg_or_zero(q, 1e-12))};
    const double c = std::cos(out.gamma) / root2;
    const double sn = std::sin(out.gamma) / root2;
    const std::array<Complex, 4> model{phase(out.chi1) * c, phase(out.chi2) * sn, phase(-out.chi2) * sn,
                                       -phase(-out.chi1) * c};
    const std::array<Complex, 4> given{s.a(), s.b(), s.c(), s.d()};
    Complex overlap{0.0, 0.0};
    for (std::size_t i = 0; i < 4; ++i) {
        overlap += std::conj(model[i]) * given[i];
    }
    const Complex align = phase(arg_or_zero(overlap, 1e-300));
    double r2 = 0.0;
    for (std::size_t i = 0; i < 4; ++i) {
        r2 += std::norm(given[i] - align * model[i]);
    }
    return {out, std::sqrt(r2)};
}

double degeneracy(const GeneralTwoQubit& s) {
    const double conc = concurrence_like(s);
    return 1.0 - 4.0 * conc * conc;
}

}  // namespace

GeneralTwoQubit::GeneralTwoQubit(Complex a, Complex b, Complex c, Complex d) : a_(a), b_(b), c_(c), d_(d) {
    const double n = std::norm(a) + std::norm(b) + std::norm(c) + std::norm(d);
    if (!std::isfinite(n) || std::abs(n - 1.0) > tolerance()) {
        throw NormalizationError("two-qubit state must have unit norm, got |psi|^2 = " + std::to_string(n));
    }
}

GeneralTwoQubit GeneralTwoQubit::normalized(Complex a, Complex b, Complex c, Complex d) {
    const double n = std::sqrt(std::norm(a) + std::norm(b) + std::norm(c) + std::norm(d));
    if (!(n > 0.0) || !std::isfinite(n)) {
        throw NormalizationError("cannot normalize a zero or non-finite two-qubit state");
    }
    return GeneralTwoQubit(a / n, b / n, c / n, d / n);
}

StateVector GeneralTwoQubit::to_state() const { return StateVector({a_, b_, c_, d_}); }

BasisRotation::BasisRotation(double alpha, double beta, QubitConvention convention) : convention_(convention) {
    if (!std::isfinite(alpha) || !std::isfinite(beta) || alpha < -1e-12 || alpha > kPi + 1e-12) {
        throw DomainError("basis rotation alpha must lie in [0, pi], got " + std::to_string(alpha));
    }
    alpha_ = std::clamp(alpha, 0.0, kPi);
    beta_ = wrap_angle(beta);
}

BasisRotation BasisRotation::identity(QubitConvention convention) {
    return convention == QubitConvention::First ? BasisRotation(0.0, 0.0, convention)
                                                : BasisRotation(kPi, 0.0, convention);
}

Spinor BasisRotation::zero() const noexcept {
    const double c = std::cos(alpha_ / 2.0);
    const double s = std::sin(alpha_ / 2.0);
    if (convention_ == QubitConvention::First) {
        return {Complex{c, 0.0}, s * phase(beta_)};
    }
    return {s * phase(-beta_), Complex{-c, 0.0}};
}

Spinor BasisRotation::one() const noexcept {
    const double c = std::cos(alpha_ / 2.0);
    const double s = std::sin(alpha_ / 2.0);
    if (convention_ == QubitConvention::First) {
        return {-s * phase(-beta_), Complex{c, 0.0}};
    }
    return {Complex{c, 0.0}, s * phase(beta_)};
}

BasisRotation BasisRotation::swapped() const { return BasisRotation(kPi - alpha_, beta_ + kPi, convention_); }

double concurrence_like(const GeneralTwoQubit& s) noexcept { return std::abs(s.a() * s.d() - s.b() * s.c()); }

SchmidtAngles schmidt_angles(const GeneralTwoQubit& s) {
    if (degeneracy(s) < kDegeneracyThreshold) {
        throw MaxEntangledError("state is maximally entangled (1 - 4|ad-bc|^2 = " + std::to_string(degeneracy(s)) +
                                "); use the maximally entangled parametrization");
    }
    const double z1 = std::norm(s.a()) + std::norm(s.b()) - std::norm(s.c()) - std::norm(s.d());
    const Complex w1 = s.a() * std::conj(s.c()) + s.b() * std::conj(s.d());
    const double z2 = std::norm(s.a()) + std::norm(s.c()) - std::norm(s.b()) - std::norm(s.d());
    const Complex w2 = s.a() * std::conj(s.b()) + s.c() * std::conj(s.d());
    const auto [alpha1, beta1] = reduced_axis(z1, w1);
    const auto [alpha2, beta2] = reduced_axis(z2, w2);
    return {BasisRotation(alpha1, beta1, QubitConvention::First),
            BasisRotation(alpha2, beta2, QubitConvention::Second)};
}

MaxEntangledParams max_entangled_params(const GeneralTwoQubit& state) {
    const MaxEntangledFit fit = fit_max_entangled(state);
    if (fit.residual > kSchmidtTolerance) {
        throw ParametrizationError("state is not of the maximally entangled (gamma, chi1, chi2) form; best fit misses by " +
                                   std::to_string(fit.residual));
    }
    return fit.params;
}

SchmidtPair max_entangled_schmidt(const MaxEntangledParams& p) noexcept {
    return {Complex{std::sin(p.gamma), 0.0}, -phase(-(p.chi1 - p.chi2)) * std::cos(p.gamma)};
}

Complex frame_coefficient(const GeneralTwoQubit& s, const Spinor& u, const Spinor& v) noexcept {
    const Complex u0 = std::conj(u.c0);
    const Complex u1 = std::conj(u.c1);
    const Complex v0 = std::conj(v.c0);
    const Complex v1 = std::conj(v.c1);
    return u0 * v0 * s.a() + u0 * v1 * s.b() + u1 * v0 * s.c() + u1 * v1 * s.d();
}

SchmidtDecomposition to_schmidt_form(const GeneralTwoQubit& state) {
    std::optional<MaxEntangledParams> params;
    std::optional<SchmidtPair> pair;
    BasisRotation first = BasisRotation::identity(QubitConvention::First);
    BasisRotation second = BasisRotation::identity(QubitConvention::Second);
    const bool max_ent = degeneracy(state) < kDegeneracyThreshold;
    if (max_ent) {
        // Qubit 1 stays put; qubit 2's Schmidt |1> is (g*, -f) ~ (cos gamma, sin gamma e^{i(chi2-chi1)}).
        params = fit_max_entangled(state).params;
        pair = max_entangled_schmidt(*params);
        second = BasisRotation(2.0 * params->gamma, params->chi2 - params->chi1, QubitConvention::Second);
    } else {
        const SchmidtAngles angles = schmidt_angles(state);
        first = angles.first;
        second = angles.second;
    }

    auto coefficients = [&](const BasisRotation& r1, const BasisRotation& r2) {
        return std::array<Complex, 4>{
            frame_coefficient(state, r1.zero(), r2.zero()), frame_coefficient(state, r1.zero(), r2.one()),
            frame_coefficient(state, r1.one(), r2.zero()), frame_coefficient(state, r1.one(), r2.one())};
    };
    auto coef = coefficients(first, second);
    if (std::abs(coef[2]) > std::abs(coef[1])) {
        first = first.swapped();
        second = second.swapped();
        coef = coefficients(first, second);
    }

    double big = std::abs(coef[1]);
    double small = std::abs(coef[2]);
    const double scale = std::hypot(big, small);
    big /= scale;
    small /= scale;
    const double delta = small < kUndefinedBetaThreshold ? 0.0 : std::arg(coef[2]) - std::arg(coef[1]);
    return SchmidtDecomposition{SchmidtForm(big, small, delta),
                                first,
                                second,
                                max_ent,
                                params,
                                pair,
                                std::abs(coef[0]),
                                std::abs(coef[3])};
}

BlochAngles rotate_measurement(const BlochAngles& given_frame, const BasisRotation& rot) {
    const Spinor v = basis_plus(given_frame);
    const Complex c0 = inner(rot.zero(), v);
    const Complex c1 = inner(rot.one(), v);
    const double theta = 2.0 * std::atan2(std::abs(c1), std::abs(c0));
    constexpr double eps = 1e-14;
    const double phi = (std::abs(c0) < eps || std::abs(c1) < eps) ? 0.0 : std::arg(c1) - std::arg(c0);
    return BlochAngles(theta, phi);
}

}  // namespace wwpi
