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

#include "wwpi/qmath.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <string>

#include "wwpi/errors.hpp"

namespace wwpi {

namespace {
std::atomic<double> g_tolerance{kDefaultTolerance};
}

double tolerance() noexcept { return g_tolerance.load(std::memory_order_relaxed); }

void set_tolerance(double tol) {
    if (!(tol > 0.0) || !std::isfinite(tol)) {
        throw DomainError("tolerance must be a positive finite number, got " + std::to_string(tol));
    }
    g_tolerance.store(tol, std::memory_order_relaxed);
}

Complex phase(double angle) noexcept { return {std::cos(angle), std::sin(angle)}; }

double wrap_angle(double angle) noexcept {
    double r = std::fmod(angle, kTwoPi);
    if (r < 0.0) {
        r += kTwoPi;
    }
    if (r >= kTwoPi) {
        r -= kTwoPi;
    }
    return r;
}

BlochAngles::BlochAngles(double theta, double phi) {
    if (!std::isfinite(theta) || !std::isfinite(phi)) {
        throw DomainError("Bloch angles must be finite");
    }
    // Absorb rounding from unit conversion at the poles.
    constexpr double slack = 1e-12;
    if (theta < 0.0 && theta >= -slack) {
        theta = 0.0;
    } else if (theta > kPi && theta <= kPi + slack) {
        theta = kPi;
    }
    if (theta < 0.0 || theta > kPi) {
        throw DomainError("theta must lie in [0, pi], got " + std::to_string(theta));
    }
    theta_ = theta;
    phi_ = wrap_angle(phi);
}

Complex inner(const Spinor& lhs, const Spinor& rhs) noexcept {
    return std::conj(lhs.c0) * rhs.c0 + std::conj(lhs.c1) * rhs.c1;
}

StateVector::StateVector(std::vector<Complex> amplitudes) : amps_(std::move(amplitudes)) {
    if (amps_.size() < 2 || !std::has_single_bit(amps_.size())) {
        throw ShapeError("state vector length must be a power of two >= 2, got " +
                         std::to_string(amps_.size()));
    }
    num_qubits_ = static_cast<std::size_t>(std::countr_zero(amps_.size()));
}

StateVector::StateVector(const Spinor& s) : StateVector(std::vector<Complex>{s.c0, s.c1}) {}

double StateVector::norm_squared() const noexcept {
    double total = 0.0;
    for (const auto& a : amps_) {
        total += std::norm(a);
    }
    return total;
}

StateVector StateVector::normalized() const {
    const double n = std::sqrt(norm_squared());
    if (n == 0.0) {
        throw NormalizationError("cannot normalize the zero vector");
    }
    std::vector<Complex> out(amps_);
    for (auto& a : out) {
        a /= n;
    }
    return StateVector(std::move(out));
}

Complex inner(const StateVector& lhs, const StateVector& rhs) {
    if (lhs.dim() != rhs.dim()) {
        throw ShapeError("dimension mismatch: " + std::to_string(lhs.dim()) + " vs " +
                         std::to_string(rhs.dim()));
    }
    Complex acc{0.0, 0.0};
    for (std::size_t i = 0; i < lhs.dim(); ++i) {
        acc += std::conj(lhs[i]) * rhs[i];
    }
    return acc;
}

Spinor basis_plus(const BlochAngles& angles) noexcept {
    const double half = angles.theta() / 2.0;
    return {Complex{std::cos(half), 0.0}, std::sin(half) * phase(angles.phi())};
}

Spinor basis_minus(const BlochAngles& angles) noexcept {
    const double half = angles.theta() / 2.0;
    return {std::sin(half) * phase(-angles.phi()), Complex{-std::cos(half), 0.0}};
}

Spinor basis_state(Sign sign, const BlochAngles& angles) noexcept {
    return sign == Sign::Plus ? basis_plus(angles) : basis_minus(angles);
}

StateVector tensor(std::span<const Spinor> factors, std::size_t max_qubits) {
    if (factors.empty()) {
        throw SizeError("tensor product needs at least one factor");
    }
    if (factors.size() > max_qubits) {
        throw SizeError("tensor product of " + std::to_string(factors.size()) +
                        " qubits exceeds the cap of " + std::to_string(max_qubits));
    }
    std::vector<Complex> amps{Complex{1.0, 0.0}};
    for (const auto& f : factors) {
        std::vector<Complex> next;
        next.reserve(amps.size() * 2);
        for (const auto& a : amps) {
            next.push_back(a * f.c0);
            next.push_back(a * f.c1);
        }
        amps = std::move(next);
    }
    return StateVector(std::move(amps));
}

double born_probability(const StateVector& state, const StateVector& outcome) {
    return std::clamp(std::norm(inner(outcome, state)), 0.0, 1.0);
}

}  // namespace wwpi
