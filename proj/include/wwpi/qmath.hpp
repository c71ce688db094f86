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

// Complex-amplitude primitives shared by both engines: Bloch-sphere
// measurement directions, single-qubit basis spinors, tensor products and
// the Born rule.
//
// Multi-qubit vectors are big-endian in qubit index: qubit 0 is the most
// significant bit of the component index, so |q0 q1 ... q(n-1)> sits at
// index q0*2^(n-1) + ... + q(n-1).

#include <complex>
#include <cstddef>
#include <numbers>
#include <span>
#include <vector>

namespace wwpi {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
inline constexpr double kDefaultTolerance = 1e-12;
inline constexpr std::size_t kDefaultMaxQubits = 10;

/// Global absolute tolerance used by validation and verification checks.
/// Defaults to 1e-12. Safe to read concurrently; set it before fanning out.
double tolerance() noexcept;
void set_tolerance(double tol);

/// e^{i*angle}
Complex phase(double angle) noexcept;

/// Maps any finite angle into [0, 2pi).
double wrap_angle(double angle) noexcept;

enum class Sign { Plus, Minus };

inline constexpr int sign_value(Sign s) noexcept { return s == Sign::Plus ? 1 : -1; }
inline constexpr char sign_char(Sign s) noexcept { return s == Sign::Plus ? '+' : '-'; }

/// Measurement direction on the Bloch sphere. theta in [0, pi], phi in [0, 2pi).
class BlochAngles {
  public:
    /// Throws DomainError if theta is outside [0, pi] or either angle is not
    /// finite. phi is wrapped into [0, 2pi).
    BlochAngles(double theta, double phi);

    double theta() const noexcept { return theta_; }
    double phi() const noexcept { return phi_; }

    friend bool operator==(const BlochAngles&, const BlochAngles&) = default;

  private:
    double theta_;
    double phi_;
};

/// Single-qubit state c0|0> + c1|1>.
struct Spinor {
    Complex c0;
    Complex c1;

    double norm_squared() const noexcept { return std::norm(c0) + std::norm(c1); }
};

/// <lhs|rhs>
Complex inner(const Spinor& lhs, const Spinor& rhs) noexcept;

/// n-qubit pure state with 2^n amplitudes.
class StateVector {
  public:
    /// Throws ShapeError unless the length is a power of two >= 2.
    explicit StateVector(std::vector<Complex> amplitudes);
    explicit StateVector(const Spinor& s);

    std::size_t dim() const noexcept { return amps_.size(); }
    std::size_t num_qubits() const noexcept { return num_qubits_; }
    std::span<const Complex> amplitudes() const noexcept { return amps_; }
    const Complex& operator[](std::size_t i) const { return amps_[i]; }

    double norm_squared() const noexcept;

    /// Returns a copy scaled to unit norm. Throws NormalizationError on a zero vector.
    StateVector normalized() const;

  private:
    std::vector<Complex> amps_;
    std::size_t num_qubits_;
};

/// <lhs|rhs>. Throws ShapeError on mismatched dimensions.
Complex inner(const StateVector& lhs, const StateVector& rhs);

/// |e+> = (cos(theta/2), sin(theta/2) e^{i phi})
Spinor basis_plus(const BlochAngles& angles) noexcept;

/// |e-> = (sin(theta/2) e^{-i phi}, -cos(theta/2))
Spinor basis_minus(const BlochAngles& angles) noexcept;

Spinor basis_state(Sign sign, const BlochAngles& angles) noexcept;

/// Kronecker product, factor 0 most significant. Throws SizeError when the
/// factor count is zero or exceeds max_qubits.
StateVector tensor(std::span<const Spinor> factors, std::size_t max_qubits = kDefaultMaxQubits);

/// |<outcome|state>|^2, clamped into [0, 1]. Throws ShapeError on mismatched dims.
double born_probability(const StateVector& state, const StateVector& outcome);

}  // namespace wwpi
