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

// Schmidt-basis toolkit for arbitrary pure two-qubit states.
//
// A state a|00> + b|01> + c|10> + d|11> in some given basis is rewritten as
// A|01> + B e^{i delta}|10> in per-qubit Schmidt bases. Each Schmidt basis is
// described by the Bloch direction (alpha, beta) of one of its vectors:
//
//   qubit 1:  |0> = ( cos(alpha/2),  sin(alpha/2) e^{i beta})
//             |1> = (-sin(alpha/2) e^{-i beta}, cos(alpha/2))
//   qubit 2:  |0> = ( sin(alpha/2) e^{-i beta}, -cos(alpha/2))
//             |1> = ( cos(alpha/2),  sin(alpha/2) e^{i beta})
//
// so (0, 0) is the identity frame for qubit 1 and (pi, 0) for qubit 2.

#include <optional>

#include "wwpi/hilbert.hpp"
#include "wwpi/qmath.hpp"

namespace wwpi {

/// States with 1 - 4|ad - bc|^2 below this are treated as maximally entangled.
inline constexpr double kDegeneracyThreshold = 1e-10;
/// A beta whose defining modulus is below this is set to 0.
inline constexpr double kUndefinedBetaThreshold = 1e-12;
/// Residual tolerance for Schmidt reconstructions.
inline constexpr double kSchmidtTolerance = 1e-10;

class GeneralTwoQubit {
  public:
    /// Throws NormalizationError unless |a|^2+|b|^2+|c|^2+|d|^2 = 1 within tolerance().
    GeneralTwoQubit(Complex a, Complex b, Complex c, Complex d);

    /// Rescales to unit norm first. Throws NormalizationError on the zero vector.
    static GeneralTwoQubit normalized(Complex a, Complex b, Complex c, Complex d);

    Complex a() const noexcept { return a_; }
    Complex b() const noexcept { return b_; }
    Complex c() const noexcept { return c_; }
    Complex d() const noexcept { return d_; }

    StateVector to_state() const;

  private:
    Complex a_, b_, c_, d_;
};

enum class QubitConvention { First, Second };

class BasisRotation {
  public:
    /// alpha must lie in [0, pi]; beta is wrapped into [0, 2pi).
    BasisRotation(double alpha, double beta, QubitConvention convention);

    static BasisRotation identity(QubitConvention convention);

    double alpha() const noexcept { return alpha_; }
    double beta() const noexcept { return beta_; }
    QubitConvention convention() const noexcept { return convention_; }

    /// Schmidt basis vectors written in the given basis.
    Spinor zero() const noexcept;
    Spinor one() const noexcept;

    /// Same axis with the |0>/|1> labels exchanged.
    BasisRotation swapped() const;

  private:
    double alpha_;
    double beta_;
    QubitConvention convention_;
};

struct MaxEntangledParams {
    double gamma;
    double chi1;
    double chi2;
};

struct SchmidtPair {
    Complex f;
    Complex g;
};

struct SchmidtAngles {
    BasisRotation first;
    BasisRotation second;
};

struct SchmidtDecomposition {
    SchmidtForm form;
    BasisRotation first;
    BasisRotation second;
    bool maximally_entangled;
    /// Set on the maximally entangled branch.
    std::optional<MaxEntangledParams> params;
    std::optional<SchmidtPair> pair;
    /// |<00|psi>| and |<11|psi>| in the Schmidt frame.
    double residual_00;
    double residual_11;
};

/// |ad - bc|, 0 for product states and 1/2 for maximally entangled ones.
double concurrence_like(const GeneralTwoQubit& state) noexcept;

/// Throws MaxEntangledError when 1 - 4|ad - bc|^2 < kDegeneracyThreshold.
SchmidtAngles schmidt_angles(const GeneralTwoQubit& state);

/// Total: routes maximally entangled states through the (gamma, chi1, chi2)
/// branch. The result always has A >= B.
SchmidtDecomposition to_schmidt_form(const GeneralTwoQubit& state);

/// Fits (gamma, chi1, chi2) up to a global phase. Throws ParametrizationError
/// when the best fit misses the state by more than kSchmidtTolerance.
MaxEntangledParams max_entangled_params(const GeneralTwoQubit& state);

/// f = sin(gamma), g = -e^{-i(chi1 - chi2)} cos(gamma)
SchmidtPair max_entangled_schmidt(const MaxEntangledParams& p) noexcept;

/// Re-expresses a measurement direction given in the original basis in the
/// Schmidt frame described by rot.
BlochAngles rotate_measurement(const BlochAngles& given_frame, const BasisRotation& rot);

/// Coefficient <u_j v_k|psi> of the state in the product frame (u, v).
Complex frame_coefficient(const GeneralTwoQubit& state, const Spinor& u, const Spinor& v) noexcept;

}  // namespace wwpi
