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

// Conventional Born-rule reference engine. Everything here is computed from
// explicit state vectors and tensor-product outcome bases, independently of
// the path engine.

#include <span>

#include "wwpi/outcome.hpp"
#include "wwpi/qmath.hpp"

namespace wwpi {

/// Two-qubit state A|01> + B e^{i delta}|10> in its Schmidt basis.
/// A, B >= 0 with A^2 + B^2 = 1; delta wrapped into [0, 2pi).
class SchmidtForm {
  public:
    /// Throws DomainError on negative or unnormalized (A, B).
    SchmidtForm(double a, double b, double delta);

    double A() const noexcept { return a_; }
    double B() const noexcept { return b_; }
    double delta() const noexcept { return delta_; }

  private:
    double a_;
    double b_;
    double delta_;
};

/// (0, A, B e^{i delta}, 0)
StateVector schmidt_state(const SchmidtForm& sf);

/// tensor(basis(o1, m1), basis(o2, m2))
StateVector two_qubit_outcome_state(Sign o1, Sign o2, const BlochAngles& m1, const BlochAngles& m2);

OutcomeDistribution two_qubit_distribution(const SchmidtForm& sf, const BlochAngles& m1, const BlochAngles& m2);

/// (|000> + |111>)/sqrt2
StateVector ghz_state();

OutcomeDistribution ghz_distribution(const BlochAngles& m1, const BlochAngles& m2, const BlochAngles& m3);

/// Born-rule distribution of any n-qubit state measured in the product basis
/// given by one Bloch direction per qubit. Throws ShapeError when
/// state.dim() != 2^settings.size().
OutcomeDistribution product_basis_distribution(const StateVector& state, std::span<const BlochAngles> settings);

}  // namespace wwpi
