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

#include "wwpi/hilbert.hpp"

#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "wwpi/errors.hpp"

namespace wwpi {

SchmidtForm::SchmidtForm(double a, double b, double delta) {
    if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(delta)) {
        throw DomainError("Schmidt parameters must be finite");
    }
    if (a < 0.0 || b < 0.0) {
        throw DomainError("Schmidt coefficients A and B must be non-negative");
    }
    if (std::abs(a * a + b * b - 1.0) > tolerance()) {
        throw DomainError("Schmidt coefficients must satisfy A^2 + B^2 = 1, got " +
                          std::to_string(a * a + b * b));
    }
    a_ = a;
    b_ = b;
    delta_ = wrap_angle(delta);
}

StateVector schmidt_state(const SchmidtForm& sf) {
    return StateVector({Complex{0.0, 0.0}, Complex{sf.A(), 0.0}, sf.B() * phase(sf.delta()), Complex{0.0, 0.0}});
}

StateVector two_qubit_outcome_state(Sign o1, Sign o2, const BlochAngles& m1, const BlochAngles& m2) {
    const std::array<Spinor, 2> factors{basis_state(o1, m1), basis_state(o2, m2)};
    return tensor(factors);
}

OutcomeDistribution two_qubit_distribution(const SchmidtForm& sf, const BlochAngles& m1, const BlochAngles& m2) {
    const std::array<BlochAngles, 2> settings{m1, m2};
    return product_basis_distribution(schmidt_state(sf), settings);
}

StateVector ghz_state() {
    const double h = 1.0 / std::sqrt(2.0);
    std::vector<Complex> amps(8, Complex{0.0, 0.0});
    amps.front() = h;
    amps.back() = h;
    return StateVector(std::move(amps));
}

OutcomeDistribution ghz_distribution(const BlochAngles& m1, const BlochAngles& m2, const BlochAngles& m3) {
    const std::array<BlochAngles, 3> settings{m1, m2, m3};
    return product_basis_distribution(ghz_state(), settings);
}

OutcomeDistribution product_basis_distribution(const StateVector& state, std::span<const BlochAngles> settings) {
    const std::size_t n = settings.size();
    if (n == 0 || n > kDefaultMaxQubits || state.dim() != (std::size_t{1} << n)) {
        throw ShapeError("state of dimension " + std::to_string(state.dim()) + " cannot be measured with " +
                         std::to_string(n) + " settings");
    }
    std::vector<double> probs(state.dim());
    std::vector<Spinor> factors(n);
    for (std::size_t idx = 0; idx < probs.size(); ++idx) {
        const OutcomeKey key = OutcomeKey::from_index(idx, n);
        for (std::size_t q = 0; q < n; ++q) {
            factors[q] = basis_state(key[q], settings[q]);
        }
        probs[idx] = born_probability(state, tensor(factors));
    }
    return OutcomeDistribution::from_weights(n, std::move(probs));
}

}  // namespace wwpi
