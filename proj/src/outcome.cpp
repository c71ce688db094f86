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

#include "wwpi/outcome.hpp"

#include <algorithm>
#include <cmath>

#include "wwpi/errors.hpp"

namespace wwpi {

OutcomeKey::OutcomeKey(std::vector<Sign> signs) : signs_(std::move(signs)) {
    if (signs_.empty()) {
        throw DomainError("outcome key must name at least one qubit");
    }
}

OutcomeKey OutcomeKey::parse(std::string_view label) {
    std::vector<Sign> signs;
    signs.reserve(label.size());
    for (char ch : label) {
        if (ch == '+') {
            signs.push_back(Sign::Plus);
        } else if (ch == '-') {
            signs.push_back(Sign::Minus);
        } else {
            throw DomainError("outcome label may contain only '+' and '-': " + std::string(label));
        }
    }
    return OutcomeKey(std::move(signs));
}

OutcomeKey OutcomeKey::from_index(std::size_t index, std::size_t num_qubits) {
    if (num_qubits == 0 || num_qubits >= 8 * sizeof(std::size_t) || index >> num_qubits != 0) {
        throw DomainError("outcome index " + std::to_string(index) + " out of range for " +
                          std::to_string(num_qubits) + " qubits");
    }
    std::vector<Sign> signs(num_qubits);
    for (std::size_t q = 0; q < num_qubits; ++q) {
        signs[q] = (index >> (num_qubits - 1 - q)) & 1U ? Sign::Minus : Sign::Plus;
    }
    return OutcomeKey(std::move(signs));
}

std::size_t OutcomeKey::index() const noexcept {
    std::size_t idx = 0;
    for (Sign s : signs_) {
        idx = (idx << 1) | (s == Sign::Minus ? 1U : 0U);
    }
    return idx;
}

std::string OutcomeKey::to_string() const {
    std::string out;
    out.reserve(signs_.size());
    for (Sign s : signs_) {
        out.push_back(sign_char(s));
    }
    return out;
}

OutcomeDistribution OutcomeDistribution::from_weights(std::size_t num_qubits, std::vector<double> weights) {
    if (num_qubits == 0 || weights.size() != (std::size_t{1} << num_qubits)) {
        throw ShapeError("expected 2^" + std::to_string(num_qubits) + " outcome weights, got " +
                         std::to_string(weights.size()));
    }
    double raw = 0.0;
    for (double w : weights) {
        if (!(w >= 0.0) || !std::isfinite(w)) {
            throw DomainError("outcome weights must be finite and non-negative");
        }
        raw += w;
    }
    if (!(raw > 0.0)) {
        throw DegenerateDistributionError("outcome weights sum to zero");
    }
    OutcomeDistribution d;
    d.num_qubits_ = num_qubits;
    d.raw_norm_ = raw;
    d.normalized_ = true;
    d.probs_ = std::move(weights);
    if (raw != 1.0) {
        for (double& p : d.probs_) {
            p = std::min(1.0, p / raw);
        }
    }
    return d;
}

double OutcomeDistribution::probability(const OutcomeKey& key) const {
    if (key.size() != num_qubits_) {
        throw ShapeError("outcome key has " + std::to_string(key.size()) + " signs, distribution has " +
                         std::to_string(num_qubits_) + " qubits");
    }
    return probs_[key.index()];
}

double OutcomeDistribution::total() const noexcept {
    double t = 0.0;
    for (double p : probs_) {
        t += p;
    }
    return t;
}

}  // namespace wwpi
