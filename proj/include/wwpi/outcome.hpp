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

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "wwpi/qmath.hpp"

namespace wwpi {

/// One sign per measured qubit, qubit 0 first.
class OutcomeKey {
  public:
    explicit OutcomeKey(std::vector<Sign> signs);

    /// Parses "+-+" style labels. Throws DomainError on other characters.
    static OutcomeKey parse(std::string_view label);

    /// Key for a canonical index: bit (n-1-j) set means qubit j is '-'.
    static OutcomeKey from_index(std::size_t index, std::size_t num_qubits);

    std::size_t size() const noexcept { return signs_.size(); }
    Sign operator[](std::size_t qubit) const { return signs_.at(qubit); }
    const std::vector<Sign>& signs() const noexcept { return signs_; }

    std::size_t index() const noexcept;
    std::string to_string() const;

    friend bool operator==(const OutcomeKey&, const OutcomeKey&) = default;

  private:
    std::vector<Sign> signs_;
};

/// Probabilities over all 2^n outcome keys, stored in canonical index order
/// (all '+' first, qubit 0 most significant).
class OutcomeDistribution {
  public:
    /// Builds from raw (possibly unnormalized) weights. The raw total is kept
    /// in raw_norm(); stored entries are divided by it. Throws
    /// DegenerateDistributionError if the total is not positive.
    static OutcomeDistribution from_weights(std::size_t num_qubits, std::vector<double> weights);

    std::size_t num_qubits() const noexcept { return num_qubits_; }
    std::size_t size() const noexcept { return probs_.size(); }

    double probability(const OutcomeKey& key) const;
    double probability(std::string_view label) const { return probability(OutcomeKey::parse(label)); }
    double probability(std::size_t index) const { return probs_.at(index); }
    OutcomeKey key(std::size_t index) const { return OutcomeKey::from_index(index, num_qubits_); }

    const std::vector<double>& probabilities() const noexcept { return probs_; }

    bool normalized() const noexcept { return normalized_; }
    /// Total weight before renormalization.
    double raw_norm() const noexcept { return raw_norm_; }
    double total() const noexcept;

  private:
    OutcomeDistribution() = default;

    std::size_t num_qubits_ = 0;
    std::vector<double> probs_;
    bool normalized_ = false;
    double raw_norm_ = 0.0;
};

}  // namespace wwpi
