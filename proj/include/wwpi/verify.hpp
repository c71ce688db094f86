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

// Randomized property suites behind `wwpi verify`.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace wwpi {

enum class VerifySuite { TwoQubit, Ghz, Schmidt, NoSignal, Chsh };

std::optional<VerifySuite> parse_suite(std::string_view name);
const char* suite_name(VerifySuite suite) noexcept;

struct VerifyMetric {
    std::string name;
    double value;
    double limit;
    /// true: value must be <= limit; false: value must be >= limit.
    bool upper_bound;

    bool ok() const noexcept { return upper_bound ? value <= limit : value >= limit; }
};

struct VerifyResult {
    VerifySuite suite;
    std::size_t trials;
    std::uint64_t seed;
    std::vector<VerifyMetric> metrics;
    /// Parameters of the worst trial of each failing metric.
    std::vector<std::string> offending;

    bool passed() const noexcept;
};

/// Throws DomainError when trials == 0.
VerifyResult run_verify(VerifySuite suite, std::size_t trials, std::uint64_t seed);

std::string render(const VerifyResult& result);

}  // namespace wwpi
