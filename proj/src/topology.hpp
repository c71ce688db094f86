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

// Index-resolved view of a Circuit, built once per evaluation.

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "wwpi/circuit.hpp"

namespace wwpi::detail {

inline constexpr std::size_t kNone = static_cast<std::size_t>(-1);

struct SegmentNode {
    Complex plate_factor{1.0, 0.0};
    // Exactly one of these is set for a reachable segment.
    std::size_t beamsplitter = kNone;
    std::size_t reflect_to = kNone;
    std::size_t transmit_to = kNone;
    std::size_t detector = kNone;
};

struct Topology {
    std::vector<SegmentNode> segments;
    std::unordered_map<std::string, std::size_t> segment_index;
    // branch_paths[source][branch][emission] -> segment index
    std::vector<std::vector<std::vector<std::size_t>>> branch_paths;
    // detector -> qubit, or kNone
    std::vector<std::size_t> detector_qubit;
    std::vector<Sign> detector_sign;
    std::size_t num_qubits = 0;
    std::vector<std::pair<std::size_t, std::size_t>> postselect;  // (detector, count)
};

/// Throws TopologyError on any structural problem.
Topology compile(const Circuit& circuit);

}  // namespace wwpi::detail
