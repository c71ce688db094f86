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

// JSON form of a Circuit:
//
//   {
//     "sources":       [{"branches": [{"amplitude": {"re": r, "im": i}, "paths": [segment-id, ...]}]}],
//     "segments":      [{"id": s, "plates": [radians, ...]}],
//     "beamsplitters": [{"theta": t, "input_ports": {segment-id: {"reflect": id, "transmit": id}}}],
//     "detectors":     [{"id": d, "qubit": q, "sign": "+"|"-"} | {"id": d, "auxiliary": true}],
//     "postselect":    {detector-id: count}
//   }
//
// "postselect" is optional. Object key order is preserved on both read and write.

#include <filesystem>
#include <string>

#include "wwpi/circuit.hpp"

namespace wwpi {

/// Throws ConfigError on malformed JSON or schema violations. Structural
/// checks (cycles, dangling paths) are left to validate().
Circuit circuit_from_json(const std::string& text);

/// Compact rendering when indent < 0; numbers use shortest round-trip decimals.
std::string circuit_to_json(const Circuit& circuit, int indent = 2);

Circuit load_circuit(const std::filesystem::path& path);

}  // namespace wwpi
