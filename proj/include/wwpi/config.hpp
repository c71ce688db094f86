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

// Scenario configuration files for the command-line tool.
//
//   {
//     "kind": "single_qubit" | "two_qubit" | "ghz" | "custom_circuit",
//     "units": "rad" | "deg",                       (optional, default rad)
//     "state": {"a": {"re","im"}, "b": {"re","im"}}   single_qubit
//              {"A": x, "B": y, "delta": angle}       two_qubit
//     "settings": [{"theta": t, "phi": p}, ...]      one per qubit, not for custom_circuit
//     "circuit": "file.json"                         custom_circuit only, relative to the config
//     "engine": "path" | "oracle" | "both",          (optional, default path)
//     "output": "table" | "csv" | "json",            (optional, default table)
//     "seed": n                                      (optional, default 0)
//   }

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "wwpi/circuit.hpp"
#include "wwpi/hilbert.hpp"
#include "wwpi/qmath.hpp"

namespace wwpi {

enum class ScenarioKind { SingleQubit, TwoQubit, Ghz, CustomCircuit };
enum class EngineChoice { Path, Oracle, Both };
enum class OutputFormat { Table, Csv, Json };

const char* kind_name(ScenarioKind kind) noexcept;

/// Throw ConfigError naming the accepted values.
EngineChoice parse_engine_choice(const std::string& name);
OutputFormat parse_output_format(const std::string& name);

struct ScenarioConfig {
    ScenarioKind kind = ScenarioKind::TwoQubit;
    /// single_qubit amplitudes on |0> and |1>.
    Complex a{1.0, 0.0};
    Complex b{0.0, 0.0};
    /// two_qubit state.
    std::optional<SchmidtForm> schmidt;
    /// Measurement directions in radians, qubit 0 first.
    std::vector<BlochAngles> settings;
    /// custom_circuit only, already parsed.
    std::optional<Circuit> circuit;
    EngineChoice engine = EngineChoice::Path;
    OutputFormat output = OutputFormat::Table;
    std::uint64_t seed = 0;
};

/// Parses config text; relative circuit paths resolve against base_dir.
/// Throws ConfigError with the offending field in the message.
ScenarioConfig parse_config(const std::string& text, const std::filesystem::path& base_dir = {});

ScenarioConfig load_config(const std::filesystem::path& path);

}  // namespace wwpi
