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

#include "wwpi/config.hpp"

#include <cmath>
#include <fstream>
#include <initializer_list>
#include <sstream>

#include "json.hpp"
#include "wwpi/circuit_json.hpp"
#include "wwpi/errors.hpp"

namespace wwpi {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void bad(const std::string& where, const std::string& what) {
    throw ConfigError("config: " + where + ": " + what);
}

const Json& field(const Json& obj, const char* name, const std::string& where) {
    if (!obj.is_object()) {
        bad(where, "expected an object");
    }
    const auto it = obj.find(name);
    if (it == obj.end()) {
        bad(where, std::string("missing field '") + name + "'");
    }
    return *it;
}

double number(const Json& j, const std::string& where) {
    if (!j.is_number()) {
        bad(where, "expected a number");
    }
    const double v = j.get<double>();
    if (!std::isfinite(v)) {
        bad(where, "expected a finite number");
    }
    return v;
}

std::string text(const Json& j, const std::string& where) {
    if (!j.is_string()) {
        bad(where, "expected a string");
    }
    return j.get<std::string>();
}

void only_fields(const Json& obj, std::initializer_list<const char*> allowed, const std::string& where) {
    if (!obj.is_object()) {
        bad(where, "expected an object");
    }
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool known = false;
        for (const char* a : allowed) {
            known = known || it.key() == a;
        }
        if (!known) {
            bad(where, "unknown field '" + it.key() + "'");
        }
    }
}

Complex complex_field(const Json& obj, const char* name, const std::string& where) {
    const std::string w = where + "." + name;
    const Json& z = field(obj, name, where);
    only_fields(z, {"re", "im"}, w);
    return {number(field(z, "re", w), w + ".re"), number(field(z, "im", w), w + ".im")};
}

std::size_t expected_settings(ScenarioKind kind) {
    switch (kind) {
        case ScenarioKind::SingleQubit: return 1;
        case ScenarioKind::TwoQubit: return 2;
        case ScenarioKind::Ghz: return 3;
        case ScenarioKind::CustomCircuit: return 0;
    }
    return 0;
}

}  // namespace

const char* kind_name(ScenarioKind kind) noexcept {
    switch (kind) {
        case ScenarioKind::SingleQubit: return "single_qubit";
        case ScenarioKind::TwoQubit: return "two_qubit";
        case ScenarioKind::Ghz: return "ghz";
        case ScenarioKind::CustomCircuit: return "custom_circuit";
    }
    return "unknown";
}

EngineChoice parse_engine_choice(const std::string& name) {
    if (name == "path") return EngineChoice::Path;
    if (name == "oracle") return EngineChoice::Oracle;
    if (name == "both") return EngineChoice::Both;
    throw ConfigError("engine: expected path, oracle or both, got '" + name + "'");
}

OutputFormat parse_output_format(const std::string& name) {
    if (name == "table") return OutputFormat::Table;
    if (name == "csv") return OutputFormat::Csv;
    if (name == "json") return OutputFormat::Json;
    throw ConfigError("output: expected table, csv or json, got '" + name + "'");
}

ScenarioConfig parse_config(const std::string& src, const std::filesystem::path& base_dir) {
    Json root;
    try {
        root = Json::parse(src);
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError(std::string("config: invalid JSON: ") + e.what());
    }
    if (!root.is_object()) {
        bad("document", "expected an object");
    }

    ScenarioConfig cfg;
    const std::string kind = text(field(root, "kind", "document"), "kind");
    if (kind == "single_qubit") {
        cfg.kind = ScenarioKind::SingleQubit;
    } else if (kind == "two_qubit") {
        cfg.kind = ScenarioKind::TwoQubit;
    } else if (kind == "ghz") {
        cfg.kind = ScenarioKind::Ghz;
    } else if (kind == "custom_circuit") {
        cfg.kind = ScenarioKind::CustomCircuit;
    } else {
        bad("kind", "expected single_qubit, two_qubit, ghz or custom_circuit, got '" + kind + "'");
    }

    switch (cfg.kind) {
        case ScenarioKind::SingleQubit:
        case ScenarioKind::TwoQubit:
            only_fields(root, {"kind", "units", "state", "settings", "engine", "output", "seed"}, "document");
            break;
        case ScenarioKind::Ghz:
            only_fields(root, {"kind", "units", "settings", "engine", "output", "seed"}, "document");
            break;
        case ScenarioKind::CustomCircuit:
            only_fields(root, {"kind", "circuit", "engine", "output", "seed"}, "document");
            break;
    }

    double scale = 1.0;
    if (root.contains("units")) {
        const std::string units = text(root["units"], "units");
        if (units == "deg") {
            scale = kPi / 180.0;
        } else if (units != "rad") {
            bad("units", "expected rad or deg, got '" + units + "'");
        }
    }

    if (root.contains("engine")) {
        try {
            cfg.engine = parse_engine_choice(text(root["engine"], "engine"));
        } catch (const ConfigError& e) {
            throw ConfigError(std::string("config: ") + e.what());
        }
    }
    if (root.contains("output")) {
        try {
            cfg.output = parse_output_format(text(root["output"], "output"));
        } catch (const ConfigError& e) {
            throw ConfigError(std::string("config: ") + e.what());
        }
    }
    if (root.contains("seed")) {
        if (!root["seed"].is_number_unsigned()) {
            bad("seed", "expected a non-negative integer");
        }
        cfg.seed = root["seed"].get<std::uint64_t>();
    }

    if (cfg.kind == ScenarioKind::SingleQubit) {
        const Json& st = field(root, "state", "document");
        only_fields(st, {"a", "b"}, "state");
        cfg.a = complex_field(st, "a", "state");
        cfg.b = complex_field(st, "b", "state");
        const double n = std::norm(cfg.a) + std::norm(cfg.b);
        if (std::abs(n - 1.0) > tolerance()) {
            std::ostringstream msg;
            msg.precision(17);
            msg << "|a|^2 + |b|^2 = " << n << ", expected 1";
            bad("state", msg.str());
        }
    } else if (cfg.kind == ScenarioKind::TwoQubit) {
        const Json& st = field(root, "state", "document");
        only_fields(st, {"A", "B", "delta"}, "state");
        const double a = number(field(st, "A", "state"), "state.A");
        const double b = number(field(st, "B", "state"), "state.B");
        const double delta = number(field(st, "delta", "state"), "state.delta") * scale;
        try {
            cfg.schmidt.emplace(a, b, delta);
        } catch (const Error& e) {
            bad("state", e.what());
        }
    }

    if (cfg.kind == ScenarioKind::CustomCircuit) {
        if (cfg.engine != EngineChoice::Path) {
            bad("engine", "custom_circuit scenarios have no oracle; use engine path");
        }
        std::filesystem::path p = text(field(root, "circuit", "document"), "circuit");
        if (p.is_relative()) {
            p = base_dir / p;
        }
        cfg.circuit = load_circuit(p);
        return cfg;
    }

    const Json& settings = field(root, "settings", "document");
    if (!settings.is_array()) {
        bad("settings", "expected an array");
    }
    const std::size_t want = expected_settings(cfg.kind);
    if (settings.size() != want) {
        bad("settings", "expected " + std::to_string(want) + " entries for " + kind + ", got " +
                            std::to_string(settings.size()));
    }
    for (std::size_t i = 0; i < settings.size(); ++i) {
        const std::string where = "settings[" + std::to_string(i) + "]";
        only_fields(settings[i], {"theta", "phi"}, where);
        const double theta = number(field(settings[i], "theta", where), where + ".theta") * scale;
        const double phi = number(field(settings[i], "phi", where), where + ".phi") * scale;
        try {
            cfg.settings.emplace_back(theta, phi);
        } catch (const Error& e) {
            bad(where, e.what());
        }
    }
    return cfg;
}

ScenarioConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("config: cannot read '" + path.string() + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str(), path.parent_path());
}

}  // namespace wwpi
