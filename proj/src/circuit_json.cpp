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

#include "wwpi/circuit_json.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "wwpi/errors.hpp"

namespace wwpi {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void bad(const std::string& where, const std::string& what) {
    throw ConfigError("circuit: " + where + ": " + what);
}

const Json& field(const Json& obj, const char* name, const std::string& where) {
    if (!obj.is_object()) {
        bad(where, "expected an object");
    }
    auto it = obj.find(name);
    if (it == obj.end()) {
        bad(where, std::string("missing field '") + name + "'");
    }
    return *it;
}

double number(const Json& j, const std::string& where) {
    if (!j.is_number()) {
        bad(where, "expected a number");
    }
    return j.get<double>();
}

std::string text(const Json& j, const std::string& where) {
    if (!j.is_string()) {
        bad(where, "expected a string");
    }
    return j.get<std::string>();
}

const Json& array(const Json& j, const std::string& where) {
    if (!j.is_array()) {
        bad(where, "expected an array");
    }
    return j;
}

void only_fields(const Json& obj, std::initializer_list<const char*> allowed, const std::string& where) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool ok = false;
        for (const char* a : allowed) {
            ok = ok || it.key() == a;
        }
        if (!ok) {
            bad(where, "unknown field '" + it.key() + "'");
        }
    }
}

}  // namespace

Circuit circuit_from_json(const std::string& source_text) {
    Json root;
    try {
        root = Json::parse(source_text);
    } catch (const Json::parse_error& e) {
        throw ConfigError(std::string("circuit: invalid JSON: ") + e.what());
    }
    if (!root.is_object()) {
        bad("document", "expected an object");
    }
    only_fields(root, {"sources", "segments", "beamsplitters", "detectors", "postselect"}, "document");

    Circuit c;
    const Json& sources = array(field(root, "sources", "document"), "sources");
    for (std::size_t i = 0; i < sources.size(); ++i) {
        const std::string where = "sources[" + std::to_string(i) + "]";
        only_fields(sources[i], {"branches"}, where);
        Source src;
        const Json& branches = array(field(sources[i], "branches", where), where + ".branches");
        for (std::size_t b = 0; b < branches.size(); ++b) {
            const std::string bw = where + ".branches[" + std::to_string(b) + "]";
            only_fields(branches[b], {"amplitude", "paths"}, bw);
            const Json& amp = field(branches[b], "amplitude", bw);
            only_fields(amp, {"re", "im"}, bw + ".amplitude");
            Branch br;
            br.amplitude = Complex{number(field(amp, "re", bw + ".amplitude"), bw + ".amplitude.re"),
                                   number(field(amp, "im", bw + ".amplitude"), bw + ".amplitude.im")};
            for (const auto& p : array(field(branches[b], "paths", bw), bw + ".paths")) {
                br.paths.push_back(text(p, bw + ".paths"));
            }
            src.branches.push_back(std::move(br));
        }
        c.sources.push_back(std::move(src));
    }

    const Json& segments = array(field(root, "segments", "document"), "segments");
    for (std::size_t i = 0; i < segments.size(); ++i) {
        const std::string where = "segments[" + std::to_string(i) + "]";
        only_fields(segments[i], {"id", "plates"}, where);
        Segment s;
        s.id = text(field(segments[i], "id", where), where + ".id");
        for (const auto& p : array(field(segments[i], "plates", where), where + ".plates")) {
            s.plates.push_back(number(p, where + ".plates"));
        }
        c.segments.push_back(std::move(s));
    }

    const Json& splitters = array(field(root, "beamsplitters", "document"), "beamsplitters");
    for (std::size_t i = 0; i < splitters.size(); ++i) {
        const std::string where = "beamsplitters[" + std::to_string(i) + "]";
        only_fields(splitters[i], {"theta", "input_ports"}, where);
        Beamsplitter bs;
        bs.theta = number(field(splitters[i], "theta", where), where + ".theta");
        const Json& ports = field(splitters[i], "input_ports", where);
        if (!ports.is_object()) {
            bad(where + ".input_ports", "expected an object");
        }
        for (auto it = ports.begin(); it != ports.end(); ++it) {
            const std::string pw = where + ".input_ports." + it.key();
            only_fields(*it, {"reflect", "transmit"}, pw);
            bs.inputs.push_back({it.key(),
                                 {text(field(*it, "reflect", pw), pw + ".reflect"),
                                  text(field(*it, "transmit", pw), pw + ".transmit")}});
        }
        c.beamsplitters.push_back(std::move(bs));
    }

    const Json& detectors = array(field(root, "detectors", "document"), "detectors");
    for (std::size_t i = 0; i < detectors.size(); ++i) {
        const std::string where = "detectors[" + std::to_string(i) + "]";
        const Json& d = detectors[i];
        only_fields(d, {"id", "qubit", "sign", "auxiliary"}, where);
        Detector det;
        det.id = text(field(d, "id", where), where + ".id");
        if (d.contains("qubit")) {
            if (!d["qubit"].is_number_unsigned()) {
                bad(where + ".qubit", "expected a non-negative integer");
            }
            det.qubit = d["qubit"].get<std::size_t>();
        }
        if (d.contains("sign")) {
            const std::string s = text(d["sign"], where + ".sign");
            if (s != "+" && s != "-") {
                bad(where + ".sign", "expected \"+\" or \"-\"");
            }
            det.sign = s == "+" ? Sign::Plus : Sign::Minus;
        }
        if (d.contains("auxiliary")) {
            if (!d["auxiliary"].is_boolean()) {
                bad(where + ".auxiliary", "expected a boolean");
            }
            det.auxiliary = d["auxiliary"].get<bool>();
        }
        c.detectors.push_back(std::move(det));
    }

    if (root.contains("postselect")) {
        const Json& ps = root["postselect"];
        if (!ps.is_object()) {
            bad("postselect", "expected an object");
        }
        PostselectionRule rule;
        for (auto it = ps.begin(); it != ps.end(); ++it) {
            if (!it->is_number_unsigned()) {
                bad("postselect." + it.key(), "expected a non-negative integer count");
            }
            rule.required_counts.emplace_back(it.key(), it->get<std::size_t>());
        }
        c.postselection = std::move(rule);
    }
    return c;
}

std::string circuit_to_json(const Circuit& c, int indent) {
    Json root = Json::object();
    Json sources = Json::array();
    for (const auto& s : c.sources) {
        Json branches = Json::array();
        for (const auto& b : s.branches) {
            branches.push_back({{"amplitude", {{"re", b.amplitude.real()}, {"im", b.amplitude.imag()}}},
                                {"paths", b.paths}});
        }
        sources.push_back({{"branches", std::move(branches)}});
    }
    root["sources"] = std::move(sources);

    Json segments = Json::array();
    for (const auto& s : c.segments) {
        segments.push_back({{"id", s.id}, {"plates", s.plates}});
    }
    root["segments"] = std::move(segments);

    Json splitters = Json::array();
    for (const auto& bs : c.beamsplitters) {
        Json ports = Json::object();
        for (const auto& in : bs.inputs) {
            ports[in.segment] = {{"reflect", in.ports.reflect}, {"transmit", in.ports.transmit}};
        }
        splitters.push_back({{"theta", bs.theta}, {"input_ports", std::move(ports)}});
    }
    root["beamsplitters"] = std::move(splitters);

    Json detectors = Json::array();
    for (const auto& d : c.detectors) {
        Json j = {{"id", d.id}};
        if (d.qubit) {
            j["qubit"] = *d.qubit;
        }
        if (d.sign) {
            j["sign"] = std::string(1, sign_char(*d.sign));
        }
        if (d.auxiliary) {
            j["auxiliary"] = true;
        }
        detectors.push_back(std::move(j));
    }
    root["detectors"] = std::move(detectors);

    if (c.postselection) {
        Json ps = Json::object();
        for (const auto& [id, count] : c.postselection->required_counts) {
            ps[id] = count;
        }
        root["postselect"] = std::move(ps);
    }
    return root.dump(indent);
}

Circuit load_circuit(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open circuit file '" + path.string() + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return circuit_from_json(buf.str());
}

}  // namespace wwpi
