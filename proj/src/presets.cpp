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

#include <cmath>
#include <string>

#include "wwpi/path_engine.hpp"

namespace wwpi {

namespace {

constexpr double kQuarterTurn = kPi / 2.0;

Detector labeled(std::size_t qubit, Sign sign) { return Detector{detector_id(qubit, sign), qubit, sign, false}; }

void add_detectors(Circuit& c, std::size_t qubit) {
    c.segments.push_back({detector_id(qubit, Sign::Plus), {}});
    c.segments.push_back({detector_id(qubit, Sign::Minus), {}});
    c.detectors.push_back(labeled(qubit, Sign::Plus));
    c.detectors.push_back(labeled(qubit, Sign::Minus));
}

// Beamsplitter of one device. `to_plus_by_reflection` enters so that its
// reflected part reaches '+'; `to_plus_by_transmission` is the other input.
Beamsplitter device_beamsplitter(std::size_t qubit, double theta, const std::string& to_plus_by_reflection,
                                 const std::string& to_plus_by_transmission) {
    const std::string plus = detector_id(qubit, Sign::Plus);
    const std::string minus = detector_id(qubit, Sign::Minus);
    return Beamsplitter{theta,
                        {{to_plus_by_reflection, {plus, minus}}, {to_plus_by_transmission, {minus, plus}}}};
}

}  // namespace

std::string detector_id(std::size_t qubit, Sign sign) {
    return "d" + std::to_string(qubit + 1) + sign_char(sign);
}

Circuit build_single_qubit_circuit(Complex a, Complex b, const BlochAngles& m) {
    Circuit c;
    c.sources.push_back({{{a, {"d1.in0"}}, {b, {"d1.in1"}}}});
    c.segments.push_back({"d1.in0", {m.phi()}});
    c.segments.push_back({"d1.in1", {kQuarterTurn}});
    add_detectors(c, 0);
    c.beamsplitters.push_back(device_beamsplitter(0, m.theta(), "d1.in0", "d1.in1"));
    return c;
}

Circuit build_two_qubit_circuit(const SchmidtForm& sf, const BlochAngles& m1, const BlochAngles& m2) {
    Circuit c;
    c.sources.push_back({{
        {Complex{sf.A(), 0.0}, {"d1.solid", "d2.solid"}},
        {Complex{sf.B(), 0.0}, {"d1.dashed", "d2.dashed"}},
    }});
    // Solid: photon 1 on the |0> arm of device 1, photon 2 on the |1> arm of device 2.
    c.segments.push_back({"d1.solid", {m1.phi()}});
    c.segments.push_back({"d2.solid", {kQuarterTurn}});
    // Dashed: photon 1 on the |1> arm of device 1, photon 2 through delta and then phi2.
    c.segments.push_back({"d1.dashed", {kQuarterTurn}});
    c.segments.push_back({"d2.dashed", {sf.delta(), m2.phi()}});
    add_detectors(c, 0);
    add_detectors(c, 1);
    c.beamsplitters.push_back(device_beamsplitter(0, m1.theta(), "d1.solid", "d1.dashed"));
    c.beamsplitters.push_back(device_beamsplitter(1, m2.theta(), "d2.dashed", "d2.solid"));
    return c;
}

Circuit build_ghz_circuit(const BlochAngles& m1, const BlochAngles& m2, const BlochAngles& m3) {
    const Complex h{1.0 / std::sqrt(2.0), 0.0};
    Circuit c;
    // E1 solid feeds device 1 and the center; E1 dashed feeds devices 1 and 2.
    c.sources.push_back({{{h, {"d1.solid", "center"}}, {h, {"d1.dashed", "d2.dashed"}}}});
    // E2 solid feeds devices 2 and 3; E2 dashed feeds the center and device 3.
    c.sources.push_back({{{h, {"d2.solid", "d3.solid"}}, {h, {"center", "d3.dashed"}}}});

    c.segments.push_back({"d1.solid", {m1.phi()}});
    c.segments.push_back({"d2.solid", {m2.phi()}});
    c.segments.push_back({"d3.solid", {m3.phi()}});
    c.segments.push_back({"d1.dashed", {}});
    c.segments.push_back({"d2.dashed", {}});
    c.segments.push_back({"d3.dashed", {kQuarterTurn}});
    c.segments.push_back({"center", {}});

    const BlochAngles* settings[] = {&m1, &m2, &m3};
    for (std::size_t q = 0; q < 3; ++q) {
        add_detectors(c, q);
        const std::string dev = "d" + std::to_string(q + 1);
        // Solid arms reach '+' by transmission, dashed arms by reflection.
        c.beamsplitters.push_back(device_beamsplitter(q, settings[q]->theta(), dev + ".dashed", dev + ".solid"));
    }
    c.detectors.push_back(Detector{"center", std::nullopt, std::nullopt, true});
    c.postselection = PostselectionRule{{{"center", 1}}};
    return c;
}

}  // namespace wwpi
