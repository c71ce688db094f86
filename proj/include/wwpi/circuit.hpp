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

// Description of a which-way optical experiment: sources emitting photons
// onto segments, phase plates along segments, beamsplitters joining
// segments, and detectors at segment ends.
//
// Wiring conventions:
//  * a segment that is listed as a beamsplitter input continues through that
//    beamsplitter onto its reflect or transmit output segment;
//  * a segment whose id equals a detector id ends at that detector;
//  * any other reachable segment is a topology error.
// Circuits are plain values; validation happens when they are evaluated.

#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wwpi/qmath.hpp"

namespace wwpi {

struct Branch {
    /// Unsquared source amplitude of this emission pattern.
    Complex amplitude;
    /// One segment id per emitted photon.
    std::vector<std::string> paths;
};

struct Source {
    std::vector<Branch> branches;
};

struct Segment {
    std::string id;
    /// Phase-plate angles in traversal order; each contributes e^{i angle}.
    std::vector<double> plates;
};

struct PortMap {
    std::string reflect;
    std::string transmit;
};

struct BeamsplitterInput {
    std::string segment;
    PortMap ports;
};

/// Lossless beamsplitter with sqrt(R) = cos(theta/2), sqrt(T) = sin(theta/2).
/// The two inputs must map crosswise onto the same two output segments.
struct Beamsplitter {
    double theta = 0.0;
    std::vector<BeamsplitterInput> inputs;

    /// i sqrt(R); reflection carries the +i phase.
    Complex reflect_factor() const noexcept { return {0.0, std::cos(theta / 2.0)}; }
    Complex transmit_factor() const noexcept { return {std::sin(theta / 2.0), 0.0}; }
};

struct Detector {
    std::string id;
    /// Set, together with sign, for outcome-labeled detectors.
    std::optional<std::size_t> qubit;
    std::optional<Sign> sign;
    bool auxiliary = false;

    bool labeled() const noexcept { return qubit.has_value() && sign.has_value(); }
};

/// Retains a history iff every listed detector receives exactly the listed
/// number of photons.
struct PostselectionRule {
    std::vector<std::pair<std::string, std::size_t>> required_counts;
};

struct Circuit {
    std::vector<Source> sources;
    std::vector<Segment> segments;
    std::vector<Beamsplitter> beamsplitters;
    std::vector<Detector> detectors;
    std::optional<PostselectionRule> postselection;
};

enum class Route { Reflect, Transmit };

struct RoutingStep {
    std::size_t beamsplitter;
    Route route;

    friend bool operator==(const RoutingStep&, const RoutingStep&) = default;
};

/// The classical path of one photon: where it was emitted, what it did at
/// each beamsplitter, and where it ended.
struct PhotonPath {
    std::size_t source;
    std::size_t emission;
    std::vector<RoutingStep> steps;
    std::size_t detector;

    friend bool operator==(const PhotonPath&, const PhotonPath&) = default;
};

/// One branch per source plus one path per emitted photon.
struct History {
    std::vector<std::size_t> branch_choice;
    std::vector<PhotonPath> photons;
    Complex amplitude;
};

}  // namespace wwpi
