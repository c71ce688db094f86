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

#include <algorithm>
#include <cmath>
#include <set>

#include "topology.hpp"
#include "wwpi/errors.hpp"
#include "wwpi/path_engine.hpp"

namespace wwpi {

namespace detail {

namespace {

[[noreturn]] void fail(const std::string& what) { throw TopologyError(what); }

void check_acyclic(const Topology& topo) {
    enum class Mark { White, Grey, Black };
    std::vector<Mark> mark(topo.segments.size(), Mark::White);
    // Iterative DFS over segment -> output segments.
    for (std::size_t root = 0; root < topo.segments.size(); ++root) {
        if (mark[root] != Mark::White) {
            continue;
        }
        std::vector<std::pair<std::size_t, int>> stack{{root, 0}};
        mark[root] = Mark::Grey;
        while (!stack.empty()) {
            auto& [seg, next_child] = stack.back();
            const SegmentNode& node = topo.segments[seg];
            std::size_t child = kNone;
            if (node.beamsplitter != kNone && next_child < 2) {
                child = next_child == 0 ? node.reflect_to : node.transmit_to;
                ++next_child;
            }
            if (child == kNone) {
                mark[seg] = Mark::Black;
                stack.pop_back();
                continue;
            }
            if (mark[child] == Mark::Grey) {
                fail("circuit graph contains a cycle through segment index " + std::to_string(child));
            }
            if (mark[child] == Mark::White) {
                mark[child] = Mark::Grey;
                stack.emplace_back(child, 0);
            }
        }
    }
}

}  // namespace

Topology compile(const Circuit& circuit) {
    Topology topo;
    topo.segments.resize(circuit.segments.size());
    for (std::size_t i = 0; i < circuit.segments.size(); ++i) {
        const Segment& s = circuit.segments[i];
        if (s.id.empty()) {
            fail("segment ids must be non-empty");
        }
        if (!topo.segment_index.emplace(s.id, i).second) {
            fail("duplicate segment id '" + s.id + "'");
        }
        Complex f{1.0, 0.0};
        for (double plate : s.plates) {
            if (!std::isfinite(plate)) {
                fail("segment '" + s.id + "' has a non-finite phase plate");
            }
            f *= phase(plate);
        }
        topo.segments[i].plate_factor = f;
    }
    auto seg = [&](const std::string& id, const std::string& context) {
        auto it = topo.segment_index.find(id);
        if (it == topo.segment_index.end()) {
            fail(context + " refers to unknown segment '" + id + "'");
        }
        return it->second;
    };

    // Detectors.
    std::set<std::string> detector_ids;
    std::set<std::pair<std::size_t, int>> labels;
    std::size_t max_qubit = 0;
    bool any_labeled = false;
    topo.detector_qubit.assign(circuit.detectors.size(), kNone);
    topo.detector_sign.assign(circuit.detectors.size(), Sign::Plus);
    for (std::size_t d = 0; d < circuit.detectors.size(); ++d) {
        const Detector& det = circuit.detectors[d];
        if (!detector_ids.insert(det.id).second) {
            fail("duplicate detector id '" + det.id + "'");
        }
        if (det.qubit.has_value() != det.sign.has_value()) {
            fail("detector '" + det.id + "' must set both qubit and sign, or neither");
        }
        if (det.auxiliary && det.labeled()) {
            fail("auxiliary detector '" + det.id + "' cannot carry an outcome label");
        }
        if (!det.auxiliary && !det.labeled()) {
            fail("detector '" + det.id + "' is neither outcome-labeled nor auxiliary");
        }
        if (det.labeled()) {
            if (!labels.emplace(*det.qubit, sign_value(*det.sign)).second) {
                fail("two detectors share the label of qubit " + std::to_string(*det.qubit));
            }
            topo.detector_qubit[d] = *det.qubit;
            topo.detector_sign[d] = *det.sign;
            max_qubit = std::max(max_qubit, *det.qubit);
            any_labeled = true;
        }
        const std::size_t s = seg(det.id, "detector '" + det.id + "'");
        topo.segments[s].detector = d;
    }
    if (any_labeled) {
        topo.num_qubits = max_qubit + 1;
        for (std::size_t q = 0; q < topo.num_qubits; ++q) {
            if (!labels.contains({q, 1}) && !labels.contains({q, -1})) {
                fail("qubit indices must be contiguous from 0; qubit " + std::to_string(q) + " has no detector");
            }
        }
    }

    // Beamsplitters.
    for (std::size_t b = 0; b < circuit.beamsplitters.size(); ++b) {
        const Beamsplitter& bs = circuit.beamsplitters[b];
        const std::string ctx = "beamsplitter " + std::to_string(b);
        if (!std::isfinite(bs.theta) || bs.theta < 0.0 || bs.theta > kPi) {
            fail(ctx + " has theta outside [0, pi]");
        }
        if (bs.inputs.size() != 2) {
            fail(ctx + " must have exactly two inputs, has " + std::to_string(bs.inputs.size()));
        }
        const auto& in0 = bs.inputs[0];
        const auto& in1 = bs.inputs[1];
        if (in0.segment == in1.segment) {
            fail(ctx + " lists the same input segment twice");
        }
        if (in0.ports.reflect == in0.ports.transmit) {
            fail(ctx + " sends reflect and transmit to the same segment");
        }
        if (in0.ports.reflect != in1.ports.transmit || in0.ports.transmit != in1.ports.reflect) {
            fail(ctx + " port maps must cross: each output is one input's reflection and the other's transmission");
        }
        for (const auto& in : bs.inputs) {
            const std::size_t s = seg(in.segment, ctx);
            SegmentNode& node = topo.segments[s];
            if (node.detector != kNone) {
                fail("segment '" + in.segment + "' cannot both end at a detector and enter " + ctx);
            }
            if (node.beamsplitter != kNone) {
                fail("segment '" + in.segment + "' enters more than one beamsplitter");
            }
            node.beamsplitter = b;
            node.reflect_to = seg(in.ports.reflect, ctx);
            node.transmit_to = seg(in.ports.transmit, ctx);
            if (node.reflect_to == s || node.transmit_to == s) {
                fail(ctx + " feeds segment '" + in.segment + "' back into itself");
            }
        }
    }

    check_acyclic(topo);

    // Sources; every reachable segment must terminate.
    std::vector<char> seen(topo.segments.size(), 0);
    std::vector<std::size_t> frontier;
    topo.branch_paths.resize(circuit.sources.size());
    for (std::size_t src = 0; src < circuit.sources.size(); ++src) {
        const Source& source = circuit.sources[src];
        if (source.branches.empty()) {
            fail("source " + std::to_string(src) + " has no branches");
        }
        for (std::size_t br = 0; br < source.branches.size(); ++br) {
            const Branch& branch = source.branches[br];
            const std::string ctx = "source " + std::to_string(src) + " branch " + std::to_string(br);
            if (branch.paths.empty()) {
                fail(ctx + " emits no photons");
            }
            if (!std::isfinite(branch.amplitude.real()) || !std::isfinite(branch.amplitude.imag())) {
                fail(ctx + " has a non-finite amplitude");
            }
            auto& out = topo.branch_paths[src].emplace_back();
            for (const auto& id : branch.paths) {
                const std::size_t s = seg(id, ctx);
                out.push_back(s);
                frontier.push_back(s);
            }
        }
    }
    if (circuit.sources.empty()) {
        fail("circuit has no sources");
    }
    while (!frontier.empty()) {
        const std::size_t s = frontier.back();
        frontier.pop_back();
        if (seen[s]) {
            continue;
        }
        seen[s] = 1;
        const SegmentNode& node = topo.segments[s];
        if (node.beamsplitter != kNone) {
            frontier.push_back(node.reflect_to);
            frontier.push_back(node.transmit_to);
        } else if (node.detector == kNone) {
            fail("photon path ends at segment '" + circuit.segments[s].id + "' without reaching a detector");
        }
    }

    if (circuit.postselection) {
        for (const auto& [id, count] : circuit.postselection->required_counts) {
            auto it = std::find_if(circuit.detectors.begin(), circuit.detectors.end(),
                                   [&](const Detector& d) { return d.id == id; });
            if (it == circuit.detectors.end()) {
                fail("post-selection refers to unknown detector '" + id + "'");
            }
            topo.postselect.emplace_back(static_cast<std::size_t>(it - circuit.detectors.begin()), count);
        }
    }
    return topo;
}

}  // namespace detail

void validate(const Circuit& circuit) { (void)detail::compile(circuit); }

std::size_t num_qubits(const Circuit& circuit) { return detail::compile(circuit).num_qubits; }

}  // namespace wwpi
