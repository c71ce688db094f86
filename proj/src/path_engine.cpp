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

#include "wwpi/path_engine.hpp"

#include <cmath>
#include <string>

#include "topology.hpp"
#include "wwpi/errors.hpp"

namespace wwpi {

namespace {

using detail::kNone;
using detail::Topology;

// One complete route of a single photon from its emission segment.
struct PhotonAlternative {
    std::vector<RoutingStep> steps;
    std::size_t detector;
    Complex factor;
};

void collect_routes(const Circuit& circuit, const Topology& topo, std::size_t segment, Complex factor,
                    std::vector<RoutingStep>& steps, std::vector<PhotonAlternative>& out) {
    const detail::SegmentNode& node = topo.segments[segment];
    factor *= node.plate_factor;
    if (node.beamsplitter == kNone) {
        out.push_back({steps, node.detector, factor});
        return;
    }
    const Beamsplitter& bs = circuit.beamsplitters[node.beamsplitter];
    steps.push_back({node.beamsplitter, Route::Reflect});
    collect_routes(circuit, topo, node.reflect_to, factor * bs.reflect_factor(), steps, out);
    steps.back().route = Route::Transmit;
    collect_routes(circuit, topo, node.transmit_to, factor * bs.transmit_factor(), steps, out);
    steps.pop_back();
}

bool accepts(const Topology& topo, const std::vector<PhotonPath>& photons, std::size_t num_detectors) {
    if (topo.postselect.empty()) {
        return true;
    }
    std::vector<std::size_t> occupancy(num_detectors, 0);
    for (const auto& p : photons) {
        ++occupancy[p.detector];
    }
    for (const auto& [det, count] : topo.postselect) {
        if (occupancy[det] != count) {
            return false;
        }
    }
    return true;
}

// Advances a mixed-radix counter, last digit fastest. Returns false on wrap.
bool advance(std::vector<std::size_t>& digits, const std::vector<std::size_t>& radix) {
    for (std::size_t i = digits.size(); i-- > 0;) {
        if (++digits[i] < radix[i]) {
            return true;
        }
        digits[i] = 0;
    }
    return false;
}

OutcomeKey outcome_of(const Topology& topo, const std::vector<PhotonPath>& photons) {
    if (topo.num_qubits == 0) {
        throw TopologyError("circuit has no outcome-labeled detectors");
    }
    std::vector<int> assigned(topo.num_qubits, 0);
    std::vector<Sign> signs(topo.num_qubits, Sign::Plus);
    for (const auto& p : photons) {
        const std::size_t q = topo.detector_qubit[p.detector];
        if (q == kNone) {
            continue;
        }
        if (assigned[q]++) {
            throw TopologyError("history sends more than one photon to qubit " + std::to_string(q));
        }
        signs[q] = topo.detector_sign[p.detector];
    }
    for (std::size_t q = 0; q < topo.num_qubits; ++q) {
        if (!assigned[q]) {
            throw TopologyError("history leaves qubit " + std::to_string(q) + " without a photon");
        }
    }
    return OutcomeKey(std::move(signs));
}

}  // namespace

std::vector<History> enumerate_histories(const Circuit& circuit, HistoryFilter filter) {
    const Topology topo = detail::compile(circuit);

    // routes[source][branch][emission] -> alternatives for that photon
    std::vector<std::vector<std::vector<std::vector<PhotonAlternative>>>> routes(circuit.sources.size());
    for (std::size_t src = 0; src < circuit.sources.size(); ++src) {
        for (const auto& emissions : topo.branch_paths[src]) {
            auto& per_branch = routes[src].emplace_back();
            for (std::size_t seg : emissions) {
                std::vector<RoutingStep> steps;
                collect_routes(circuit, topo, seg, Complex{1.0, 0.0}, steps, per_branch.emplace_back());
            }
        }
    }

    std::vector<History> out;
    std::vector<std::size_t> branch_radix;
    for (const auto& s : circuit.sources) {
        branch_radix.push_back(s.branches.size());
    }
    std::vector<std::size_t> branch(circuit.sources.size(), 0);
    do {
        Complex source_amp{1.0, 0.0};
        // (source, emission, alternatives) for every photon of this branch choice
        struct Slot {
            std::size_t source;
            std::size_t emission;
            const std::vector<PhotonAlternative>* alternatives;
        };
        std::vector<Slot> slots;
        for (std::size_t src = 0; src < branch.size(); ++src) {
            source_amp *= circuit.sources[src].branches[branch[src]].amplitude;
            const auto& per_branch = routes[src][branch[src]];
            for (std::size_t e = 0; e < per_branch.size(); ++e) {
                slots.push_back({src, e, &per_branch[e]});
            }
        }
        std::vector<std::size_t> radix;
        for (const auto& s : slots) {
            radix.push_back(s.alternatives->size());
        }
        std::vector<std::size_t> choice(slots.size(), 0);
        do {
            History h;
            h.branch_choice = branch;
            h.amplitude = source_amp;
            h.photons.reserve(slots.size());
            for (std::size_t k = 0; k < slots.size(); ++k) {
                const PhotonAlternative& alt = (*slots[k].alternatives)[choice[k]];
                h.amplitude *= alt.factor;
                h.photons.push_back({slots[k].source, slots[k].emission, alt.steps, alt.detector});
            }
            if (filter == HistoryFilter::All || accepts(topo, h.photons, circuit.detectors.size())) {
                out.push_back(std::move(h));
            }
        } while (advance(choice, radix));
    } while (advance(branch, branch_radix));
    return out;
}

Complex history_amplitude(const Circuit& circuit, const History& history) {
    const Topology topo = detail::compile(circuit);
    auto mismatch = [](const std::string& what) { throw DomainError("history does not belong to circuit: " + what); };
    if (history.branch_choice.size() != circuit.sources.size()) {
        mismatch("wrong number of branch choices");
    }
    Complex amp{1.0, 0.0};
    std::size_t expected_photons = 0;
    for (std::size_t src = 0; src < circuit.sources.size(); ++src) {
        const std::size_t br = history.branch_choice[src];
        if (br >= circuit.sources[src].branches.size()) {
            mismatch("branch index out of range");
        }
        amp *= circuit.sources[src].branches[br].amplitude;
        expected_photons += circuit.sources[src].branches[br].paths.size();
    }
    if (history.photons.size() != expected_photons) {
        mismatch("photon count does not match the chosen branches");
    }
    for (const auto& photon : history.photons) {
        if (photon.source >= circuit.sources.size()) {
            mismatch("photon source out of range");
        }
        const auto& emissions = topo.branch_paths[photon.source][history.branch_choice[photon.source]];
        if (photon.emission >= emissions.size()) {
            mismatch("photon emission index out of range");
        }
        std::size_t seg = emissions[photon.emission];
        for (const auto& step : photon.steps) {
            const detail::SegmentNode& node = topo.segments[seg];
            amp *= node.plate_factor;
            if (node.beamsplitter != step.beamsplitter) {
                mismatch("routing step names a beamsplitter the photon does not reach");
            }
            const Beamsplitter& bs = circuit.beamsplitters[step.beamsplitter];
            if (step.route == Route::Reflect) {
                amp *= bs.reflect_factor();
                seg = node.reflect_to;
            } else {
                amp *= bs.transmit_factor();
                seg = node.transmit_to;
            }
        }
        const detail::SegmentNode& last = topo.segments[seg];
        amp *= last.plate_factor;
        if (last.beamsplitter != kNone || last.detector != photon.detector) {
            mismatch("photon does not end at its recorded detector");
        }
    }
    return amp;
}

OutcomeKey history_outcome(const Circuit& circuit, const History& history) {
    return outcome_of(detail::compile(circuit), history.photons);
}

bool passes_postselection(const Circuit& circuit, const History& history) {
    return accepts(detail::compile(circuit), history.photons, circuit.detectors.size());
}

OutcomeDistribution outcome_distribution(const Circuit& circuit) {
    const Topology topo = detail::compile(circuit);
    const std::vector<History> histories = enumerate_histories(circuit);
    if (histories.empty()) {
        throw DegenerateDistributionError("no history survives post-selection");
    }
    const std::size_t n = topo.num_qubits;
    if (n == 0 || n > kDefaultMaxQubits) {
        throw TopologyError("circuit must measure between 1 and " + std::to_string(kDefaultMaxQubits) + " qubits");
    }
    std::vector<Complex> bins(std::size_t{1} << n, Complex{0.0, 0.0});
    for (const auto& h : histories) {
        bins[outcome_of(topo, h.photons).index()] += h.amplitude;
    }
    std::vector<double> weights(bins.size());
    for (std::size_t i = 0; i < bins.size(); ++i) {
        weights[i] = std::norm(bins[i]);
    }
    return OutcomeDistribution::from_weights(n, std::move(weights));
}

DeviceIntensities single_qubit_device_intensities(Complex a, Complex b, const BlochAngles& m) {
    const double norm = std::norm(a) + std::norm(b);
    if (std::abs(norm - 1.0) > tolerance()) {
        throw NormalizationError("device input must satisfy |a|^2 + |b|^2 = 1, got " + std::to_string(norm));
    }
    const Complex i{0.0, 1.0};
    const double c = std::cos(m.theta() / 2.0);
    const double s = std::sin(m.theta() / 2.0);
    const Complex plate = phase(m.phi());
    // |0> arm: plate phi, reflect to '+', transmit to '-'.
    // |1> arm: fixed i plate, transmit to '+', reflect to '-'.
    const Complex at_plus = i * a * c * plate + i * b * s;
    const Complex at_minus = a * s * plate + i * i * b * c;
    return {std::norm(at_plus), std::norm(at_minus)};
}

}  // namespace wwpi
