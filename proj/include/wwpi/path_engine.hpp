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

// Sum-over-histories engine. Every classical history of a circuit gets the
// product of its source amplitudes, beamsplitter factors and phase-plate
// factors; histories ending on the same outcome are summed before squaring.

#include <cstddef>
#include <string>
#include <vector>

#include "wwpi/circuit.hpp"
#include "wwpi/hilbert.hpp"
#include "wwpi/outcome.hpp"

namespace wwpi {

/// Throws TopologyError describing the first structural problem found.
void validate(const Circuit& circuit);

/// Number of measured qubits (distinct qubit indices on labeled detectors).
std::size_t num_qubits(const Circuit& circuit);

enum class HistoryFilter { Retained, All };

/// All classical histories, ordered branch-major (source 0 most significant),
/// then by photon routing (photon 0 most significant, reflect before
/// transmit). By default histories failing the post-selection rule are
/// dropped; zero-amplitude histories are kept.
std::vector<History> enumerate_histories(const Circuit& circuit, HistoryFilter filter = HistoryFilter::Retained);

/// Recomputes a history's amplitude from its branch and routing choices.
/// Throws DomainError if the history is not a valid history of the circuit.
Complex history_amplitude(const Circuit& circuit, const History& history);

/// Outcome of a history; throws TopologyError if some qubit receives no
/// photon or more than one.
OutcomeKey history_outcome(const Circuit& circuit, const History& history);

/// Whether the history passes the circuit's post-selection rule.
bool passes_postselection(const Circuit& circuit, const History& history);

/// Prob(k) = |sum of retained amplitudes ending in k|^2, renormalized; raw_norm()
/// keeps the pre-normalization total. Throws DegenerateDistributionError if
/// nothing is retained or every retained amplitude cancels.
OutcomeDistribution outcome_distribution(const Circuit& circuit);

struct DeviceIntensities {
    double plus;
    double minus;
};

/// Classical-field intensities at the two detectors of a single measurement
/// device fed with amplitudes a (|0> arm) and b (|1> arm). Throws
/// NormalizationError unless |a|^2 + |b|^2 = 1 within tolerance().
DeviceIntensities single_qubit_device_intensities(Complex a, Complex b, const BlochAngles& m);

// Preset geometries. Branch 0 is the solid emission pattern, branch 1 the
// dashed one. Device j (qubit index j-1) has detectors "d<j>+" and "d<j>-".

inline constexpr std::size_t kSolidBranch = 0;
inline constexpr std::size_t kDashedBranch = 1;

std::string detector_id(std::size_t qubit, Sign sign);

/// One measurement device (plate phi on the |0> arm, fixed pi/2 plate on the
/// |1> arm, beamsplitter theta) fed by a one-photon source with branches a, b.
Circuit build_single_qubit_circuit(Complex a, Complex b, const BlochAngles& m);

/// Two devices fed by one two-photon source: solid branch amplitude A
/// (photon 1 on the |0> arm, photon 2 on the |1> arm), dashed branch B with
/// the delta plate on photon 2.
Circuit build_two_qubit_circuit(const SchmidtForm& sf, const BlochAngles& m1, const BlochAngles& m2);

/// Two two-photon sources, three devices and a central auxiliary detector
/// "center" post-selected on exactly one photon.
Circuit build_ghz_circuit(const BlochAngles& m1, const BlochAngles& m2, const BlochAngles& m3);

}  // namespace wwpi
