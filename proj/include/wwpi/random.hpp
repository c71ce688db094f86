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

// Seeded generators for randomized sweeps. Sequences are reproducible for a
// given seed on a given standard library.

#include <cstdint>
#include <random>

#include "wwpi/hilbert.hpp"
#include "wwpi/qmath.hpp"

namespace wwpi {

using Rng = std::mt19937_64;

/// Direction uniform on the sphere.
BlochAngles random_bloch(Rng& rng);

/// Uniform (A, B) on the quarter circle, delta uniform in [0, 2pi).
SchmidtForm random_schmidt_form(Rng& rng);

/// Haar-random single-qubit amplitudes (a, b).
Spinor random_spinor(Rng& rng);

}  // namespace wwpi
