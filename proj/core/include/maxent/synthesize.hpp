// Copyright 2026 The maxent Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Gate constructors: maximal gates by construction, reference gates and
// Haar-random negative controls. All randomized constructors are
// deterministic in their seed.

#include <cstdint>

#include "maxent/decompose.hpp"

namespace maxent {

struct SynthesisSeed {
  std::uint64_t rng_seed = 0;
  int dA = 2;
  int dB = 4;
};

/// Ancilla-free maximal gate, requires dB >= dA^2.
///
/// Draws dA^2 orthonormal vectors v_f on B and fixes the columns acting on
/// |j>_A |0>_B to sum_f Gamma(f)|j> (x) v_f / dA, so that W(f)|0> = v_f / dA.
/// The remaining columns are a seeded random orthonormal completion. The
/// certificate rho = |0><0| is admissible for every such gate.
BipartiteGate first_columns_gate(const SynthesisSeed& seed);

/// U |i>|j> = |j>|i> on d x d.
BipartiteGate swap_gate(int d);

/// U |a,b> = |b, a xor b>: CNOT controlled on A, then CNOT controlled on B.
BipartiteGate double_cnot_gate();

/// CNOT with A as control.
BipartiteGate cnot_gate();

BipartiteGate identity_gate(int dA, int dB);

/// Haar-distributed unitary on dA x dB (QR of a complex Ginibre matrix with
/// the phases of R's diagonal divided out).
BipartiteGate haar_random_gate(int dA, int dB, std::uint64_t rng_seed);

}  // namespace maxent
