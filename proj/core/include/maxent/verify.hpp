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

// State-vector validation of certificates.
//
// The four-party space is ordered (a, A, B, b) with dimensions
// (d_A, d_A, d_B, d_B); the gate acts on the middle two slots and entanglement
// is measured across the Aa | Bb cut.

#include <vector>

#include "maxent/certify.hpp"
#include "maxent/decompose.hpp"
#include "maxent/linalg.hpp"

namespace maxent {

struct StateVector {
  std::vector<int> dims;
  ComplexVector amplitudes;

  double norm() const { return amplitudes.norm(); }
};

struct EntanglementReport {
  double e_in = 0.0;
  double e_out = 0.0;
  double delta = 0.0;
  double bjk_gram_deviation = 0.0;
};

/// |Phi>_Aa (x) |Psi>_Bb with |Phi> maximally entangled and
/// |Psi>_Bb = sum_mn M_mn |n>_b |m>_B, M = psd_sqrt(rho).
StateVector optimal_input(const ComplexMatrix& rho, int dA, int dB);

/// (I_a (x) U (x) I_b) |psi>.
StateVector apply_gate(const BipartiteGate& gate, const StateVector& psi);

/// Entropy (ebits) of the reduced state on the first two slots.
double entanglement_across_cut(const StateVector& psi);

/// The d_A^2 states
///   |b_jk> = sqrt(d_A) sum_f Gamma(f)_jk sum_mn M_mn |n>_b W(f)|m>_B
/// as columns, each on the (B, b) space.
ComplexMatrix b_states(const BipartiteGate& gate, const ComplexMatrix& rho);

/// max |<b_j'k'|b_jk> - delta|.
double b_states_gram(const BipartiteGate& gate, const ComplexMatrix& rho);

/// Simulates the optimal input for a CERTIFIED certificate. Throws Error for
/// any other status.
EntanglementReport report(const BipartiteGate& gate, const Certificate& cert);

}  // namespace maxent
