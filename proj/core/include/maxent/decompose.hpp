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

// Expansion of a bipartite unitary U on A (x) B in the Pauli basis of A:
//
//   U = sum_f Gamma(f) (x) W(f),
//
// with f ranging over the d_A^2 group elements and W(f) acting on B.

#include <memory>
#include <vector>

#include "maxent/linalg.hpp"
#include "maxent/pauli.hpp"

namespace maxent {

/// A unitary on A (x) B, slot order A then B, with d_A <= d_B.
class BipartiteGate {
 public:
  /// Validates shape, finiteness and unitarity (max |U^dag U - I| <= tol).
  BipartiteGate(int dA, int dB, ComplexMatrix unitary, double unitarity_tol = 1e-10);

  int dA() const { return dA_; }
  int dB() const { return dB_; }
  const ComplexMatrix& unitary() const { return unitary_; }

  BipartiteGate adjoint() const;

 private:
  int dA_;
  int dB_;
  ComplexMatrix unitary_;
};

class PauliDecomposition {
 public:
  /// `w` is indexed by PauliGroup::flat and must hold d_A^2 d_B x d_B blocks.
  PauliDecomposition(int dA, int dB, std::vector<ComplexMatrix> w);

  int dA() const { return dA_; }
  int dB() const { return dB_; }
  const PauliGroup& group() const { return *group_; }

  const ComplexMatrix& W(PauliIndex f) const { return w_[group_->flat(f)]; }
  const ComplexMatrix& W(std::size_t flat_index) const { return w_.at(flat_index); }
  const std::vector<ComplexMatrix>& operators() const { return w_; }

 private:
  int dA_;
  int dB_;
  std::shared_ptr<const PauliGroup> group_;
  std::vector<ComplexMatrix> w_;
};

/// W(f) = Tr_A[(Gamma(f)^dag (x) I_B) U] / d_A.
PauliDecomposition extract(const BipartiteGate& gate);

/// Resums sum_f Gamma(f) (x) W(f); throws if the result is not unitary
/// within 1e-8.
BipartiteGate reconstruct(const PauliDecomposition& dec);

/// Decomposition of U^dag from that of U: W'(f^-1) = W(f)^dag, using
/// Gamma(f)^dag = Gamma(f^-1) under the chosen phase convention.
PauliDecomposition adjoint_decomposition(const PauliDecomposition& dec);

/// Rank of the d_A^2 x d_B^2 matrix of vectorized W's, counting singular
/// values above tol * sigma_max. Equals the operator Schmidt rank of U.
int operator_schmidt_rank(const PauliDecomposition& dec, double tol = 1e-8);

}  // namespace maxent
