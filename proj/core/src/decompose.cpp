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

#include "maxent/decompose.hpp"

#include <string>
#include <utility>

#include <Eigen/SVD>

namespace maxent {

BipartiteGate::BipartiteGate(int dA, int dB, ComplexMatrix unitary,
                             double unitarity_tol)
    : dA_(dA), dB_(dB), unitary_(std::move(unitary)) {
  if (dA < 2) throw Error("gate: dA must be at least 2");
  if (dB < dA) throw Error("gate: dB must be at least dA");
  const Eigen::Index n = static_cast<Eigen::Index>(dA) * dB;
  if (unitary_.rows() != n || unitary_.cols() != n) {
    throw Error("gate: matrix must be (dA*dB) x (dA*dB) = " + std::to_string(n) +
                " x " + std::to_string(n));
  }
  require_finite(unitary_, "gate");
  if (unitarity_defect(unitary_) > unitarity_tol) {
    throw Error("gate: matrix is not unitary");
  }
}

BipartiteGate BipartiteGate::adjoint() const {
  return BipartiteGate(dA_, dB_, unitary_.adjoint(), 1e-8);
}

PauliDecomposition::PauliDecomposition(int dA, int dB, std::vector<ComplexMatrix> w)
    : dA_(dA), dB_(dB), group_(pauli_group(dA)), w_(std::move(w)) {
  if (w_.size() != static_cast<std::size_t>(group_->order())) {
    throw Error("decomposition: expected dA^2 operators");
  }
  for (const auto& op : w_) {
    if (op.rows() != dB || op.cols() != dB) {
      throw Error("decomposition: each W(f) must be dB x dB");
    }
  }
}

PauliDecomposition extract(const BipartiteGate& gate) {
  const int dA = gate.dA();
  const int dB = gate.dB();
  const auto group = pauli_group(dA);
  const ComplexMatrix& u = gate.unitary();

  // Tr_A[(Gamma^dag (x) I) U] = sum_{i,j} conj(Gamma_ji) U_{(j,.),(i,.)}.
  std::vector<ComplexMatrix> w;
  w.reserve(static_cast<std::size_t>(group->order()));
  for (std::size_t f = 0; f < static_cast<std::size_t>(group->order()); ++f) {
    const ComplexMatrix& g = group->gamma(f);
    ComplexMatrix acc = ComplexMatrix::Zero(dB, dB);
    for (int j = 0; j < dA; ++j) {
      for (int i = 0; i < dA; ++i) {
        const Complex c = std::conj(g(j, i));
        if (c == Complex{0.0, 0.0}) continue;
        acc += c * u.block(j * dB, i * dB, dB, dB);
      }
    }
    w.push_back(acc / static_cast<double>(dA));
  }
  return PauliDecomposition(dA, dB, std::move(w));
}

BipartiteGate reconstruct(const PauliDecomposition& dec) {
  const Eigen::Index n = static_cast<Eigen::Index>(dec.dA()) * dec.dB();
  ComplexMatrix u = ComplexMatrix::Zero(n, n);
  for (std::size_t f = 0; f < dec.operators().size(); ++f) {
    u += tensor_product(dec.group().gamma(f), dec.W(f));
  }
  return BipartiteGate(dec.dA(), dec.dB(), std::move(u), 1e-8);
}

PauliDecomposition adjoint_decomposition(const PauliDecomposition& dec) {
  const PauliGroup& group = dec.group();
  std::vector<ComplexMatrix> w(dec.operators().size());
  for (std::size_t f = 0; f < w.size(); ++f) {
    w[group.flat(group.inverse(group.element(f)))] = dec.W(f).adjoint();
  }
  return PauliDecomposition(dec.dA(), dec.dB(), std::move(w));
}

int operator_schmidt_rank(const PauliDecomposition& dec, double tol) {
  const auto& ops = dec.operators();
  const Eigen::Index cols = static_cast<Eigen::Index>(dec.dB()) * dec.dB();
  ComplexMatrix stacked(static_cast<Eigen::Index>(ops.size()), cols);
  for (std::size_t f = 0; f < ops.size(); ++f) {
    stacked.row(static_cast<Eigen::Index>(f)) =
        ops[f].reshaped<Eigen::RowMajor>().transpose();
  }
  Eigen::JacobiSVD<ComplexMatrix> svd(stacked);
  const RealVector& sigma = svd.singularValues();
  if (sigma.size() == 0 || sigma[0] == 0.0) return 0;
  int rank = 0;
  for (Eigen::Index i = 0; i < sigma.size(); ++i) {
    if (sigma[i] > tol * sigma[0]) ++rank;
  }
  return rank;
}

}  // namespace maxent
