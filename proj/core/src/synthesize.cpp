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

#include "maxent/synthesize.hpp"

#include <random>

#include <Eigen/QR>

namespace maxent {
namespace {

ComplexMatrix ginibre(Eigen::Index rows, Eigen::Index cols, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  ComplexMatrix m(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j) {
    for (Eigen::Index i = 0; i < rows; ++i) {
      const double re = normal(rng);
      const double im = normal(rng);
      m(i, j) = Complex{re, im};
    }
  }
  return m;
}

// Orthonormal Q from a Householder QR with R's diagonal made positive. The
// leading columns of Q reproduce those of `m` whenever they are already
// orthonormal.
ComplexMatrix phase_fixed_q(const ComplexMatrix& m) {
  Eigen::HouseholderQR<ComplexMatrix> qr(m);
  ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(m.rows(), m.cols());
  const ComplexMatrix& r = qr.matrixQR();
  for (Eigen::Index i = 0; i < m.cols(); ++i) {
    const Complex diag = r(i, i);
    const double mag = std::abs(diag);
    if (mag > 0.0) q.col(i) *= diag / mag;
  }
  return q;
}

std::mt19937_64 make_rng(std::uint64_t seed, std::uint32_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    stream};
  return std::mt19937_64(seq);
}

}  // namespace

BipartiteGate first_columns_gate(const SynthesisSeed& seed) {
  const int dA = seed.dA;
  const int dB = seed.dB;
  if (dA < 2) throw Error("first-columns construction: dA must be at least 2");
  if (dB < dA * dA) throw Error("first-columns construction requires dB >= dA^2");

  auto rng = make_rng(seed.rng_seed, 1);
  const auto group = pauli_group(dA);
  const int order = group->order();
  const Eigen::Index n = static_cast<Eigen::Index>(dA) * dB;

  const ComplexMatrix frame = phase_fixed_q(ginibre(dB, order, rng));

  // Columns acting on |j>_A |0>_B.
  ComplexMatrix fixed = ComplexMatrix::Zero(n, dA);
  for (int j = 0; j < dA; ++j) {
    for (int f = 0; f < order; ++f) {
      const auto gamma_col = group->gamma(static_cast<std::size_t>(f)).col(j);
      for (int i = 0; i < dA; ++i) {
        fixed.col(j).segment(static_cast<Eigen::Index>(i) * dB, dB) +=
            gamma_col[i] * frame.col(f) / static_cast<double>(dA);
      }
    }
  }

  ComplexMatrix seedmat(n, n);
  seedmat.leftCols(dA) = fixed;
  seedmat.rightCols(n - dA) = ginibre(n, n - dA, rng);
  const ComplexMatrix q = phase_fixed_q(seedmat);

  ComplexMatrix u(n, n);
  Eigen::Index next = dA;
  for (Eigen::Index col = 0; col < n; ++col) {
    if (col % dB == 0) {
      u.col(col) = fixed.col(col / dB);
    } else {
      u.col(col) = q.col(next++);
    }
  }
  return BipartiteGate(dA, dB, std::move(u));
}

BipartiteGate swap_gate(int d) {
  if (d < 2) throw Error("swap gate: d must be at least 2");
  const Eigen::Index n = static_cast<Eigen::Index>(d) * d;
  ComplexMatrix u = ComplexMatrix::Zero(n, n);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) u(j * d + i, i * d + j) = 1.0;
  }
  return BipartiteGate(d, d, std::move(u));
}

BipartiteGate double_cnot_gate() {
  ComplexMatrix u = ComplexMatrix::Zero(4, 4);
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) u(b * 2 + (a ^ b), a * 2 + b) = 1.0;
  }
  return BipartiteGate(2, 2, std::move(u));
}

BipartiteGate cnot_gate() {
  ComplexMatrix u = ComplexMatrix::Zero(4, 4);
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) u(a * 2 + (a ^ b), a * 2 + b) = 1.0;
  }
  return BipartiteGate(2, 2, std::move(u));
}

BipartiteGate identity_gate(int dA, int dB) {
  const Eigen::Index n = static_cast<Eigen::Index>(dA) * dB;
  return BipartiteGate(dA, dB, ComplexMatrix::Identity(n, n));
}

BipartiteGate haar_random_gate(int dA, int dB, std::uint64_t rng_seed) {
  auto rng = make_rng(rng_seed, 2);
  const Eigen::Index n = static_cast<Eigen::Index>(dA) * dB;
  return BipartiteGate(dA, dB, phase_fixed_q(ginibre(n, n, rng)));
}

}  // namespace maxent
