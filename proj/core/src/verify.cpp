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

#include "maxent/verify.hpp"

#include <cmath>

namespace maxent {
namespace {

void require_density(const ComplexMatrix& rho, int dB) {
  if (rho.rows() != dB || rho.cols() != dB) {
    throw Error("rho must be dB x dB");
  }
  require_finite(rho, "rho");
  if (hermiticity_defect(rho) > kHermitianTol) throw Error("rho is not Hermitian");
  if (std::abs(rho.trace() - Complex{1.0, 0.0}) > 1e-8) throw Error("rho must have trace 1");
}

}  // namespace

StateVector optimal_input(const ComplexMatrix& rho, int dA, int dB) {
  require_density(rho, dB);
  const ComplexMatrix m = psd_sqrt(rho);

  StateVector psi;
  psi.dims = {dA, dA, dB, dB};
  const Eigen::Index bb = static_cast<Eigen::Index>(dB) * dB;
  psi.amplitudes = ComplexVector::Zero(static_cast<Eigen::Index>(dA) * dA * bb);
  const double amp = 1.0 / std::sqrt(static_cast<double>(dA));
  for (int k = 0; k < dA; ++k) {
    const Eigen::Index aa = static_cast<Eigen::Index>(k) * dA + k;
    for (int row = 0; row < dB; ++row) {
      for (int col = 0; col < dB; ++col) {
        // M_mn |n>_b |m>_B sits at (B = m, b = n).
        psi.amplitudes[aa * bb + static_cast<Eigen::Index>(row) * dB + col] = amp * m(row, col);
      }
    }
  }
  return psi;
}

StateVector apply_gate(const BipartiteGate& gate, const StateVector& psi) {
  const int dA = gate.dA();
  const int dB = gate.dB();
  if (psi.dims != std::vector<int>{dA, dA, dB, dB}) {
    throw Error("apply_gate: state dimensions must be (dA, dA, dB, dB)");
  }
  const Eigen::Index n = static_cast<Eigen::Index>(dA) * dB;
  StateVector out{psi.dims, ComplexVector::Zero(psi.amplitudes.size())};
  for (int a = 0; a < dA; ++a) {
    for (int b = 0; b < dB; ++b) {
      // Gather the (A, B) slice at fixed (a, b), apply U, scatter back.
      ComplexVector slice(n);
      for (Eigen::Index ab = 0; ab < n; ++ab) {
        slice[ab] = psi.amplitudes[(a * n + ab) * dB + b];
      }
      const ComplexVector mapped = gate.unitary() * slice;
      for (Eigen::Index ab = 0; ab < n; ++ab) {
        out.amplitudes[(a * n + ab) * dB + b] = mapped[ab];
      }
    }
  }
  return out;
}

double entanglement_across_cut(const StateVector& psi) {
  if (psi.dims.size() < 2) throw Error("entanglement_across_cut: need at least two slots");
  const Eigen::Index left = static_cast<Eigen::Index>(psi.dims[0]) * psi.dims[1];
  if (left == 0 || psi.amplitudes.size() % left != 0) {
    throw Error("entanglement_across_cut: amplitude count does not match dimensions");
  }
  const Eigen::Index right = psi.amplitudes.size() / left;
  const auto mat = psi.amplitudes.reshaped<Eigen::RowMajor>(left, right);
  const ComplexMatrix reduced = mat * mat.adjoint();
  return von_neumann_entropy(reduced / reduced.trace().real());
}

ComplexMatrix b_states(const BipartiteGate& gate, const ComplexMatrix& rho) {
  const int dA = gate.dA();
  const int dB = gate.dB();
  require_density(rho, dB);
  const ComplexMatrix m = psd_sqrt(rho);
  const PauliDecomposition dec = extract(gate);

  // (B = p, b = n) component of |b_jk>: sqrt(dA) sum_f Gamma(f)_jk (W(f) M)_pn.
  std::vector<ComplexMatrix> wm;
  wm.reserve(dec.operators().size());
  for (const auto& w : dec.operators()) wm.push_back(w * m);

  const Eigen::Index bb = static_cast<Eigen::Index>(dB) * dB;
  ComplexMatrix states = ComplexMatrix::Zero(bb, static_cast<Eigen::Index>(dA) * dA);
  const double scale = std::sqrt(static_cast<double>(dA));
  for (int j = 0; j < dA; ++j) {
    for (int k = 0; k < dA; ++k) {
      ComplexMatrix acc = ComplexMatrix::Zero(dB, dB);
      for (std::size_t f = 0; f < wm.size(); ++f) {
        acc += dec.group().gamma(f)(j, k) * wm[f];
      }
      states.col(j * dA + k) = scale * acc.reshaped<Eigen::RowMajor>();
    }
  }
  return states;
}

double b_states_gram(const BipartiteGate& gate, const ComplexMatrix& rho) {
  const ComplexMatrix states = b_states(gate, rho);
  const ComplexMatrix gram = states.adjoint() * states;
  return max_abs(gram - ComplexMatrix::Identity(gram.rows(), gram.cols()));
}

EntanglementReport report(const BipartiteGate& gate, const Certificate& cert) {
  if (cert.status != CertificateStatus::kCertified || !cert.rho) {
    throw Error("report: certificate is not CERTIFIED");
  }
  const StateVector in = optimal_input(*cert.rho, gate.dA(), gate.dB());
  const StateVector out = apply_gate(gate, in);
  EntanglementReport r;
  r.e_in = entanglement_across_cut(in);
  r.e_out = entanglement_across_cut(out);
  r.delta = r.e_out - r.e_in;
  r.bjk_gram_deviation = b_states_gram(gate, *cert.rho);
  return r;
}

}  // namespace maxent
