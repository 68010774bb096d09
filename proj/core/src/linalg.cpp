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

#include "maxent/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace maxent {

double max_abs(const ComplexMatrix& m) {
  if (m.size() == 0) return 0.0;
  return m.cwiseAbs().maxCoeff();
}

double hermiticity_defect(const ComplexMatrix& h) {
  if (h.rows() != h.cols()) return std::numeric_limits<double>::infinity();
  return max_abs(h - h.adjoint());
}

double unitarity_defect(const ComplexMatrix& u) {
  if (u.rows() != u.cols()) return std::numeric_limits<double>::infinity();
  return max_abs(u.adjoint() * u - ComplexMatrix::Identity(u.rows(), u.cols()));
}

void require_finite(const ComplexMatrix& m, const std::string& what) {
  for (Eigen::Index i = 0; i < m.size(); ++i) {
    const Complex z = m.data()[i];
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw Error(what + ": non-finite entry");
    }
  }
}

ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, std::span<const int> dims,
                            int traced_slot) {
  if (dims.empty() || traced_slot < 0 ||
      static_cast<std::size_t>(traced_slot) >= dims.size()) {
    throw Error("partial_trace: traced slot out of range");
  }
  if (std::any_of(dims.begin(), dims.end(), [](int d) { return d <= 0; })) {
    throw Error("partial_trace: dimensions must be positive");
  }
  const auto slot = static_cast<std::size_t>(traced_slot);
  const Eigen::Index left = std::accumulate(
      dims.begin(), dims.begin() + slot, Eigen::Index{1}, std::multiplies<>());
  const Eigen::Index mid = dims[slot];
  const Eigen::Index right = std::accumulate(
      dims.begin() + slot + 1, dims.end(), Eigen::Index{1}, std::multiplies<>());
  const Eigen::Index total = left * mid * right;
  if (m.rows() != total || m.cols() != total) {
    throw Error("partial_trace: operator size does not match dimensions");
  }

  const Eigen::Index kept = left * right;
  ComplexMatrix out = ComplexMatrix::Zero(kept, kept);
  for (Eigen::Index l = 0; l < left; ++l) {
    for (Eigen::Index r = 0; r < right; ++r) {
      for (Eigen::Index lp = 0; lp < left; ++lp) {
        for (Eigen::Index rp = 0; rp < right; ++rp) {
          Complex acc{0.0, 0.0};
          for (Eigen::Index k = 0; k < mid; ++k) {
            acc += m((l * mid + k) * right + r, (lp * mid + k) * right + rp);
          }
          out(l * right + r, lp * right + rp) = acc;
        }
      }
    }
  }
  return out;
}

HermitianEigensystem hermitian_eig(const ComplexMatrix& h) {
  if (hermiticity_defect(h) > kHermitianTol) {
    throw Error("hermitian_eig: input is not Hermitian");
  }
  // Symmetrize so the solver sees an exactly Hermitian matrix.
  const ComplexMatrix sym = 0.5 * (h + h.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
  if (solver.info() != Eigen::Success) {
    throw Error("hermitian_eig: eigensolver did not converge");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

ComplexMatrix expm_minus_i(const ComplexMatrix& h) {
  const auto eig = hermitian_eig(h);
  ComplexVector phases(eig.eigenvalues.size());
  for (Eigen::Index i = 0; i < phases.size(); ++i) {
    phases[i] = std::polar(1.0, -eig.eigenvalues[i]);
  }
  return eig.eigenvectors * phases.asDiagonal() * eig.eigenvectors.adjoint();
}

ComplexMatrix psd_sqrt(const ComplexMatrix& rho) {
  const auto eig = hermitian_eig(rho);
  if (eig.eigenvalues.size() > 0 && eig.eigenvalues[0] < -kEigenvalueClamp) {
    throw Error("psd_sqrt: operator has a significantly negative eigenvalue");
  }
  const RealVector roots = eig.eigenvalues.cwiseMax(0.0).cwiseSqrt();
  return eig.eigenvectors * roots.cast<Complex>().asDiagonal() *
         eig.eigenvectors.adjoint();
}

std::vector<RealVector> nullspace_real(const RealMatrix& a, double tol) {
  std::vector<RealVector> basis;
  const Eigen::Index n = a.cols();
  if (n == 0) return basis;
  if (a.rows() == 0) {
    for (Eigen::Index i = 0; i < n; ++i) basis.push_back(RealVector::Unit(n, i));
    return basis;
  }
  Eigen::JacobiSVD<RealMatrix> svd(a, Eigen::ComputeFullV);
  const RealVector& sigma = svd.singularValues();
  const double cutoff = tol * (sigma.size() > 0 ? sigma[0] : 0.0);
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < sigma.size(); ++i) {
    if (sigma[i] > cutoff && sigma[i] > 0.0) ++rank;
  }
  const RealMatrix& v = svd.matrixV();
  for (Eigen::Index i = rank; i < n; ++i) basis.push_back(v.col(i));
  return basis;
}

double von_neumann_entropy(const ComplexMatrix& rho) {
  const Complex trace = rho.trace();
  if (std::abs(trace - Complex{1.0, 0.0}) > 1e-8) {
    throw Error("von_neumann_entropy: trace is not 1");
  }
  const auto eig = hermitian_eig(rho);
  if (eig.eigenvalues.size() > 0 && eig.eigenvalues[0] < -kEigenvalueClamp) {
    throw Error("von_neumann_entropy: operator has a negative eigenvalue");
  }
  double s = 0.0;
  for (Eigen::Index i = 0; i < eig.eigenvalues.size(); ++i) {
    const double p = eig.eigenvalues[i];
    if (p > 0.0) s -= p * std::log2(p);
  }
  return std::clamp(s, 0.0, std::log2(static_cast<double>(rho.rows())));
}

}  // namespace maxent
