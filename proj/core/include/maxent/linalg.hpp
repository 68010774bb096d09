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

// Dense complex kernels shared by every other part of the library.
//
// Composite indices follow a single row-major convention: for factors with
// dimensions (d_0, d_1, ..., d_{n-1}) listed left to right, the basis state
// |i_0 i_1 ... i_{n-1}> lives at index ((i_0 * d_1 + i_1) * d_2 + ...) .

#include <complex>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace maxent {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

/// Raised when an input violates a documented precondition.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct HermitianEigensystem {
  RealVector eigenvalues;     // ascending
  ComplexMatrix eigenvectors; // orthonormal columns
};

/// Largest entry modulus, the "max norm" used for every tolerance here.
double max_abs(const ComplexMatrix& m);

/// max |H - H^dagger|, or +inf when H is not square.
double hermiticity_defect(const ComplexMatrix& h);

/// max |U^dagger U - I|, or +inf when U is not square.
double unitarity_defect(const ComplexMatrix& u);

/// Throws Error if any entry is NaN or infinite.
void require_finite(const ComplexMatrix& m, const std::string& what);

/// Kronecker product: (A (x) B)[i*rB + k, j*cB + l] = A[i,j] * B[k,l].
ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b);

/// Traces out factor `traced_slot` of an operator on prod(dims).
ComplexMatrix partial_trace(const ComplexMatrix& m, std::span<const int> dims,
                            int traced_slot);

HermitianEigensystem hermitian_eig(const ComplexMatrix& h);

/// exp(-iH) for Hermitian H, through its eigensystem.
ComplexMatrix expm_minus_i(const ComplexMatrix& h);

/// Hermitian PSD square root. Eigenvalues down to -1e-9 are clamped to zero;
/// anything more negative is rejected.
ComplexMatrix psd_sqrt(const ComplexMatrix& rho);

/// Orthonormal basis of {x : |Ax| <= tol |A|}, by thresholding singular
/// values at tol * sigma_max. Empty when A has full column rank.
std::vector<RealVector> nullspace_real(const RealMatrix& a, double tol);

/// Base-2 von Neumann entropy of a density operator, 0 log 0 := 0.
double von_neumann_entropy(const ComplexMatrix& rho);

inline constexpr double kHermitianTol = 1e-10;
inline constexpr double kEigenvalueClamp = 1e-9;

}  // namespace maxent
