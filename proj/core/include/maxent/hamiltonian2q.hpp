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

// Two-qubit canonical family H = sum_j alpha_j sigma_j (x) sigma_j and its
// maximality conditions.
//
// Since the three terms commute,
//
//   exp(-iH) = prod_j (c_j I - i s_j sigma_j (x) sigma_j)
//            = sum_f (a_f - i b_f) sigma_f (x) sigma_f,     f = e, x, y, z,
//
// with c_j = cos alpha_j, s_j = sin alpha_j and
//
//   a_e = c_x c_y c_z   b_e = s_x s_y s_z
//   a_x = c_x s_y s_z   b_x = s_x c_y c_z
//   a_y = s_x c_y s_z   b_y = c_x s_y c_z
//   a_z = s_x s_y c_z   b_z = c_x c_y s_z.
//
// The commonly quoted real coefficients k_f = a_f - b_f drop the relative
// factor of i; the normalizations only ever use a_f^2 + b_f^2 = |a_f - i b_f|^2.

#include <array>

#include "maxent/linalg.hpp"

namespace maxent {

struct TwoQubitAlphas {
  double alpha_x = 0.0;
  double alpha_y = 0.0;
  double alpha_z = 0.0;
};

/// Coefficients of exp(-iH) in the basis {sigma_f (x) sigma_f}, order e,x,y,z.
struct PauliCoefficients {
  std::array<double, 4> cos_part{};  // a_f
  std::array<double, 4> sin_part{};  // b_f

  /// Complex amplitude a_f - i b_f of sigma_f (x) sigma_f.
  Complex amplitude(int f) const;
  /// k_f = a_f - b_f.
  double k(int f) const;
  double k_e() const { return k(0); }
  double k_x() const { return k(1); }
  double k_y() const { return k(2); }
  double k_z() const { return k(3); }
  /// sum_f |a_f - i b_f|^2, which is 1 for every alpha.
  double norm_squared() const;
};

ComplexMatrix hamiltonian(const TwoQubitAlphas& a);

/// exp(-iH) for the family, through the generic Hermitian exponential.
ComplexMatrix two_qubit_unitary(const TwoQubitAlphas& a);

PauliCoefficients coefficients(const TwoQubitAlphas& a);

/// Resums sum_f (a_f - i b_f) sigma_f (x) sigma_f.
ComplexMatrix unitary_from_coefficients(const PauliCoefficients& k);

/// Left-hand sides minus 1/4 of the four normalization equations
/// (equal-dimension metric rho = I/2).
std::array<double, 4> normalization_residuals(const TwoQubitAlphas& a);

/// True iff all four normalization equations hold within tol.
bool check_normalizations(const TwoQubitAlphas& a, double tol = 1e-9);

/// True iff at least two of cos^2(alpha_j) are within tol of 1/2.
bool closed_form_maximal(const TwoQubitAlphas& a, double tol = 1e-9);

/// Columns are the magic (phased Bell) basis; H is diagonal in it.
ComplexMatrix magic_basis();

}  // namespace maxent
