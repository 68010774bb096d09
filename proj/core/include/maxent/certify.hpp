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

// Maximal-entangling certification.
//
// U is maximally entangling iff some density operator rho on B satisfies
//
//   Tr[W(f) rho W(g)^dag] = delta(f, g) / d_A^2   for all f, g,
//
// i.e. the Gram matrix O_gf = Tr[W(f) rho W(g)^dag] equals I / d_A^2. Such a
// rho is the B-marginal of an optimal Bb input state.
//
// Hermitian rho on a d-dimensional space is parameterized by d^2 real
// coordinates in an orthonormal (Hilbert-Schmidt) Hermitian basis, so the
// Euclidean geometry of the coordinates is the Frobenius geometry of rho.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "maxent/decompose.hpp"
#include "maxent/linalg.hpp"

namespace maxent {

struct FeasibilityOptions {
  double affine_tol = 1e-9;
  double psd_tol = 1e-9;
  int max_iters = 5000;
  int restarts = 16;
  std::uint64_t rng_seed = 0;

  /// Throws Error unless tolerances are positive and budgets at least 1.
  void validate() const;
};

enum class CertificateStatus { kCertified, kInfeasible, kNotFound };

std::string_view to_string(CertificateStatus status);
/// Inverse of to_string; throws Error on unknown names.
CertificateStatus status_from_string(std::string_view name);

struct Certificate {
  CertificateStatus status = CertificateStatus::kNotFound;
  std::optional<ComplexMatrix> rho;  // present iff CERTIFIED
  double affine_residual = 0.0;
  double min_eigenvalue = 0.0;
  double gram_deviation = 0.0;  // max |O - I/d_A^2|
  std::string reason;
};

/// Real affine system A x = b over Hermitian-coordinate vectors x.
///
/// Rows come in two blocks. For every unordered pair f < g (flat order) there
/// are two rows, the real then imaginary part of O_gf = 0. The last d_A^2 rows
/// are the normalizations O_ff = 1/d_A^2.
struct ConstraintSystem {
  int dA = 0;
  int dB = 0;
  RealMatrix matrix;
  RealVector rhs;

  Eigen::Index pair_rows() const { return matrix.rows() - static_cast<Eigen::Index>(dA) * dA; }
};

/// Coordinates of a Hermitian matrix in the orthonormal Hermitian basis.
RealVector hermitian_to_coords(const ComplexMatrix& h);
ComplexMatrix coords_to_hermitian(const RealVector& x, int d);

ConstraintSystem build_constraints(const PauliDecomposition& dec);

/// O_gf = Tr[W(f) rho W(g)^dag], rows indexed by g and columns by f.
ComplexMatrix gram_matrix(const PauliDecomposition& dec, const ComplexMatrix& rho);

/// Max deviation of the Gram matrix of (dec, rho) from I/d_A^2.
double gram_deviation(const PauliDecomposition& dec, const ComplexMatrix& rho);

/// Equal dimensions admit only rho = I/d_B; checks it directly. The verdict is
/// rigorous either way. Throws Error if dA != dB.
Certificate fast_path_equal_dims(const PauliDecomposition& dec,
                                 const FeasibilityOptions& opts = {});

/// Searches the affine solution set of `system` for a PSD point.
///
/// An inconsistent system, or a unique affine solution that is not PSD, gives
/// INFEASIBLE. Otherwise Dykstra alternating projections between the affine
/// set and the PSD cone run from `opts.restarts` seeded starting points; a
/// point meeting both tolerances gives CERTIFIED and exhausting the budget
/// gives NOT_FOUND.
Certificate find_feasible_psd(const ConstraintSystem& system,
                              const FeasibilityOptions& opts = {});

/// Fast path when d_A = d_B, general search otherwise.
Certificate certify(const PauliDecomposition& dec, const FeasibilityOptions& opts = {});
Certificate certify(const BipartiteGate& gate, const FeasibilityOptions& opts = {});

/// Certification of U^dag (the disentangling direction).
Certificate certify_adjoint(const BipartiteGate& gate, const FeasibilityOptions& opts = {});

}  // namespace maxent
