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

#include "maxent/certify.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <numbers>
#include <optional>
#include <random>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace maxent {
namespace {

constexpr double kRankTol = 1e-10;
constexpr int kPlateauWindow = 50;
constexpr int kPolishInterval = 200;

// Coefficients t_k with Tr[rho C] = sum_k t_k x_k in the Hermitian basis.
//   diagonal i:          B = E_ii                      -> C_ii
//   position p*d+q, p<q: B = (E_pq + E_qp)/sqrt2       -> (C_qp + C_pq)/sqrt2
//   position q*d+p, p<q: B = i(E_pq - E_qp)/sqrt2      -> i(C_qp - C_pq)/sqrt2
ComplexVector trace_functional(const ComplexMatrix& c) {
  const int d = static_cast<int>(c.rows());
  const double s = std::numbers::sqrt2 / 2.0;
  ComplexVector t(static_cast<Eigen::Index>(d) * d);
  for (int p = 0; p < d; ++p) {
    t[p * d + p] = c(p, p);
    for (int q = p + 1; q < d; ++q) {
      t[p * d + q] = s * (c(q, p) + c(p, q));
      t[q * d + p] = Complex{0.0, 1.0} * s * (c(q, p) - c(p, q));
    }
  }
  return t;
}

double min_eigenvalue(const ComplexMatrix& h) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(0.5 * (h + h.adjoint()),
                                                      Eigen::EigenvaluesOnly);
  return solver.eigenvalues()[0];
}

ComplexMatrix project_psd(const ComplexMatrix& h) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(0.5 * (h + h.adjoint()));
  const RealVector clamped = solver.eigenvalues().cwiseMax(0.0);
  return solver.eigenvectors() * clamped.cast<Complex>().asDiagonal() *
         solver.eigenvectors().adjoint();
}

// Max |O - I/d_A^2| read off the constraint rows: pair rows hold (Re, Im) of
// off-diagonal O entries, normalization rows hold O_ff.
double gram_deviation_from_rows(const ConstraintSystem& system, const RealVector& ax) {
  const double target = 1.0 / (static_cast<double>(system.dA) * system.dA);
  double dev = 0.0;
  const Eigen::Index pairs = system.pair_rows();
  for (Eigen::Index r = 0; r < pairs; r += 2) {
    dev = std::max(dev, std::hypot(ax[r], ax[r + 1]));
  }
  for (Eigen::Index r = pairs; r < ax.size(); ++r) {
    dev = std::max(dev, std::abs(ax[r] - target));
  }
  return dev;
}

Certificate make_certificate(CertificateStatus status, const ConstraintSystem& system,
                             const RealVector& x, std::string reason) {
  Certificate cert;
  cert.status = status;
  const ComplexMatrix rho = coords_to_hermitian(x, system.dB);
  const RealVector ax = system.matrix * x;
  cert.affine_residual = (ax - system.rhs).cwiseAbs().maxCoeff();
  cert.min_eigenvalue = min_eigenvalue(rho);
  cert.gram_deviation = gram_deviation_from_rows(system, ax);
  if (status == CertificateStatus::kCertified) cert.rho = rho;
  cert.reason = std::move(reason);
  return cert;
}

// Affine set {x0 + N y}; N has orthonormal columns.
struct AffineSlice {
  RealVector particular;
  RealMatrix null_basis;

  RealVector project(const RealVector& x) const {
    return particular + null_basis * (null_basis.transpose() * (x - particular));
  }
};

// Gauss-Newton on a rank-r factor rho = V V^dag, started from the top-r
// eigenpairs of z. Every point it produces is PSD by construction, so only
// the affine residual has to be driven down. Alternating projections converge
// sublinearly when the slice touches the cone only at its boundary; this step
// converges quadratically once the iterate is close.
std::optional<RealVector> refine_factor(const ConstraintSystem& system, const ComplexMatrix& z,
                                        int rank, const FeasibilityOptions& opts) {
  constexpr int kSteps = 30;
  const int d = system.dB;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(0.5 * (z + z.adjoint()));
  ComplexMatrix v = solver.eigenvectors().rightCols(rank) *
                    solver.eigenvalues().tail(rank).cwiseMax(0.0).cwiseSqrt()
                        .cast<Complex>().asDiagonal();

  const Eigen::Index params = 2 * static_cast<Eigen::Index>(d) * rank;
  RealMatrix jacobian(system.matrix.rows(), params);
  double previous = std::numeric_limits<double>::infinity();
  for (int step = 0; step <= kSteps; ++step) {
    const RealVector x = hermitian_to_coords(v * v.adjoint());
    const RealVector residual = system.matrix * x - system.rhs;
    const double size = residual.cwiseAbs().maxCoeff();
    if (size <= 0.1 * opts.affine_tol) return x;
    // Not in the quadratic regime; leave it to the projections.
    if (step == kSteps || (step >= 2 && size > 0.5 * previous)) break;
    previous = size;

    // d rho = E V^dag + V E^dag is linear in E, so columns are exact.
    Eigen::Index col = 0;
    for (const Complex unit : {Complex{1.0, 0.0}, Complex{0.0, 1.0}}) {
      for (int i = 0; i < d; ++i) {
        for (int k = 0; k < rank; ++k) {
          ComplexMatrix e = ComplexMatrix::Zero(d, rank);
          e(i, k) = unit;
          const ComplexMatrix e_vdag = e * v.adjoint();
          jacobian.col(col++) =
              system.matrix * hermitian_to_coords(e_vdag + e_vdag.adjoint());
        }
      }
    }
    Eigen::JacobiSVD<RealMatrix> svd(jacobian, Eigen::ComputeThinU | Eigen::ComputeThinV);
    svd.setThreshold(1e-12);
    const RealVector delta = svd.solve(-residual);
    col = 0;
    for (const Complex unit : {Complex{1.0, 0.0}, Complex{0.0, 1.0}}) {
      for (int i = 0; i < d; ++i) {
        for (int k = 0; k < rank; ++k) v(i, k) += unit * delta[col++];
      }
    }
  }
  const RealVector x = hermitian_to_coords(v * v.adjoint());
  if ((system.matrix * x - system.rhs).cwiseAbs().maxCoeff() <= opts.affine_tol) return x;
  return std::nullopt;
}

// Tries the factor refinement at each numerical rank of z, smallest first.
std::optional<RealVector> polish(const ConstraintSystem& system, const RealVector& z,
                                 const FeasibilityOptions& opts) {
  const int d = system.dB;
  const ComplexMatrix zm = coords_to_hermitian(z, d);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(zm, Eigen::EigenvaluesOnly);
  const RealVector& lambda = solver.eigenvalues();
  const double top = lambda[d - 1];
  if (!(top > 0.0)) return std::nullopt;

  int previous = 0;
  for (double cut = 1e-1; cut >= 1e-7; cut *= 1e-2) {
    int rank = 0;
    for (int i = 0; i < d; ++i) rank += lambda[i] > cut * top ? 1 : 0;
    if (rank == previous) continue;
    previous = rank;
    if (auto x = refine_factor(system, zm, rank, opts)) {
      if (min_eigenvalue(coords_to_hermitian(*x, d)) >= -opts.psd_tol) return x;
    }
  }
  return std::nullopt;
}

struct Attempt {
  bool success = false;
  RealVector point;
  double violation = std::numeric_limits<double>::infinity();
};

// Dykstra's algorithm for the intersection of the affine slice and the PSD
// cone. Only the cone needs a correction term since the slice is affine.
Attempt run_dykstra(const ConstraintSystem& system, const AffineSlice& slice,
                    RealVector start, const FeasibilityOptions& opts) {
  const int d = system.dB;
  Attempt best;
  RealVector x = std::move(start);
  RealVector correction = RealVector::Zero(x.size());
  std::deque<std::pair<double, double>> history;

  for (int iter = 0; iter < opts.max_iters; ++iter) {
    const RealVector y = slice.project(x);
    const RealVector shifted = y + correction;
    const RealVector z = hermitian_to_coords(project_psd(coords_to_hermitian(shifted, d)));
    correction = shifted - z;
    x = z;

    // Two candidates: y sits on the slice, z sits in the cone.
    const double y_neg = std::max(0.0, -min_eigenvalue(coords_to_hermitian(y, d)));
    const double z_res = (system.matrix * z - system.rhs).cwiseAbs().maxCoeff();
    if (y_neg <= opts.psd_tol) {
      const double y_res = (system.matrix * y - system.rhs).cwiseAbs().maxCoeff();
      if (y_res <= opts.affine_tol) return {true, y, 0.0};
    }
    if (z_res <= opts.affine_tol) {
      const double z_neg = std::max(0.0, -min_eigenvalue(coords_to_hermitian(z, d)));
      if (z_neg <= opts.psd_tol) return {true, z, 0.0};
    }
    const double violation = std::min(y_neg, z_res);
    if (violation < best.violation) best = {false, y_neg < z_res ? y : z, violation};

    if ((iter + 1) % kPolishInterval == 0) {
      if (auto polished = polish(system, z, opts)) return {true, *polished, 0.0};
    }

    history.emplace_back(y_neg, z_res);
    if (history.size() > kPlateauWindow) {
      history.pop_front();
      const auto [old_neg, old_res] = history.front();
      const bool neg_stable = std::abs(old_neg - y_neg) <= 1e-3 * old_neg + 1e-15;
      const bool res_stable = std::abs(old_res - z_res) <= 1e-3 * old_res + 1e-15;
      if (neg_stable && res_stable) break;
    }
  }
  if (auto polished = polish(system, x, opts)) return {true, *polished, 0.0};
  return best;
}

}  // namespace

void FeasibilityOptions::validate() const {
  if (!(affine_tol > 0.0) || !(psd_tol > 0.0)) {
    throw Error("feasibility options: tolerances must be positive");
  }
  if (max_iters < 1 || restarts < 1) {
    throw Error("feasibility options: max_iters and restarts must be at least 1");
  }
}

std::string_view to_string(CertificateStatus status) {
  switch (status) {
    case CertificateStatus::kCertified: return "CERTIFIED";
    case CertificateStatus::kInfeasible: return "INFEASIBLE";
    case CertificateStatus::kNotFound: return "NOT_FOUND";
  }
  return "NOT_FOUND";
}

CertificateStatus status_from_string(std::string_view name) {
  if (name == "CERTIFIED") return CertificateStatus::kCertified;
  if (name == "INFEASIBLE") return CertificateStatus::kInfeasible;
  if (name == "NOT_FOUND") return CertificateStatus::kNotFound;
  throw Error("unknown certificate status '" + std::string(name) + "'");
}

RealVector hermitian_to_coords(const ComplexMatrix& h) {
  const int d = static_cast<int>(h.rows());
  const double r2 = std::numbers::sqrt2;
  RealVector x(static_cast<Eigen::Index>(d) * d);
  for (int p = 0; p < d; ++p) {
    x[p * d + p] = h(p, p).real();
    for (int q = p + 1; q < d; ++q) {
      const Complex avg = 0.5 * (h(p, q) + std::conj(h(q, p)));
      x[p * d + q] = r2 * avg.real();
      x[q * d + p] = r2 * avg.imag();
    }
  }
  return x;
}

ComplexMatrix coords_to_hermitian(const RealVector& x, int d) {
  if (x.size() != static_cast<Eigen::Index>(d) * d) {
    throw Error("coords_to_hermitian: expected d^2 coordinates");
  }
  const double s = std::numbers::sqrt2 / 2.0;
  ComplexMatrix h(d, d);
  for (int p = 0; p < d; ++p) {
    h(p, p) = x[p * d + p];
    for (int q = p + 1; q < d; ++q) {
      h(p, q) = s * Complex{x[p * d + q], x[q * d + p]};
      h(q, p) = std::conj(h(p, q));
    }
  }
  return h;
}

ConstraintSystem build_constraints(const PauliDecomposition& dec) {
  const auto& w = dec.operators();
  const auto order = static_cast<Eigen::Index>(w.size());
  const auto coords = static_cast<Eigen::Index>(dec.dB()) * dec.dB();
  const Eigen::Index pair_rows = order * (order - 1);

  ConstraintSystem system;
  system.dA = dec.dA();
  system.dB = dec.dB();
  system.matrix = RealMatrix::Zero(pair_rows + order, coords);
  system.rhs = RealVector::Zero(pair_rows + order);

  Eigen::Index row = 0;
  for (Eigen::Index f = 0; f < order; ++f) {
    for (Eigen::Index g = f + 1; g < order; ++g) {
      const ComplexVector t = trace_functional(w[g].adjoint() * w[f]);
      system.matrix.row(row++) = t.real().transpose();
      system.matrix.row(row++) = t.imag().transpose();
    }
  }
  const double target = 1.0 / static_cast<double>(order);
  for (Eigen::Index f = 0; f < order; ++f) {
    const ComplexVector t = trace_functional(w[f].adjoint() * w[f]);
    system.matrix.row(row) = t.real().transpose();
    system.rhs[row++] = target;
  }
  return system;
}

ComplexMatrix gram_matrix(const PauliDecomposition& dec, const ComplexMatrix& rho) {
  const auto& w = dec.operators();
  const auto order = static_cast<Eigen::Index>(w.size());
  std::vector<ComplexMatrix> w_rho;
  w_rho.reserve(w.size());
  for (const auto& op : w) w_rho.push_back(op * rho);

  ComplexMatrix o(order, order);
  for (Eigen::Index g = 0; g < order; ++g) {
    for (Eigen::Index f = 0; f < order; ++f) {
      // Tr[W(f) rho W(g)^dag] = sum_ij (W(f) rho)_ij conj(W(g)_ij).
      o(g, f) = (w_rho[f].array() * w[g].conjugate().array()).sum();
    }
  }
  return o;
}

double gram_deviation(const PauliDecomposition& dec, const ComplexMatrix& rho) {
  const auto order = static_cast<Eigen::Index>(dec.operators().size());
  const ComplexMatrix target =
      ComplexMatrix::Identity(order, order) / static_cast<double>(order);
  return max_abs(gram_matrix(dec, rho) - target);
}

Certificate fast_path_equal_dims(const PauliDecomposition& dec,
                                 const FeasibilityOptions& opts) {
  if (dec.dA() != dec.dB()) {
    throw Error("fast path requires dA == dB");
  }
  opts.validate();
  const ComplexMatrix rho =
      ComplexMatrix::Identity(dec.dB(), dec.dB()) / static_cast<double>(dec.dB());

  Certificate cert;
  cert.gram_deviation = gram_deviation(dec, rho);
  cert.affine_residual = cert.gram_deviation;
  cert.min_eigenvalue = 1.0 / dec.dB();
  if (cert.gram_deviation <= opts.affine_tol) {
    cert.status = CertificateStatus::kCertified;
    cert.rho = rho;
    cert.reason = "dA == dB: rho = I/dB satisfies every constraint";
  } else {
    cert.status = CertificateStatus::kInfeasible;
    cert.reason = "dA == dB: the only admissible metric I/dB violates the constraints";
  }
  return cert;
}

Certificate find_feasible_psd(const ConstraintSystem& system,
                              const FeasibilityOptions& opts) {
  opts.validate();
  const RealMatrix& a = system.matrix;
  const RealVector& b = system.rhs;

  Eigen::JacobiSVD<RealMatrix> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  svd.setThreshold(kRankTol);
  AffineSlice slice;
  slice.particular = svd.solve(b);

  const double ls_residual = (a * slice.particular - b).cwiseAbs().maxCoeff();
  if (ls_residual > opts.affine_tol) {
    return make_certificate(CertificateStatus::kInfeasible, system, slice.particular,
                            "affine constraint system is inconsistent");
  }

  const auto null_vectors = nullspace_real(a, kRankTol);
  slice.null_basis = RealMatrix(a.cols(), static_cast<Eigen::Index>(null_vectors.size()));
  for (std::size_t i = 0; i < null_vectors.size(); ++i) {
    slice.null_basis.col(static_cast<Eigen::Index>(i)) = null_vectors[i];
  }

  if (null_vectors.empty()) {
    const double lowest = min_eigenvalue(coords_to_hermitian(slice.particular, system.dB));
    if (lowest >= -opts.psd_tol) {
      return make_certificate(CertificateStatus::kCertified, system, slice.particular,
                              "unique affine solution is positive semidefinite");
    }
    return make_certificate(CertificateStatus::kInfeasible, system, slice.particular,
                            "unique affine solution is not positive semidefinite");
  }

  // Restart r starts from the particular solution plus a nullspace
  // perturbation of scale |x0| / 2^(r-1); restart 0 is unperturbed.
  const double scale = std::max(slice.particular.norm(), 1.0 / system.dB);
  Attempt best;
  for (int r = 0; r < opts.restarts; ++r) {
    std::seed_seq seq{static_cast<std::uint32_t>(opts.rng_seed),
                      static_cast<std::uint32_t>(opts.rng_seed >> 32),
                      static_cast<std::uint32_t>(r)};
    std::mt19937_64 rng(seq);
    std::normal_distribution<double> normal;

    RealVector start = slice.particular;
    if (r > 0) {
      RealVector y(slice.null_basis.cols());
      for (Eigen::Index i = 0; i < y.size(); ++i) y[i] = normal(rng);
      start += slice.null_basis * y.normalized() * (scale * std::ldexp(1.0, -(r - 1)));
    }
    Attempt attempt = run_dykstra(system, slice, std::move(start), opts);
    if (attempt.success) {
      return make_certificate(CertificateStatus::kCertified, system, attempt.point,
                              "PSD point found on the affine slice (restart " +
                                  std::to_string(r) + ")");
    }
    if (attempt.violation < best.violation) best = std::move(attempt);
  }
  return make_certificate(CertificateStatus::kNotFound, system,
                          best.point.size() > 0 ? best.point : slice.particular,
                          "no positive semidefinite point found within the search budget");
}

Certificate certify(const PauliDecomposition& dec, const FeasibilityOptions& opts) {
  opts.validate();
  if (dec.dA() == dec.dB()) return fast_path_equal_dims(dec, opts);

  Certificate cert = find_feasible_psd(build_constraints(dec), opts);
  if (cert.status == CertificateStatus::kCertified) {
    cert.gram_deviation = gram_deviation(dec, *cert.rho);
    const double trace_error = std::abs(cert.rho->trace() - Complex{1.0, 0.0});
    if (cert.gram_deviation > 10.0 * opts.affine_tol || trace_error > 1e-8) {
      cert.status = CertificateStatus::kNotFound;
      cert.rho.reset();
      cert.reason = "candidate failed the direct Gram-matrix check";
    }
  }
  return cert;
}

Certificate certify(const BipartiteGate& gate, const FeasibilityOptions& opts) {
  return certify(extract(gate), opts);
}

Certificate certify_adjoint(const BipartiteGate& gate, const FeasibilityOptions& opts) {
  return certify(extract(gate.adjoint()), opts);
}

}  // namespace maxent
