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

#include "maxent/hamiltonian2q.hpp"

#include <cmath>
#include <numbers>

namespace maxent {
namespace {

std::array<ComplexMatrix, 4> paulis() {
  const Complex i{0.0, 1.0};
  ComplexMatrix e = ComplexMatrix::Identity(2, 2);
  ComplexMatrix x(2, 2), y(2, 2), z(2, 2);
  x << 0.0, 1.0, 1.0, 0.0;
  y << 0.0, -i, i, 0.0;
  z << 1.0, 0.0, 0.0, -1.0;
  return {e, x, y, z};
}

}  // namespace

Complex PauliCoefficients::amplitude(int f) const {
  return {cos_part.at(f), -sin_part.at(f)};
}

double PauliCoefficients::k(int f) const { return cos_part.at(f) - sin_part.at(f); }

double PauliCoefficients::norm_squared() const {
  double s = 0.0;
  for (int f = 0; f < 4; ++f) s += std::norm(amplitude(f));
  return s;
}

ComplexMatrix hamiltonian(const TwoQubitAlphas& a) {
  const auto s = paulis();
  return a.alpha_x * tensor_product(s[1], s[1]) + a.alpha_y * tensor_product(s[2], s[2]) +
         a.alpha_z * tensor_product(s[3], s[3]);
}

ComplexMatrix two_qubit_unitary(const TwoQubitAlphas& a) {
  return expm_minus_i(hamiltonian(a));
}

PauliCoefficients coefficients(const TwoQubitAlphas& a) {
  const double cx = std::cos(a.alpha_x), sx = std::sin(a.alpha_x);
  const double cy = std::cos(a.alpha_y), sy = std::sin(a.alpha_y);
  const double cz = std::cos(a.alpha_z), sz = std::sin(a.alpha_z);
  PauliCoefficients k;
  k.cos_part = {cx * cy * cz, cx * sy * sz, sx * cy * sz, sx * sy * cz};
  k.sin_part = {sx * sy * sz, sx * cy * cz, cx * sy * cz, cx * cy * sz};
  return k;
}

ComplexMatrix unitary_from_coefficients(const PauliCoefficients& k) {
  const auto s = paulis();
  ComplexMatrix u = ComplexMatrix::Zero(4, 4);
  for (int f = 0; f < 4; ++f) u += k.amplitude(f) * tensor_product(s[f], s[f]);
  return u;
}

std::array<double, 4> normalization_residuals(const TwoQubitAlphas& a) {
  const double cx2 = std::pow(std::cos(a.alpha_x), 2), sx2 = std::pow(std::sin(a.alpha_x), 2);
  const double cy2 = std::pow(std::cos(a.alpha_y), 2), sy2 = std::pow(std::sin(a.alpha_y), 2);
  const double cz2 = std::pow(std::cos(a.alpha_z), 2), sz2 = std::pow(std::sin(a.alpha_z), 2);
  return {
      cx2 * cy2 * cz2 + sx2 * sy2 * sz2 - 0.25,
      cx2 * sy2 * sz2 + sx2 * cy2 * cz2 - 0.25,
      sx2 * cy2 * sz2 + cx2 * sy2 * cz2 - 0.25,
      sx2 * sy2 * cz2 + cx2 * cy2 * sz2 - 0.25,
  };
}

bool check_normalizations(const TwoQubitAlphas& a, double tol) {
  for (double r : normalization_residuals(a)) {
    if (std::abs(r) > tol) return false;
  }
  return true;
}

bool closed_form_maximal(const TwoQubitAlphas& a, double tol) {
  int hits = 0;
  for (double alpha : {a.alpha_x, a.alpha_y, a.alpha_z}) {
    if (std::abs(std::pow(std::cos(alpha), 2) - 0.5) <= tol) ++hits;
  }
  return hits >= 2;
}

ComplexMatrix magic_basis() {
  const Complex i{0.0, 1.0};
  const double r = std::numbers::sqrt2 / 2.0;
  ComplexMatrix q(4, 4);
  // |00>, |01>, |10>, |11> rows.
  q << r, r * i, 0.0, 0.0,
       0.0, 0.0, r * i, r,
       0.0, 0.0, r * i, -r,
       r, -r * i, 0.0, 0.0;
  return q;
}

}  // namespace maxent
