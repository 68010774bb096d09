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

// Generalized Pauli (Weyl-Heisenberg) operators on a d-level system.
//
// Gamma(m, n) = exp(i theta_mn) X^m Z^n with theta_mn = pi (mn mod d) / d,
// X|k> = |k+1 mod d>, Z|k> = omega^k |k>, omega = exp(2 pi i / d). The phase
// choice makes the factor system trivial on (e, g), (g, e) and (g, g^-1).

#include <cstddef>
#include <memory>
#include <utility>
#include <vector>

#include "maxent/linalg.hpp"

namespace maxent {

struct PauliIndex {
  int m = 0;
  int n = 0;

  friend bool operator==(const PauliIndex&, const PauliIndex&) = default;
};

class PauliGroup {
 public:
  explicit PauliGroup(int d);

  int dimension() const { return d_; }
  /// |G| = d^2.
  int order() const { return d_ * d_; }

  PauliIndex reduce(PauliIndex f) const;

  /// Flat position m*d + n of a reduced index; the canonical ordering of G.
  std::size_t flat(PauliIndex f) const;
  PauliIndex element(std::size_t flat_index) const;
  std::vector<PauliIndex> elements() const;

  const ComplexMatrix& gamma(PauliIndex f) const;
  const ComplexMatrix& gamma(std::size_t flat_index) const {
    return matrices_.at(flat_index);
  }

  /// Gamma(f) Gamma(g) = mu Gamma(fg); returns (fg, mu).
  std::pair<PauliIndex, Complex> compose(PauliIndex f, PauliIndex g) const;

  PauliIndex inverse(PauliIndex f) const;

 private:
  // Integer k with theta_mn = pi k / d.
  int theta_units(int m, int n) const { return (m * n) % d_; }

  int d_;
  std::vector<ComplexMatrix> matrices_;
};

/// Shared, lazily built group for dimension d. Thread-safe.
std::shared_ptr<const PauliGroup> pauli_group(int d);

}  // namespace maxent
