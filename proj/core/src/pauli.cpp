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

#include "maxent/pauli.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

namespace maxent {
namespace {

int mod(int a, int d) {
  const int r = a % d;
  return r < 0 ? r + d : r;
}

}  // namespace

PauliGroup::PauliGroup(int d) : d_(d) {
  if (d < 2) throw Error("PauliGroup: dimension must be at least 2");

  ComplexMatrix x = ComplexMatrix::Zero(d, d);
  ComplexMatrix z = ComplexMatrix::Zero(d, d);
  for (int k = 0; k < d; ++k) {
    x((k + 1) % d, k) = 1.0;
    z(k, k) = std::polar(1.0, 2.0 * std::numbers::pi * k / d);
  }

  matrices_.reserve(static_cast<std::size_t>(d) * d);
  ComplexMatrix x_pow = ComplexMatrix::Identity(d, d);
  for (int m = 0; m < d; ++m) {
    ComplexMatrix z_pow = ComplexMatrix::Identity(d, d);
    for (int n = 0; n < d; ++n) {
      const Complex phase = std::polar(1.0, std::numbers::pi * theta_units(m, n) / d);
      matrices_.push_back(phase * x_pow * z_pow);
      z_pow = z_pow * z;
    }
    x_pow = x * x_pow;
  }
}

PauliIndex PauliGroup::reduce(PauliIndex f) const {
  return {mod(f.m, d_), mod(f.n, d_)};
}

std::size_t PauliGroup::flat(PauliIndex f) const {
  const PauliIndex r = reduce(f);
  return static_cast<std::size_t>(r.m) * d_ + r.n;
}

PauliIndex PauliGroup::element(std::size_t flat_index) const {
  const int i = static_cast<int>(flat_index);
  return {i / d_, i % d_};
}

std::vector<PauliIndex> PauliGroup::elements() const {
  std::vector<PauliIndex> out;
  out.reserve(matrices_.size());
  for (std::size_t i = 0; i < matrices_.size(); ++i) out.push_back(element(i));
  return out;
}

const ComplexMatrix& PauliGroup::gamma(PauliIndex f) const {
  return matrices_[flat(f)];
}

std::pair<PauliIndex, Complex> PauliGroup::compose(PauliIndex f, PauliIndex g) const {
  f = reduce(f);
  g = reduce(g);
  const PauliIndex fg = reduce({f.m + g.m, f.n + g.n});
  // X^a Z^b X^c Z^e = omega^{bc} X^{a+c} Z^{b+e}, and X^d = Z^d = I.
  const int units = theta_units(f.m, f.n) + theta_units(g.m, g.n) -
                    theta_units(fg.m, fg.n) + 2 * f.n * g.m;
  const int k = mod(units, 2 * d_);
  const Complex mu = k == 0 ? Complex{1.0, 0.0}
                            : std::polar(1.0, std::numbers::pi * k / d_);
  return {fg, mu};
}

PauliIndex PauliGroup::inverse(PauliIndex f) const {
  return reduce({-f.m, -f.n});
}

std::shared_ptr<const PauliGroup> pauli_group(int d) {
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const PauliGroup>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[d];
  if (!slot) slot = std::make_shared<const PauliGroup>(d);
  return slot;
}

}  // namespace maxent
