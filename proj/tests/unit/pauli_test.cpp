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

#include <gtest/gtest.h>

#include "test_util.hpp"

namespace maxent {
namespace {

using testing::max_abs;
using testing::pauli_reference;

TEST(PauliGroup, IdentityElement) {
  const PauliGroup g(2);
  EXPECT_EQ(g.gamma({0, 0}), ComplexMatrix::Identity(2, 2));
}

TEST(PauliGroup, Gamma11IsPauliY) {
  const PauliGroup g(2);
  ComplexMatrix y(2, 2);
  y << 0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0;
  EXPECT_LT(max_abs(g.gamma({1, 1}) - y), 1e-15);
}

TEST(PauliGroup, ShiftAtDimensionThree) {
  const PauliGroup g(3);
  ComplexMatrix shift = ComplexMatrix::Zero(3, 3);
  shift(1, 0) = shift(2, 1) = shift(0, 2) = 1.0;
  EXPECT_LT(max_abs(g.gamma({1, 0}) - shift), 1e-15);
}

TEST(PauliGroup, MatchesReferenceConstruction) {
  for (int d = 2; d <= 5; ++d) {
    const PauliGroup g(d);
    EXPECT_EQ(g.order(), d * d);
    for (int m = 0; m < d; ++m)
      for (int n = 0; n < d; ++n) EXPECT_LT(max_abs(g.gamma({m, n}) - pauli_reference(d, m, n)), 1e-12);
  }
}

TEST(PauliGroup, UnitaryAndTraceOrthogonal) {
  for (int d = 2; d <= 5; ++d) {
    const PauliGroup g(d);
    for (std::size_t f = 0; f < static_cast<std::size_t>(g.order()); ++f) {
      EXPECT_LT(unitarity_defect(g.gamma(f)), 1e-12);
      for (std::size_t h = 0; h < static_cast<std::size_t>(g.order()); ++h) {
        const Complex t = (g.gamma(h).adjoint() * g.gamma(f)).trace();
        EXPECT_LT(std::abs(t - Complex(f == h ? d : 0.0)), 1e-12);
      }
    }
  }
}

TEST(PauliGroup, SchurCompleteness) {
  // sum_f conj(Gamma(f)_{j'k'}) Gamma(f)_{jk} = d delta_jj' delta_kk'.
  for (int d = 2; d <= 5; ++d) {
    const PauliGroup g(d);
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        for (int jp = 0; jp < d; ++jp)
          for (int kp = 0; kp < d; ++kp) {
            Complex acc = 0.0;
            for (std::size_t f = 0; f < static_cast<std::size_t>(g.order()); ++f) {
              acc += std::conj(g.gamma(f)(jp, kp)) * g.gamma(f)(j, k);
            }
            const double expected = (j == jp && k == kp) ? d : 0.0;
            EXPECT_LT(std::abs(acc - expected), 1e-10);
          }
  }
}

TEST(PauliGroup, VectorizedGramIsScaledIdentity) {
  for (int d = 2; d <= 5; ++d) {
    const PauliGroup g(d);
    ComplexMatrix stacked(d * d, g.order());
    for (std::size_t f = 0; f < static_cast<std::size_t>(g.order()); ++f) {
      stacked.col(static_cast<Eigen::Index>(f)) = g.gamma(f).reshaped();
    }
    const ComplexMatrix gram = stacked.adjoint() * stacked;
    EXPECT_LT(max_abs(gram - d * ComplexMatrix::Identity(d * d, d * d)), 1e-10);
  }
}

TEST(PauliGroup, ComposeWithIdentity) {
  for (int d = 2; d <= 5; ++d) {
    const PauliGroup g(d);
    for (const auto f : g.elements()) {
      const auto [left, mu_left] = g.compose({0, 0}, f);
      const auto [right, mu_right] = g.compose(f, {0, 0});
      EXPECT_EQ(left, f);
      EXPECT_EQ(right, f);
      EXPECT_EQ(mu_left, Complex(1.0));
      EXPECT_EQ(mu_right, Complex(1.0));
    }
  }
}

TEST(PauliGroup, ComposeWithInverseIsExactlyTrivial) {
  for (int d = 2; d <= 5; ++d) {
    const PauliGroup g(d);
    for (const auto f : g.elements()) {
      const auto [e, mu] = g.compose(f, g.inverse(f));
      EXPECT_EQ(e, (PauliIndex{0, 0}));
      EXPECT_EQ(mu, Complex(1.0));
    }
  }
}

TEST(PauliGroup, XThenZAtDimensionTwo) {
  const PauliGroup g(2);
  const auto [fg, mu] = g.compose({1, 0}, {0, 1});
  EXPECT_EQ(fg, (PauliIndex{1, 1}));
  EXPECT_NEAR(std::abs(mu), 1.0, 1e-15);
  // X Z = -i Y.
  EXPECT_LT(std::abs(mu - Complex(0.0, -1.0)), 1e-15);
  EXPECT_LT(max_abs(g.gamma({1, 0}) * g.gamma({0, 1}) - mu * g.gamma({1, 1})), 1e-12);
}

TEST(PauliGroup, FactorSystemMatchesMatrixProducts) {
  for (int d = 2; d <= 5; ++d) {
    const PauliGroup g(d);
    for (const auto f : g.elements()) {
      for (const auto h : g.elements()) {
        const auto [fh, mu] = g.compose(f, h);
        EXPECT_NEAR(std::abs(mu), 1.0, 1e-12);
        EXPECT_LT(max_abs(g.gamma(f) * g.gamma(h) - mu * g.gamma(fh)), 1e-12);
      }
    }
  }
}

TEST(PauliGroup, Inverses) {
  EXPECT_EQ(PauliGroup(2).inverse({0, 0}), (PauliIndex{0, 0}));
  EXPECT_EQ(PauliGroup(2).inverse({1, 1}), (PauliIndex{1, 1}));
  EXPECT_EQ(PauliGroup(3).inverse({1, 2}), (PauliIndex{2, 1}));
  const PauliGroup g(4);
  for (const auto f : g.elements()) {
    EXPECT_LT(max_abs(g.gamma(f).adjoint() - g.gamma(g.inverse(f))), 1e-12);
  }
}

TEST(PauliGroup, ReducesIndicesModD) {
  const PauliGroup g(3);
  EXPECT_EQ(g.reduce({4, -1}), (PauliIndex{1, 2}));
  EXPECT_EQ(g.flat({4, -1}), 5u);
  EXPECT_EQ(g.element(5), (PauliIndex{1, 2}));
}

TEST(PauliGroup, RejectsDimensionOne) {
  EXPECT_THROW(PauliGroup(1), Error);
}

TEST(PauliGroup, SharedInstancesAreCached) {
  EXPECT_EQ(pauli_group(3).get(), pauli_group(3).get());
}

}  // namespace
}  // namespace maxent
