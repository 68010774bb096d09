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

#include "maxent/decompose.hpp"

#include <random>

#include <gtest/gtest.h>

#include "maxent/synthesize.hpp"
#include "test_util.hpp"

namespace maxent {
namespace {

using testing::kron;
using testing::max_abs;
using testing::random_unitary;

ComplexMatrix sigma(char which) {
  ComplexMatrix s(2, 2);
  switch (which) {
    case 'x': s << 0.0, 1.0, 1.0, 0.0; break;
    case 'y': s << 0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0; break;
    case 'z': s << 1.0, 0.0, 0.0, -1.0; break;
    default: s = ComplexMatrix::Identity(2, 2);
  }
  return s;
}

TEST(Extract, IdentityGate) {
  const auto dec = extract(identity_gate(2, 2));
  EXPECT_LT(max_abs(dec.W({0, 0}) - ComplexMatrix::Identity(2, 2)), 1e-15);
  EXPECT_LT(max_abs(dec.W({1, 0})), 1e-15);
  EXPECT_LT(max_abs(dec.W({0, 1})), 1e-15);
  EXPECT_LT(max_abs(dec.W({1, 1})), 1e-15);
}

TEST(Extract, SwapIsHalfSumOfPaulis) {
  const auto dec = extract(swap_gate(2));
  EXPECT_LT(max_abs(dec.W({0, 0}) - sigma('i') / 2.0), 1e-15);
  EXPECT_LT(max_abs(dec.W({1, 0}) - sigma('x') / 2.0), 1e-15);
  EXPECT_LT(max_abs(dec.W({0, 1}) - sigma('z') / 2.0), 1e-15);
  EXPECT_LT(max_abs(dec.W({1, 1}) - sigma('y') / 2.0), 1e-15);
}

TEST(Extract, Cnot) {
  const auto dec = extract(cnot_gate());
  EXPECT_LT(max_abs(dec.W({0, 0}) - (sigma('i') + sigma('x')) / 2.0), 1e-15);
  EXPECT_LT(max_abs(dec.W({0, 1}) - (sigma('i') - sigma('x')) / 2.0), 1e-15);
  EXPECT_LT(max_abs(dec.W({1, 0})), 1e-15);
  EXPECT_LT(max_abs(dec.W({1, 1})), 1e-15);
}

TEST(Extract, GeneralizedSwapUsesDaggeredPaulis) {
  // SWAP on d x d = (1/d) sum_f Gamma(f) (x) Gamma(f)^dag.
  for (int d = 2; d <= 4; ++d) {
    const auto dec = extract(swap_gate(d));
    for (std::size_t f = 0; f < dec.operators().size(); ++f) {
      EXPECT_LT(max_abs(dec.W(f) - dec.group().gamma(f).adjoint() / static_cast<double>(d)), 1e-14);
    }
  }
}

TEST(Reconstruct, ReferenceGates) {
  EXPECT_LT(max_abs(reconstruct(extract(identity_gate(2, 2))).unitary() - ComplexMatrix::Identity(4, 4)), 1e-15);
  EXPECT_LT(max_abs(reconstruct(extract(swap_gate(2))).unitary() - swap_gate(2).unitary()), 1e-15);

  std::vector<ComplexMatrix> w(4, ComplexMatrix::Zero(2, 2));
  w[0] = ComplexMatrix::Identity(2, 2);
  EXPECT_EQ(reconstruct(PauliDecomposition(2, 2, w)).unitary(), ComplexMatrix::Identity(4, 4));
}

TEST(Reconstruct, RejectsNonUnitarySums) {
  std::vector<ComplexMatrix> w(4, ComplexMatrix::Zero(2, 2));
  w[0] = 2.0 * ComplexMatrix::Identity(2, 2);
  EXPECT_THROW(reconstruct(PauliDecomposition(2, 2, w)), Error);
}

TEST(Decomposition, RejectsWrongShapes) {
  EXPECT_THROW(PauliDecomposition(2, 2, std::vector<ComplexMatrix>(3, ComplexMatrix::Zero(2, 2))), Error);
  EXPECT_THROW(PauliDecomposition(2, 3, std::vector<ComplexMatrix>(4, ComplexMatrix::Zero(2, 2))), Error);
}

TEST(BipartiteGate, Invariants) {
  EXPECT_THROW(BipartiteGate(2, 2, ComplexMatrix::Identity(3, 3)), Error);
  EXPECT_THROW(BipartiteGate(3, 2, ComplexMatrix::Identity(6, 6)), Error);
  EXPECT_THROW(BipartiteGate(2, 2, 2.0 * ComplexMatrix::Identity(4, 4)), Error);
  ComplexMatrix nan = ComplexMatrix::Identity(4, 4);
  nan(0, 1) = std::numeric_limits<double>::quiet_NaN();
  EXPECT_THROW(BipartiteGate(2, 2, nan), Error);
}

class RandomGates : public ::testing::TestWithParam<std::pair<int, int>> {};

TEST_P(RandomGates, RoundTripParsevalAndCompleteness) {
  const auto [dA, dB] = GetParam();
  std::mt19937_64 rng(static_cast<std::uint64_t>(100 * dA + dB));
  for (int trial = 0; trial < 5; ++trial) {
    const BipartiteGate gate(dA, dB, random_unitary(dA * dB, rng));
    const auto dec = extract(gate);

    // Resum with the test's own Kronecker product.
    ComplexMatrix resum = ComplexMatrix::Zero(dA * dB, dA * dB);
    double frobenius = 0.0;
    ComplexMatrix completeness = ComplexMatrix::Zero(dB, dB);
    for (std::size_t f = 0; f < dec.operators().size(); ++f) {
      resum += kron(dec.group().gamma(f), dec.W(f));
      frobenius += dec.W(f).squaredNorm();
      completeness += dec.W(f).adjoint() * dec.W(f);
    }
    EXPECT_LT(max_abs(resum - gate.unitary()), 1e-12);
    EXPECT_LT(max_abs(reconstruct(dec).unitary() - gate.unitary()), 1e-12);
    EXPECT_NEAR(frobenius, dB, 1e-9);
    EXPECT_LT(max_abs(completeness - ComplexMatrix::Identity(dB, dB)), 1e-9);

    const auto again = extract(reconstruct(dec));
    for (std::size_t f = 0; f < dec.operators().size(); ++f) {
      EXPECT_LT(max_abs(again.W(f) - dec.W(f)), 1e-12);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Dimensions, RandomGates,
                         ::testing::Values(std::pair{2, 2}, std::pair{2, 3}, std::pair{2, 5},
                                           std::pair{3, 3}, std::pair{3, 4}, std::pair{3, 9}));

TEST(AdjointDecomposition, MatchesExtractionOfAdjoint) {
  std::mt19937_64 rng(9);
  for (auto [dA, dB] : {std::pair{2, 3}, std::pair{3, 3}, std::pair{3, 5}}) {
    const BipartiteGate gate(dA, dB, random_unitary(dA * dB, rng));
    const auto relabeled = adjoint_decomposition(extract(gate));
    const auto direct = extract(gate.adjoint());
    for (std::size_t f = 0; f < direct.operators().size(); ++f) {
      EXPECT_LT(max_abs(relabeled.W(f) - direct.W(f)), 1e-12);
    }
  }
}

TEST(OperatorSchmidtRank, ReferenceGates) {
  EXPECT_EQ(operator_schmidt_rank(extract(identity_gate(2, 2))), 1);
  EXPECT_EQ(operator_schmidt_rank(extract(cnot_gate())), 2);
  EXPECT_EQ(operator_schmidt_rank(extract(swap_gate(2))), 4);
  EXPECT_EQ(operator_schmidt_rank(extract(swap_gate(3))), 9);
  EXPECT_EQ(operator_schmidt_rank(extract(identity_gate(2, 5))), 1);
}

TEST(OperatorSchmidtRank, LocalGatesHaveRankOne) {
  std::mt19937_64 rng(10);
  const ComplexMatrix u = kron(random_unitary(3, rng), random_unitary(4, rng));
  EXPECT_EQ(operator_schmidt_rank(extract(BipartiteGate(3, 4, u))), 1);
}

}  // namespace
}  // namespace maxent
