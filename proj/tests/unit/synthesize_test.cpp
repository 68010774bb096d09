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

#include "maxent/synthesize.hpp"

#include <gtest/gtest.h>

#include "maxent/certify.hpp"
#include "test_util.hpp"

namespace maxent {
namespace {

using testing::max_abs;

ComplexVector basis(int d, int k) {
  ComplexVector v = ComplexVector::Zero(d);
  v[k] = 1.0;
  return v;
}

TEST(SwapGate, InvolutionAndPermutation) {
  for (int d : {2, 3, 5}) {
    const ComplexMatrix s = swap_gate(d).unitary();
    EXPECT_LT(max_abs(s * s - ComplexMatrix::Identity(d * d, d * d)), 1e-15);
    for (int a = 0; a < d; ++a) {
      for (int b = 0; b < d; ++b) {
        EXPECT_EQ(s(b * d + a, a * d + b), Complex(1.0));
      }
    }
    EXPECT_EQ(s.cwiseAbs().sum(), d * d);
  }
}

TEST(DoubleCnot, TruthTable) {
  const ComplexMatrix u = double_cnot_gate().unitary();
  // |a, b> -> |b, a xor b>
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      EXPECT_LT((u * basis(4, a * 2 + b) - basis(4, b * 2 + (a ^ b))).norm(), 1e-15);
    }
  }
  EXPECT_LT((u * basis(4, 2) - basis(4, 1)).norm(), 1e-15);
}

TEST(ReferenceGates, CnotAndIdentity) {
  const ComplexMatrix c = cnot_gate().unitary();
  EXPECT_LT((c * basis(4, 2) - basis(4, 3)).norm(), 1e-15);
  EXPECT_LT((c * basis(4, 1) - basis(4, 1)).norm(), 1e-15);
  const auto id = identity_gate(2, 3);
  EXPECT_EQ(id.dB(), 3);
  EXPECT_EQ(id.unitary(), ComplexMatrix::Identity(6, 6));
}

class FirstColumns : public ::testing::TestWithParam<std::tuple<int, int, std::uint64_t>> {};

TEST_P(FirstColumns, UnitaryWithPrescribedPauliImages) {
  const auto [dA, dB, seed] = GetParam();
  const auto gate = first_columns_gate({seed, dA, dB});
  EXPECT_LT(unitarity_defect(gate.unitary()), 1e-10);
  const auto dec = extract(gate);
  // Columns W(f)|0> are orthogonal with norm 1/dA.
  const int n = dA * dA;
  ComplexMatrix images(dB, n);
  for (int f = 0; f < n; ++f) images.col(f) = dec.W(f).col(0);
  EXPECT_LT(max_abs(images.adjoint() * images -
                    ComplexMatrix::Identity(n, n) / static_cast<double>(dA * dA)),
            1e-10);
  ComplexMatrix rho0 = ComplexMatrix::Zero(dB, dB);
  rho0(0, 0) = 1.0;
  EXPECT_LE(gram_deviation(dec, rho0), 1e-10);
}

INSTANTIATE_TEST_SUITE_P(Dims, FirstColumns,
                         ::testing::Values(std::tuple{2, 4, 0u}, std::tuple{2, 4, 9u},
                                           std::tuple{2, 5, 3u}, std::tuple{2, 7, 1u},
                                           std::tuple{3, 9, 2u}, std::tuple{3, 10, 5u}));

TEST(FirstColumns, RejectsSmallEnvironment) {
  EXPECT_THROW(first_columns_gate({0, 2, 3}), Error);
  EXPECT_THROW(first_columns_gate({0, 3, 8}), Error);
}

TEST(FirstColumns, DeterministicAndSeedSensitive) {
  EXPECT_EQ(first_columns_gate({11, 2, 4}).unitary(), first_columns_gate({11, 2, 4}).unitary());
  EXPECT_GT(max_abs(first_columns_gate({11, 2, 4}).unitary() -
                    first_columns_gate({12, 2, 4}).unitary()),
            1e-3);
}

TEST(HaarRandom, UnitaryAndDeterministic) {
  for (auto [dA, dB] : {std::pair{2, 2}, std::pair{2, 5}, std::pair{3, 4}}) {
    const auto g = haar_random_gate(dA, dB, 8);
    EXPECT_LT(unitarity_defect(g.unitary()), 1e-10);
    EXPECT_EQ(g.unitary(), haar_random_gate(dA, dB, 8).unitary());
  }
}

TEST(HaarRandom, NeverCertified) {
  int certified = 0;
  for (std::uint64_t seed = 100; seed < 120; ++seed) {
    if (certify(haar_random_gate(2, 2, seed)).status == CertificateStatus::kCertified) ++certified;
  }
  EXPECT_EQ(certified, 0);
}

}  // namespace
}  // namespace maxent
