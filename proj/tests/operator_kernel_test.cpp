// Copyright 2026 The ringcasimir Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "oracles.hpp"
#include "ringcasimir/errors.hpp"
#include "ringcasimir/operator_kernel.hpp"

namespace ringcasimir {
namespace {

TEST(OperatorKernel, PaulisSquareToIdentity) {
  for (const auto& p : {ops::pauli_x(), ops::pauli_y(), ops::pauli_z()}) {
    EXPECT_LT((p * p - ops::identity(2)).norm(), 1e-15);
  }
  EXPECT_LT((ops::pauli_x() * ops::pauli_y() - Complex(0, 1) * ops::pauli_z()).norm(), 1e-15);
}

TEST(OperatorKernel, BosonLadderMatchesTruncatedOscillator) {
  const ComplexMatrix a = ops::ladder_matrix(ops::LadderKind::BosonLower4);
  ASSERT_EQ(a.rows(), 4);
  EXPECT_DOUBLE_EQ(a(0, 1).real(), 1.0);
  EXPECT_DOUBLE_EQ(a(1, 2).real(), std::sqrt(2.0));
  EXPECT_DOUBLE_EQ(a(2, 3).real(), std::sqrt(3.0));
  const ComplexMatrix n = a.adjoint() * a;
  for (int k = 0; k < 4; ++k) EXPECT_NEAR(n(k, k).real(), k, 1e-14);
}

TEST(OperatorKernel, KronChainOrderPutsFirstFactorMostSignificant) {
  const std::vector<ComplexMatrix> f{ops::pauli_x(), ops::identity(2)};
  const ComplexMatrix m = ops::kron_chain(f);
  // X on the leading slot flips index bit 1.
  EXPECT_EQ(m(2, 0), Complex(1, 0));
  EXPECT_EQ(m(0, 2), Complex(1, 0));
  EXPECT_EQ(m(1, 0), Complex(0, 0));
}

TEST(OperatorKernel, KronChainRespectsCap) {
  const std::vector<ComplexMatrix> f(5, ops::identity(2));
  EXPECT_THROW(ops::kron_chain(f, 16), CapacityError);
  EXPECT_NO_THROW(ops::kron_chain(f, 32));
}

TEST(OperatorKernel, FermionOperatorsAnticommute) {
  const int n = 3;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      const ComplexMatrix ci = ops::fermion_lower(i, n);
      const ComplexMatrix cj = ops::fermion_lower(j, n);
      const ComplexMatrix anti = ci * cj.adjoint() + cj.adjoint() * ci;
      const ComplexMatrix expected = i == j ? ops::identity(8) : ComplexMatrix::Zero(8, 8);
      EXPECT_LT((anti - expected).norm(), 1e-14) << i << "," << j;
      EXPECT_LT((ci * cj + cj * ci).norm(), 1e-14);
    }
  }
}

TEST(OperatorKernel, BosonOperatorsOnDistinctModesCommute) {
  const ComplexMatrix a1 = ops::boson_lower(1, 2);
  const ComplexMatrix a2 = ops::boson_lower(2, 2);
  EXPECT_LT((a1 * a2.adjoint() - a2.adjoint() * a1).norm(), 1e-13);
}

TEST(OperatorKernel, ModeIndexOutOfRangeIsRejected) {
  EXPECT_THROW(ops::fermion_lower(0, 2), ArgumentError);
  EXPECT_THROW(ops::boson_lower(3, 2), ArgumentError);
}

TEST(OperatorKernel, HermitianEigenMatchesCharacteristicRoots) {
  ComplexMatrix m(2, 2);
  m << Complex(1, 0), Complex(0, -2), Complex(0, 2), Complex(-1, 0);
  const auto eig = ops::hermitian_eigen(m, true);
  ASSERT_EQ(eig.values.size(), 2u);
  EXPECT_NEAR(eig.values[0], -std::sqrt(5.0), 1e-13);
  EXPECT_NEAR(eig.values[1], std::sqrt(5.0), 1e-13);
  ASSERT_TRUE(eig.vectors.has_value());
  const ComplexVector v = eig.vectors->col(0);
  EXPECT_LT((m * v - eig.values[0] * v).norm(), 1e-12);
}

TEST(OperatorKernel, NonHermitianInputIsRejected) {
  EXPECT_THROW(ops::hermitian_eigen(ops::ladder_matrix(ops::LadderKind::FermionLower)),
               ValidationError);
  EXPECT_TRUE(std::isinf(ops::hermitian_deviation(ComplexMatrix::Zero(2, 3))));
}

TEST(OperatorKernel, RandomHermitianSpectrumTracesAgree) {
  const ComplexMatrix h = testing::random_hermitian(16, 7);
  const auto eig = ops::hermitian_eigen(h);
  double sum = 0.0;
  for (double v : eig.values) sum += v;
  EXPECT_NEAR(sum, h.trace().real(), 1e-11);
}

}  // namespace
}  // namespace ringcasimir
