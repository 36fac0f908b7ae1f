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

#pragma once

// Dense complex linear algebra and second-quantized operators.
//
// Tensor ordering: the first factor of a Kronecker chain (mode 1, qubit 0)
// occupies the most significant slot of the basis index.

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace ringcasimir {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

namespace ops {

/// Largest dimension kron_chain will produce unless told otherwise.
inline constexpr std::size_t kDefaultDimensionCap = std::size_t{1} << 20;

/// Absolute entry-wise tolerance for Hermiticity checks.
inline constexpr double kHermitianTolerance = 1e-10;

enum class LadderKind {
  BosonLower4,   // 4-level truncated oscillator, superdiagonal (1, sqrt2, sqrt3)
  FermionLower,  // [[0, 1], [0, 0]]
};

ComplexMatrix identity(std::size_t dim);
ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();

/// The bare single-mode lowering matrix.
ComplexMatrix ladder_matrix(LadderKind kind);

/// Kronecker product of `factors` in list order.
ComplexMatrix kron_chain(std::span<const ComplexMatrix> factors,
                         std::size_t max_dimension = kDefaultDimensionCap);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Lowering operator of boson `mode` (1-based) among `n_modes` 4-level modes.
ComplexMatrix boson_lower(int mode, int n_modes);

/// Jordan-Wigner lowering operator of fermion `mode` (1-based) among
/// `n_modes`. Modes before `mode` carry a Z string.
ComplexMatrix fermion_lower(int mode, int n_modes);

/// max_ij |m_ij - conj(m_ji)|. Non-square input returns +inf.
double hermitian_deviation(const ComplexMatrix& m);

struct EigenDecomposition {
  std::vector<double> values;            // ascending
  std::optional<ComplexMatrix> vectors;  // columns, same order as values
};

/// Eigendecomposition of a Hermitian matrix. Throws ValidationError when the
/// input deviates from Hermitian by more than kHermitianTolerance.
EigenDecomposition hermitian_eigen(const ComplexMatrix& m, bool with_vectors = false);

}  // namespace ops
}  // namespace ringcasimir
