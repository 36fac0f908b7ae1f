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

#include "ringcasimir/operator_kernel.hpp"

#include <cmath>
#include <limits>
#include <string>

#include <Eigen/Eigenvalues>

#include "ringcasimir/errors.hpp"

namespace ringcasimir::ops {

ComplexMatrix identity(std::size_t dim) {
  return ComplexMatrix::Identity(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
}

ComplexMatrix pauli_x() {
  ComplexMatrix m(2, 2);
  m << 0.0, 1.0, 1.0, 0.0;
  return m;
}

ComplexMatrix pauli_y() {
  ComplexMatrix m(2, 2);
  m << 0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0;
  return m;
}

ComplexMatrix pauli_z() {
  ComplexMatrix m(2, 2);
  m << 1.0, 0.0, 0.0, -1.0;
  return m;
}

ComplexMatrix ladder_matrix(LadderKind kind) {
  switch (kind) {
    case LadderKind::BosonLower4: {
      ComplexMatrix a = ComplexMatrix::Zero(4, 4);
      a(0, 1) = 1.0;
      a(1, 2) = std::sqrt(2.0);
      a(2, 3) = std::sqrt(3.0);
      return a;
    }
    case LadderKind::FermionLower: {
      ComplexMatrix c = ComplexMatrix::Zero(2, 2);
      c(0, 1) = 1.0;
      return c;
    }
  }
  throw ArgumentError("unknown ladder kind");
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

ComplexMatrix kron_chain(std::span<const ComplexMatrix> factors, std::size_t max_dimension) {
  if (factors.empty()) {
    throw ArgumentError("kron_chain: empty factor list");
  }
  std::size_t dim = 1;
  for (const auto& f : factors) {
    if (f.rows() != f.cols() || f.rows() == 0) {
      throw ArgumentError("kron_chain: factors must be non-empty square matrices");
    }
    const auto d = static_cast<std::size_t>(f.rows());
    if (dim > max_dimension / d) {
      throw CapacityError("kron_chain: dimension exceeds cap of " + std::to_string(max_dimension));
    }
    dim *= d;
  }
  ComplexMatrix out = factors.front();
  for (std::size_t k = 1; k < factors.size(); ++k) {
    out = kron(out, factors[k]);
  }
  return out;
}

namespace {

ComplexMatrix embed(const ComplexMatrix& local, const ComplexMatrix& before,
                    std::size_t before_count, std::size_t after_count) {
  std::vector<ComplexMatrix> factors;
  factors.reserve(before_count + 1 + after_count);
  for (std::size_t k = 0; k < before_count; ++k) factors.push_back(before);
  factors.push_back(local);
  const ComplexMatrix id = identity(static_cast<std::size_t>(local.rows()));
  for (std::size_t k = 0; k < after_count; ++k) factors.push_back(id);
  return kron_chain(factors);
}

void check_mode(int mode, int n_modes, const char* who) {
  if (n_modes < 1 || mode < 1 || mode > n_modes) {
    throw ArgumentError(std::string(who) + ": mode " + std::to_string(mode) +
                        " outside 1.." + std::to_string(n_modes));
  }
}

}  // namespace

ComplexMatrix boson_lower(int mode, int n_modes) {
  check_mode(mode, n_modes, "boson_lower");
  return embed(ladder_matrix(LadderKind::BosonLower4), identity(4),
               static_cast<std::size_t>(mode - 1), static_cast<std::size_t>(n_modes - mode));
}

ComplexMatrix fermion_lower(int mode, int n_modes) {
  check_mode(mode, n_modes, "fermion_lower");
  return embed(ladder_matrix(LadderKind::FermionLower), pauli_z(),
               static_cast<std::size_t>(mode - 1), static_cast<std::size_t>(n_modes - mode));
}

double hermitian_deviation(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) return std::numeric_limits<double>::infinity();
  double worst = 0.0;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = i; j < m.cols(); ++j) {
      worst = std::max(worst, std::abs(m(i, j) - std::conj(m(j, i))));
    }
  }
  return worst;
}

EigenDecomposition hermitian_eigen(const ComplexMatrix& m, bool with_vectors) {
  if (m.rows() == 0 || m.rows() != m.cols()) {
    throw ArgumentError("hermitian_eigen: matrix must be square and non-empty");
  }
  const double dev = hermitian_deviation(m);
  if (!(dev <= kHermitianTolerance)) {
    throw ValidationError("hermitian_eigen: matrix is not Hermitian (max |M - M^H| = " +
                          std::to_string(dev) + ")");
  }
  // Eigen reads only the lower triangle; symmetrize so both halves count.
  const ComplexMatrix h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(
      h, with_vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw ValidationError("hermitian_eigen: eigensolver did not converge");
  }
  EigenDecomposition out;
  out.values.assign(solver.eigenvalues().data(),
                    solver.eigenvalues().data() + solver.eigenvalues().size());
  if (with_vectors) out.vectors = solver.eigenvectors();
  return out;
}

}  // namespace ringcasimir::ops
