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

#include <string>
#include <variant>
#include <vector>

#include "ringcasimir/operator_kernel.hpp"
#include "ringcasimir/pauli_algebra.hpp"

namespace ringcasimir {

/// Largest register stored as a dense matrix. Bigger diagonal operators are
/// kept as their diagonal.
inline constexpr int kMaxDenseQubits = 10;

/// Real diagonal operator in the computational basis.
struct DiagonalOperator {
  std::vector<double> entries;
};

/// A qubit Hamiltonian together with a note on where it came from.
class HamiltonianSpec {
 public:
  using Representation = std::variant<ComplexMatrix, DiagonalOperator, pauli::PauliSum>;

  /// Validates dimensions against `qubits`; dense input must be Hermitian.
  HamiltonianSpec(int qubits, Representation rep, std::string provenance);

  int qubits() const { return qubits_; }
  const Representation& representation() const { return rep_; }
  const std::string& provenance() const { return provenance_; }

  bool is_dense() const { return std::holds_alternative<ComplexMatrix>(rep_); }
  bool is_diagonal() const { return std::holds_alternative<DiagonalOperator>(rep_); }
  bool is_pauli() const { return std::holds_alternative<pauli::PauliSum>(rep_); }

 private:
  int qubits_;
  Representation rep_;
  std::string provenance_;
};

pauli::PauliSum to_pauli(const HamiltonianSpec& h, double drop_tol = pauli::kDefaultDropTolerance);

/// Dense matrix; throws CapacityError above kMaxDenseQubits.
ComplexMatrix to_dense(const HamiltonianSpec& h);

/// Lowest eigenvalue, computed exactly. Diagonal operators take the minimum
/// entry; non-diagonal Pauli sums above kMaxDenseQubits must conserve the
/// number of set qubits (see sector_ground_energy).
double ground_energy(const HamiltonianSpec& h);

/// Lowest eigenvalue of a Pauli sum that commutes with the total
/// number operator, found by diagonalizing each Hamming-weight sector.
/// Throws ValidationError if the operator mixes sectors.
double sector_ground_energy(const pauli::PauliSum& p);

}  // namespace ringcasimir
