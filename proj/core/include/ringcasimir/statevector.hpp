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

// Gate kernels for an exact statevector. Qubit 0 is the most significant bit
// of the basis index, the same slot as the leftmost Pauli letter.

#include <span>

#include "ringcasimir/operator_kernel.hpp"

namespace ringcasimir::sim {

/// |0...0> on `qubits` qubits.
ComplexVector zero_state(int qubits);

/// Basis state |index>.
ComplexVector basis_state(int qubits, std::uint64_t index);

/// exp(-i theta Y / 2).
void apply_ry(ComplexVector& state, int qubits, int target, double theta);

/// exp(-i theta Z / 2).
void apply_rz(ComplexVector& state, int qubits, int target, double theta);

void apply_x(ComplexVector& state, int qubits, int target);

/// Controlled phase of -1 on |11>.
void apply_cz(ComplexVector& state, int qubits, int a, int b);

/// Particle-conserving rotation on adjacent qubits (q, q+1):
///   |01> -> cos(theta)|01> + e^{i phi} sin(theta)|10>
///   |10> -> cos(theta)|10> - e^{-i phi} sin(theta)|01>
void apply_givens(ComplexVector& state, int qubits, int q, double theta, double phi);

}  // namespace ringcasimir::sim
