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

#include "ringcasimir/statevector.hpp"

#include <cmath>
#include <cstdint>

#include "ringcasimir/errors.hpp"

namespace ringcasimir::sim {
namespace {

std::uint64_t bit_of(int qubits, int q) {
  if (q < 0 || q >= qubits) throw ArgumentError("qubit index " + std::to_string(q) + " out of range");
  return std::uint64_t{1} << (qubits - 1 - q);
}

}  // namespace

ComplexVector zero_state(int qubits) { return basis_state(qubits, 0); }

ComplexVector basis_state(int qubits, std::uint64_t index) {
  if (qubits < 1 || qubits > 30) throw ArgumentError("statevector qubit count out of range");
  ComplexVector v = ComplexVector::Zero(Eigen::Index{1} << qubits);
  v[static_cast<Eigen::Index>(index)] = 1.0;
  return v;
}

void apply_ry(ComplexVector& state, int qubits, int target, double theta) {
  const std::uint64_t bit = bit_of(qubits, target);
  const double c = std::cos(0.5 * theta);
  const double s = std::sin(0.5 * theta);
  for (std::uint64_t b = 0; b < static_cast<std::uint64_t>(state.size()); ++b) {
    if (b & bit) continue;
    const auto i0 = static_cast<Eigen::Index>(b);
    const auto i1 = static_cast<Eigen::Index>(b | bit);
    const Complex a0 = state[i0];
    const Complex a1 = state[i1];
    state[i0] = c * a0 - s * a1;
    state[i1] = s * a0 + c * a1;
  }
}

void apply_rz(ComplexVector& state, int qubits, int target, double theta) {
  const std::uint64_t bit = bit_of(qubits, target);
  const Complex down = std::polar(1.0, -0.5 * theta);
  const Complex up = std::polar(1.0, 0.5 * theta);
  for (std::uint64_t b = 0; b < static_cast<std::uint64_t>(state.size()); ++b) {
    state[static_cast<Eigen::Index>(b)] *= (b & bit) ? up : down;
  }
}

void apply_x(ComplexVector& state, int qubits, int target) {
  const std::uint64_t bit = bit_of(qubits, target);
  for (std::uint64_t b = 0; b < static_cast<std::uint64_t>(state.size()); ++b) {
    if (!(b & bit)) std::swap(state[static_cast<Eigen::Index>(b)], state[static_cast<Eigen::Index>(b | bit)]);
  }
}

void apply_cz(ComplexVector& state, int qubits, int a, int b) {
  const std::uint64_t mask = bit_of(qubits, a) | bit_of(qubits, b);
  for (std::uint64_t k = 0; k < static_cast<std::uint64_t>(state.size()); ++k) {
    if ((k & mask) == mask) state[static_cast<Eigen::Index>(k)] = -state[static_cast<Eigen::Index>(k)];
  }
}

void apply_givens(ComplexVector& state, int qubits, int q, double theta, double phi) {
  const std::uint64_t hi = bit_of(qubits, q);
  const std::uint64_t lo = bit_of(qubits, q + 1);
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const Complex e = std::polar(1.0, phi);
  for (std::uint64_t k = 0; k < static_cast<std::uint64_t>(state.size()); ++k) {
    if ((k & hi) || (k & lo)) continue;
    const auto i01 = static_cast<Eigen::Index>(k | lo);
    const auto i10 = static_cast<Eigen::Index>(k | hi);
    const Complex a01 = state[i01];
    const Complex a10 = state[i10];
    state[i01] = c * a01 - std::conj(e) * s * a10;
    state[i10] = e * s * a01 + c * a10;
  }
}

}  // namespace ringcasimir::sim
