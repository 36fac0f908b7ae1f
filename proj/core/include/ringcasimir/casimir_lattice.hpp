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

// Free boson and fermion fields on a ring: normal-mode frequencies,
// regularized mode sums, subtraction constants and the assembled qubit
// Hamiltonians for the four (statistics, boundary) families.
//
// Energies are in the dimensionless lattice units fixed by the prefactors
// 8/(2N+1) (bosons) and 32/(2N+1) (fermions).

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ringcasimir/hamiltonian.hpp"
#include "ringcasimir/operator_kernel.hpp"

namespace ringcasimir::lattice {

enum class Statistics { Boson, Fermion, Combined };
enum class Boundary { Periodic, Twisted };

/// Largest register build_ring_hamiltonian will assemble.
inline constexpr int kMaxRingQubits = 16;

struct ModeFamily {
  Statistics statistics = Statistics::Boson;
  Boundary boundary = Boundary::Periodic;
  int sites = 1;  // modes kept per field, N >= 1

  friend bool operator==(const ModeFamily&, const ModeFamily&) = default;
};

/// "boson-periodic", "fermion-twisted", "combined-periodic", ...
std::string family_name(Statistics s, Boundary b);
std::optional<std::pair<Statistics, Boundary>> parse_family_name(std::string_view name);

/// Number of modes in the family: N, or 2N for Combined (bosons 1..N first,
/// then fermions N+1..2N).
int mode_count(const ModeFamily& f);

/// Statistics of mode `i` (1-based) in the family's mode list.
Statistics mode_statistics(const ModeFamily& f, int i);

/// Frequency of mode `i` (1-based): s * 2 sin(theta_i) with s = 8/(2N+1)
/// or 32/(2N+1), theta_i = 2 pi i/(4N+2) or 2 pi (i + 1/2)/(4N+2).
double mode_frequency(const ModeFamily& f, int i);

/// Signed constant added to the raw mode sum: -8/pi, +32/pi, +24/pi.
double subtraction_constant(Statistics s);

/// +1/2 sum of boson frequencies, -1/2 sum of fermion frequencies.
double mode_sum_energy(const ModeFamily& f);

/// mode_sum_energy + subtraction_constant.
double casimir_exact(const ModeFamily& f);

/// Large-N expansion truncated at 1/N^order, order in {2, 3, 4}.
double large_n_series(const ModeFamily& f, int order);

/// Continuum Casimir energy density on a circle of radius `radius`.
double continuum_density(const ModeFamily& f, double radius);

/// omega_i (a^dag a + 1/2) on 2 qubits for a boson mode, omega_i (c^dag c - 1/2)
/// on 1 qubit for a fermion mode.
HamiltonianSpec build_mode_hamiltonian(const ModeFamily& f, int i);

/// Sum of all mode Hamiltonians on one register (2 qubits per boson mode,
/// 1 per fermion mode, bosons first). Dense up to kMaxDenseQubits,
/// diagonal storage beyond that; CapacityError above kMaxRingQubits.
HamiltonianSpec build_ring_hamiltonian(const ModeFamily& f);

int ring_qubits(const ModeFamily& f);

/// Number of Pauli terms (identity included) of the ring Hamiltonian with
/// coefficients above `drop_tol`.
std::size_t term_count(const ModeFamily& f, double drop_tol = pauli::kDefaultDropTolerance);

/// (2N+1)x(2N+1) second-difference matrix of a scalar ring; corners -1 for
/// periodic, +1 for twisted.
ComplexMatrix coupling_matrix(int sites, Boundary b);

/// (s/2) sqrt(eig) for the coupling matrix, ascending. These are the ring's
/// normal-mode frequencies: each omega_i twice, plus 0 when periodic.
std::vector<double> fourier_frequencies(int sites, Boundary b, Statistics s);

}  // namespace ringcasimir::lattice
