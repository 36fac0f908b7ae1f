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

// Variational quantum eigensolver on an exact statevector, plus the
// mode-by-mode ("partitioned") Casimir pipeline.

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "ringcasimir/casimir_lattice.hpp"
#include "ringcasimir/hamiltonian.hpp"
#include "ringcasimir/optimizers.hpp"

namespace ringcasimir::vqe {

/// Largest register run_vqe simulates.
inline constexpr int kMaxVqeQubits = 12;

enum class AnsatzKind {
  // RY layer, then `depth` x (CZ chain + RY layer). Real amplitudes.
  HardwareEfficient,
  // Fixed-particle reference |1..10..0> followed by `depth` brick-wall layers
  // of Givens rotations (two angles each). Reaches any Slater determinant for
  // depth >= ceil(qubits / 2).
  NumberConserving,
};

const char* ansatz_name(AnsatzKind k);

struct VqeConfig {
  int depth = 1;
  OptimizerKind optimizer = OptimizerKind::LinearApprox;
  int max_iterations = 500;
  double tolerance = 1e-8;
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> shots;  // absent: exact expectation values
  AnsatzKind ansatz = AnsatzKind::HardwareEfficient;
  // NumberConserving only: particle number of the reference state. Absent:
  // every sector is tried and the lowest result kept.
  std::optional<int> particles;

  /// Throws ArgumentError on depth < 0, max_iterations < 1, tolerance <= 0,
  /// shots == 0.
  void validate() const;
};

struct VqeResult {
  double energy = 0.0;
  std::vector<double> parameters;
  std::vector<TracePoint> trace;
  int iterations = 0;
  int evaluations = 0;
  bool converged = false;
  std::optional<int> particles;  // sector of the winning run, NumberConserving only
};

int ansatz_parameter_count(int qubits, int depth);

/// Hardware-efficient state. `parameters` must hold qubits * (depth + 1) angles.
ComplexVector ansatz_state(std::span<const double> parameters, int qubits, int depth);

int number_conserving_parameter_count(int qubits, int depth);

ComplexVector number_conserving_state(std::span<const double> parameters, int qubits,
                                      int particles, int depth);

/// Estimate of <state|p|state> from `shots` simulated measurements per term.
double sampled_expectation(const pauli::PauliSum& p, const ComplexVector& state,
                           std::uint64_t shots, std::mt19937_64& rng);

VqeResult run_vqe(const HamiltonianSpec& h, const VqeConfig& cfg);

/// 100 (vqe - exact) / exact; 0 when both vanish.
double percent_difference(double vqe_energy, double exact_energy);

struct CasimirReport {
  lattice::ModeFamily family;
  double exact_energy = 0.0;
  double vqe_energy = 0.0;
  double percent_difference = 0.0;
  std::vector<double> per_mode_energies;
  double subtraction = 0.0;
  int iterations = 0;   // summed over modes
  int evaluations = 0;  // summed over modes
  bool converged = false;
  // Sum over modes of each mode's best-so-far energy, plus the subtraction.
  std::vector<TracePoint> trace;
};

/// One VQE per mode Hamiltonian (mode i uses seed cfg.seed + i), summed and
/// corrected with the family's subtraction constant. Modes run concurrently;
/// the reduction is in mode order.
CasimirReport partitioned_run(const lattice::ModeFamily& family, const VqeConfig& cfg);

}  // namespace ringcasimir::vqe
