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

// Chiral lattice fermion on a ring via an eta-deformed Wilson Hamiltonian.
//
// The single-particle matrix acts on psi = (c_1..c_L, ct_1..ct_L):
//
//   t = scale * [[ A,  B     ],
//                [ B^dag, -eta A ]]
//
// A is the antisymmetric hopping block (a(p) = 2 sin p in momentum space),
// B the Wilson term (b(p) = 2 - 2 cos p). eta = 1 is the ordinary Wilson
// fermion; eta > 1 lifts the left movers.

#include <vector>

#include "ringcasimir/hamiltonian.hpp"
#include "ringcasimir/operator_kernel.hpp"

namespace ringcasimir::chiral {

/// Modes with |lambda| below this count as zero modes and stay empty.
inline constexpr double kZeroModeTolerance = 1e-12;

/// Largest 2L for which jw_hamiltonian builds a qubit operator.
inline constexpr int kMaxJordanWignerQubits = 12;

struct ChiralSystem {
  int sites = 2;      // L >= 2; t is 2L x 2L
  double eta = 1.0;   // >= 1
  double scale = 1.0; // > 0

  void validate() const;
};

/// L x L hopping block: -i on the superdiagonal, +i on the subdiagonal,
/// A[0][L-1] = +i, A[L-1][0] = -i.
ComplexMatrix build_A(int sites);

/// L x L Wilson block: 2 on the diagonal, -1 on both neighbours (periodic).
ComplexMatrix build_B(int sites);

ComplexMatrix build_t(const ChiralSystem& system);

enum class Mover { Right, Left, Zero, Doubler };

struct DispersionPoint {
  double momentum = 0.0;
  double lambda_minus = 0.0;
  double lambda_plus = 0.0;
};

/// Eigenvalues of scale * [[a, b], [b, -eta a]] with a = 2 sin p, b = 2 - 2 cos p.
DispersionPoint dispersion(double momentum, double eta, double scale = 1.0);

/// Branch values at p_k = 2 pi k / L, k = 0..L-1.
std::vector<DispersionPoint> dispersion_table(const ChiralSystem& system);

/// Right movers have lambda * sin(p) > 0, left movers lambda * sin(p) < 0.
/// p = 0 is the massless point and p = pi the Wilson-lifted doubler.
Mover classify(double momentum, double lambda);

struct GapSummary {
  double min_left = 0.0;   // smallest |lambda| over left-mover branch values
  double max_right = 0.0;  // largest |lambda| over right movers and the doubler
};

/// Excitation-energy comparison of the two chiralities on the table's momenta.
GapSummary chirality_gap(const ChiralSystem& system);

/// Sum of the negative eigenvalues of a Hermitian single-particle matrix.
double dirac_sea_energy(const ComplexMatrix& t);

/// (1/2 pi) * integral over [0, 2 pi] of the lower branch (scale 1): the
/// extensive per-site part of the Dirac-sea energy.
double bulk_density(double eta);

/// dirac_sea_energy(build_t(system)) - subtraction.
double chiral_casimir(const ChiralSystem& system, double subtraction);

/// Continuum Casimir energy of one chiral fermion on a circle of radius
/// L / 2: 2 pi / (6 (L/2)^2).
double continuum_target(int sites);

/// sum_jk t_jk c^dag_j c_k over 2L Jordan-Wigner qubits, as a Pauli sum.
HamiltonianSpec jw_hamiltonian(const ComplexMatrix& t);

/// Exact many-body ground energy of jw_hamiltonian(t) by number-sector
/// diagonalization, independent of the single-particle filling.
double many_body_ground_energy(const ComplexMatrix& t);

/// Reference values the normalization is calibrated against.
inline constexpr int kReferenceSites = 14;
inline constexpr double kReferenceEta = 10.0;
inline constexpr double kReferenceGroundEnergy = -5.55433587;
inline constexpr double kReferenceSubtraction = -5.57571769;

/// Frozen result of calibrate_scale at the reference point: the overall
/// normalization is kCalibratedScaleConstant / L.
inline constexpr double kCalibratedScaleConstant = 0.74001080054006552;

struct ScaleCalibration {
  double constant = 0.0;  // scale = constant / sites
  double scale = 0.0;
  double raw_ground_energy = 0.0;  // Dirac sea at scale 1
  double residual = 0.0;           // calibrated sea minus target
};

/// Finds the constant c with scale = c / sites that makes the Dirac-sea
/// energy of (sites, eta) equal `target`. Throws ValidationError if no
/// positive constant exists (raw sea energy with the wrong sign or zero).
ScaleCalibration calibrate_scale(int sites, double eta, double target);

}  // namespace ringcasimir::chiral
