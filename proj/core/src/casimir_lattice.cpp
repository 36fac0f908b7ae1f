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

#include "ringcasimir/casimir_lattice.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "ringcasimir/errors.hpp"

namespace ringcasimir::lattice {
namespace {

using std::numbers::pi;

void check_family(const ModeFamily& f) {
  if (f.sites < 1) throw ArgumentError("mode family needs sites >= 1, got " + std::to_string(f.sites));
}

double prefactor(Statistics s, int sites) {
  const double base = (s == Statistics::Boson) ? 8.0 : 32.0;
  return base / (2.0 * sites + 1.0);
}

// Raw frequency of a pure boson or fermion mode.
double frequency(Statistics s, Boundary b, int sites, double index) {
  const double shift = (b == Boundary::Twisted) ? 0.5 : 0.0;
  const double theta = 2.0 * pi * (index + shift) / (4.0 * sites + 2.0);
  return prefactor(s, sites) * 2.0 * std::sin(theta);
}

// Leading coefficients of the boson large-N expansion, 1/N^2 .. 1/N^4.
std::array<double, 3> boson_series_coefficients(Boundary b) {
  if (b == Boundary::Periodic) {
    return {-pi / 6.0, pi / 6.0, -(180.0 * pi + pi * pi * pi) / 1440.0};
  }
  return {pi / 12.0, -pi / 12.0, pi / 16.0 - 7.0 * pi * pi * pi / 11520.0};
}

double statistics_weight(Statistics s) {
  switch (s) {
    case Statistics::Boson: return 1.0;
    case Statistics::Fermion: return -4.0;
    case Statistics::Combined: return -3.0;
  }
  return 0.0;
}

std::string mode_label(const ModeFamily& f) {
  return family_name(f.statistics, f.boundary) + " N=" + std::to_string(f.sites);
}

ComplexMatrix local_mode_operator(Statistics s, double omega) {
  if (s == Statistics::Boson) {
    const ComplexMatrix a = ops::ladder_matrix(ops::LadderKind::BosonLower4);
    return omega * (a.adjoint() * a + 0.5 * ops::identity(4));
  }
  const ComplexMatrix c = ops::ladder_matrix(ops::LadderKind::FermionLower);
  return omega * (c.adjoint() * c - 0.5 * ops::identity(2));
}

}  // namespace

std::string family_name(Statistics s, Boundary b) {
  std::string out;
  switch (s) {
    case Statistics::Boson: out = "boson"; break;
    case Statistics::Fermion: out = "fermion"; break;
    case Statistics::Combined: out = "combined"; break;
  }
  return out + (b == Boundary::Periodic ? "-periodic" : "-twisted");
}

std::optional<std::pair<Statistics, Boundary>> parse_family_name(std::string_view name) {
  for (auto s : {Statistics::Boson, Statistics::Fermion, Statistics::Combined}) {
    for (auto b : {Boundary::Periodic, Boundary::Twisted}) {
      if (family_name(s, b) == name) return std::pair{s, b};
    }
  }
  return std::nullopt;
}

int mode_count(const ModeFamily& f) {
  check_family(f);
  return f.statistics == Statistics::Combined ? 2 * f.sites : f.sites;
}

Statistics mode_statistics(const ModeFamily& f, int i) {
  const int count = mode_count(f);
  if (i < 1 || i > count) {
    throw ArgumentError("mode index " + std::to_string(i) + " outside 1.." + std::to_string(count));
  }
  if (f.statistics != Statistics::Combined) return f.statistics;
  return i <= f.sites ? Statistics::Boson : Statistics::Fermion;
}

double mode_frequency(const ModeFamily& f, int i) {
  const Statistics s = mode_statistics(f, i);
  const int local = (f.statistics == Statistics::Combined && i > f.sites) ? i - f.sites : i;
  return frequency(s, f.boundary, f.sites, local);
}

double subtraction_constant(Statistics s) {
  switch (s) {
    case Statistics::Boson: return -8.0 / pi;
    case Statistics::Fermion: return 32.0 / pi;
    case Statistics::Combined: return 24.0 / pi;
  }
  return 0.0;
}

double mode_sum_energy(const ModeFamily& f) {
  double total = 0.0;
  for (int i = 1; i <= mode_count(f); ++i) {
    const double sign = mode_statistics(f, i) == Statistics::Boson ? 0.5 : -0.5;
    total += sign * mode_frequency(f, i);
  }
  return total;
}

double casimir_exact(const ModeFamily& f) {
  return mode_sum_energy(f) + subtraction_constant(f.statistics);
}

double large_n_series(const ModeFamily& f, int order) {
  check_family(f);
  if (order < 2 || order > 4) {
    throw ArgumentError("large_n_series: order must be 2, 3 or 4 (got " + std::to_string(order) + ")");
  }
  const auto coeff = boson_series_coefficients(f.boundary);
  const double n = f.sites;
  double total = 0.0;
  for (int k = 2; k <= order; ++k) total += coeff[static_cast<std::size_t>(k - 2)] / std::pow(n, k);
  return statistics_weight(f.statistics) * total;
}

double continuum_density(const ModeFamily& f, double radius) {
  if (!(radius > 0.0)) throw ArgumentError("continuum_density: radius must be positive");
  const double boson = (f.boundary == Boundary::Periodic ? -pi / 6.0 : pi / 12.0) / (radius * radius);
  return statistics_weight(f.statistics) * boson;
}

HamiltonianSpec build_mode_hamiltonian(const ModeFamily& f, int i) {
  const Statistics s = mode_statistics(f, i);
  const double omega = mode_frequency(f, i);
  const int qubits = s == Statistics::Boson ? 2 : 1;
  return HamiltonianSpec(qubits, local_mode_operator(s, omega),
                         mode_label(f) + " mode " + std::to_string(i));
}

int ring_qubits(const ModeFamily& f) {
  check_family(f);
  switch (f.statistics) {
    case Statistics::Boson: return 2 * f.sites;
    case Statistics::Fermion: return f.sites;
    case Statistics::Combined: return 3 * f.sites;
  }
  return 0;
}

HamiltonianSpec build_ring_hamiltonian(const ModeFamily& f) {
  const int qubits = ring_qubits(f);
  if (qubits > kMaxRingQubits) {
    throw CapacityError("ring Hamiltonian for " + mode_label(f) + " needs " + std::to_string(qubits) +
                        " qubits (limit " + std::to_string(kMaxRingQubits) +
                        "); run it mode by mode with partitioned_run instead");
  }
  const int modes = mode_count(f);
  std::vector<int> slot_dims;
  for (int i = 1; i <= modes; ++i) slot_dims.push_back(mode_statistics(f, i) == Statistics::Boson ? 4 : 2);

  if (qubits <= kMaxDenseQubits) {
    const auto dim = Eigen::Index{1} << qubits;
    ComplexMatrix h = ComplexMatrix::Zero(dim, dim);
    std::vector<ComplexMatrix> factors(static_cast<std::size_t>(modes));
    for (int i = 1; i <= modes; ++i) {
      for (int k = 0; k < modes; ++k) factors[static_cast<std::size_t>(k)] = ops::identity(static_cast<std::size_t>(slot_dims[static_cast<std::size_t>(k)]));
      // Jordan-Wigner strings square to the identity inside c^dag c, so the
      // number operator embeds with plain identities.
      factors[static_cast<std::size_t>(i - 1)] = local_mode_operator(mode_statistics(f, i), mode_frequency(f, i));
      h += ops::kron_chain(factors);
    }
    return HamiltonianSpec(qubits, std::move(h), mode_label(f) + " ring");
  }

  // Every mode term is diagonal in the occupation basis; assemble the Kronecker
  // sum of the local diagonals.
  std::vector<double> diag{0.0};
  for (int i = 1; i <= modes; ++i) {
    const ComplexMatrix local = local_mode_operator(mode_statistics(f, i), mode_frequency(f, i));
    std::vector<double> next;
    next.reserve(diag.size() * static_cast<std::size_t>(local.rows()));
    for (double base : diag) {
      for (Eigen::Index l = 0; l < local.rows(); ++l) next.push_back(base + local(l, l).real());
    }
    diag = std::move(next);
  }
  return HamiltonianSpec(qubits, DiagonalOperator{std::move(diag)}, mode_label(f) + " ring");
}

std::size_t term_count(const ModeFamily& f, double drop_tol) {
  return to_pauli(build_ring_hamiltonian(f), drop_tol).size();
}

ComplexMatrix coupling_matrix(int sites, Boundary b) {
  if (sites < 1) throw ArgumentError("coupling_matrix: sites must be >= 1");
  const int m = 2 * sites + 1;
  ComplexMatrix k = ComplexMatrix::Zero(m, m);
  for (int j = 0; j < m; ++j) {
    k(j, j) = 2.0;
    if (j + 1 < m) {
      k(j, j + 1) = -1.0;
      k(j + 1, j) = -1.0;
    }
  }
  const double corner = (b == Boundary::Periodic) ? -1.0 : 1.0;
  k(0, m - 1) += corner;
  k(m - 1, 0) += corner;
  return k;
}

std::vector<double> fourier_frequencies(int sites, Boundary b, Statistics s) {
  if (s == Statistics::Combined) throw ArgumentError("fourier_frequencies: pick boson or fermion");
  const auto eig = ops::hermitian_eigen(coupling_matrix(sites, b));
  const double scale = prefactor(s, sites);
  // Roundoff in the zero mode would otherwise survive the square root.
  const double floor = 64.0 * std::numeric_limits<double>::epsilon() * 4.0;
  std::vector<double> out;
  out.reserve(eig.values.size());
  for (double lambda : eig.values) out.push_back(lambda <= floor ? 0.0 : scale * std::sqrt(lambda));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace ringcasimir::lattice
