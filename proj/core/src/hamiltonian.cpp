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

#include "ringcasimir/hamiltonian.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>

#include "ringcasimir/errors.hpp"

namespace ringcasimir {

HamiltonianSpec::HamiltonianSpec(int qubits, Representation rep, std::string provenance)
    : qubits_(qubits), rep_(std::move(rep)), provenance_(std::move(provenance)) {
  if (qubits_ < 1) throw ArgumentError("HamiltonianSpec: qubit count must be >= 1");
  const auto dim = Eigen::Index{1} << qubits_;
  if (const auto* m = std::get_if<ComplexMatrix>(&rep_)) {
    if (m->rows() != dim || m->cols() != dim) {
      throw ArgumentError("HamiltonianSpec: dense matrix does not match qubit count");
    }
    const double dev = ops::hermitian_deviation(*m);
    if (!(dev <= ops::kHermitianTolerance)) {
      throw ValidationError("HamiltonianSpec: matrix is not Hermitian (max |M - M^H| = " +
                            std::to_string(dev) + ")");
    }
  } else if (const auto* d = std::get_if<DiagonalOperator>(&rep_)) {
    if (static_cast<Eigen::Index>(d->entries.size()) != dim) {
      throw ArgumentError("HamiltonianSpec: diagonal length does not match qubit count");
    }
  } else if (std::get<pauli::PauliSum>(rep_).qubits() != qubits_) {
    throw ArgumentError("HamiltonianSpec: Pauli sum does not match qubit count");
  }
}

pauli::PauliSum to_pauli(const HamiltonianSpec& h, double drop_tol) {
  return std::visit(
      [&](const auto& rep) -> pauli::PauliSum {
        using T = std::decay_t<decltype(rep)>;
        if constexpr (std::is_same_v<T, ComplexMatrix>) {
          return pauli::decompose(rep, drop_tol);
        } else if constexpr (std::is_same_v<T, DiagonalOperator>) {
          return pauli::decompose_diagonal(rep.entries, drop_tol);
        } else {
          return rep;
        }
      },
      h.representation());
}

ComplexMatrix to_dense(const HamiltonianSpec& h) {
  if (h.qubits() > kMaxDenseQubits) {
    throw CapacityError("to_dense: " + std::to_string(h.qubits()) + " qubits exceeds dense limit of " +
                        std::to_string(kMaxDenseQubits));
  }
  return std::visit(
      [&](const auto& rep) -> ComplexMatrix {
        using T = std::decay_t<decltype(rep)>;
        if constexpr (std::is_same_v<T, ComplexMatrix>) {
          return rep;
        } else if constexpr (std::is_same_v<T, DiagonalOperator>) {
          ComplexMatrix m = ComplexMatrix::Zero(static_cast<Eigen::Index>(rep.entries.size()),
                                                static_cast<Eigen::Index>(rep.entries.size()));
          for (std::size_t k = 0; k < rep.entries.size(); ++k) {
            m(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k)) = rep.entries[k];
          }
          return m;
        } else {
          return pauli::reconstruct(rep);
        }
      },
      h.representation());
}

double ground_energy(const HamiltonianSpec& h) {
  if (const auto* d = std::get_if<DiagonalOperator>(&h.representation())) {
    return *std::min_element(d->entries.begin(), d->entries.end());
  }
  if (const auto* p = std::get_if<pauli::PauliSum>(&h.representation())) {
    if (p->is_diagonal()) {
      const auto diag = pauli::reconstruct_diagonal(*p);
      return *std::min_element(diag.begin(), diag.end());
    }
    if (p->qubits() > kMaxDenseQubits) return sector_ground_energy(*p);
  }
  return ops::hermitian_eigen(to_dense(h)).values.front();
}

double sector_ground_energy(const pauli::PauliSum& p) {
  const int n = p.qubits();
  if (n > 16) throw CapacityError("sector_ground_energy: too many qubits");
  const std::uint64_t dim = std::uint64_t{1} << n;

  struct Action {
    std::uint64_t x, z;
    Complex base;
  };
  std::vector<Action> actions;
  for (const auto& t : p.terms()) {
    static constexpr Complex kIPow[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    actions.push_back({t.string.x_mask(), t.string.z_mask(),
                       t.coefficient * kIPow[t.string.y_count() % 4]});
  }

  std::vector<std::int64_t> index_in_sector(dim, -1);
  std::vector<Complex> column(dim);
  std::vector<std::uint64_t> touched;
  double best = std::numeric_limits<double>::infinity();
  for (int weight = 0; weight <= n; ++weight) {
    std::vector<std::uint64_t> states;
    for (std::uint64_t b = 0; b < dim; ++b) {
      if (std::popcount(b) == weight) {
        index_in_sector[b] = static_cast<std::int64_t>(states.size());
        states.push_back(b);
      }
    }
    const auto d = static_cast<Eigen::Index>(states.size());
    ComplexMatrix block = ComplexMatrix::Zero(d, d);
    for (Eigen::Index j = 0; j < d; ++j) {
      const std::uint64_t b = states[static_cast<std::size_t>(j)];
      for (const auto& a : actions) {
        const std::uint64_t target = b ^ a.x;
        if (column[target] == Complex{}) touched.push_back(target);
        column[target] += (std::popcount(a.z & b) & 1) ? -a.base : a.base;
      }
      for (std::uint64_t target : touched) {
        const Complex v = column[target];
        column[target] = Complex{};
        if (std::popcount(target) != weight) {
          if (std::abs(v) > 1e-10) {
            throw ValidationError("sector_ground_energy: operator does not conserve qubit number");
          }
          continue;
        }
        block(index_in_sector[target], j) += v;
      }
      touched.clear();
    }
    best = std::min(best, ops::hermitian_eigen(block).values.front());
  }
  return best;
}

}  // namespace ringcasimir
