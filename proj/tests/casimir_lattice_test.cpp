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

#include <gtest/gtest.h>

#include <array>
#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "ringcasimir/casimir_lattice.hpp"
#include "ringcasimir/errors.hpp"
#include "ringcasimir/pauli_algebra.hpp"

namespace ringcasimir::lattice {
namespace {

using std::numbers::pi;

constexpr ModeFamily bp(int n) { return {Statistics::Boson, Boundary::Periodic, n}; }
constexpr ModeFamily bt(int n) { return {Statistics::Boson, Boundary::Twisted, n}; }
constexpr ModeFamily fp(int n) { return {Statistics::Fermion, Boundary::Periodic, n}; }
constexpr ModeFamily ft(int n) { return {Statistics::Fermion, Boundary::Twisted, n}; }

TEST(CasimirLattice, ModeFrequencyFrozenValues) {
  EXPECT_NEAR(mode_frequency(bp(1), 1), 4.618802153517, 1e-11);
  EXPECT_NEAR(mode_frequency(bt(2), 1), 2.588854382000, 1e-11);
  EXPECT_NEAR(mode_frequency(fp(1), 1), 18.475208614068, 1e-11);
  EXPECT_NEAR(mode_frequency(bp(2), 1), 1.880912807336, 1e-11);
  EXPECT_NEAR(mode_frequency(bp(2), 2), 3.043380852144, 1e-11);
}

TEST(CasimirLattice, ModeSumFrozenValue) {
  EXPECT_NEAR(mode_sum_energy(bp(2)), 2.462146829740, 1e-11);
}

TEST(CasimirLattice, PrintedCorrectedEnergies) {
  EXPECT_NEAR(casimir_exact(bp(3)), -0.0429, 5e-5);
  EXPECT_NEAR(casimir_exact(ft(2)), -1.3918, 5e-5);
  EXPECT_NEAR(casimir_exact(bt(1)), 0.1202, 5e-5);
  EXPECT_NEAR(casimir_exact(fp(8)), 0.029, 5e-5);
}

TEST(CasimirLattice, FermionIsMinusFourTimesBoson) {
  for (auto b : {Boundary::Periodic, Boundary::Twisted}) {
    for (int n = 1; n <= 32; ++n) {
      const double boson = casimir_exact({Statistics::Boson, b, n});
      const double fermion = casimir_exact({Statistics::Fermion, b, n});
      EXPECT_NEAR(fermion, -4.0 * boson, 1e-12) << n;
    }
  }
}

TEST(CasimirLattice, CombinedFamilySumsBosonAndFermion) {
  for (int n = 1; n <= 6; ++n) {
    const double combined = casimir_exact({Statistics::Combined, Boundary::Periodic, n});
    EXPECT_NEAR(combined, casimir_exact(bp(n)) + casimir_exact(fp(n)), 1e-12);
  }
}

TEST(CasimirLattice, PeriodicSeriesTracksExactAtLargeN) {
  for (int n : {50, 100}) {
    EXPECT_NEAR(casimir_exact(bp(n)), large_n_series(bp(n), 4), 1e-7);
    EXPECT_NEAR(large_n_series(fp(n), 4), -4.0 * large_n_series(bp(n), 4), 1e-15);
  }
  EXPECT_THROW(large_n_series(bp(10), 5), ArgumentError);
}

TEST(CasimirLattice, ContinuumDensityLeadingTerm) {
  EXPECT_NEAR(continuum_density(bp(1), 1.0), -pi / 6.0, 1e-15);
  EXPECT_NEAR(continuum_density(bt(1), 2.0), pi / 48.0, 1e-15);
  EXPECT_NEAR(continuum_density(fp(1), 1.0), 4.0 * pi / 6.0, 1e-15);
}

TEST(CasimirLattice, RingGroundEnergyEqualsModeSum) {
  for (const auto& f : {bp(1), bp(2), bt(3), fp(4), ft(8), fp(10), bp(8)}) {
    const auto h = build_ring_hamiltonian(f);
    EXPECT_EQ(h.qubits(), ring_qubits(f));
    EXPECT_NEAR(ground_energy(h), mode_sum_energy(f), 1e-10) << family_name(f.statistics, f.boundary);
  }
}

TEST(CasimirLattice, DenseRingSpectrumIsAllOccupationSums) {
  const ModeFamily f = fp(3);
  const auto eig = ops::hermitian_eigen(to_dense(build_ring_hamiltonian(f)));
  std::vector<double> oracle;
  for (int mask = 0; mask < 8; ++mask) {
    double e = 0.0;
    for (int i = 1; i <= 3; ++i) {
      e += mode_frequency(f, i) * (((mask >> (i - 1)) & 1) - 0.5);
    }
    oracle.push_back(e);
  }
  oracle = testing::sorted(oracle);
  for (std::size_t k = 0; k < 8; ++k) EXPECT_NEAR(eig.values[k], oracle[k], 1e-12);
}

TEST(CasimirLattice, OversizeRingFailsWithCapacityError) {
  EXPECT_THROW(build_ring_hamiltonian(bp(9)), CapacityError);
  EXPECT_THROW(build_ring_hamiltonian(bp(0)), ArgumentError);
}

TEST(CasimirLattice, SingleModePauliForms) {
  const auto fermion = to_pauli(build_mode_hamiltonian(fp(1), 1));
  ASSERT_EQ(fermion.size(), 1u);
  EXPECT_EQ(fermion.terms()[0].string.to_string(), "Z");
  EXPECT_NEAR(fermion.terms()[0].coefficient, -0.5 * mode_frequency(fp(1), 1), 1e-12);
  EXPECT_EQ(to_pauli(build_mode_hamiltonian(bp(1), 1)).size(), 3u);
}

TEST(CasimirLattice, TermCountsGrowWithSites) {
  std::size_t previous = 0;
  for (int n = 1; n <= 8; ++n) {
    const std::size_t c = term_count(bp(n));
    EXPECT_EQ(c, 1u + 2u * static_cast<std::size_t>(n));
    EXPECT_GT(c, previous);
    previous = c;
  }
}

TEST(CasimirLattice, PeriodicFourierSpectrumMatchesModeFormula) {
  for (int n = 1; n <= 12; ++n) {
    std::vector<double> oracle{0.0};
    for (int i = 1; i <= n; ++i) {
      oracle.push_back(mode_frequency(bp(n), i));
      oracle.push_back(mode_frequency(bp(n), i));
    }
    oracle = testing::sorted(oracle);
    const auto got = fourier_frequencies(n, Boundary::Periodic, Statistics::Boson);
    ASSERT_EQ(got.size(), oracle.size());
    for (std::size_t k = 0; k < got.size(); ++k) EXPECT_NEAR(got[k], oracle[k], 1e-9);
  }
}

TEST(CasimirLattice, TwistedFourierSpectrumCoversFullZone) {
  for (int n = 1; n <= 12; ++n) {
    const double pre = 8.0 / (2.0 * n + 1.0);
    std::vector<double> oracle;
    for (int k = 0; k < 2 * n + 1; ++k) {
      oracle.push_back(pre * 2.0 * std::abs(std::sin(pi * (k + 0.5) / (2.0 * n + 1.0))));
    }
    oracle = testing::sorted(oracle);
    const auto got = fourier_frequencies(n, Boundary::Twisted, Statistics::Boson);
    for (std::size_t k = 0; k < got.size(); ++k) EXPECT_NEAR(got[k], oracle[k], 1e-9);
  }
}

TEST(CasimirLattice, FamilyNamesRoundTrip) {
  for (auto s : {Statistics::Boson, Statistics::Fermion, Statistics::Combined}) {
    for (auto b : {Boundary::Periodic, Boundary::Twisted}) {
      const auto parsed = parse_family_name(family_name(s, b));
      ASSERT_TRUE(parsed.has_value());
      EXPECT_EQ(parsed->first, s);
      EXPECT_EQ(parsed->second, b);
    }
  }
  EXPECT_FALSE(parse_family_name("photon-periodic").has_value());
}

}  // namespace
}  // namespace ringcasimir::lattice
