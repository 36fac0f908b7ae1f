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

#include "ringcasimir/chiral_fermion.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "ringcasimir/errors.hpp"
#include "ringcasimir/pauli_algebra.hpp"

namespace ringcasimir::chiral {
namespace {

using std::numbers::pi;

constexpr Complex kI{0.0, 1.0};

double wrap_momentum(double p) {
  double w = std::fmod(p, 2.0 * pi);
  if (w < 0.0) w += 2.0 * pi;
  return w;
}

// c_k = Z_0 ... Z_{k-1} (X_k + i Y_k) / 2 as (coefficient, string) pairs.
std::vector<std::pair<Complex, pauli::PauliString>> lowering_terms(int qubits, int k) {
  std::vector<pauli::Letter> x(static_cast<std::size_t>(qubits), pauli::Letter::I);
  for (int j = 0; j < k; ++j) x[static_cast<std::size_t>(j)] = pauli::Letter::Z;
  std::vector<pauli::Letter> y = x;
  x[static_cast<std::size_t>(k)] = pauli::Letter::X;
  y[static_cast<std::size_t>(k)] = pauli::Letter::Y;
  return {{0.5, pauli::PauliString(std::move(x))}, {0.5 * kI, pauli::PauliString(std::move(y))}};
}

}  // namespace

void ChiralSystem::validate() const {
  if (sites < 2) throw ArgumentError("ChiralSystem: sites must be >= 2 (got " + std::to_string(sites) + ")");
  if (!(eta >= 1.0)) throw ArgumentError("ChiralSystem: eta must be >= 1");
  if (!(scale > 0.0)) throw ArgumentError("ChiralSystem: scale must be positive");
}

ComplexMatrix build_A(int sites) {
  if (sites < 2) throw ArgumentError("build_A: sites must be >= 2");
  ComplexMatrix a = ComplexMatrix::Zero(sites, sites);
  for (int j = 0; j < sites; ++j) {
    const int next = (j + 1) % sites;
    a(j, next) += -kI;
    a(next, j) += kI;
  }
  return a;
}

ComplexMatrix build_B(int sites) {
  if (sites < 2) throw ArgumentError("build_B: sites must be >= 2");
  ComplexMatrix b = ComplexMatrix::Zero(sites, sites);
  for (int j = 0; j < sites; ++j) {
    const int next = (j + 1) % sites;
    b(j, j) += 2.0;
    b(j, next) += -1.0;
    b(next, j) += -1.0;
  }
  return b;
}

ComplexMatrix build_t(const ChiralSystem& system) {
  system.validate();
  const int l = system.sites;
  const ComplexMatrix a = build_A(l);
  const ComplexMatrix b = build_B(l);
  ComplexMatrix t(2 * l, 2 * l);
  t.topLeftCorner(l, l) = a;
  t.topRightCorner(l, l) = b;
  t.bottomLeftCorner(l, l) = b.adjoint();
  t.bottomRightCorner(l, l) = -system.eta * a;
  return system.scale * t;
}

DispersionPoint dispersion(double momentum, double eta, double scale) {
  const double a = 2.0 * std::sin(momentum);
  const double b = 2.0 - 2.0 * std::cos(momentum);
  const double root = std::sqrt((1.0 + eta) * (1.0 + eta) * a * a + 4.0 * b * b);
  return {momentum, scale * 0.5 * ((1.0 - eta) * a - root), scale * 0.5 * ((1.0 - eta) * a + root)};
}

std::vector<DispersionPoint> dispersion_table(const ChiralSystem& system) {
  system.validate();
  std::vector<DispersionPoint> out;
  out.reserve(static_cast<std::size_t>(system.sites));
  for (int k = 0; k < system.sites; ++k) {
    out.push_back(dispersion(2.0 * pi * k / system.sites, system.eta, system.scale));
  }
  return out;
}

Mover classify(double momentum, double lambda) {
  const double p = wrap_momentum(momentum);
  constexpr double kEps = 1e-12;
  if (p < kEps || 2.0 * pi - p < kEps || lambda == 0.0) return Mover::Zero;
  if (std::abs(p - pi) < kEps) return Mover::Doubler;
  return lambda * std::sin(p) > 0.0 ? Mover::Right : Mover::Left;
}

GapSummary chirality_gap(const ChiralSystem& system) {
  GapSummary g{std::numeric_limits<double>::infinity(), 0.0};
  for (const auto& pt : dispersion_table(system)) {
    for (double lambda : {pt.lambda_minus, pt.lambda_plus}) {
      switch (classify(pt.momentum, lambda)) {
        case Mover::Left: g.min_left = std::min(g.min_left, std::abs(lambda)); break;
        case Mover::Right:
        case Mover::Doubler: g.max_right = std::max(g.max_right, std::abs(lambda)); break;
        case Mover::Zero: break;
      }
    }
  }
  return g;
}

double dirac_sea_energy(const ComplexMatrix& t) {
  double total = 0.0;
  for (double lambda : ops::hermitian_eigen(t).values) {
    if (lambda < -kZeroModeTolerance) total += lambda;
  }
  return total;
}

double bulk_density(double eta) {
  if (!(eta >= 1.0)) throw ArgumentError("bulk_density: eta must be >= 1");
  const auto lower = [eta](double p) { return dispersion(p, eta).lambda_minus; };
  double error = 0.0;
  // The integrand has a |p| kink only at the endpoints of the period.
  const double integral = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
      lower, 0.0, 2.0 * pi, 30, 1e-14, &error);
  if (error > 1e-10) throw ValidationError("bulk_density: quadrature error estimate " + std::to_string(error));
  return integral / (2.0 * pi);
}

double chiral_casimir(const ChiralSystem& system, double subtraction) {
  return dirac_sea_energy(build_t(system)) - subtraction;
}

double continuum_target(int sites) {
  if (sites < 2) throw ArgumentError("continuum_target: sites must be >= 2");
  const double radius = 0.5 * sites;
  return 2.0 * pi / (6.0 * radius * radius);
}

HamiltonianSpec jw_hamiltonian(const ComplexMatrix& t) {
  if (t.rows() != t.cols() || t.rows() < 1) throw ArgumentError("jw_hamiltonian: t must be square");
  const double dev = ops::hermitian_deviation(t);
  if (!(dev <= ops::kHermitianTolerance)) {
    throw ValidationError("jw_hamiltonian: t is not Hermitian (max |t - t^H| = " + std::to_string(dev) + ")");
  }
  const int n = static_cast<int>(t.rows());
  if (n > kMaxJordanWignerQubits) {
    throw CapacityError("jw_hamiltonian: " + std::to_string(n) + " modes exceeds limit of " +
                        std::to_string(kMaxJordanWignerQubits) + " qubits; use dirac_sea_energy");
  }
  std::vector<std::vector<std::pair<Complex, pauli::PauliString>>> lower;
  for (int k = 0; k < n; ++k) lower.push_back(lowering_terms(n, k));

  std::map<pauli::PauliString, Complex> acc;
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      const Complex tjk = t(j, k);
      if (tjk == Complex{}) continue;
      // c_j^dag = sum conj(coeff) * string (each string is Hermitian).
      for (const auto& [cj, sj] : lower[static_cast<std::size_t>(j)]) {
        for (const auto& [ck, sk] : lower[static_cast<std::size_t>(k)]) {
          auto [phase, s] = pauli::multiply(sj, sk);
          acc[s] += tjk * std::conj(cj) * ck * phase;
        }
      }
    }
  }
  return HamiltonianSpec(n, pauli::from_complex(n, acc), "Jordan-Wigner quadratic form, " + std::to_string(n) + " modes");
}

double many_body_ground_energy(const ComplexMatrix& t) {
  const HamiltonianSpec h = jw_hamiltonian(t);
  return sector_ground_energy(std::get<pauli::PauliSum>(h.representation()));
}

ScaleCalibration calibrate_scale(int sites, double eta, double target) {
  ScaleCalibration c;
  c.raw_ground_energy = dirac_sea_energy(build_t({sites, eta, 1.0}));
  // The Dirac-sea energy is homogeneous of degree one in the scale.
  const double ratio = target / c.raw_ground_energy;
  if (!(ratio > 0.0) || !std::isfinite(ratio)) {
    throw ValidationError("calibrate_scale: no positive scale of the form c/L reproduces target " +
                          std::to_string(target) + " (raw Dirac sea " + std::to_string(c.raw_ground_energy) + ")");
  }
  c.constant = ratio * sites;
  c.scale = ratio;
  c.residual = dirac_sea_energy(build_t({sites, eta, c.scale})) - target;
  return c;
}

}  // namespace ringcasimir::chiral
