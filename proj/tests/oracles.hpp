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

// Reference computations used only by the tests. Each one takes a route that
// does not go through the code path it is used to check.

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "ringcasimir/operator_kernel.hpp"

namespace ringcasimir::testing {

/// Dense matrix of a Pauli string assembled with kron_chain from 2x2 factors.
inline ComplexMatrix pauli_by_kron(const std::string& letters) {
  std::vector<ComplexMatrix> f;
  for (char c : letters) {
    switch (c) {
      case 'X': f.push_back(ops::pauli_x()); break;
      case 'Y': f.push_back(ops::pauli_y()); break;
      case 'Z': f.push_back(ops::pauli_z()); break;
      default: f.push_back(ops::identity(2)); break;
    }
  }
  return ops::kron_chain(f);
}

/// All 4^n strings in lexicographic IXYZ order.
inline std::vector<std::string> all_strings(int n) {
  std::vector<std::string> out{""};
  for (int k = 0; k < n; ++k) {
    std::vector<std::string> next;
    for (const auto& s : out) {
      for (char c : {'I', 'X', 'Y', 'Z'}) next.push_back(s + c);
    }
    out = std::move(next);
  }
  return out;
}

/// Tr(P h) / 2^n by explicit matrix product and trace.
inline std::complex<double> trace_coefficient(const ComplexMatrix& h, const std::string& letters) {
  return (pauli_by_kron(letters) * h).trace() / static_cast<double>(h.rows());
}

/// Random Hermitian matrix with entries of order one.
inline ComplexMatrix random_hermitian(int dim, unsigned seed) {
  std::srand(seed);
  ComplexMatrix m = ComplexMatrix::Random(dim, dim);
  return 0.5 * (m + m.adjoint());
}

/// Minimum of f over a uniform grid followed by successive zoomed grids.
inline std::vector<double> grid_refine_minimum(const std::function<double(double, double)>& f,
                                               double lo_x, double hi_x, double lo_y, double hi_y,
                                               int rounds = 12, int points = 61) {
  double bx = 0.0, by = 0.0;
  for (int r = 0; r < rounds; ++r) {
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < points; ++i) {
      for (int j = 0; j < points; ++j) {
        const double x = lo_x + (hi_x - lo_x) * i / (points - 1);
        const double y = lo_y + (hi_y - lo_y) * j / (points - 1);
        const double v = f(x, y);
        if (v < best) {
          best = v;
          bx = x;
          by = y;
        }
      }
    }
    const double wx = (hi_x - lo_x) / 8.0;
    const double wy = (hi_y - lo_y) / 8.0;
    lo_x = bx - wx;
    hi_x = bx + wx;
    lo_y = by - wy;
    hi_y = by + wy;
  }
  return {bx, by};
}

/// Dirac-sea energy from the closed-form momentum-space branches.
inline double dirac_sea_by_momentum(int sites, double eta) {
  double total = 0.0;
  for (int k = 0; k < sites; ++k) {
    const double p = 2.0 * std::numbers::pi * k / sites;
    const double a = 2.0 * std::sin(p);
    const double b = 2.0 - 2.0 * std::cos(p);
    const double root = std::sqrt((1.0 + eta) * (1.0 + eta) * a * a + 4.0 * b * b);
    for (double lambda : {0.5 * ((1.0 - eta) * a - root), 0.5 * ((1.0 - eta) * a + root)}) {
      if (lambda < -1e-12) total += lambda;
    }
  }
  return total;
}

/// Sorted copy.
inline std::vector<double> sorted(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace ringcasimir::testing
