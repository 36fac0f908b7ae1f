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

// Derivative-free and quasi-Newton minimizers used by the VQE loop.

#include <functional>
#include <span>
#include <vector>

namespace ringcasimir::vqe {

enum class OptimizerKind {
  // Trust-region method on a linear interpolation model over a simplex of
  // n+1 points; the radius shrinks on failure until it drops below the
  // tolerance.
  LinearApprox,
  // Quasi-Newton (BFGS) model with central finite-difference gradients and a
  // backtracking line search; stops on gradient norm or step size.
  QuadraticModel,
};

const char* optimizer_name(OptimizerKind k);

struct TracePoint {
  int iteration = 0;
  double energy = 0.0;  // best value seen up to this iteration

  friend bool operator==(const TracePoint&, const TracePoint&) = default;
};

using Objective = std::function<double(std::span<const double>)>;

struct MinimizeOptions {
  OptimizerKind kind = OptimizerKind::LinearApprox;
  int max_iterations = 500;
  double tolerance = 1e-8;
  double initial_step = 0.5;  // initial trust radius (LinearApprox)
};

struct MinimizeResult {
  std::vector<double> x;  // best evaluated point
  double value = 0.0;
  std::vector<TracePoint> trace;  // one entry per improvement of the best value
  int iterations = 0;
  int evaluations = 0;
  bool converged = false;
};

/// Minimizes `objective` from `x0`. Exhausting max_iterations is not an error;
/// the best point so far is returned with converged = false.
MinimizeResult minimize(const Objective& objective, std::vector<double> x0,
                        const MinimizeOptions& options);

}  // namespace ringcasimir::vqe
