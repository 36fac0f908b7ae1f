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

#include "ringcasimir/vqe_engine.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <map>
#include <string>

#include "ringcasimir/errors.hpp"
#include "ringcasimir/statevector.hpp"

namespace ringcasimir::vqe {

const char* ansatz_name(AnsatzKind k) {
  return k == AnsatzKind::HardwareEfficient ? "hardware-efficient" : "number-conserving";
}

void VqeConfig::validate() const {
  if (depth < 0) throw ArgumentError("VqeConfig: depth must be >= 0");
  if (max_iterations < 1) throw ArgumentError("VqeConfig: max_iterations must be >= 1");
  if (!(tolerance > 0.0)) throw ArgumentError("VqeConfig: tolerance must be positive");
  if (shots && *shots == 0) throw ArgumentError("VqeConfig: shots must be >= 1 when given");
  if (particles && *particles < 0) throw ArgumentError("VqeConfig: particles must be >= 0");
}

int ansatz_parameter_count(int qubits, int depth) { return qubits * (depth + 1); }

ComplexVector ansatz_state(std::span<const double> parameters, int qubits, int depth) {
  if (qubits < 1 || depth < 0) throw ArgumentError("ansatz_state: need qubits >= 1 and depth >= 0");
  const auto expected = static_cast<std::size_t>(ansatz_parameter_count(qubits, depth));
  if (parameters.size() != expected) {
    throw ArgumentError("ansatz_state: expected " + std::to_string(expected) + " parameters, got " +
                        std::to_string(parameters.size()));
  }
  ComplexVector state = sim::zero_state(qubits);
  std::size_t k = 0;
  for (int q = 0; q < qubits; ++q) sim::apply_ry(state, qubits, q, parameters[k++]);
  for (int layer = 0; layer < depth; ++layer) {
    for (int q = 0; q + 1 < qubits; ++q) sim::apply_cz(state, qubits, q, q + 1);
    for (int q = 0; q < qubits; ++q) sim::apply_ry(state, qubits, q, parameters[k++]);
  }
  return state;
}

int number_conserving_parameter_count(int qubits, int depth) { return 2 * depth * (qubits - 1); }

ComplexVector number_conserving_state(std::span<const double> parameters, int qubits, int particles,
                                      int depth) {
  if (qubits < 1 || depth < 0) throw ArgumentError("number_conserving_state: need qubits >= 1 and depth >= 0");
  if (particles < 0 || particles > qubits) {
    throw ArgumentError("number_conserving_state: particles must lie in 0.." + std::to_string(qubits));
  }
  const auto expected = static_cast<std::size_t>(number_conserving_parameter_count(qubits, depth));
  if (parameters.size() != expected) {
    throw ArgumentError("number_conserving_state: expected " + std::to_string(expected) +
                        " parameters, got " + std::to_string(parameters.size()));
  }
  ComplexVector state = sim::zero_state(qubits);
  for (int q = 0; q < particles; ++q) sim::apply_x(state, qubits, q);
  std::size_t k = 0;
  for (int layer = 0; layer < depth; ++layer) {
    for (int start = 0; start < 2; ++start) {
      for (int q = start; q + 1 < qubits; q += 2) {
        const double theta = parameters[k++];
        const double phi = parameters[k++];
        sim::apply_givens(state, qubits, q, theta, phi);
      }
    }
  }
  return state;
}

double sampled_expectation(const pauli::PauliSum& p, const ComplexVector& state, std::uint64_t shots,
                           std::mt19937_64& rng) {
  if (shots == 0) throw ArgumentError("sampled_expectation: shots must be >= 1");
  double total = 0.0;
  for (const auto& t : p.terms()) {
    if (t.string.is_identity()) {
      total += t.coefficient;
      continue;
    }
    // Measuring P gives +1 with probability (1 + <P>)/2.
    const double mean = pauli::string_expectation(t.string, state).real();
    const double p_plus = std::clamp(0.5 * (1.0 + mean), 0.0, 1.0);
    std::binomial_distribution<std::uint64_t> draw(shots, p_plus);
    const double plus = static_cast<double>(draw(rng));
    total += t.coefficient * (2.0 * plus / static_cast<double>(shots) - 1.0);
  }
  return total;
}

namespace {

VqeResult run_sector(const pauli::PauliSum& p, const VqeConfig& cfg, std::mt19937_64& init_rng,
                     std::mt19937_64& shot_rng, std::optional<int> particles) {
  const int n = p.qubits();
  const int count = particles ? number_conserving_parameter_count(n, cfg.depth)
                              : ansatz_parameter_count(n, cfg.depth);
  std::uniform_real_distribution<double> init(-0.1, 0.1);
  std::vector<double> x0(static_cast<std::size_t>(count));
  for (double& v : x0) v = init(init_rng);

  const Objective objective = [&](std::span<const double> theta) {
    const ComplexVector state = particles ? number_conserving_state(theta, n, *particles, cfg.depth)
                                          : ansatz_state(theta, n, cfg.depth);
    return cfg.shots ? sampled_expectation(p, state, *cfg.shots, shot_rng) : pauli::expectation(p, state);
  };
  MinimizeOptions opt;
  opt.kind = cfg.optimizer;
  opt.max_iterations = cfg.max_iterations;
  opt.tolerance = cfg.tolerance;
  MinimizeResult m = minimize(objective, std::move(x0), opt);

  VqeResult r;
  r.energy = cfg.shots ? objective(m.x) : m.value;
  r.parameters = std::move(m.x);
  r.trace = std::move(m.trace);
  r.iterations = m.iterations;
  r.evaluations = m.evaluations;
  r.converged = m.converged;
  r.particles = particles;
  return r;
}

}  // namespace

VqeResult run_vqe(const HamiltonianSpec& h, const VqeConfig& cfg) {
  cfg.validate();
  if (h.qubits() > kMaxVqeQubits) {
    throw CapacityError("run_vqe: " + std::to_string(h.qubits()) + " qubits exceeds statevector limit of " +
                        std::to_string(kMaxVqeQubits) + "; split the problem into modes (partitioned_run)");
  }
  const pauli::PauliSum p = to_pauli(h);
  std::mt19937_64 init_rng(cfg.seed);
  std::mt19937_64 shot_rng(cfg.seed ^ 0x9e3779b97f4a7c15ULL);

  if (cfg.ansatz == AnsatzKind::HardwareEfficient) {
    return run_sector(p, cfg, init_rng, shot_rng, std::nullopt);
  }

  std::vector<int> sectors;
  if (cfg.particles) {
    if (*cfg.particles > p.qubits()) throw ArgumentError("run_vqe: more particles than qubits");
    sectors.push_back(*cfg.particles);
  } else {
    for (int m = 0; m <= p.qubits(); ++m) sectors.push_back(m);
  }
  VqeResult best;
  int iterations = 0;
  int evaluations = 0;
  bool converged = true;
  for (std::size_t k = 0; k < sectors.size(); ++k) {
    VqeResult r = run_sector(p, cfg, init_rng, shot_rng, sectors[k]);
    iterations += r.iterations;
    evaluations += r.evaluations;
    converged = converged && r.converged;
    if (k == 0 || r.energy < best.energy) best = std::move(r);
  }
  best.iterations = iterations;
  best.evaluations = evaluations;
  best.converged = converged;
  return best;
}

double percent_difference(double vqe_energy, double exact_energy) {
  if (exact_energy == 0.0) {
    return vqe_energy == 0.0 ? 0.0 : std::copysign(std::numeric_limits<double>::infinity(), vqe_energy);
  }
  return 100.0 * (vqe_energy - exact_energy) / exact_energy;
}

CasimirReport partitioned_run(const lattice::ModeFamily& family, const VqeConfig& cfg) {
  cfg.validate();
  const int modes = lattice::mode_count(family);
  std::vector<std::future<VqeResult>> jobs;
  jobs.reserve(static_cast<std::size_t>(modes));
  for (int i = 1; i <= modes; ++i) {
    VqeConfig mode_cfg = cfg;
    mode_cfg.seed = cfg.seed + static_cast<std::uint64_t>(i);
    jobs.push_back(std::async(std::launch::async, [family, i, mode_cfg] {
      return run_vqe(lattice::build_mode_hamiltonian(family, i), mode_cfg);
    }));
  }

  CasimirReport report;
  report.family = family;
  report.subtraction = lattice::subtraction_constant(family.statistics);
  report.exact_energy = lattice::casimir_exact(family);
  report.converged = true;
  std::vector<std::vector<TracePoint>> traces;
  double total = 0.0;
  for (auto& job : jobs) {
    VqeResult r = job.get();
    report.per_mode_energies.push_back(r.energy);
    total += r.energy;
    report.iterations += r.iterations;
    report.evaluations += r.evaluations;
    report.converged = report.converged && r.converged;
    traces.push_back(std::move(r.trace));
  }
  report.vqe_energy = total + report.subtraction;
  report.percent_difference = percent_difference(report.vqe_energy, report.exact_energy);

  std::vector<int> marks;
  for (const auto& t : traces) {
    for (const auto& pt : t) marks.push_back(pt.iteration);
  }
  std::sort(marks.begin(), marks.end());
  marks.erase(std::unique(marks.begin(), marks.end()), marks.end());
  for (int it : marks) {
    double sum = report.subtraction;
    for (const auto& t : traces) {
      auto last = std::upper_bound(t.begin(), t.end(), it,
                                   [](int v, const TracePoint& pt) { return v < pt.iteration; });
      sum += std::prev(last)->energy;
    }
    report.trace.push_back({it, sum});
  }
  return report;
}

}  // namespace ringcasimir::vqe
