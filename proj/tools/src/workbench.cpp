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

#include "ringcasimir_workbench/workbench.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/format.h>
#include <numbers>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>
#include "output.hpp"
#include "ringcasimir/casimir_lattice.hpp"
#include "ringcasimir/chiral_fermion.hpp"
#include "ringcasimir/errors.hpp"
#include "ringcasimir/hamiltonian.hpp"
#include "ringcasimir/pauli_algebra.hpp"
#include "ringcasimir/vqe_engine.hpp"

namespace ringcasimir::workbench {
namespace {

using nlohmann::json;

struct Selector {
  std::string family;
  int sites = 1;
  std::string sweep;
  bool chiral = false;
  double eta = 1.0;
  std::optional<double> scale;
  bool calibrated = false;
  std::string from_file;
};

struct Outputs {
  std::string json_path;
  std::string trace_path;
  std::string output_path;
  bool full_precision = false;
};

struct VqeFlags {
  std::string optimizer = "linear";
  std::optional<int> depth;
  int max_iterations = 500;
  double tolerance = 1e-8;
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> shots;
  bool monolithic = false;
};

void add_selector(CLI::App* cmd, Selector& s, bool with_sweep) {
  cmd->add_option("--family", s.family,
                  "boson-periodic | boson-twisted | fermion-periodic | fermion-twisted | "
                  "combined-periodic | combined-twisted");
  cmd->add_option("--sites", s.sites, "Ring size N, or chiral lattice size L");
  if (with_sweep) cmd->add_option("--sweep", s.sweep, "Range of N, e.g. 1..8");
  cmd->add_flag("--chiral", s.chiral, "Select the chiral fermion system");
  cmd->add_option("--eta", s.eta, "Left-mover deformation (chiral)");
  cmd->add_option("--scale", s.scale, "Overall normalization of t (chiral)");
  cmd->add_flag("--calibrated", s.calibrated, "Use the calibrated normalization constant / L (chiral)");
  cmd->add_option("--from-file", s.from_file, "Pauli text file to use instead of a built Hamiltonian");
}

lattice::ModeFamily family_of(const Selector& s, int sites) {
  const auto parsed = lattice::parse_family_name(s.family);
  if (!parsed) {
    throw ArgumentError(s.family.empty() ? "one of --family, --chiral or --from-file is required"
                                         : "unknown family '" + s.family + "'");
  }
  if (sites < 1) throw ArgumentError("--sites must be >= 1");
  return {parsed->first, parsed->second, sites};
}

std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const int v = std::stoi(text);
      return {v, v};
    }
    const int lo = std::stoi(text.substr(0, dots));
    const int hi = std::stoi(text.substr(dots + 2));
    if (lo < 1 || hi < lo) throw ArgumentError("bad range '" + text + "'");
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw ArgumentError("bad range '" + text + "' (expected A..B)");
  }
}

chiral::ChiralSystem chiral_of(const Selector& s) {
  if (s.calibrated && s.scale) throw ArgumentError("--scale and --calibrated are exclusive");
  chiral::ChiralSystem sys{s.sites, s.eta, 1.0};
  if (s.calibrated) sys.scale = chiral::kCalibratedScaleConstant / s.sites;
  if (s.scale) sys.scale = *s.scale;
  sys.validate();
  return sys;
}

pauli::PauliSum load_pauli(const std::string& path) {
  return pauli::parse(read_text(std::filesystem::path(path)));
}

void emit_json(const Outputs& o, const json& j, const std::string& command,
               const std::vector<std::string>& args, std::ostream& out) {
  if (o.json_path.empty()) return;
  if (o.json_path == "-") {
    out << j.dump(2) << "\n";
    return;
  }
  const auto p = resolve_output(o.json_path);
  write_text(p, j.dump(2) + "\n");
  write_manifest(p, command, args, j);
}

// ---- exact -----------------------------------------------------------------

int cmd_exact(const Selector& s, bool no_correction, std::optional<double> subtraction, const Outputs& o,
              const std::vector<std::string>& args, std::ostream& out) {
  const bool fp = o.full_precision;
  if (!s.from_file.empty()) {
    const auto p = load_pauli(s.from_file);
    const double e = ground_energy(HamiltonianSpec(p.qubits(), p, s.from_file));
    out << fmt::format("qubits {}\nterms {}\nground_energy {}\n", p.qubits(), p.size(), format_number(e, fp));
    emit_json(o, {{"source", s.from_file}, {"qubits", p.qubits()}, {"terms", p.size()}, {"ground_energy", e}},
              "exact", args, out);
    return kExitOk;
  }
  if (s.chiral) {
    const auto sys = chiral_of(s);
    const double sea = chiral::dirac_sea_energy(chiral::build_t(sys));
    const double sub = subtraction ? *subtraction : sys.scale * sys.sites * chiral::bulk_density(sys.eta);
    const double casimir = sea - sub;
    const double target = chiral::continuum_target(sys.sites);
    out << fmt::format("sites {}\neta {}\nscale {}\ndirac_sea_energy {}\nsubtraction {}\ncasimir {}\n"
                       "continuum_target {}\n",
                       sys.sites, format_number(sys.eta, fp), format_number(sys.scale, fp),
                       format_number(sea, fp), format_number(sub, fp), format_number(casimir, fp),
                       format_number(target, fp));
    emit_json(o,
              {{"sites", sys.sites}, {"eta", sys.eta}, {"scale", sys.scale}, {"dirac_sea_energy", sea},
               {"subtraction", sub}, {"casimir", casimir}, {"continuum_target", target}},
              "exact", args, out);
    return kExitOk;
  }

  const auto [lo, hi] = s.sweep.empty() ? std::pair{s.sites, s.sites} : parse_range(s.sweep);
  json rows = json::array();
  out << "n exact_energy subtraction\n";
  for (int n = lo; n <= hi; ++n) {
    const auto f = family_of(s, n);
    const double sub = no_correction ? 0.0 : lattice::subtraction_constant(f.statistics);
    const double e = lattice::mode_sum_energy(f) + sub;
    out << fmt::format("{} {} {}\n", n, format_number(e, fp), format_number(sub, fp));
    rows.push_back({{"family", s.family}, {"sites", n}, {"exact_energy", e}, {"subtraction", sub},
                    {"corrected", !no_correction}});
  }
  emit_json(o, s.sweep.empty() ? rows[0] : rows, "exact", args, out);
  return kExitOk;
}

// ---- vqe -------------------------------------------------------------------

vqe::VqeConfig config_of(const VqeFlags& v) {
  vqe::VqeConfig cfg;
  if (v.optimizer == "linear") {
    cfg.optimizer = vqe::OptimizerKind::LinearApprox;
  } else if (v.optimizer == "quadratic") {
    cfg.optimizer = vqe::OptimizerKind::QuadraticModel;
  } else {
    throw ArgumentError("unknown optimizer '" + v.optimizer + "' (linear | quadratic)");
  }
  if (v.depth) cfg.depth = *v.depth;
  cfg.max_iterations = v.max_iterations;
  cfg.tolerance = v.tolerance;
  cfg.seed = v.seed;
  cfg.shots = v.shots;
  cfg.validate();
  return cfg;
}

std::string trace_csv(const std::vector<vqe::TracePoint>& trace, bool fp) {
  std::string csv = "iteration,energy\n";
  for (const auto& pt : trace) csv += fmt::format("{},{}\n", pt.iteration, format_number(pt.energy, fp));
  return csv;
}

int cmd_vqe(const Selector& s, const VqeFlags& v, const Outputs& o, const std::vector<std::string>& args,
            std::ostream& out) {
  vqe::VqeConfig cfg = config_of(v);
  json result;
  std::vector<vqe::TracePoint> trace;
  double exact = 0.0;
  double energy = 0.0;
  int iterations = 0;
  int evaluations = 0;
  bool converged = false;

  if (!s.from_file.empty()) {
    const auto p = load_pauli(s.from_file);
    const HamiltonianSpec h(p.qubits(), p, s.from_file);
    exact = ground_energy(h);
    auto r = vqe::run_vqe(h, cfg);
    energy = r.energy;
    iterations = r.iterations;
    evaluations = r.evaluations;
    converged = r.converged;
    trace = std::move(r.trace);
    result["family"] = "file";
    result["source"] = s.from_file;
    result["sites"] = p.qubits();
  } else if (s.chiral) {
    const auto sys = chiral_of(s);
    if (2 * sys.sites > vqe::kMaxVqeQubits) {
      throw CapacityError(fmt::format("chiral VQE needs {} qubits (limit {}); use 'exact --chiral' for larger L",
                                      2 * sys.sites, vqe::kMaxVqeQubits));
    }
    const ComplexMatrix t = chiral::build_t(sys);
    const auto spectrum = ops::hermitian_eigen(t).values;
    cfg.ansatz = vqe::AnsatzKind::NumberConserving;
    cfg.particles = static_cast<int>(
        std::count_if(spectrum.begin(), spectrum.end(), [](double x) { return x < -chiral::kZeroModeTolerance; }));
    if (!v.depth) cfg.depth = sys.sites;
    exact = chiral::dirac_sea_energy(t);
    auto r = vqe::run_vqe(chiral::jw_hamiltonian(t), cfg);
    energy = r.energy;
    iterations = r.iterations;
    evaluations = r.evaluations;
    converged = r.converged;
    trace = std::move(r.trace);
    result["family"] = "chiral";
    result["sites"] = sys.sites;
    result["eta"] = sys.eta;
    result["scale"] = sys.scale;
    result["particles"] = *cfg.particles;
  } else {
    const auto f = family_of(s, s.sites);
    exact = lattice::casimir_exact(f);
    if (v.monolithic) {
      const auto h = lattice::build_ring_hamiltonian(f);
      if (h.qubits() > vqe::kMaxVqeQubits) {
        throw CapacityError(fmt::format("ring needs {} qubits for a single statevector (limit {}); drop "
                                        "--monolithic to run mode by mode",
                                        h.qubits(), vqe::kMaxVqeQubits));
      }
      auto r = vqe::run_vqe(h, cfg);
      const double sub = lattice::subtraction_constant(f.statistics);
      energy = r.energy + sub;
      iterations = r.iterations;
      evaluations = r.evaluations;
      converged = r.converged;
      for (auto& pt : r.trace) trace.push_back({pt.iteration, pt.energy + sub});
    } else {
      auto r = vqe::partitioned_run(f, cfg);
      energy = r.vqe_energy;
      iterations = r.iterations;
      evaluations = r.evaluations;
      converged = r.converged;
      trace = std::move(r.trace);
      result["per_mode_energies"] = r.per_mode_energies;
    }
    result["family"] = s.family;
    result["sites"] = f.sites;
  }

  const double pct = vqe::percent_difference(energy, exact);
  result["exact_energy"] = exact;
  result["vqe_energy"] = energy;
  result["percent_difference"] = pct;
  result["iterations"] = iterations;
  result["evaluations"] = evaluations;
  result["optimizer"] = vqe::optimizer_name(cfg.optimizer);
  result["seed"] = cfg.seed;
  result["converged"] = converged;
  if (cfg.shots) result["shots"] = *cfg.shots;

  const bool fp = o.full_precision;
  out << fmt::format("family {}\nsites {}\nexact_energy {}\nvqe_energy {}\npercent_difference {}\n"
                     "iterations {}\nevaluations {}\nconverged {}\n",
                     result["family"].get<std::string>(), result["sites"].get<int>(), format_number(exact, fp),
                     format_number(energy, fp), format_number(pct, fp), iterations, evaluations, converged);
  emit_json(o, result, "vqe", args, out);
  if (!o.trace_path.empty()) {
    const auto p = resolve_output(o.trace_path);
    write_text(p, trace_csv(trace, true));
    write_manifest(p, "vqe", args, result);
  }
  return converged ? kExitOk : kExitNotConverged;
}

// ---- export / import -------------------------------------------------------

int cmd_export(const Selector& s, int mode, const Outputs& o, const std::vector<std::string>& args,
               std::ostream& out) {
  pauli::PauliSum p;
  if (s.chiral) {
    p = to_pauli(chiral::jw_hamiltonian(chiral::build_t(chiral_of(s))));
  } else {
    const auto f = family_of(s, s.sites);
    p = to_pauli(mode > 0 ? lattice::build_mode_hamiltonian(f, mode) : lattice::build_ring_hamiltonian(f));
  }
  const std::string text = pauli::serialize(p);
  if (o.output_path.empty() || o.output_path == "-") {
    out << text;
  } else {
    const auto path = resolve_output(o.output_path);
    write_text(path, text);
    write_manifest(path, "export", args, {{"qubits", p.qubits()}, {"terms", p.size()}});
  }
  return kExitOk;
}

int cmd_import(const std::string& path, bool fp, std::ostream& out) {
  const auto p = load_pauli(path);
  const double e = ground_energy(HamiltonianSpec(p.qubits(), p, path));
  out << fmt::format("qubits {}\nterms {}\nground_energy {}\n", p.qubits(), p.size(), format_number(e, fp));
  return kExitOk;
}

// ---- pauli-count -----------------------------------------------------------

int cmd_pauli_count(const Selector& s, const Outputs& o, const std::vector<std::string>& args,
                    std::ostream& out) {
  const auto [lo, hi] = parse_range(s.sweep.empty() ? std::to_string(s.sites) : s.sweep);
  std::string csv = "sites,qubits,terms\n";
  for (int n = lo; n <= hi; ++n) {
    const auto f = family_of(s, n);
    const int qubits = lattice::ring_qubits(f);
    std::string terms = "NA";
    try {
      terms = std::to_string(lattice::term_count(f));
    } catch (const CapacityError&) {
    }
    csv += fmt::format("{},{},{}\n", n, qubits, terms);
  }
  if (o.output_path.empty() || o.output_path == "-") {
    out << csv;
  } else {
    const auto path = resolve_output(o.output_path);
    write_text(path, csv);
    write_manifest(path, "pauli-count", args, {{"family", s.family}, {"range", {lo, hi}}});
  }
  return kExitOk;
}

// ---- dispersion ------------------------------------------------------------

int cmd_dispersion(const Selector& s, int dense, const Outputs& o, const std::vector<std::string>& args,
                   std::ostream& out) {
  const auto sys = chiral_of(s);
  std::vector<chiral::DispersionPoint> rows = chiral::dispersion_table(sys);
  if (dense < 0) throw ArgumentError("--dense must be >= 0");
  for (int k = 0; k < dense; ++k) {
    rows.push_back(chiral::dispersion(2.0 * std::numbers::pi * k / dense, sys.eta, sys.scale));
  }
  std::stable_sort(rows.begin(), rows.end(),
                   [](const auto& a, const auto& b) { return a.momentum < b.momentum; });
  std::string csv = "momentum,lambda_minus,lambda_plus\n";
  const bool fp = o.full_precision;
  for (const auto& r : rows) {
    csv += fmt::format("{},{},{}\n", format_number(r.momentum, fp), format_number(r.lambda_minus, fp),
                       format_number(r.lambda_plus, fp));
  }
  if (o.output_path.empty() || o.output_path == "-") {
    out << csv;
  } else {
    const auto path = resolve_output(o.output_path);
    write_text(path, csv);
    write_manifest(path, "dispersion", args,
                   {{"sites", sys.sites}, {"eta", sys.eta}, {"scale", sys.scale}, {"dense", dense}});
  }
  return kExitOk;
}

int run_guarded(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, int depth);

int cmd_replay(const std::string& manifest_path, std::ostream& out, std::ostream& err, int depth) {
  if (depth > 0) throw ArgumentError("replay manifests cannot themselves replay");
  json m;
  try {
    m = json::parse(read_text(std::filesystem::path(manifest_path)));
  } catch (const json::exception& e) {
    throw ParseError(0, std::string("manifest: ") + e.what());
  }
  if (!m.contains("arguments") || !m["arguments"].is_array()) {
    throw ParseError(0, "manifest: missing 'arguments' array");
  }
  return run_guarded(m["arguments"].get<std::vector<std::string>>(), out, err, depth + 1);
}

int run_guarded(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, int depth) {
  CLI::App app{"Lattice Casimir energies: exact mode sums, VQE and the chiral fermion"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(RINGCASIMIR_VERSION_STRING));

  Selector sel;
  Outputs o;
  VqeFlags v;
  bool no_correction = false;
  std::optional<double> subtraction;
  int mode = 0;
  int dense = 0;
  std::string path;

  auto* exact = app.add_subcommand("exact", "Exact Casimir energies from mode sums or the Dirac sea");
  add_selector(exact, sel, true);
  exact->add_flag("--no-correction", no_correction, "Report the raw mode sum");
  exact->add_option("--subtraction", subtraction, "Chiral subtraction (default: scale * L * bulk density)");
  exact->add_option("--json", o.json_path, "Write the result as JSON ('-' for stdout)");
  exact->add_flag("--full-precision", o.full_precision, "Shortest round-trip decimals");

  auto* vqe_cmd = app.add_subcommand("vqe", "Variational ground-state search");
  add_selector(vqe_cmd, sel, false);
  vqe_cmd->add_option("--optimizer", v.optimizer, "linear | quadratic");
  vqe_cmd->add_option("--depth", v.depth, "Ansatz layers");
  vqe_cmd->add_option("--max-iterations", v.max_iterations);
  vqe_cmd->add_option("--tolerance", v.tolerance);
  vqe_cmd->add_option("--seed", v.seed);
  vqe_cmd->add_option("--shots", v.shots, "Estimate expectations from this many samples per term");
  vqe_cmd->add_flag("--monolithic", v.monolithic, "One statevector for the whole ring");
  vqe_cmd->add_option("--json", o.json_path, "Write the result as JSON ('-' for stdout)");
  vqe_cmd->add_option("--trace", o.trace_path, "Write the convergence trace as CSV");
  vqe_cmd->add_flag("--full-precision", o.full_precision);

  auto* export_cmd = app.add_subcommand("export", "Write a Hamiltonian as Pauli text");
  add_selector(export_cmd, sel, false);
  export_cmd->add_option("--mode", mode, "Export a single mode (1-based) instead of the ring");
  export_cmd->add_option("--output,-o", o.output_path);

  auto* import_cmd = app.add_subcommand("import", "Read Pauli text and report its ground energy");
  import_cmd->add_option("path", path)->required();
  import_cmd->add_flag("--full-precision", o.full_precision);

  auto* count_cmd = app.add_subcommand("pauli-count", "Pauli term counts of ring Hamiltonians");
  count_cmd->add_option("--family", sel.family)->required();
  count_cmd->add_option("--sites", sel.sites);
  count_cmd->add_option("--sweep", sel.sweep);
  count_cmd->add_option("--output,-o", o.output_path);

  auto* disp_cmd = app.add_subcommand("dispersion", "Chiral dispersion relation as CSV");
  disp_cmd->add_option("--sites", sel.sites)->required();
  disp_cmd->add_option("--eta", sel.eta);
  disp_cmd->add_option("--scale", sel.scale);
  disp_cmd->add_flag("--calibrated", sel.calibrated);
  disp_cmd->add_option("--dense", dense, "Add a uniform momentum grid of this size");
  disp_cmd->add_option("--output,-o", o.output_path);
  disp_cmd->add_flag("--full-precision", o.full_precision);

  auto* replay_cmd = app.add_subcommand("replay", "Re-run the command recorded in a manifest");
  replay_cmd->add_option("manifest", path)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (*exact) return cmd_exact(sel, no_correction, subtraction, o, args, out);
  if (*vqe_cmd) return cmd_vqe(sel, v, o, args, out);
  if (*export_cmd) return cmd_export(sel, mode, o, args, out);
  if (*import_cmd) return cmd_import(path, o.full_precision, out);
  if (*count_cmd) return cmd_pauli_count(sel, o, args, out);
  if (*disp_cmd) {
    sel.chiral = true;
    return cmd_dispersion(sel, dense, o, args, out);
  }
  if (*replay_cmd) return cmd_replay(path, out, err, depth);
  return kExitUsage;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    return run_guarded(args, out, err, 0);
  } catch (const ArgumentError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CapacityError& e) {
    err << "capacity: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}

}  // namespace ringcasimir::workbench
