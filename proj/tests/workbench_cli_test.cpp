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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>
#include "ringcasimir_workbench/workbench.hpp"

namespace ringcasimir::workbench {
namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "ringcasimir_cli_tests";
  std::filesystem::create_directories(dir);
  return dir / name;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

TEST(WorkbenchCli, ExactSingleRow) {
  const auto r = invoke({"exact", "--family", "boson-periodic", "--sites", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("1 -0.237"), std::string::npos) << r.out;
}

TEST(WorkbenchCli, ExactWithoutCorrection) {
  const auto r = invoke({"exact", "--family", "boson-periodic", "--sites", "1", "--no-correction", "--json", "-"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out.substr(r.out.find('{')));
  EXPECT_NEAR(j["exact_energy"].get<double>(), 2.3094, 5e-5);
}

TEST(WorkbenchCli, ExactSweepWritesJsonAndManifest) {
  const auto path = scratch("sweep.json");
  const auto r = invoke({"exact", "--family", "fermion-twisted", "--sweep", "1..8", "--json", path.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(slurp(path));
  ASSERT_EQ(j.size(), 8u);
  EXPECT_NEAR(j[1]["exact_energy"].get<double>(), -1.3918, 5e-5);
  EXPECT_TRUE(std::filesystem::exists(path.string() + ".manifest.json"));
}

TEST(WorkbenchCli, UnknownFamilyIsUsageError) {
  EXPECT_EQ(invoke({"exact", "--family", "photon-ring", "--sites", "1"}).code, kExitUsage);
  EXPECT_EQ(invoke({"exact", "--bogus"}).code, kExitUsage);
  EXPECT_EQ(invoke({}).code, kExitUsage);
  EXPECT_EQ(invoke({"vqe", "--family", "boson-periodic", "--optimizer", "slsqp"}).code, kExitUsage);
}

TEST(WorkbenchCli, ExactChiralReport) {
  const auto r = invoke({"exact", "--chiral", "--sites", "14", "--eta", "10", "--calibrated", "--subtraction",
                         "-5.57571769", "--json", "-", "--full-precision"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out.substr(r.out.find('{')));
  for (const char* key : {"sites", "eta", "scale", "dirac_sea_energy", "subtraction", "casimir", "continuum_target"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  EXPECT_NEAR(j["dirac_sea_energy"].get<double>(), -5.55433587, 1e-9);
}

TEST(WorkbenchCli, VqeResultRecordAndTrace) {
  const auto json_path = scratch("vqe.json");
  const auto trace_path = scratch("vqe_trace.csv");
  const auto r = invoke({"vqe", "--family", "fermion-periodic", "--sites", "8", "--optimizer", "linear", "--seed",
                         "7", "--json", json_path.string(), "--trace", trace_path.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(slurp(json_path));
  for (const char* key : {"family", "sites", "exact_energy", "vqe_energy", "percent_difference", "iterations",
                          "evaluations", "optimizer", "seed", "converged"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  EXPECT_LE(std::abs(j["percent_difference"].get<double>()), 1e-2);
  const std::string csv = slurp(trace_path);
  EXPECT_EQ(csv.rfind("iteration,energy\n", 0), 0u);
}

TEST(WorkbenchCli, VqeReplayIsByteIdentical) {
  const auto json_path = scratch("replay.json");
  ASSERT_EQ(invoke({"vqe", "--family", "boson-twisted", "--sites", "2", "--seed", "3", "--optimizer", "quadratic", "--json",
                    json_path.string()}).code,
            0);
  const std::string first = slurp(json_path);
  ASSERT_EQ(invoke({"replay", json_path.string() + ".manifest.json"}).code, 0);
  EXPECT_EQ(slurp(json_path), first);
}

TEST(WorkbenchCli, MonolithicOverCapacityExitsFour) {
  const auto r = invoke({"vqe", "--family", "boson-periodic", "--sites", "7", "--monolithic"});
  EXPECT_EQ(r.code, kExitCapacity);
  EXPECT_NE(r.err.find("--monolithic"), std::string::npos);
}

TEST(WorkbenchCli, ShotModeIsWithinNoise) {
  const auto r = invoke({"vqe", "--family", "boson-periodic", "--sites", "1", "--shots", "100000", "--json", "-"});
  ASSERT_TRUE(r.code == kExitOk || r.code == kExitNotConverged) << r.err;
  const auto j = nlohmann::json::parse(r.out.substr(r.out.find('{')));
  const double exact = j["exact_energy"].get<double>();
  // Three standard deviations of a +-1 outcome scaled by the term weights.
  const double bound = 3.0 * 3.0 * 4.618802153517 / std::sqrt(100000.0);
  EXPECT_NEAR(j["vqe_energy"].get<double>(), exact, bound);
}

TEST(WorkbenchCli, ExportImportRoundTrip) {
  const auto path = scratch("bp1.pauli");
  ASSERT_EQ(invoke({"export", "--family", "boson-periodic", "--sites", "1", "-o", path.string()}).code, 0);
  const std::string text = slurp(path);
  int term_lines = 0;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    if (!line.empty() && line[0] != '#' && line.rfind("qubits", 0) != 0) ++term_lines;
  }
  EXPECT_EQ(term_lines, 3);
  const auto direct = invoke({"exact", "--family", "boson-periodic", "--sites", "1", "--no-correction",
                              "--full-precision"});
  const auto via_file = invoke({"exact", "--from-file", path.string(), "--full-precision"});
  ASSERT_EQ(via_file.code, 0) << via_file.err;
  const double a = std::stod(direct.out.substr(direct.out.find("\n1 ") + 3));
  const double b = std::stod(via_file.out.substr(via_file.out.find("ground_energy ") + 14));
  EXPECT_NEAR(a, b, 1e-12);
}

TEST(WorkbenchCli, TruncatedImportExitsFiveWithLine) {
  const auto path = scratch("bad.pauli");
  std::ofstream(path) << "qubits 2\n1.0 XZ\n0.5 X";
  const auto r = invoke({"import", path.string()});
  EXPECT_EQ(r.code, kExitParse);
  EXPECT_NE(r.err.find("line 3"), std::string::npos) << r.err;
}

TEST(WorkbenchCli, PauliCountMarksOversizeRows) {
  const auto r = invoke({"pauli-count", "--family", "boson-periodic", "--sweep", "1..9"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.rfind("sites,qubits,terms\n1,2,3\n", 0), 0u) << r.out;
  EXPECT_NE(r.out.find("9,18,NA"), std::string::npos);
  const auto f = invoke({"pauli-count", "--family", "fermion-periodic", "--sweep", "1..4"});
  EXPECT_NE(f.out.find("4,4,"), std::string::npos);
}

TEST(WorkbenchCli, DispersionCsv) {
  const auto r = invoke({"dispersion", "--sites", "6", "--eta", "1", "--full-precision"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "momentum,lambda_minus,lambda_plus");
  int rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    const auto c1 = line.find(',');
    const auto c2 = line.find(',', c1 + 1);
    const double lm = std::stod(line.substr(c1 + 1, c2 - c1 - 1));
    const double lp = std::stod(line.substr(c2 + 1));
    EXPECT_NEAR(lm, -lp, 1e-12);
  }
  EXPECT_EQ(rows, 6);
  EXPECT_EQ(invoke({"dispersion", "--sites", "1"}).code, kExitUsage);
}

TEST(WorkbenchCli, OutputDirectoryVariable) {
  const auto dir = scratch("outdir");
  ::setenv(kOutputDirVariable, dir.string().c_str(), 1);
  const auto r = invoke({"exact", "--family", "boson-twisted", "--sites", "2", "--json", "r.json"});
  ::unsetenv(kOutputDirVariable);
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(std::filesystem::exists(dir / "r.json"));
}

}  // namespace
}  // namespace ringcasimir::workbench
