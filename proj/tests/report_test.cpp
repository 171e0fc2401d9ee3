// Copyright 2026 The approx-adders Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "approx/report.hpp"

#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <sstream>

namespace approx::report {
namespace {

namespace fs = std::filesystem;

// Fresh, empty scratch directory per test.
fs::path scratch(const std::string& name) {
  const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
  fs::path dir = fs::temp_directory_path() / "approx_report_test" /
                 (std::string(info->test_suite_name()) + "." + info->name() + "." + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream is(text);
  for (std::string l; std::getline(is, l);) out.push_back(l);
  return out;
}

ExperimentConfig errors_config(const fs::path& out) {
  ExperimentConfig c;
  c.width = 8;
  c.archs = {Architecture::kRca, Architecture::kCla};
  c.k_list = {0, 2, 4, 6};
  c.styles = {ApproxStyle::kOr, ApproxStyle::kXor};
  c.stream = VectorStream::exhaustive();
  c.out_dir = out;
  return c;
}

ExperimentConfig reference_sweep(const fs::path& out) {
  ExperimentConfig c;
  c.width = 32;
  c.k_list = {0, 4, 8, 12, 16, 20};
  c.out_dir = out;
  return c;
}

TEST(CmdBuild, Rca32Has160Gates) {
  const fs::path dir = scratch("out");
  std::ostringstream out, err;
  ASSERT_EQ(cmd_build({AdderSpec::accurate(32, Architecture::kRca), dir / "rca.netlist"}, out, err), 0)
      << err.str();
  std::ifstream f(dir / "rca.netlist");
  const Netlist nl = read_netlist(f);
  EXPECT_EQ(nl.logic_gate_count(), 160u);
  EXPECT_NE(out.str().find("160 logic gates"), std::string::npos) << out.str();
}

TEST(CmdBuild, DirectoryTargetUsesSpecName) {
  const fs::path dir = scratch("out");
  std::ostringstream out, err;
  const auto spec = AdderSpec::approximate(16, Architecture::kCla, 8, ApproxStyle::kXor);
  ASSERT_EQ(cmd_build({spec, dir}, out, err), 0) << err.str();
  EXPECT_TRUE(fs::exists(dir / (describe(spec) + ".netlist")));
}

TEST(CmdBuild, MisalignedClaIsConfigError) {
  std::ostringstream out, err;
  AdderSpec bad{32, Architecture::kCla, 6, ApproxStyle::kOr};
  EXPECT_EQ(cmd_build({bad, std::nullopt}, out, err), static_cast<int>(ExitCode::kConfigError));
  EXPECT_NE(err.str().find("CLA accurate part must be nibble-aligned"), std::string::npos)
      << err.str();
}

TEST(CmdBuild, LowSumBitsAreSingleOrGates) {
  std::ostringstream out, err;
  const auto spec = AdderSpec::approximate(8, Architecture::kRca, 4, ApproxStyle::kOr);
  ASSERT_EQ(cmd_build({spec, std::nullopt}, out, err), 0);
  std::istringstream in(out.str());
  const Netlist nl = read_netlist(in);
  for (unsigned i = 0; i < 4; ++i) {
    const NetId sum = *nl.find_output("SUM" + std::to_string(i));
    const NetId a = *nl.find_input("A" + std::to_string(i));
    const NetId b = *nl.find_input("B" + std::to_string(i));
    bool found = false;
    for (const auto& g : nl.gates()) {
      if (g.output != sum) continue;
      found = true;
      EXPECT_EQ(g.kind, GateKind::kOr2);
      ASSERT_EQ(g.inputs.size(), 2u);
      EXPECT_TRUE((g.inputs[0] == a && g.inputs[1] == b) || (g.inputs[0] == b && g.inputs[1] == a));
    }
    EXPECT_TRUE(found) << i;
  }
}

TEST(CmdErrors, ByteIdenticalAcrossRuns) {
  const fs::path a = scratch("a"), b = scratch("b");
  std::ostringstream out, err;
  ExperimentConfig c = errors_config(a);
  c.k_list = {0, 4};
  c.stream = VectorStream::monte_carlo(20000, 99);
  ASSERT_EQ(cmd_errors(c, out, err), 0) << err.str();
  c.out_dir = b;
  ASSERT_EQ(cmd_errors(c, out, err), 0) << err.str();
  for (const char* f : {"errors.csv", "errors.json"}) {
    EXPECT_FALSE(slurp(a / f).empty()) << f;
    EXPECT_EQ(slurp(a / f), slurp(b / f)) << f;
  }
}

TEST(CmdErrors, AccurateRowAndOracleRow) {
  const fs::path dir = scratch("out");
  std::ostringstream out, err;
  ExperimentConfig c = errors_config(dir);
  c.archs = {Architecture::kRca};
  ASSERT_EQ(cmd_errors(c, out, err), 0) << err.str();
  const auto rows = lines(slurp(dir / "errors.csv"));
  ASSERT_EQ(rows.size(), 8u);
  EXPECT_EQ(rows[0], "arch,style,width,k,stream,vectors,mismatches,ed_sum,max_ed,error_rate,med,nmed,mred");
  EXPECT_EQ(rows[1], "rca,none,8,0,exhaustive,65536,0,0,0,0,0,0,0");
  EXPECT_EQ(rows[3],
            "rca,or,8,4,exhaustive,65536,44800,245760,15,0.68359375,3.75,0.0146484375,"
            "0.0191272351332463");

  const auto j = nlohmann::json::parse(slurp(dir / "errors.json"));
  ASSERT_EQ(j.size(), 7u);
  EXPECT_EQ(j[2]["med"].get<double>(), 3.75);
}

TEST(CmdErrors, GuardViolationExitCode) {
  const fs::path dir = scratch("out");
  std::ostringstream out, err;
  ExperimentConfig c = errors_config(dir);
  c.width = 32;
  c.k_list = {0};
  EXPECT_EQ(cmd_errors(c, out, err), static_cast<int>(ExitCode::kGuardViolation)) << err.str();
}

TEST(CmdErrors, InvalidSpecIsConfigError) {
  const fs::path dir = scratch("out");
  std::ostringstream out, err;
  ExperimentConfig c = errors_config(dir);
  c.k_list = {9};
  EXPECT_EQ(cmd_errors(c, out, err), static_cast<int>(ExitCode::kConfigError));
}

TEST(CmdErrors, ManifestListsChecksums) {
  const fs::path dir = scratch("out");
  std::ostringstream out, err;
  ExperimentConfig c = errors_config(dir);
  c.k_list = {0, 4};
  c.stream = VectorStream::monte_carlo(1000, 7);
  ASSERT_EQ(cmd_errors(c, out, err), 0);
  const auto m = nlohmann::json::parse(slurp(dir / "manifest_errors.json"));
  EXPECT_EQ(m["command"], "errors");
  EXPECT_EQ(m["seeds"], nlohmann::json::array({7}));
  EXPECT_TRUE(m.contains("timestamp"));
  EXPECT_EQ(m["version"], APPROX_VERSION);
  ASSERT_EQ(m["files"].size(), 2u);
  for (const auto& f : m["files"]) {
    const std::string content = slurp(dir / f["path"].get<std::string>());
    EXPECT_EQ(f["sha256"], sha256_hex(content));
    EXPECT_EQ(f["bytes"].get<std::size_t>(), content.size());
  }
  EXPECT_EQ(ExperimentConfig::from_json(m["config"], ExperimentConfig{}).to_json(), m["config"]);
}

TEST(CmdCosts, PaperSweepArtifacts) {
  const fs::path dir = scratch("out");
  std::ostringstream out, err;
  ASSERT_EQ(cmd_costs(reference_sweep(dir), out, err), 0) << err.str();
  for (const char* f : {"costs.csv", "costs.json", "table2_repro.csv", "table2_repro.json",
                        "fig3_pdp.dat", "manifest_costs.json"})
    EXPECT_TRUE(fs::exists(dir / f)) << f;

  const auto repro = nlohmann::json::parse(slurp(dir / "table2_repro.json"));
  ASSERT_EQ(repro.size(), 12u);
  for (const auto& r : repro) EXPECT_LT(std::abs(r["area_rel_err_pct"].get<double>()), 0.1) << r;

  const auto fig = lines(slurp(dir / "fig3_pdp.dat"));
  ASSERT_EQ(fig.size(), 13u);
  EXPECT_EQ(fig[0], "# legend pdp_uW_ns");
  EXPECT_EQ(fig[6], "RCX5 21.1689");
  double rcx5 = 0, min_rca = 1e9;
  for (std::size_t i = 1; i <= 6; ++i) {
    std::istringstream row(fig[i]);
    std::string legend;
    double pdp;
    row >> legend >> pdp;
    min_rca = std::min(min_rca, pdp);
    if (legend == "RCX5") rcx5 = pdp;
  }
  EXPECT_EQ(rcx5, min_rca);
  EXPECT_NEAR(rcx5, 21.17, 0.005);
}

TEST(CmdCosts, NonTableSpecHasEmptyPowerFields) {
  const fs::path dir = scratch("out");
  std::ostringstream out, err;
  ExperimentConfig c = reference_sweep(dir);
  c.archs = {Architecture::kRca};
  c.k_list = {7};
  ASSERT_EQ(cmd_costs(c, out, err), 0) << err.str();
  EXPECT_FALSE(fs::exists(dir / "fig3_pdp.dat"));
  const auto rows = lines(slurp(dir / "costs.csv"));
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[1].rfind("rca,or,32,7,,", 0), 0u) << rows[1];
  // power, pdp, pdp_model, power_red, pdp_red are blank
  std::vector<std::string> fields;
  std::istringstream is(rows[1]);
  for (std::string f; std::getline(is, f, ',');) fields.push_back(f);
  fields.resize(16);
  for (std::size_t i : {8u, 9u, 10u, 14u, 15u}) EXPECT_EQ(fields[i], "") << i;
  EXPECT_EQ(fields[11], "rca-n32-k0");
}

TEST(CmdCosts, MissingCellLibraryIsIoError) {
  const fs::path dir = scratch("out");
  std::ostringstream out, err;
  ExperimentConfig c = reference_sweep(dir);
  c.cells_path = (dir / "nope.txt").string();
  EXPECT_EQ(cmd_costs(c, out, err), static_cast<int>(ExitCode::kIoError));
}

TEST(CmdCosts, DeterministicData) {
  const fs::path a = scratch("a"), b = scratch("b");
  std::ostringstream out, err;
  ASSERT_EQ(cmd_costs(reference_sweep(a), out, err), 0);
  ASSERT_EQ(cmd_costs(reference_sweep(b), out, err), 0);
  for (const char* f : {"costs.csv", "costs.json", "table2_repro.csv", "table2_repro.json", "fig3_pdp.dat"})
    EXPECT_EQ(slurp(a / f), slurp(b / f)) << f;
}

TEST(CmdReproduce, DefaultRunPasses) {
  const fs::path dir = scratch("out");
  std::ostringstream out, err;
  ReproduceOptions o;
  o.out_dir = dir;
  ASSERT_EQ(cmd_reproduce(o, out, err), 0) << out.str() << err.str();
  EXPECT_EQ(out.str().find("FAIL"), std::string::npos);
  for (const char* id : {"mean_pdp_reduction.rcx_vs_rca", "mean_pdp_reduction.clx_vs_cla",
                         "mean_pdp_reduction.clx_vs_rcx"})
    EXPECT_NE(out.str().find(id), std::string::npos) << id;
  EXPECT_TRUE(fs::exists(dir / "claims.csv"));
}

TEST(CmdReproduce, CorruptedTableFails) {
  const fs::path dir = scratch("out");
  Table2Reference t = Table2Reference::bundled();
  for (auto& r : t.rows)
    if (r.legend == "CLX2") r.power_uw *= 1.1;
  {
    std::ofstream f(dir / "bad.csv");
    t.write(f);
  }
  std::ostringstream out, err;
  ReproduceOptions o;
  o.table2_path = (dir / "bad.csv").string();
  EXPECT_EQ(cmd_reproduce(o, out, err), static_cast<int>(ExitCode::kClaimFailure));
  EXPECT_NE(out.str().find("FAIL"), std::string::npos);
}

TEST(CmdTable1, CsvMatchesTable) {
  std::ostringstream out;
  ASSERT_EQ(cmd_table1(Format::kCsv, out), 0);
  const auto rows = lines(out.str());
  ASSERT_EQ(rows.size(), 9u);
  EXPECT_EQ(rows[0], "a,b,c,accurate,approx_xor,xor_correct,approx_or,or_correct");
  EXPECT_EQ(rows[1], "0,0,0,0,0,1,0,1");
  EXPECT_EQ(rows[2], "0,0,1,1,0,0,0,0");
  EXPECT_EQ(rows[8], "1,1,1,1,0,0,1,1");
}

TEST(CmdSimulate, TraceAndManifest) {
  const fs::path dir = scratch("out");
  std::ostringstream out, err;
  SimulateOptions o;
  o.spec = AdderSpec::approximate(8, Architecture::kRca, 2, ApproxStyle::kXor);
  o.stream = VectorStream::monte_carlo(50, 3);
  o.out_dir = dir;
  ASSERT_EQ(cmd_simulate(o, out, err), 0) << err.str();
  EXPECT_EQ(lines(slurp(dir / "trace.csv")).size(), 51u);
  EXPECT_TRUE(fs::exists(dir / "manifest_simulate.json"));
}

TEST(Config, JsonRoundTrip) {
  ExperimentConfig c;
  c.width = 16;
  c.archs = {Architecture::kCla};
  c.k_list = {4, 8};
  c.styles = {ApproxStyle::kXor, ApproxStyle::kOr};
  c.stream = VectorStream::monte_carlo(123, 456);
  c.cells_path = "cells.txt";
  c.formats = {Format::kJson};
  const ExperimentConfig back = ExperimentConfig::from_json(c.to_json(), ExperimentConfig{});
  EXPECT_EQ(back.to_json(), c.to_json());
  EXPECT_EQ(back.specs(), c.specs());
  EXPECT_FALSE(back.wants(Format::kCsv));
}

TEST(Config, SpecsSortedAndDeduplicated) {
  ExperimentConfig c;
  c.width = 8;
  c.archs = {Architecture::kCla, Architecture::kRca};
  c.k_list = {4, 0, 4};
  c.styles = {ApproxStyle::kXor, ApproxStyle::kOr};
  const auto specs = c.specs();
  ASSERT_EQ(specs.size(), 6u);
  EXPECT_EQ(describe(specs[0]), "rca-n8-k0");
  EXPECT_EQ(specs[3].arch, Architecture::kCla);
  EXPECT_EQ(specs[1].style, ApproxStyle::kOr);
  EXPECT_EQ(specs[2].style, ApproxStyle::kXor);
}

TEST(Manifest, Sha256KnownVector) {
  EXPECT_EQ(sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

}  // namespace
}  // namespace approx::report
