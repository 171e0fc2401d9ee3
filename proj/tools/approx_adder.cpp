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

// approx-adder: build, simulate and cost accurate/approximate RCA and CLA
// adders.
//
//   approx-adder build --arch cla --width 32 --approx 8 --style or --out cla.netlist
//   approx-adder errors --width 8 --approx 0,2,4,6 --style or,xor --out results
//   approx-adder costs --out results
//   approx-adder reproduce

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "approx/report.hpp"

namespace {

using approx::report::ExitCode;

struct CommonFlags {
  std::vector<std::string> archs;
  unsigned width = 0;
  std::vector<unsigned> approx;
  std::vector<std::string> styles;
  std::string stream;
  std::uint64_t count = 0;
  std::uint64_t seed = 0;
  std::string cells;
  std::string table2;
  std::string out;
  std::vector<std::string> formats;
  std::string isa = "auto";
  std::string config;
};

approx::AdderSpec single_spec(const CommonFlags& f) {
  if (f.archs.size() != 1) throw approx::SpecError("give exactly one --arch");
  if (f.approx.size() > 1) throw approx::SpecError("give at most one --approx");
  if (f.styles.size() > 1) throw approx::SpecError("give at most one --style");
  const unsigned k = f.approx.empty() ? 0 : f.approx.front();
  const auto style = f.styles.empty() ? approx::ApproxStyle::kOr : approx::parse_style(f.styles.front());
  return approx::AdderSpec::approximate(f.width, approx::parse_architecture(f.archs.front()), k,
                                        style);
}

approx::VectorStream stream_of(const CommonFlags& f, unsigned width) {
  std::string kind = f.stream;
  if (kind.empty()) kind = width <= 8 ? "exhaustive" : "mc";
  if (kind == "exhaustive") return approx::VectorStream::exhaustive();
  if (kind == "mc") return approx::VectorStream::monte_carlo(f.count, f.seed);
  throw approx::SpecError("unknown stream '" + kind + "' (expected exhaustive or mc)");
}

approx::report::ExperimentConfig experiment(const CommonFlags& f, const CLI::App* sub) {
  approx::report::ExperimentConfig c;
  if (!f.config.empty()) {
    std::ifstream in(f.config);
    if (!in) throw std::runtime_error("cannot open config " + f.config);
    c = approx::report::ExperimentConfig::from_json(nlohmann::json::parse(in), c);
  }
  // Flags override the config file; without one every registered flag applies.
  auto given = [&](const char* name) {
    const CLI::Option* opt = sub->get_option_no_throw(name);
    return opt != nullptr && (opt->count() > 0 || f.config.empty());
  };
  if (given("--width")) c.width = f.width;
  if (given("--arch")) {
    c.archs.clear();
    for (const auto& a : f.archs) c.archs.push_back(approx::parse_architecture(a));
  }
  if (given("--approx")) c.k_list = f.approx;
  if (given("--style")) {
    c.styles.clear();
    for (const auto& s : f.styles) c.styles.push_back(approx::parse_style(s));
  }
  if (given("--stream") || given("--count") || given("--seed")) c.stream = stream_of(f, c.width);
  if (!f.cells.empty()) c.cells_path = f.cells;
  if (!f.table2.empty()) c.table2_path = f.table2;
  if (given("--format")) {
    c.formats.clear();
    for (const auto& name : f.formats) {
      c.formats.push_back(name == "json" ? approx::report::Format::kJson
                                         : approx::report::Format::kCsv);
    }
  }
  c.out_dir = f.out.empty() ? "." : f.out;
  c.isa = approx::simd::parse_isa(f.isa);
  return c;
}

void add_spec_flags(CLI::App* sub, CommonFlags& f, bool multi) {
  auto* arch = sub->add_option("--arch", f.archs, "Architecture: rca or cla")
                   ->check(CLI::IsMember({"rca", "cla"}, CLI::ignore_case));
  auto* k = sub->add_option("--approx", f.approx, "Approximation size k (low bits without carry)");
  auto* style = sub->add_option("--style", f.styles, "Approximate sum gate: or or xor")
                    ->check(CLI::IsMember({"or", "xor"}, CLI::ignore_case));
  if (multi) {
    arch->delimiter(',');
    k->delimiter(',');
    style->delimiter(',');
  }
  sub->add_option("--width", f.width, "Adder width n")->check(CLI::Range(1, 64));
}

void add_stream_flags(CLI::App* sub, CommonFlags& f) {
  sub->add_option("--stream", f.stream, "exhaustive or mc (default: exhaustive for n <= 8)")
      ->check(CLI::IsMember({"exhaustive", "mc"}));
  sub->add_option("--count", f.count, "Monte Carlo vector count");
  sub->add_option("--seed", f.seed, "Monte Carlo seed (std::mt19937_64)");
  sub->add_option("--isa", f.isa, "Evaluation kernel: auto, scalar or avx2")
      ->check(CLI::IsMember({"auto", "scalar", "avx2"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Accurate and approximate RCA/CLA adders: netlists, error metrics, cost model"};
  app.set_version_flag("--version", std::string(APPROX_VERSION));
  app.require_subcommand(1);

  CommonFlags build_f{{"rca"}, 32, {}, {}, "", 0, 0, "", "", "", {}, "auto", ""};
  auto* build = app.add_subcommand("build", "Write the structural netlist of one adder");
  add_spec_flags(build, build_f, false);
  build->add_option("--out", build_f.out, "Output file or directory (default: stdout)");

  CommonFlags sim_f{{"rca"}, 32, {}, {}, "mc", 1000, 42, "", "", ".", {}, "auto", ""};
  std::optional<std::uint64_t> sim_a, sim_b;
  bool sim_c0 = false;
  auto* simulate = app.add_subcommand("simulate", "Simulate one adder; trace CSV or a single vector");
  add_spec_flags(simulate, sim_f, false);
  add_stream_flags(simulate, sim_f);
  simulate->add_option("--a", sim_a, "Single-vector mode: augend");
  simulate->add_option("--b", sim_b, "Single-vector mode: addend");
  simulate->add_flag("--c0", sim_c0, "Single-vector mode: carry-in 1");
  simulate->add_option("--out", sim_f.out, "Output directory");

  CommonFlags err_f{{"rca", "cla"}, 8, {0, 2, 4, 6}, {"or", "xor"}, "", 100000, 42, "", "", ".",
                    {"csv", "json"}, "auto", ""};
  auto* errors = app.add_subcommand("errors", "Error-metric sweep over approximation sizes");
  add_spec_flags(errors, err_f, true);
  add_stream_flags(errors, err_f);
  errors->add_option("--out", err_f.out, "Output directory");
  errors->add_option("--format", err_f.formats, "csv, json or both")
      ->delimiter(',')
      ->check(CLI::IsMember({"csv", "json"}));
  errors->add_option("--config", err_f.config, "JSON experiment config; flags override it");

  CommonFlags cost_f{{"rca", "cla"}, 32, {0, 4, 8, 12, 16, 20}, {"or"}, "exhaustive", 0, 0, "", "",
                     ".", {"csv", "json"}, "auto", ""};
  auto* costs = app.add_subcommand("costs", "Area/delay/power/PDP reports and table reproduction");
  add_spec_flags(costs, cost_f, true);
  costs->add_option("--cells", cost_f.cells, "Cell library file");
  costs->add_option("--table2", cost_f.table2, "Reference measurement table (CSV)");
  costs->add_option("--out", cost_f.out, "Output directory");
  costs->add_option("--format", cost_f.formats, "csv, json or both")
      ->delimiter(',')
      ->check(CLI::IsMember({"csv", "json"}));
  costs->add_option("--config", cost_f.config, "JSON experiment config; flags override it");

  approx::report::ReproduceOptions repro;
  std::string repro_isa = "auto", repro_out;
  auto* reproduce = app.add_subcommand("reproduce", "Check every published figure; PASS/FAIL per claim");
  reproduce->add_option("--table2", repro.table2_path, "Reference measurement table (CSV)");
  reproduce->add_option("--cells", repro.cells_path, "Cell library file");
  reproduce->add_option("--out", repro_out, "Also write claims.csv/json here");
  reproduce->add_option("--isa", repro_isa, "Evaluation kernel")
      ->check(CLI::IsMember({"auto", "scalar", "avx2"}));

  std::string t1_format = "csv";
  auto* t1 = app.add_subcommand("table1", "Single-bit accurate vs OR/XOR sum comparison");
  t1->add_option("--format", t1_format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (*build) {
      approx::report::BuildOptions opts{single_spec(build_f), std::nullopt};
      if (!build_f.out.empty()) opts.out = build_f.out;
      return approx::report::cmd_build(opts, std::cout, std::cerr);
    }
    if (*simulate) {
      approx::report::SimulateOptions opts;
      opts.spec = single_spec(sim_f);
      opts.stream = stream_of(sim_f, sim_f.width);
      opts.out_dir = sim_f.out;
      opts.isa = approx::simd::parse_isa(sim_f.isa);
      if (sim_a || sim_b) opts.single = approx::InputVector{sim_a.value_or(0), sim_b.value_or(0), sim_c0};
      return approx::report::cmd_simulate(opts, std::cout, std::cerr);
    }
    if (*errors) return approx::report::cmd_errors(experiment(err_f, errors), std::cout, std::cerr);
    if (*costs) return approx::report::cmd_costs(experiment(cost_f, costs), std::cout, std::cerr);
    if (*reproduce) {
      repro.isa = approx::simd::parse_isa(repro_isa);
      if (!repro_out.empty()) repro.out_dir = repro_out;
      return approx::report::cmd_reproduce(repro, std::cout, std::cerr);
    }
    if (*t1) {
      return approx::report::cmd_table1(
          t1_format == "json" ? approx::report::Format::kJson : approx::report::Format::kCsv,
          std::cout);
    }
  } catch (const approx::SpecError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return static_cast<int>(ExitCode::kConfigError);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return static_cast<int>(ExitCode::kConfigError);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return static_cast<int>(ExitCode::kIoError);
  }
  return static_cast<int>(ExitCode::kOk);
}
