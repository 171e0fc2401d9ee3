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

#include <openssl/evp.h>

#include <algorithm>
#include <chrono>
#include <ctime>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>

#include "approx/format.hpp"

namespace approx::report {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr std::string_view kTool = "approx-adder";

json wide_json(Wide v) {
  if (v <= std::numeric_limits<std::uint64_t>::max()) return static_cast<std::uint64_t>(v);
  return to_decimal(v);
}

std::string opt_field(const std::optional<double>& v) {
  return v ? fmt_double(*v) : std::string();
}

json opt_json(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

json stream_json(const VectorStream& s) {
  json j;
  j["kind"] = s.kind == VectorStream::Kind::kExhaustive ? "exhaustive" : "mc";
  if (s.kind == VectorStream::Kind::kMonteCarlo) {
    j["count"] = s.count;
    j["seed"] = s.seed;
  }
  return j;
}

json spec_json(const AdderSpec& s) {
  return {{"arch", to_string(s.arch)},
          {"style", to_string(s.style)},
          {"width", s.width},
          {"k", s.approx_bits}};
}

// Published single-bit comparison: accurate, XOR and OR sum columns for
// (a, b, c) = 000 .. 111.
constexpr int kPublishedAccurate[8] = {0, 1, 1, 0, 1, 0, 0, 1};
constexpr int kPublishedXor[8] = {0, 0, 1, 1, 1, 1, 0, 0};
constexpr int kPublishedOr[8] = {0, 0, 1, 1, 1, 1, 1, 1};

template <class F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const StreamGuardError& e) {
    err << "error: " << e.what() << '\n';
    return static_cast<int>(ExitCode::kGuardViolation);
  } catch (const SpecError& e) {
    err << "error: " << e.what() << '\n';
    return static_cast<int>(ExitCode::kConfigError);
  } catch (const MissingCellError& e) {
    err << "error: " << e.what() << '\n';
    return static_cast<int>(ExitCode::kConfigError);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return static_cast<int>(ExitCode::kConfigError);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return static_cast<int>(ExitCode::kIoError);
  }
}

std::string status(bool ok) { return ok ? "PASS" : "FAIL"; }

}  // namespace

// ---- config ---------------------------------------------------------------

std::vector<AdderSpec> ExperimentConfig::specs() const {
  std::vector<AdderSpec> out;
  for (Architecture arch : archs) {
    for (ApproxStyle style : styles) {
      for (unsigned k : k_list) {
        AdderSpec s = AdderSpec::approximate(width, arch, k, style);
        s.validate();
        if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const AdderSpec& a, const AdderSpec& b) {
    return std::tuple(a.arch, a.style, a.approx_bits) < std::tuple(b.arch, b.style, b.approx_bits);
  });
  return out;
}

void ExperimentConfig::validate() const {
  if (archs.empty()) throw SpecError("no architecture selected");
  if (k_list.empty()) throw SpecError("no approximation size selected");
  if (styles.empty()) throw SpecError("no approximation style selected");
  if (formats.empty()) throw SpecError("no output format selected");
  (void)specs();
  VectorSource probe(stream, width);
}

bool ExperimentConfig::wants(Format f) const {
  return std::find(formats.begin(), formats.end(), f) != formats.end();
}

json ExperimentConfig::to_json() const {
  json j;
  j["width"] = width;
  for (auto a : archs) j["archs"].push_back(to_string(a));
  j["k_list"] = k_list;
  for (auto s : styles) j["styles"].push_back(to_string(s));
  j["stream"] = stream_json(stream);
  j["cells"] = cells_path ? json(*cells_path) : json(nullptr);
  j["table2"] = table2_path ? json(*table2_path) : json(nullptr);
  for (auto f : formats) j["formats"].push_back(f == Format::kCsv ? "csv" : "json");
  return j;
}

ExperimentConfig ExperimentConfig::from_json(const json& j, ExperimentConfig c) {
  if (j.contains("width")) c.width = j.at("width").get<unsigned>();
  if (j.contains("archs")) {
    c.archs.clear();
    for (const auto& a : j.at("archs")) c.archs.push_back(parse_architecture(a.get<std::string>()));
  }
  if (j.contains("k_list")) c.k_list = j.at("k_list").get<std::vector<unsigned>>();
  if (j.contains("styles")) {
    c.styles.clear();
    for (const auto& s : j.at("styles")) c.styles.push_back(parse_style(s.get<std::string>()));
  }
  if (j.contains("stream")) {
    const auto& s = j.at("stream");
    const std::string kind = s.value("kind", "exhaustive");
    if (kind == "exhaustive") {
      c.stream = VectorStream::exhaustive();
    } else if (kind == "mc") {
      c.stream = VectorStream::monte_carlo(s.value("count", std::uint64_t{100000}),
                                           s.value("seed", std::uint64_t{42}));
    } else {
      throw SpecError("unknown stream kind '" + kind + "'");
    }
  }
  if (j.contains("cells") && !j.at("cells").is_null()) c.cells_path = j.at("cells").get<std::string>();
  if (j.contains("table2") && !j.at("table2").is_null()) c.table2_path = j.at("table2").get<std::string>();
  if (j.contains("formats")) {
    c.formats.clear();
    for (const auto& f : j.at("formats")) {
      const auto name = f.get<std::string>();
      if (name == "csv") c.formats.push_back(Format::kCsv);
      else if (name == "json") c.formats.push_back(Format::kJson);
      else throw SpecError("unknown format '" + name + "'");
    }
  }
  return c;
}

// ---- manifest -------------------------------------------------------------

std::string sha256_hex(std::string_view data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("sha256 failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  for (unsigned i = 0; i < len; ++i) {
    out.push_back(kHex[md[i] >> 4]);
    out.push_back(kHex[md[i] & 15]);
  }
  return out;
}

RunManifest::RunManifest(std::string command, json config)
    : command_(std::move(command)), config_(std::move(config)) {}

void RunManifest::emit(const fs::path& out_dir, const std::string& name,
                       const std::string& content) {
  fs::create_directories(out_dir);
  const fs::path path = out_dir / name;
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path.string());
  f << content;
  if (!f) throw std::runtime_error("write failed for " + path.string());
  files_.push_back({name, sha256_hex(content), content.size()});
}

json RunManifest::to_json() const {
  json j;
  j["tool"] = kTool;
  j["version"] = APPROX_VERSION;
  j["command"] = command_;
  j["config"] = config_;
  j["seeds"] = seeds_;
  j["timestamp"] = utc_timestamp();
  j["files"] = json::array();
  for (const auto& f : files_) {
    j["files"].push_back({{"path", f.path}, {"sha256", f.sha256}, {"bytes", f.bytes}});
  }
  return j;
}

fs::path RunManifest::write(const fs::path& out_dir) const {
  fs::create_directories(out_dir);
  const fs::path path = out_dir / ("manifest_" + command_ + ".json");
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path.string());
  f << to_json().dump(2) << '\n';
  return path;
}

// ---- serialisation --------------------------------------------------------

json errors_json(const std::vector<SweepRow>& rows, const VectorStream& stream) {
  json out = json::array();
  for (const auto& row : rows) {
    const auto& r = row.report;
    json j = spec_json(row.spec);
    j["stream"] = stream_json(stream);
    j["vectors"] = r.vectors;
    j["mismatches"] = r.mismatches;
    j["ed_sum"] = wide_json(r.ed_sum);
    j["max_ed"] = wide_json(r.max_ed);
    j["error_rate"] = r.error_rate;
    j["med"] = r.med;
    j["nmed"] = r.nmed;
    j["mred"] = r.mred;
    out.push_back(std::move(j));
  }
  return out;
}

std::string costs_csv(const std::vector<CostReport>& reports) {
  std::ostringstream os;
  os << "arch,style,width,k,legend,area_um2,delay_ns,delay_structural,power_uW,pdp_uW_ns,"
        "pdp_model_uW_ns,baseline,area_red_pct,delay_red_pct,power_red_pct,pdp_red_pct\n";
  for (const auto& r : reports) {
    os << to_string(r.spec.arch) << ',' << to_string(r.spec.style) << ',' << r.spec.width
       << ',' << r.spec.approx_bits << ',' << r.legend.value_or("") << ','
       << fmt_double(r.area_um2) << ',' << fmt_double(r.delay_calibrated_ns) << ','
       << fmt_double(r.delay_structural) << ',' << opt_field(r.power_uw) << ','
       << opt_field(r.pdp) << ',' << opt_field(r.pdp_model) << ',' << r.baseline << ','
       << fmt_double(r.reductions.area_pct) << ',' << fmt_double(r.reductions.delay_pct)
       << ',' << opt_field(r.reductions.power_pct) << ',' << opt_field(r.reductions.pdp_pct)
       << '\n';
  }
  return os.str();
}

json costs_json(const std::vector<CostReport>& reports) {
  json out = json::array();
  for (const auto& r : reports) {
    json j = spec_json(r.spec);
    j["legend"] = r.legend ? json(*r.legend) : json(nullptr);
    j["area_um2"] = r.area_um2;
    j["delay_ns"] = r.delay_calibrated_ns;
    j["delay_structural"] = r.delay_structural;
    j["power_uW"] = opt_json(r.power_uw);
    j["pdp_uW_ns"] = opt_json(r.pdp);
    j["pdp_model_uW_ns"] = opt_json(r.pdp_model);
    j["baseline"] = r.baseline;
    j["reductions"] = {{"area_pct", r.reductions.area_pct},
                       {"delay_pct", r.reductions.delay_pct},
                       {"power_pct", opt_json(r.reductions.power_pct)},
                       {"pdp_pct", opt_json(r.reductions.pdp_pct)}};
    out.push_back(std::move(j));
  }
  return out;
}

std::string table2_repro_csv(const std::vector<ReproRow>& rows) {
  std::ostringstream os;
  os << "legend,arch,k,area_model_um2,area_ref_um2,area_rel_err_pct,delay_model_ns,"
        "delay_ref_ns,delay_err_ns,power_ref_uW,pdp_uW_ns,pdp_reduction_pct\n";
  for (const auto& r : rows) {
    os << r.legend << ',' << to_string(r.spec.arch) << ',' << r.spec.approx_bits << ','
       << fmt_double(r.area_model) << ',' << fmt_double(r.area_ref) << ','
       << fmt_double(r.area_rel_err_pct) << ',' << fmt_double(r.delay_model) << ','
       << fmt_double(r.delay_ref) << ',' << fmt_double(r.delay_err_ns) << ','
       << fmt_double(r.power_ref) << ',' << fmt_double(r.pdp) << ','
       << fmt_double(r.pdp_reduction_pct) << '\n';
  }
  return os.str();
}

json table2_repro_json(const std::vector<ReproRow>& rows) {
  json out = json::array();
  for (const auto& r : rows) {
    out.push_back({{"legend", r.legend},
                   {"arch", to_string(r.spec.arch)},
                   {"k", r.spec.approx_bits},
                   {"area_model_um2", r.area_model},
                   {"area_ref_um2", r.area_ref},
                   {"area_rel_err_pct", r.area_rel_err_pct},
                   {"delay_model_ns", r.delay_model},
                   {"delay_ref_ns", r.delay_ref},
                   {"delay_err_ns", r.delay_err_ns},
                   {"power_ref_uW", r.power_ref},
                   {"pdp_uW_ns", r.pdp},
                   {"pdp_reduction_pct", r.pdp_reduction_pct}});
  }
  return out;
}

std::string fig3_data(const std::vector<ReproRow>& rows) {
  std::ostringstream os;
  os << "# legend pdp_uW_ns\n";
  for (const auto& r : rows) os << r.legend << ' ' << fmt_fixed(r.pdp, 4) << '\n';
  return os.str();
}

std::string table1_csv() {
  std::ostringstream os;
  os << "a,b,c,accurate,approx_xor,xor_correct,approx_or,or_correct\n";
  for (const auto& r : table1()) {
    os << r.a << ',' << r.b << ',' << r.c << ',' << r.accurate << ',' << r.approx_xor << ','
       << r.xor_correct << ',' << r.approx_or << ',' << r.or_correct << '\n';
  }
  return os.str();
}

json table1_json() {
  json out = json::array();
  for (const auto& r : table1()) {
    out.push_back({{"a", int{r.a}},
                   {"b", int{r.b}},
                   {"c", int{r.c}},
                   {"accurate", int{r.accurate}},
                   {"approx_xor", int{r.approx_xor}},
                   {"xor_correct", r.xor_correct},
                   {"approx_or", int{r.approx_or}},
                   {"or_correct", r.or_correct}});
  }
  return out;
}

// ---- commands -------------------------------------------------------------

int cmd_build(const BuildOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Netlist nl = build_adder(opts.spec);
    const std::string text = to_text(nl);
    std::ostream& summary = opts.out ? out : err;
    if (opts.out) {
      fs::path path = *opts.out;
      if (fs::is_directory(path)) path /= describe(opts.spec) + ".netlist";
      std::ofstream f(path);
      if (!f) throw std::runtime_error("cannot write " + path.string());
      f << text;
      summary << "wrote " << path.string() << '\n';
    } else {
      out << text;
    }
    summary << describe(opts.spec) << ": " << nl.logic_gate_count() << " logic gates";
    for (GateKind k : {GateKind::kNot, GateKind::kAnd2, GateKind::kOr2, GateKind::kXor2,
                       GateKind::kAo21}) {
      if (auto c = nl.count(k)) summary << ", " << c << ' ' << to_string(k);
    }
    summary << '\n';
    return static_cast<int>(ExitCode::kOk);
  });
}

int cmd_simulate(const SimulateOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Simulator sim(build_adder(opts.spec), opts.isa);
    if (opts.single) {
      const OutputWord w = sim.evaluate(*opts.single);
      const InputVector oracle_in{opts.single->a, opts.single->b,
                                  sim.has_carry_in() && opts.single->c0};
      out << "sum=" << w.sum << " cout=" << w.cout << " value=" << to_decimal(w.value())
          << " exact=" << to_decimal(behavioral_accurate(oracle_in, sim.width()).value())
          << '\n';
      return static_cast<int>(ExitCode::kOk);
    }
    const auto vectors = stream_vectors(opts.stream, opts.spec.width);
    std::ostringstream trace;
    write_trace(trace, sim, vectors);

    json config = spec_json(opts.spec);
    config["stream"] = stream_json(opts.stream);
    RunManifest manifest("simulate", config);
    if (opts.stream.kind == VectorStream::Kind::kMonteCarlo) manifest.add_seed(opts.stream.seed);
    manifest.emit(opts.out_dir, "trace.csv", trace.str());
    manifest.write(opts.out_dir);

    // Cross-check against the closed-form model.
    std::vector<OutputWord> got(vectors.size());
    sim.evaluate(vectors, got);
    std::size_t disagreements = 0;
    for (std::size_t i = 0; i < vectors.size(); ++i) {
      InputVector v = vectors[i];
      if (!sim.has_carry_in()) v.c0 = false;
      disagreements += !(got[i] == behavioral(v, opts.spec));
    }
    out << describe(opts.spec) << ": simulated " << vectors.size() << " vectors ("
        << simd::to_string(sim.isa()) << "), " << disagreements
        << " disagreements with the closed-form model\n";
    return static_cast<int>(disagreements == 0 ? ExitCode::kOk : ExitCode::kClaimFailure);
  });
}

int cmd_errors(const ExperimentConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    config.validate();
    std::vector<SweepRow> rows;
    for (Architecture arch : config.archs) {
      auto part = sweep(config.width, arch, config.styles, config.k_list, config.stream, config.isa);
      rows.insert(rows.end(), part.begin(), part.end());
    }
    RunManifest manifest("errors", config.to_json());
    if (config.stream.kind == VectorStream::Kind::kMonteCarlo) manifest.add_seed(config.stream.seed);
    if (config.wants(Format::kCsv)) {
      std::ostringstream csv;
      write_errors_csv(csv, rows, config.stream);
      manifest.emit(config.out_dir, "errors.csv", csv.str());
    }
    if (config.wants(Format::kJson)) {
      manifest.emit(config.out_dir, "errors.json", errors_json(rows, config.stream).dump(2) + "\n");
    }
    manifest.write(config.out_dir);
    for (const auto& row : rows) {
      out << describe(row.spec) << ": ER=" << fmt_double(row.report.error_rate)
          << " MED=" << fmt_double(row.report.med)
          << " maxED=" << to_decimal(row.report.max_ed) << '\n';
    }
    return static_cast<int>(ExitCode::kOk);
  });
}

int cmd_costs(const ExperimentConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto specs = config.specs();
    const CellLibrary lib =
        config.cells_path ? CellLibrary::load(*config.cells_path) : CellLibrary::defaults();
    const Table2Reference table =
        config.table2_path ? Table2Reference::load(*config.table2_path) : Table2Reference::bundled();
    const DelayCalibration cal = calibrate_delay(table);

    std::vector<CostReport> reports;
    for (const auto& s : specs) reports.push_back(pdp_report(s, table, lib, cal));

    RunManifest manifest("costs", config.to_json());
    if (config.wants(Format::kCsv)) manifest.emit(config.out_dir, "costs.csv", costs_csv(reports));
    if (config.wants(Format::kJson)) {
      manifest.emit(config.out_dir, "costs.json", costs_json(reports).dump(2) + "\n");
    }

    const auto legends = reference_legends();
    const bool covers_table = std::all_of(legends.begin(), legends.end(), [&](const auto& l) {
      return std::find(specs.begin(), specs.end(), spec_for_legend(l)) != specs.end();
    });
    if (covers_table) {
      const auto repro = table2_repro(table, lib, cal);
      if (config.wants(Format::kCsv)) {
        manifest.emit(config.out_dir, "table2_repro.csv", table2_repro_csv(repro));
      }
      if (config.wants(Format::kJson)) {
        manifest.emit(config.out_dir, "table2_repro.json", table2_repro_json(repro).dump(2) + "\n");
      }
      manifest.emit(config.out_dir, "fig3_pdp.dat", fig3_data(repro));
    }
    manifest.write(config.out_dir);

    for (const auto& r : reports) {
      out << describe(r.spec) << ": area=" << fmt_fixed(r.area_um2, 2)
          << "um2 delay=" << fmt_fixed(r.delay_calibrated_ns, 3) << "ns";
      if (r.pdp) out << " power=" << fmt_fixed(*r.power_uw, 2) << "uW pdp=" << fmt_fixed(*r.pdp, 2);
      out << '\n';
    }
    return static_cast<int>(ExitCode::kOk);
  });
}

int cmd_table1(Format format, std::ostream& out) {
  if (format == Format::kJson) {
    out << table1_json().dump(2) << '\n';
  } else {
    out << table1_csv();
  }
  return static_cast<int>(ExitCode::kOk);
}

int cmd_reproduce(const ReproduceOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Table2Reference table =
        opts.table2_path ? Table2Reference::load(*opts.table2_path) : Table2Reference::bundled();
    const CellLibrary lib =
        opts.cells_path ? CellLibrary::load(*opts.cells_path) : CellLibrary::defaults();

    std::vector<Claim> checks;

    // Single-bit comparison table against its published transcription.
    {
      int mismatched = 0;
      const auto rows = table1();
      for (int i = 0; i < 8; ++i) {
        mismatched += rows[i].accurate != (kPublishedAccurate[i] != 0);
        mismatched += rows[i].approx_xor != (kPublishedXor[i] != 0);
        mismatched += rows[i].approx_or != (kPublishedOr[i] != 0);
        mismatched += rows[i].xor_correct != (kPublishedXor[i] == kPublishedAccurate[i]);
        mismatched += rows[i].or_correct != (kPublishedOr[i] == kPublishedAccurate[i]);
      }
      checks.push_back({"table1.mismatched_cells", double(mismatched), 0.0, 0.0, mismatched == 0});
    }

    // Exhaustive 8-bit equivalence of both accurate netlists with integer addition.
    {
      constexpr unsigned n = 8;
      const Simulator rca(build_adder(AdderSpec::accurate(n, Architecture::kRca)), opts.isa);
      const Simulator cla(build_adder(AdderSpec::accurate(n, Architecture::kCla)), opts.isa);
      std::size_t bad = 0;
      for (CarryIn c : {CarryIn::kZero, CarryIn::kOne}) {
        const auto vectors = stream_vectors(VectorStream::exhaustive(c), n);
        std::vector<OutputWord> r(vectors.size()), l(vectors.size());
        rca.evaluate(vectors, r);
        cla.evaluate(vectors, l);
        for (std::size_t i = 0; i < vectors.size(); ++i) {
          const OutputWord exact = behavioral_accurate(vectors[i], n);
          bad += !(r[i] == exact) + !(l[i] == exact);
        }
      }
      checks.push_back({"oracle.accurate_n8_mismatches", double(bad), 0.0, 0.0, bad == 0});
    }
    for (Architecture arch : {Architecture::kRca, Architecture::kCla}) {
      for (ApproxStyle style : {ApproxStyle::kOr, ApproxStyle::kXor}) {
        for (unsigned k : {2u, 4u, 6u}) {
          const AdderSpec spec = AdderSpec::approximate(8, arch, k, style);
          if (arch == Architecture::kCla && spec.accurate_bits() % 4 != 0) continue;
          bool ok = true;
          try {
            (void)measure(spec, VectorStream::exhaustive(), opts.isa);
          } catch (const std::logic_error&) {
            ok = false;
          }
          checks.push_back({"oracle.closed_form." + describe(spec), ok ? 1.0 : 0.0, 1.0, 0.0, ok});
        }
      }
    }

    // Cost model against the reference rows.
    const DelayCalibration cal = calibrate_delay(table);
    for (const auto& r : table2_repro(table, lib, cal)) {
      checks.push_back({"area_rel_err_pct." + r.legend, r.area_rel_err_pct, 0.0, 0.1,
                        std::abs(r.area_rel_err_pct) <= 0.1});
      checks.push_back({"delay_err_ns." + r.legend, r.delay_err_ns, 0.0, 0.02,
                        std::abs(r.delay_err_ns) <= 0.02 + 1e-12});
    }

    const ClaimsReport claims = reproduce_claims(table);
    checks.insert(checks.end(), claims.claims.begin(), claims.claims.end());

    std::size_t failed = 0;
    json j = json::array();
    std::ostringstream csv;
    csv << "id,status,computed,expected,tolerance\n";
    for (const auto& c : checks) {
      failed += !c.passed;
      out << status(c.passed) << "  " << c.id << "  computed=" << fmt_fixed(c.computed, 4);
      if (c.expected) out << " expected=" << fmt_double(*c.expected) << " tol=" << fmt_double(c.tolerance);
      out << '\n';
      csv << c.id << ',' << status(c.passed) << ',' << fmt_double(c.computed) << ','
          << (c.expected ? fmt_double(*c.expected) : "") << ','
          << (c.expected ? fmt_double(c.tolerance) : "") << '\n';
      j.push_back({{"id", c.id},
                   {"passed", c.passed},
                   {"computed", c.computed},
                   {"expected", opt_json(c.expected)},
                   {"tolerance", c.tolerance}});
    }
    out << (failed == 0 ? "all " + std::to_string(checks.size()) + " checks passed"
                        : std::to_string(failed) + " of " + std::to_string(checks.size()) +
                              " checks FAILED")
        << '\n';

    if (opts.out_dir) {
      json config = {{"table2", opts.table2_path ? json(*opts.table2_path) : json(nullptr)},
                     {"cells", opts.cells_path ? json(*opts.cells_path) : json(nullptr)}};
      RunManifest manifest("reproduce", config);
      manifest.emit(*opts.out_dir, "claims.csv", csv.str());
      manifest.emit(*opts.out_dir, "claims.json", j.dump(2) + "\n");
      manifest.write(*opts.out_dir);
    }
    return static_cast<int>(failed == 0 ? ExitCode::kOk : ExitCode::kClaimFailure);
  });
}

}  // namespace approx::report
