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

#include "approx/cost_model.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "approx/format.hpp"

namespace approx {

namespace {

constexpr unsigned kReferenceWidth = 32;

constexpr std::string_view kBundledTable2 =
    "legend,power_uW,delay_ns,area_um2\n"
    "RCA,35.18,3.35,154.52\n"
    "RCX1,32.28,2.94,143.34\n"
    "RCX2,27.98,2.53,132.15\n"
    "RCX3,23.69,2.12,120.97\n"
    "RCX4,19.36,1.70,109.79\n"
    "RCX5,16.41,1.29,98.61\n"
    "CLA,49.05,1.13,646.54\n"
    "CLX1,44.41,1.04,573.86\n"
    "CLX2,38.29,0.95,501.17\n"
    "CLX3,32.10,0.86,428.49\n"
    "CLX4,25.83,0.77,355.80\n"
    "CLX5,21.05,0.68,283.12\n";

// Bracketed percentage reductions printed beside each approximate row.
struct PublishedReduction {
  std::string_view legend;
  double power_pct;
  double delay_pct;
  double area_pct;
};

constexpr PublishedReduction kPublishedReductions[] = {
    {"RCX1", 8.2, 12.2, 7.2},   {"RCX2", 20.5, 24.5, 14.5}, {"RCX3", 32.7, 36.7, 21.7},
    {"RCX4", 45.0, 49.3, 28.9}, {"RCX5", 53.4, 61.5, 36.2}, {"CLX1", 9.5, 8.0, 11.2},
    {"CLX2", 21.9, 15.9, 22.5}, {"CLX3", 34.6, 23.9, 33.7}, {"CLX4", 47.3, 31.9, 45.0},
    {"CLX5", 57.1, 39.8, 56.2},
};

constexpr double kRowPctTolerance = 0.1;
constexpr double kMeanPctTolerance = 0.15;
// Published means are rounded to two decimals.
constexpr double kRoundedValueTolerance = 0.005;
constexpr double kSlack = 1e-9;

double parse_double(std::string_view tok, std::string_view what) {
  double v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw std::runtime_error("bad " + std::string(what) + " '" + std::string(tok) + "'");
  }
  return v;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  return out;
}

double mean_of(const std::vector<double>& v) {
  return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

std::string_view cell_for(ApproxStyle style) {
  return style == ApproxStyle::kXor ? "XOR2" : "OR2";
}

}  // namespace

// ---- cell library ---------------------------------------------------------

void CellLibrary::add(CellSpec cell) {
  if (!(cell.area_um2 > 0)) {
    throw std::runtime_error("cell " + cell.name + ": area must be positive");
  }
  if (!(cell.unit_delay >= 0)) {
    throw std::runtime_error("cell " + cell.name + ": unit delay must be non-negative");
  }
  std::string key = cell.name;
  cells_[key] = std::move(cell);
}

const CellSpec& CellLibrary::at(std::string_view cell) const {
  auto it = cells_.find(cell);
  if (it == cells_.end()) {
    throw MissingCellError("cell library '" + name + "' has no cell " + std::string(cell));
  }
  return it->second;
}

bool CellLibrary::contains(std::string_view cell) const { return cells_.contains(cell); }

double CellLibrary::unit_delay(GateKind kind) const {
  if (!is_logic(kind)) return 0;
  return at(to_string(kind)).unit_delay;
}

CellLibrary CellLibrary::defaults() {
  CellLibrary lib;
  lib.name = "saed32-min";
  lib.source = "32/28nm minimum-size cells; macro areas FA, OR2, XOR2, CLA4";
  lib.add({"FA", 4.83, 1});
  lib.add({"CLA4", 80.82, 1});
  lib.add({"OR2", 2.03, 1});
  lib.add({"XOR2", 4.32, 1});
  // Gate cells below only contribute unit delays; macro aggregation never
  // reads their areas.
  lib.add({"AND2", 2.03, 1});
  lib.add({"NOT", 1.27, 1});
  lib.add({"AO21", 2.54, 1});
  return lib;
}

CellLibrary CellLibrary::parse(std::istream& in) {
  CellLibrary lib;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view body = line;
    if (auto hash = body.find('#'); hash != std::string_view::npos) body = body.substr(0, hash);
    body = trim(body);
    if (body.empty()) continue;
    auto where = [&] { return "cell library line " + std::to_string(lineno) + ": "; };

    for (std::string_view meta : {"library=", "source="}) {
      if (body.starts_with(meta)) {
        (meta == "library=" ? lib.name : lib.source) = std::string(body.substr(meta.size()));
        body = {};
      }
    }
    if (body.empty()) continue;

    std::optional<std::string> name;
    std::optional<double> area, delay;
    std::istringstream fields{std::string(body)};
    std::string kv;
    while (fields >> kv) {
      auto eq = kv.find('=');
      if (eq == std::string::npos) throw std::runtime_error(where() + "expected key=value");
      std::string_view key = std::string_view(kv).substr(0, eq);
      std::string_view value = std::string_view(kv).substr(eq + 1);
      if (key == "cell") {
        name = std::string(value);
      } else if (key == "area_um2") {
        area = parse_double(value, "area_um2");
      } else if (key == "unit_delay") {
        delay = parse_double(value, "unit_delay");
      } else {
        throw std::runtime_error(where() + "unknown key '" + std::string(key) + "'");
      }
    }
    if (!name || !area || !delay) {
      throw std::runtime_error(where() + "cell records need cell, area_um2 and unit_delay");
    }
    try {
      lib.add({*name, *area, *delay});
    } catch (const std::runtime_error& e) {
      throw std::runtime_error(where() + e.what());
    }
  }
  return lib;
}

CellLibrary CellLibrary::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open cell library " + path);
  return parse(in);
}

void CellLibrary::write(std::ostream& out) const {
  out << "library=" << name << '\n';
  out << "source=" << source << '\n';
  for (const auto& [key, c] : cells_) {
    out << "cell=" << c.name << " area_um2=" << fmt_double(c.area_um2)
        << " unit_delay=" << fmt_double(c.unit_delay) << '\n';
  }
}

// ---- reference table ------------------------------------------------------

std::optional<std::string> legend_for(const AdderSpec& spec) {
  if (spec.width != kReferenceWidth) return std::nullopt;
  if (spec.style == ApproxStyle::kXor) return std::nullopt;
  const unsigned k = spec.approx_bits;
  if (k % 4 != 0 || k > 20) return std::nullopt;
  const bool rca = spec.arch == Architecture::kRca;
  if (k == 0) return std::string(rca ? "RCA" : "CLA");
  return std::string(rca ? "RCX" : "CLX") + std::to_string(k / 4);
}

AdderSpec spec_for_legend(std::string_view legend) {
  for (const auto& l : reference_legends()) {
    if (l != legend) continue;
    const Architecture arch = legend.starts_with("RC") ? Architecture::kRca : Architecture::kCla;
    const unsigned k = legend.size() == 4 ? 4u * static_cast<unsigned>(legend[3] - '0') : 0u;
    return AdderSpec::approximate(kReferenceWidth, arch, k, ApproxStyle::kOr);
  }
  throw std::invalid_argument("unknown legend '" + std::string(legend) + "'");
}

std::vector<std::string> reference_legends() {
  return {"RCA", "RCX1", "RCX2", "RCX3", "RCX4", "RCX5",
          "CLA", "CLX1", "CLX2", "CLX3", "CLX4", "CLX5"};
}

Table2Reference Table2Reference::bundled() {
  std::istringstream in{std::string(kBundledTable2)};
  return parse(in);
}

Table2Reference Table2Reference::parse(std::istream& in) {
  Table2Reference t;
  std::string line;
  bool header = true;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    auto cols = split(body, ',');
    if (header) {
      if (cols.size() != 4 || cols[0] != "legend" || cols[1] != "power_uW" ||
          cols[2] != "delay_ns" || cols[3] != "area_um2") {
        throw std::runtime_error("reference table: header must be legend,power_uW,delay_ns,area_um2");
      }
      header = false;
      continue;
    }
    if (cols.size() != 4) {
      throw std::runtime_error("reference table line " + std::to_string(lineno) +
                               ": expected 4 columns");
    }
    t.rows.push_back({std::string(cols[0]), parse_double(cols[1], "power"),
                      parse_double(cols[2], "delay"), parse_double(cols[3], "area")});
  }
  return t;
}

Table2Reference Table2Reference::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open reference table " + path);
  return parse(in);
}

void Table2Reference::write(std::ostream& out) const {
  out << "legend,power_uW,delay_ns,area_um2\n";
  for (const auto& r : rows) {
    out << r.legend << ',' << fmt_fixed(r.power_uw, 2) << ',' << fmt_fixed(r.delay_ns, 2)
        << ',' << fmt_fixed(r.area_um2, 2) << '\n';
  }
}

const ReferenceRow* Table2Reference::find(std::string_view legend) const {
  for (const auto& r : rows)
    if (r.legend == legend) return &r;
  return nullptr;
}

const ReferenceRow* Table2Reference::find(const AdderSpec& spec) const {
  auto legend = legend_for(spec);
  return legend ? find(*legend) : nullptr;
}

const ReferenceRow& Table2Reference::at(std::string_view legend) const {
  if (const auto* r = find(legend)) return *r;
  throw std::invalid_argument("reference table has no row " + std::string(legend));
}

// ---- delay ----------------------------------------------------------------

AffineFit fit_affine(const std::vector<std::pair<double, double>>& points) {
  if (points.size() < 2) {
    throw std::invalid_argument("affine fit needs at least two points");
  }
  const double n = static_cast<double>(points.size());
  double mx = 0, my = 0;
  for (auto [x, y] : points) {
    mx += x;
    my += y;
  }
  mx /= n;
  my /= n;
  double sxx = 0, sxy = 0;
  for (auto [x, y] : points) {
    sxx += (x - mx) * (x - mx);
    sxy += (x - mx) * (y - my);
  }
  if (sxx == 0) throw std::invalid_argument("affine fit needs distinct x values");
  const double slope = sxy / sxx;
  return {slope, my - slope * mx};
}

unsigned stage_width(Architecture arch) { return arch == Architecture::kRca ? 1 : 4; }

DelayCalibration calibrate_delay(const Table2Reference& table) {
  auto fit = [&](Architecture arch) {
    std::vector<std::pair<double, double>> pts;
    for (const auto& r : table.rows) {
      AdderSpec spec;
      try {
        spec = spec_for_legend(r.legend);
      } catch (const std::invalid_argument&) {
        continue;
      }
      if (spec.arch != arch) continue;
      pts.emplace_back(static_cast<double>(spec.accurate_bits()) / stage_width(arch),
                       r.delay_ns);
    }
    AffineFit f = fit_affine(pts);
    return DelayModelParams{f.slope, f.intercept, stage_width(arch)};
  };
  return {fit(Architecture::kRca), fit(Architecture::kCla)};
}

double calibrated_delay(const AdderSpec& spec, const DelayModelParams& params) {
  spec.validate();
  const double stages =
      static_cast<double>(spec.accurate_bits()) / static_cast<double>(params.stage_width);
  return params.d_stage * stages + params.d_fixed;
}

double structural_delay(const Netlist& netlist, const CellLibrary& lib) {
  if (auto v = topo_validate(netlist); !v.empty()) {
    throw std::invalid_argument("structural_delay: " + v.front().message);
  }
  std::vector<std::optional<double>> arrival(netlist.net_count());
  for (const Gate& g : netlist.gates()) {
    auto& at = arrival[g.output.index];
    if (g.kind == GateKind::kInput) {
      at = 0.0;
      continue;
    }
    std::optional<double> latest;
    for (NetId in : g.inputs) {
      if (auto a = arrival[in.index]) latest = std::max(latest.value_or(*a), *a);
    }
    if (latest) at = *latest + lib.unit_delay(g.kind);
  }
  double worst = 0;
  for (const auto& p : netlist.primary_outputs()) {
    if (auto a = arrival[p.net.index]) worst = std::max(worst, *a);
  }
  return worst;
}

// ---- area and reports -----------------------------------------------------

double area_of(const AdderSpec& spec, const CellLibrary& lib) {
  spec.validate();
  const double m = spec.accurate_bits();
  const double accurate = spec.arch == Architecture::kRca
                              ? m * lib.at(kFullAdderCell).area_um2
                              : (m / 4) * lib.at(kCla4Cell).area_um2;
  const double approximate =
      spec.is_approximate() ? spec.approx_bits * lib.at(cell_for(spec.style)).area_um2 : 0.0;
  return accurate + approximate;
}

double reduction_pct(double base, double value) { return 100.0 * (base - value) / base; }

CostReport pdp_report(const AdderSpec& spec, const Table2Reference& table,
                      const CellLibrary& lib, const DelayCalibration& cal) {
  spec.validate();
  const AdderSpec base = AdderSpec::accurate(spec.width, spec.arch);

  CostReport r;
  r.spec = spec;
  r.legend = legend_for(spec);
  r.area_um2 = area_of(spec, lib);
  r.delay_calibrated_ns = calibrated_delay(spec, cal);
  r.delay_structural = structural_delay(build_adder(spec), lib);
  r.baseline = describe(base);

  r.reductions.area_pct = reduction_pct(area_of(base, lib), r.area_um2);
  r.reductions.delay_pct = reduction_pct(calibrated_delay(base, cal), r.delay_calibrated_ns);

  if (const ReferenceRow* row = table.find(spec)) {
    r.power_uw = row->power_uw;
    r.pdp = row->power_uw * row->delay_ns;
    r.pdp_model = row->power_uw * r.delay_calibrated_ns;
    if (const ReferenceRow* base_row = table.find(base)) {
      r.reductions.power_pct = reduction_pct(base_row->power_uw, row->power_uw);
      r.reductions.pdp_pct =
          reduction_pct(base_row->power_uw * base_row->delay_ns, *r.pdp);
    }
  }
  return r;
}

std::vector<ReproRow> table2_repro(const Table2Reference& table, const CellLibrary& lib,
                                   const DelayCalibration& cal) {
  std::vector<ReproRow> out;
  for (const auto& legend : reference_legends()) {
    const ReferenceRow& ref = table.at(legend);
    const AdderSpec spec = spec_for_legend(legend);
    const ReferenceRow& base =
        table.at(spec.arch == Architecture::kRca ? "RCA" : "CLA");
    ReproRow row;
    row.legend = legend;
    row.spec = spec;
    row.area_model = area_of(spec, lib);
    row.area_ref = ref.area_um2;
    row.area_rel_err_pct = 100.0 * (row.area_model - ref.area_um2) / ref.area_um2;
    row.delay_model = calibrated_delay(spec, cal);
    row.delay_ref = ref.delay_ns;
    row.delay_err_ns = row.delay_model - ref.delay_ns;
    row.power_ref = ref.power_uw;
    row.pdp = ref.power_uw * ref.delay_ns;
    row.pdp_reduction_pct = reduction_pct(base.power_uw * base.delay_ns, row.pdp);
    out.push_back(row);
  }
  return out;
}

// ---- claims ---------------------------------------------------------------

bool ClaimsReport::all_passed() const {
  return std::all_of(claims.begin(), claims.end(), [](const Claim& c) { return c.passed; });
}

const Claim* ClaimsReport::find(std::string_view id) const {
  for (const auto& c : claims)
    if (c.id == id) return &c;
  return nullptr;
}

ClaimsReport reproduce_claims(const Table2Reference& table) {
  ClaimsReport report;
  auto check = [&](std::string id, double computed, double expected, double tol) {
    const bool ok = std::abs(computed - expected) <= tol + kSlack;
    report.claims.push_back({std::move(id), computed, expected, tol, ok});
  };
  auto info = [&](std::string id, double computed) {
    report.claims.push_back({std::move(id), computed, std::nullopt, 0, true});
  };
  auto pdp = [&](std::string_view legend) {
    const auto& r = table.at(legend);
    return r.power_uw * r.delay_ns;
  };

  const std::vector<std::string> rcx{"RCX1", "RCX2", "RCX3", "RCX4", "RCX5"};
  const std::vector<std::string> clx{"CLX1", "CLX2", "CLX3", "CLX4", "CLX5"};

  for (const auto& legend : reference_legends()) info("pdp." + legend, pdp(legend));

  // Per-row PDP reductions, endpoints checked against the headline ranges.
  const std::map<std::string, double, std::less<>> endpoints{
      {"RCX1", 19.5}, {"RCX5", 82.0}, {"CLX1", 16.7}, {"CLX5", 74.2}};
  for (const auto* group : {&rcx, &clx}) {
    const std::string base = group == &rcx ? "RCA" : "CLA";
    std::vector<double> reductions;
    for (const auto& legend : *group) {
      const double red = reduction_pct(pdp(base), pdp(legend));
      reductions.push_back(red);
      if (auto it = endpoints.find(legend); it != endpoints.end()) {
        check("pdp_reduction." + legend, red, it->second, kRowPctTolerance);
      } else {
        info("pdp_reduction." + legend, red);
      }
    }
    const bool increasing =
        std::adjacent_find(reductions.begin(), reductions.end(),
                           [](double x, double y) { return !(y > x); }) == reductions.end();
    check("pdp_reduction_increasing." + std::string(group == &rcx ? "rcx" : "clx"),
          increasing ? 1.0 : 0.0, 1.0, 0.0);
  }

  // Bracketed per-row reductions of power, delay and area.
  for (const auto& pub : kPublishedReductions) {
    const auto& row = table.at(pub.legend);
    const auto& base = table.at(pub.legend.starts_with("RC") ? "RCA" : "CLA");
    const std::string suffix = "." + std::string(pub.legend);
    check("power_reduction" + suffix, reduction_pct(base.power_uw, row.power_uw),
          pub.power_pct, kRowPctTolerance);
    check("delay_reduction" + suffix, reduction_pct(base.delay_ns, row.delay_ns),
          pub.delay_pct, kRowPctTolerance);
    check("area_reduction" + suffix, reduction_pct(base.area_um2, row.area_um2),
          pub.area_pct, kRowPctTolerance);
  }

  auto column_mean = [&](const std::vector<std::string>& legends, auto field) {
    std::vector<double> v;
    for (const auto& l : legends) v.push_back(field(table.at(l)));
    return mean_of(v);
  };
  auto pdp_of = [](const ReferenceRow& r) { return r.power_uw * r.delay_ns; };
  auto power_of = [](const ReferenceRow& r) { return r.power_uw; };
  auto delay_of = [](const ReferenceRow& r) { return r.delay_ns; };
  auto area_of_row = [](const ReferenceRow& r) { return r.area_um2; };

  const double mean_rcx = column_mean(rcx, pdp_of);
  const double mean_clx = column_mean(clx, pdp_of);
  info("mean_pdp.rcx", mean_rcx);
  info("mean_pdp.clx", mean_clx);
  check("mean_pdp_reduction.rcx_vs_rca", reduction_pct(pdp("RCA"), mean_rcx), 54.2,
        kMeanPctTolerance);
  check("mean_pdp_reduction.clx_vs_cla", reduction_pct(pdp("CLA"), mean_clx), 47.9,
        kMeanPctTolerance);
  check("mean_pdp_reduction.clx_vs_rcx", reduction_pct(mean_rcx, mean_clx), 46.5,
        kMeanPctTolerance);

  const double power_rcx = column_mean(rcx, power_of);
  const double power_clx = column_mean(clx, power_of);
  check("mean_power.clx", power_clx, 32.34, kRoundedValueTolerance);
  check("mean_power.rcx", power_rcx, 23.94, kRoundedValueTolerance);
  check("mean_power_reduction.rcx_vs_clx", reduction_pct(power_clx, power_rcx), 26.0,
        kMeanPctTolerance);
  const double delay_rcx = column_mean(rcx, delay_of);
  const double delay_clx = column_mean(clx, delay_of);
  check("mean_delay.rcx", delay_rcx, 2.12, kRoundedValueTolerance);
  check("mean_delay.clx", delay_clx, 0.86, kRoundedValueTolerance);
  check("mean_delay_reduction.clx_vs_rcx", reduction_pct(delay_rcx, delay_clx), 59.4,
        kMeanPctTolerance);
  check("mean_area_reduction.rcx_vs_clx",
        reduction_pct(column_mean(clx, area_of_row), column_mean(rcx, area_of_row)), 71.8,
        kMeanPctTolerance);
  return report;
}

}  // namespace approx
