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

#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "approx/adders.hpp"
#include "approx/netlist.hpp"

namespace approx {

/// A cell the library has no entry for.
class MissingCellError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CellSpec {
  std::string name;
  double area_um2 = 0;
  double unit_delay = 0;  // dimensionless gate-delay weight

  friend bool operator==(const CellSpec&, const CellSpec&) = default;
};

/// Cell name constants for the two macro cells.
inline constexpr std::string_view kFullAdderCell = "FA";
inline constexpr std::string_view kCla4Cell = "CLA4";

/// Area and unit-delay table keyed by cell name. Gate cells are named after
/// GateKind (NOT, AND2, OR2, XOR2, AO21); FA and CLA4 are macro cells used
/// for area aggregation.
///
/// File format, one record per line, '#' starts a comment:
///
///     library=saed32-min
///     source=free text up to end of line
///     cell=FA area_um2=4.83 unit_delay=1
class CellLibrary {
 public:
  std::string name;
  std::string source;

  void add(CellSpec cell);
  /// Throws MissingCellError.
  const CellSpec& at(std::string_view cell) const;
  bool contains(std::string_view cell) const;
  /// INPUT and CONST0 are not cells and weigh 0.
  double unit_delay(GateKind kind) const;
  const std::map<std::string, CellSpec, std::less<>>& cells() const { return cells_; }

  /// FA 4.83, OR2 2.03, XOR2 4.32 and CLA4 80.82 um^2; unit delay 1 per gate.
  static CellLibrary defaults();
  /// Throws std::runtime_error on malformed records or invariant violations.
  static CellLibrary parse(std::istream& in);
  static CellLibrary load(const std::string& path);
  void write(std::ostream& out) const;

  friend bool operator==(const CellLibrary&, const CellLibrary&) = default;

 private:
  std::map<std::string, CellSpec, std::less<>> cells_;
};

/// One published measurement: 32-bit adder, power in uW, delay in ns,
/// area in um^2.
struct ReferenceRow {
  std::string legend;
  double power_uw = 0;
  double delay_ns = 0;
  double area_um2 = 0;

  friend bool operator==(const ReferenceRow&, const ReferenceRow&) = default;
};

/// Legend of a 32-bit OR-style configuration with k in {0, 4, ..., 20}:
/// RCA, RCX1..RCX5, CLA, CLX1..CLX5.
std::optional<std::string> legend_for(const AdderSpec& spec);
/// Inverse of legend_for. Throws std::invalid_argument.
AdderSpec spec_for_legend(std::string_view legend);
/// The twelve legends in table order.
std::vector<std::string> reference_legends();

/// Published power/delay/area measurements of the twelve 32-bit adders.
///
/// CSV with header `legend,power_uW,delay_ns,area_um2`.
class Table2Reference {
 public:
  std::vector<ReferenceRow> rows;

  /// Compiled-in copy of data/table2.csv.
  static Table2Reference bundled();
  static Table2Reference parse(std::istream& in);
  static Table2Reference load(const std::string& path);
  void write(std::ostream& out) const;

  const ReferenceRow* find(std::string_view legend) const;
  const ReferenceRow* find(const AdderSpec& spec) const;
  /// Throws std::invalid_argument when the legend is absent.
  const ReferenceRow& at(std::string_view legend) const;
};

/// Affine delay model: d_stage * (m / stage_width) + d_fixed, m = n - k.
struct DelayModelParams {
  double d_stage = 0;  // ns per stage
  double d_fixed = 0;  // ns
  unsigned stage_width = 1;
};

struct DelayCalibration {
  DelayModelParams rca;
  DelayModelParams cla;

  const DelayModelParams& of(Architecture arch) const {
    return arch == Architecture::kRca ? rca : cla;
  }
};

struct AffineFit {
  double slope = 0;
  double intercept = 0;
};

/// Ordinary least squares. Throws std::invalid_argument for fewer than two
/// points or no spread in x.
AffineFit fit_affine(const std::vector<std::pair<double, double>>& points);

/// Stage width: 1 bit for RCA, 4 bits for CLA.
unsigned stage_width(Architecture arch);

/// Fits each architecture's delay rows against its accurate-part stage count.
DelayCalibration calibrate_delay(const Table2Reference& table);

double calibrated_delay(const AdderSpec& spec, const DelayModelParams& params);
inline double calibrated_delay(const AdderSpec& spec, const DelayCalibration& cal) {
  return calibrated_delay(spec, cal.of(spec.arch));
}

/// Macro-cell area: m FA cells (RCA) or m/4 CLA4 cells (CLA) plus k OR2 or
/// XOR2 cells.
double area_of(const AdderSpec& spec, const CellLibrary& lib);

/// Longest unit-delay-weighted path from a primary input to a primary
/// output. Nets fed only by constants carry no arrival time.
double structural_delay(const Netlist& netlist, const CellLibrary& lib);

/// 100 * (base - value) / base.
double reduction_pct(double base, double value);

struct Reductions {
  double area_pct = 0;
  double delay_pct = 0;
  std::optional<double> power_pct;
  std::optional<double> pdp_pct;
};

struct CostReport {
  AdderSpec spec;
  std::optional<std::string> legend;
  double area_um2 = 0;
  double delay_calibrated_ns = 0;
  double delay_structural = 0;
  /// Looked up from the reference table; absent for other configurations.
  std::optional<double> power_uw;
  /// power * reference delay, present iff power is.
  std::optional<double> pdp;
  /// power * calibrated delay, present iff power is.
  std::optional<double> pdp_model;
  std::string baseline;
  Reductions reductions;
};

/// Cost of one adder with reductions against the accurate adder of the same
/// architecture and width.
CostReport pdp_report(const AdderSpec& spec, const Table2Reference& table,
                      const CellLibrary& lib, const DelayCalibration& cal);

/// Model-versus-reference comparison of one table row.
struct ReproRow {
  std::string legend;
  AdderSpec spec;
  double area_model = 0;
  double area_ref = 0;
  double area_rel_err_pct = 0;
  double delay_model = 0;
  double delay_ref = 0;
  double delay_err_ns = 0;
  double power_ref = 0;
  double pdp = 0;
  double pdp_reduction_pct = 0;
};

std::vector<ReproRow> table2_repro(const Table2Reference& table, const CellLibrary& lib,
                                   const DelayCalibration& cal);

/// A recomputed figure compared against its published value. Claims with
/// no expected value are informational and always pass.
struct Claim {
  std::string id;
  double computed = 0;
  std::optional<double> expected;
  double tolerance = 0;
  bool passed = true;
};

struct ClaimsReport {
  std::vector<Claim> claims;
  bool all_passed() const;
  const Claim* find(std::string_view id) const;
};

/// Recomputes every PDP, the per-row bracketed reductions and the averaged
/// reductions from the reference table and checks them against their
/// published values.
ClaimsReport reproduce_claims(const Table2Reference& table);

}  // namespace approx
