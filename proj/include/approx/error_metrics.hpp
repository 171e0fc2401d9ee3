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

#include <array>
#include <iosfwd>
#include <vector>

#include "approx/adders.hpp"
#include "approx/simulate.hpp"

namespace approx {

/// Sum bit of an approximated position. Throws SpecError for kNone.
bool approx_sum_bit(bool a, bool b, ApproxStyle style);

/// One row of the single-bit comparison between the accurate full-adder sum
/// and the carry-free approximations.
struct BitComparisonRow {
  bool a = false;
  bool b = false;
  bool c = false;
  bool accurate = false;
  bool approx_xor = false;
  bool approx_or = false;
  bool xor_correct = false;
  bool or_correct = false;

  friend bool operator==(const BitComparisonRow&, const BitComparisonRow&) = default;
};

/// All eight (a, b, c) rows in binary counting order, a most significant.
std::array<BitComparisonRow, 8> table1();
/// Rows whose approximate sum under `style` equals the accurate sum.
int correct_rows(ApproxStyle style);

/// Error of an approximate adder against exact addition (carry-in 0).
///
/// ed = |approx - exact| per vector. med = ed_sum / vectors,
/// nmed = med / 2^n, mred = mean of ed / max(exact, 1), error_rate =
/// mismatches / vectors. All fields are zero for an empty stream.
struct ErrorReport {
  std::uint64_t vectors = 0;
  std::uint64_t mismatches = 0;
  Wide ed_sum = 0;
  Wide max_ed = 0;
  double error_rate = 0;
  double med = 0;
  double nmed = 0;
  double mred = 0;

  friend bool operator==(const ErrorReport&, const ErrorReport&) = default;
};

/// Running totals. Counts and sums merge commutatively; the relative-error
/// sum is a floating-point sum, so bit-exact results require a fixed order.
class ErrorAccumulator {
 public:
  explicit ErrorAccumulator(unsigned width) : width_(width) {}

  void add(Wide exact, Wide approx);
  void merge(const ErrorAccumulator& other);
  ErrorReport report() const;

 private:
  unsigned width_;
  std::uint64_t vectors_ = 0;
  std::uint64_t mismatches_ = 0;
  Wide ed_sum_ = 0;
  Wide max_ed_ = 0;
  double rel_sum_ = 0;
};

/// Error measured through the closed-form model.
ErrorReport measure_behavioral(const AdderSpec& spec, const VectorStream& stream);
/// Error measured by simulating the built netlist.
ErrorReport measure_netlist(const AdderSpec& spec, const VectorStream& stream,
                            simd::Isa isa = simd::best_isa());
/// Runs both paths and returns the report; throws std::logic_error if they
/// disagree in any field.
ErrorReport measure(const AdderSpec& spec, const VectorStream& stream,
                    simd::Isa isa = simd::best_isa());

struct SweepRow {
  AdderSpec spec;
  ErrorReport report;
};

/// One report per (style, k), ordered by style then k. k = 0 yields a
/// single accurate row regardless of the style list.
std::vector<SweepRow> sweep(unsigned width, Architecture arch,
                            const std::vector<ApproxStyle>& styles,
                            const std::vector<unsigned>& k_list,
                            const VectorStream& stream,
                            simd::Isa isa = simd::best_isa());

/// Fixed header:
/// arch,style,width,k,stream,vectors,mismatches,ed_sum,max_ed,error_rate,med,nmed,mred
void write_errors_csv(std::ostream& out, const std::vector<SweepRow>& rows,
                      const VectorStream& stream);

}  // namespace approx
