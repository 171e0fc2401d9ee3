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

#include "approx/error_metrics.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include "approx/format.hpp"

namespace approx {

namespace {

constexpr std::size_t kBatch = 1 << 14;

InputVector zero_carry(InputVector v) {
  v.c0 = false;
  return v;
}

}  // namespace

bool approx_sum_bit(bool a, bool b, ApproxStyle style) {
  switch (style) {
    case ApproxStyle::kOr:
      return a || b;
    case ApproxStyle::kXor:
      return a != b;
    case ApproxStyle::kNone:
      break;
  }
  throw SpecError("approx_sum_bit needs style or/xor");
}

std::array<BitComparisonRow, 8> table1() {
  std::array<BitComparisonRow, 8> rows;
  for (int i = 0; i < 8; ++i) {
    BitComparisonRow& r = rows[i];
    r.a = (i & 4) != 0;
    r.b = (i & 2) != 0;
    r.c = (i & 1) != 0;
    r.accurate = (r.a != r.b) != r.c;
    r.approx_xor = approx_sum_bit(r.a, r.b, ApproxStyle::kXor);
    r.approx_or = approx_sum_bit(r.a, r.b, ApproxStyle::kOr);
    r.xor_correct = r.approx_xor == r.accurate;
    r.or_correct = r.approx_or == r.accurate;
  }
  return rows;
}

int correct_rows(ApproxStyle style) {
  if (style == ApproxStyle::kNone) return 8;
  int n = 0;
  for (const auto& r : table1()) n += style == ApproxStyle::kOr ? r.or_correct : r.xor_correct;
  return n;
}

void ErrorAccumulator::add(Wide exact, Wide approx) {
  const Wide ed = exact > approx ? exact - approx : approx - exact;
  ++vectors_;
  if (ed != 0) ++mismatches_;
  ed_sum_ += ed;
  max_ed_ = std::max(max_ed_, ed);
  rel_sum_ += static_cast<double>(ed) / static_cast<double>(std::max<Wide>(exact, 1));
}

void ErrorAccumulator::merge(const ErrorAccumulator& other) {
  vectors_ += other.vectors_;
  mismatches_ += other.mismatches_;
  ed_sum_ += other.ed_sum_;
  max_ed_ = std::max(max_ed_, other.max_ed_);
  rel_sum_ += other.rel_sum_;
}

ErrorReport ErrorAccumulator::report() const {
  ErrorReport r;
  r.vectors = vectors_;
  r.mismatches = mismatches_;
  r.ed_sum = ed_sum_;
  r.max_ed = max_ed_;
  if (vectors_ == 0) return r;
  const double count = static_cast<double>(vectors_);
  r.error_rate = static_cast<double>(mismatches_) / count;
  r.med = static_cast<double>(ed_sum_) / count;
  r.nmed = r.med / std::ldexp(1.0, static_cast<int>(width_));
  r.mred = rel_sum_ / count;
  return r;
}

ErrorReport measure_behavioral(const AdderSpec& spec, const VectorStream& stream) {
  spec.validate();
  VectorSource src(stream, spec.width);
  ErrorAccumulator acc(spec.width);
  std::vector<InputVector> batch(kBatch);
  while (std::size_t n = src.next(batch)) {
    for (std::size_t j = 0; j < n; ++j) {
      const InputVector v = zero_carry(batch[j]);
      acc.add(behavioral_accurate(v, spec.width).value(), behavioral(v, spec).value());
    }
  }
  return acc.report();
}

ErrorReport measure_netlist(const AdderSpec& spec, const VectorStream& stream,
                            simd::Isa isa) {
  const Simulator sim(build_adder(spec), isa);
  VectorSource src(stream, spec.width);
  ErrorAccumulator acc(spec.width);
  std::vector<InputVector> batch(kBatch);
  std::vector<OutputWord> out(kBatch);
  while (std::size_t n = src.next(batch)) {
    std::transform(batch.begin(), batch.begin() + n, batch.begin(), zero_carry);
    sim.evaluate(std::span(batch).first(n), std::span(out).first(n));
    for (std::size_t j = 0; j < n; ++j) {
      acc.add(behavioral_accurate(batch[j], spec.width).value(), out[j].value());
    }
  }
  return acc.report();
}

ErrorReport measure(const AdderSpec& spec, const VectorStream& stream, simd::Isa isa) {
  ErrorReport closed = measure_behavioral(spec, stream);
  ErrorReport simulated = measure_netlist(spec, stream, isa);
  if (!(closed == simulated)) {
    throw std::logic_error("netlist simulation and closed form disagree for " +
                           describe(spec));
  }
  return closed;
}

std::vector<SweepRow> sweep(unsigned width, Architecture arch,
                            const std::vector<ApproxStyle>& styles,
                            const std::vector<unsigned>& k_list,
                            const VectorStream& stream, simd::Isa isa) {
  std::vector<AdderSpec> specs;
  for (ApproxStyle style : styles) {
    for (unsigned k : k_list) {
      AdderSpec s = AdderSpec::approximate(width, arch, k, style);
      s.validate();
      if (std::find(specs.begin(), specs.end(), s) == specs.end()) specs.push_back(s);
    }
  }
  std::stable_sort(specs.begin(), specs.end(), [](const AdderSpec& x, const AdderSpec& y) {
    return std::pair(x.style, x.approx_bits) < std::pair(y.style, y.approx_bits);
  });
  std::vector<SweepRow> rows;
  rows.reserve(specs.size());
  for (const auto& s : specs) rows.push_back({s, measure(s, stream, isa)});
  return rows;
}

void write_errors_csv(std::ostream& out, const std::vector<SweepRow>& rows,
                      const VectorStream& stream) {
  out << "arch,style,width,k,stream,vectors,mismatches,ed_sum,max_ed,error_rate,med,nmed,mred\n";
  for (const auto& row : rows) {
    const auto& r = row.report;
    out << to_string(row.spec.arch) << ',' << to_string(row.spec.style) << ','
        << row.spec.width << ',' << row.spec.approx_bits << ',' << describe(stream) << ','
        << r.vectors << ',' << r.mismatches << ',' << to_decimal(r.ed_sum) << ','
        << to_decimal(r.max_ed) << ',' << fmt_double(r.error_rate) << ','
        << fmt_double(r.med) << ',' << fmt_double(r.nmed) << ',' << fmt_double(r.mred)
        << '\n';
  }
}

}  // namespace approx
