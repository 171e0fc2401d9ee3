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

#include "approx/adders.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

namespace approx {

namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

}  // namespace

std::string_view to_string(Architecture arch) {
  return arch == Architecture::kRca ? "rca" : "cla";
}

std::string_view to_string(ApproxStyle style) {
  switch (style) {
    case ApproxStyle::kNone:
      return "none";
    case ApproxStyle::kOr:
      return "or";
    case ApproxStyle::kXor:
      return "xor";
  }
  return "?";
}

Architecture parse_architecture(std::string_view s) {
  auto l = lower(s);
  if (l == "rca") return Architecture::kRca;
  if (l == "cla") return Architecture::kCla;
  throw SpecError("unknown architecture '" + std::string(s) + "' (expected rca or cla)");
}

ApproxStyle parse_style(std::string_view s) {
  auto l = lower(s);
  if (l == "or") return ApproxStyle::kOr;
  if (l == "xor") return ApproxStyle::kXor;
  if (l == "none") return ApproxStyle::kNone;
  throw SpecError("unknown approximation style '" + std::string(s) +
                  "' (expected or or xor)");
}

void AdderSpec::validate() const {
  if (width == 0 || width > kMaxWidth) {
    throw SpecError("width must be in 1.." + std::to_string(kMaxWidth) + ", got " +
                    std::to_string(width));
  }
  if (approx_bits >= width) {
    throw SpecError("approximation size k=" + std::to_string(approx_bits) +
                    " must be smaller than the width n=" + std::to_string(width));
  }
  if ((approx_bits == 0) != (style == ApproxStyle::kNone)) {
    throw SpecError(approx_bits == 0
                        ? "an accurate adder (k=0) takes no approximation style"
                        : "an approximate adder (k>0) needs style or/xor");
  }
  if (arch == Architecture::kCla) {
    if (width % 4 != 0) throw SpecError("CLA width must be a multiple of 4");
    if (accurate_bits() % 4 != 0) {
      throw SpecError("CLA accurate part must be nibble-aligned (n-k=" +
                      std::to_string(accurate_bits()) + " is not a multiple of 4)");
    }
  }
}

std::string describe(const AdderSpec& spec) {
  std::string s = std::string(to_string(spec.arch)) + "-n" + std::to_string(spec.width) +
                  "-k" + std::to_string(spec.approx_bits);
  if (spec.is_approximate()) s += "-" + std::string(to_string(spec.style));
  return s;
}

FullAdderNets build_full_adder(NetlistBuilder& sink, NetId a, NetId b, NetId cin) {
  NetId p = sink.add_xor(a, b);
  NetId sum = sink.add_xor(p, cin);
  NetId g = sink.add_and(a, b);
  NetId t = sink.add_or(a, b);
  NetId cout = sink.add_ao21(t, cin, g);
  return {sum, cout};
}

std::array<NetId, 4> build_clg4(NetlistBuilder& sink, const std::array<NetId, 4>& p,
                                const std::array<NetId, 4>& g, NetId c0) {
  // Group propagate products.
  NetId p10 = sink.add_and(p[1], p[0]);
  NetId p32 = sink.add_and(p[3], p[2]);
  NetId p210 = sink.add_and(p[2], p10);
  NetId p3210 = sink.add_and(p32, p10);
  // Carry-in independent group generates.
  NetId g10 = sink.add_ao21(p[1], g[0], g[1]);
  NetId g210 = sink.add_ao21(p[2], g10, g[2]);
  NetId g32 = sink.add_ao21(p[3], g[2], g[3]);
  NetId g3210 = sink.add_ao21(p32, g10, g32);
  return {
      sink.add_ao21(p[0], c0, g[0]),
      sink.add_ao21(p10, c0, g10),
      sink.add_ao21(p210, c0, g210),
      sink.add_ao21(p3210, c0, g3210),
  };
}

Cla4Nets build_cla4(NetlistBuilder& sink, const std::array<NetId, 4>& a,
                    const std::array<NetId, 4>& b, NetId c0) {
  std::array<NetId, 4> p, g;
  for (int i = 0; i < 4; ++i) {
    p[i] = sink.add_xor(a[i], b[i]);
    g[i] = sink.add_and(a[i], b[i]);
  }
  auto c = build_clg4(sink, p, g, c0);
  Cla4Nets out;
  out.sum[0] = sink.add_xor(p[0], c0);
  for (int i = 1; i < 4; ++i) out.sum[i] = sink.add_xor(p[i], c[i - 1]);
  out.c4 = c[3];
  return out;
}

Netlist build_adder(const AdderSpec& spec) {
  spec.validate();
  const unsigned n = spec.width;
  const unsigned k = spec.approx_bits;

  NetlistBuilder sink(n);
  std::vector<NetId> a(n), b(n), sum(n);
  for (unsigned i = 0; i < n; ++i) a[i] = sink.add_input("A" + std::to_string(i));
  for (unsigned i = 0; i < n; ++i) b[i] = sink.add_input("B" + std::to_string(i));
  NetId carry = spec.is_approximate() ? sink.add_const0() : sink.add_input("C0");

  for (unsigned i = 0; i < k; ++i) {
    sum[i] = spec.style == ApproxStyle::kOr ? sink.add_or(a[i], b[i])
                                            : sink.add_xor(a[i], b[i]);
  }

  if (spec.arch == Architecture::kRca) {
    for (unsigned i = k; i < n; ++i) {
      auto fa = build_full_adder(sink, a[i], b[i], carry);
      sum[i] = fa.sum;
      carry = fa.cout;
    }
  } else {
    for (unsigned base = k; base < n; base += 4) {
      std::array<NetId, 4> an{a[base], a[base + 1], a[base + 2], a[base + 3]};
      std::array<NetId, 4> bn{b[base], b[base + 1], b[base + 2], b[base + 3]};
      auto blk = build_cla4(sink, an, bn, carry);
      for (unsigned j = 0; j < 4; ++j) sum[base + j] = blk.sum[j];
      carry = blk.c4;
    }
  }

  for (unsigned i = 0; i < n; ++i) sink.add_output("SUM" + std::to_string(i), sum[i]);
  sink.add_output("COUT", carry);
  return std::move(sink).finish();
}

}  // namespace approx
