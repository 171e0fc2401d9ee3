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
#include <stdexcept>
#include <string>
#include <string_view>

#include "approx/netlist.hpp"

namespace approx {

enum class Architecture : std::uint8_t { kRca, kCla };

/// How the low k sum bits are formed once the carry chain is dropped there.
enum class ApproxStyle : std::uint8_t {
  kNone,  // accurate adder, k = 0
  kOr,    // SUM_i = A_i | B_i
  kXor,   // SUM_i = A_i ^ B_i
};

std::string_view to_string(Architecture arch);
std::string_view to_string(ApproxStyle style);
/// Accepts "rca"/"cla" and "or"/"xor"/"none", case-insensitive.
Architecture parse_architecture(std::string_view s);
ApproxStyle parse_style(std::string_view s);

/// Raised for adder configurations that violate the construction rules.
class SpecError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr unsigned kMaxWidth = 64;

/// An n-bit adder split into an accurate upper part of m = n - k bits and an
/// approximate lower part of k bits with no carry chain.
struct AdderSpec {
  unsigned width = 32;
  Architecture arch = Architecture::kRca;
  unsigned approx_bits = 0;
  ApproxStyle style = ApproxStyle::kNone;

  unsigned accurate_bits() const { return width - approx_bits; }
  bool is_approximate() const { return approx_bits > 0; }

  /// Throws SpecError naming the violated rule.
  void validate() const;

  /// Accurate adder of the given architecture.
  static AdderSpec accurate(unsigned width, Architecture arch) {
    return AdderSpec{width, arch, 0, ApproxStyle::kNone};
  }
  /// Approximate adder; k = 0 collapses to the accurate spec.
  static AdderSpec approximate(unsigned width, Architecture arch, unsigned k,
                               ApproxStyle style) {
    return k == 0 ? accurate(width, arch) : AdderSpec{width, arch, k, style};
  }

  friend bool operator==(const AdderSpec&, const AdderSpec&) = default;
};

/// e.g. "rca-n32-k8-or".
std::string describe(const AdderSpec& spec);

struct FullAdderNets {
  NetId sum;
  NetId cout;
};

/// Appends one full adder of exactly five gates: sum = (a ^ b) ^ cin and
/// cout = AO21(a | b, cin, a & b). The carry-in reaches cout through the
/// AO21 alone.
FullAdderNets build_full_adder(NetlistBuilder& sink, NetId a, NetId b, NetId cin);

/// Delay-optimised 4-bit carry lookahead generator.
///
/// C[i+1] = AO21(P[0..i] product, c0, group generate of bits 0..i), so the
/// path from c0 to every lookahead carry crosses exactly one gate. The
/// group terms are built as a two-level prefix tree from P and G only.
std::array<NetId, 4> build_clg4(NetlistBuilder& sink, const std::array<NetId, 4>& p,
                                const std::array<NetId, 4>& g, NetId c0);

struct Cla4Nets {
  std::array<NetId, 4> sum;
  NetId c4;
};

/// 4-bit carry lookahead adder block: XOR/AND propagate-generate, the
/// lookahead generator, and XOR sum logic.
Cla4Nets build_cla4(NetlistBuilder& sink, const std::array<NetId, 4>& a,
                    const std::array<NetId, 4>& b, NetId c0);

/// Builds the complete adder. Ports are A0..A{n-1}, B0..B{n-1} and, for
/// accurate adders only, C0; outputs SUM0..SUM{n-1} then COUT. Approximate
/// adders tie the accurate part's carry-in to CONST0.
Netlist build_adder(const AdderSpec& spec);

}  // namespace approx
