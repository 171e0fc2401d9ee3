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

// Bit-sliced netlist evaluation kernels.
//
// Each net owns a plane of `words` 64-bit words; bit j of the plane is the
// net's value for vector j. One pass over the gate program evaluates
// 64 * words vectors at once. The scalar kernel is the reference; vector
// variants must produce bit-identical planes.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "approx/netlist.hpp"

namespace approx::simd {

enum class Isa : std::uint8_t { kScalar, kAvx2 };

std::string_view to_string(Isa isa);
/// "scalar", "avx2" or "auto" (best supported).
Isa parse_isa(std::string_view s);

/// Plane words processed per AVX2 register.
inline constexpr std::size_t kAvx2Words = 4;

/// Flattened gate, operands are plane indices. Unused operands are 0.
struct GateOp {
  GateKind kind;
  std::uint32_t out;
  std::uint32_t a;
  std::uint32_t b;
  std::uint32_t c;
};

/// Lowers a netlist to a kernel program. INPUT gates are dropped: their
/// planes are filled by the caller before evaluation.
std::vector<GateOp> compile(const Netlist& netlist);

/// planes has net_count * words entries, plane p at [p * words, (p+1) * words).
using EvalFn = void (*)(std::span<const GateOp> program, std::uint64_t* planes,
                        std::size_t words);

void eval_scalar(std::span<const GateOp> program, std::uint64_t* planes,
                 std::size_t words);
#if defined(APPROX_HAVE_AVX2)
/// Requires words % kAvx2Words == 0.
void eval_avx2(std::span<const GateOp> program, std::uint64_t* planes,
               std::size_t words);
#endif

bool supported(Isa isa);
/// Widest ISA the running CPU supports.
Isa best_isa();
/// Throws std::runtime_error if `isa` is unsupported on this build or CPU.
EvalFn kernel_for(Isa isa);
/// Word-count granularity the kernel for `isa` needs.
std::size_t word_multiple(Isa isa);

}  // namespace approx::simd
