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

#include "approx/simd/kernels.hpp"

namespace approx::simd {

void eval_scalar(std::span<const GateOp> program, std::uint64_t* planes,
                 std::size_t words) {
  for (const GateOp& op : program) {
    std::uint64_t* out = planes + op.out * words;
    const std::uint64_t* a = planes + op.a * words;
    const std::uint64_t* b = planes + op.b * words;
    const std::uint64_t* c = planes + op.c * words;
    switch (op.kind) {
      case GateKind::kInput:
        break;
      case GateKind::kConst0:
        for (std::size_t w = 0; w < words; ++w) out[w] = 0;
        break;
      case GateKind::kNot:
        for (std::size_t w = 0; w < words; ++w) out[w] = ~a[w];
        break;
      case GateKind::kAnd2:
        for (std::size_t w = 0; w < words; ++w) out[w] = a[w] & b[w];
        break;
      case GateKind::kOr2:
        for (std::size_t w = 0; w < words; ++w) out[w] = a[w] | b[w];
        break;
      case GateKind::kXor2:
        for (std::size_t w = 0; w < words; ++w) out[w] = a[w] ^ b[w];
        break;
      case GateKind::kAo21:
        for (std::size_t w = 0; w < words; ++w) out[w] = (a[w] & b[w]) | c[w];
        break;
    }
  }
}

}  // namespace approx::simd
