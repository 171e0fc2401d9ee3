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

#include <stdexcept>
#include <string>

#include "approx/simd/kernels.hpp"

namespace approx::simd {

std::string_view to_string(Isa isa) {
  return isa == Isa::kAvx2 ? "avx2" : "scalar";
}

Isa parse_isa(std::string_view s) {
  if (s == "scalar") return Isa::kScalar;
  if (s == "avx2") return Isa::kAvx2;
  if (s == "auto") return best_isa();
  throw std::invalid_argument("unknown ISA '" + std::string(s) +
                              "' (expected auto, scalar or avx2)");
}

std::vector<GateOp> compile(const Netlist& netlist) {
  std::vector<GateOp> program;
  program.reserve(netlist.gates().size());
  for (const Gate& g : netlist.gates()) {
    if (g.kind == GateKind::kInput) continue;
    GateOp op{g.kind, g.output.index, 0, 0, 0};
    if (g.inputs.size() > 0) op.a = g.inputs[0].index;
    if (g.inputs.size() > 1) op.b = g.inputs[1].index;
    if (g.inputs.size() > 2) op.c = g.inputs[2].index;
    program.push_back(op);
  }
  return program;
}

bool supported(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return true;
    case Isa::kAvx2:
#if defined(APPROX_HAVE_AVX2)
      return __builtin_cpu_supports("avx2") != 0;
#else
      return false;
#endif
  }
  return false;
}

Isa best_isa() { return supported(Isa::kAvx2) ? Isa::kAvx2 : Isa::kScalar; }

EvalFn kernel_for(Isa isa) {
  if (!supported(isa)) {
    throw std::runtime_error("ISA " + std::string(to_string(isa)) +
                             " is not available on this build or CPU");
  }
#if defined(APPROX_HAVE_AVX2)
  if (isa == Isa::kAvx2) return &eval_avx2;
#endif
  return &eval_scalar;
}

std::size_t word_multiple(Isa isa) { return isa == Isa::kAvx2 ? kAvx2Words : 1; }

}  // namespace approx::simd
