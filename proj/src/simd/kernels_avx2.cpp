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

// Compiled with -mavx2; only reached through kernel_for() after a CPU check.

#include <immintrin.h>

#include "approx/simd/kernels.hpp"

namespace approx::simd {

namespace {

inline __m256i load(const std::uint64_t* p) {
  return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
}

inline void store(std::uint64_t* p, __m256i v) {
  _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), v);
}

}  // namespace

void eval_avx2(std::span<const GateOp> program, std::uint64_t* planes,
               std::size_t words) {
  const __m256i ones = _mm256_set1_epi64x(-1);
  for (const GateOp& op : program) {
    std::uint64_t* out = planes + op.out * words;
    const std::uint64_t* a = planes + op.a * words;
    const std::uint64_t* b = planes + op.b * words;
    const std::uint64_t* c = planes + op.c * words;
    switch (op.kind) {
      case GateKind::kInput:
        break;
      case GateKind::kConst0:
        for (std::size_t w = 0; w < words; w += kAvx2Words) {
          store(out + w, _mm256_setzero_si256());
        }
        break;
      case GateKind::kNot:
        for (std::size_t w = 0; w < words; w += kAvx2Words) {
          store(out + w, _mm256_xor_si256(load(a + w), ones));
        }
        break;
      case GateKind::kAnd2:
        for (std::size_t w = 0; w < words; w += kAvx2Words) {
          store(out + w, _mm256_and_si256(load(a + w), load(b + w)));
        }
        break;
      case GateKind::kOr2:
        for (std::size_t w = 0; w < words; w += kAvx2Words) {
          store(out + w, _mm256_or_si256(load(a + w), load(b + w)));
        }
        break;
      case GateKind::kXor2:
        for (std::size_t w = 0; w < words; w += kAvx2Words) {
          store(out + w, _mm256_xor_si256(load(a + w), load(b + w)));
        }
        break;
      case GateKind::kAo21:
        for (std::size_t w = 0; w < words; w += kAvx2Words) {
          __m256i ab = _mm256_and_si256(load(a + w), load(b + w));
          store(out + w, _mm256_or_si256(ab, load(c + w)));
        }
        break;
    }
  }
}

}  // namespace approx::simd
