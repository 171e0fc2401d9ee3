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

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "approx/adders.hpp"
#include "approx/netlist.hpp"
#include "approx/simd/kernels.hpp"

namespace approx {

/// Wide enough for an (n+1)-bit adder result at n = 64.
__extension__ typedef unsigned __int128 Wide;

std::string to_decimal(Wide v);

/// All-ones mask of the low `width` bits, width in 1..64.
constexpr std::uint64_t width_mask(unsigned width) {
  return width >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1;
}

/// Operand or stream width out of range.
class WidthError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Exhaustive enumeration requested beyond the 2n <= 32 guard.
class StreamGuardError : public std::length_error {
 public:
  using std::length_error::length_error;
};

struct InputVector {
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  bool c0 = false;

  friend bool operator==(const InputVector&, const InputVector&) = default;
};

struct OutputWord {
  std::uint64_t sum = 0;
  bool cout = false;
  unsigned width = 0;

  /// cout * 2^width + sum.
  Wide value() const { return (static_cast<Wide>(cout) << width) | sum; }

  friend bool operator==(const OutputWord&, const OutputWord&) = default;
};

/// a + b + c0 as exact integer arithmetic.
OutputWord behavioral_accurate(const InputVector& v, unsigned width);

/// Closed form of the spliced approximate adder: bitwise OR/XOR below k,
/// exact (a >> k) + (b >> k) above with carry-in 0. c0 is ignored.
OutputWord behavioral_approx(const InputVector& v, const AdderSpec& spec);

/// behavioral_accurate for k = 0 (honouring c0), behavioral_approx otherwise.
OutputWord behavioral(const InputVector& v, const AdderSpec& spec);

/// Bit-sliced simulator bound to one netlist.
///
/// The netlist must pass topo_validate and expose ports A0..A{n-1},
/// B0..B{n-1}, SUM0..SUM{n-1} and COUT; C0 is optional. Without a C0 port
/// the carry-in of every vector is ignored. Safe to share across threads.
class Simulator {
 public:
  explicit Simulator(const Netlist& netlist, simd::Isa isa = simd::best_isa());

  unsigned width() const { return width_; }
  bool has_carry_in() const { return c0_.has_value(); }
  simd::Isa isa() const { return isa_; }

  OutputWord evaluate(const InputVector& v) const;
  /// Evaluates in.size() vectors into out (same size), 64 per plane word.
  void evaluate(std::span<const InputVector> in, std::span<OutputWord> out) const;

 private:
  void check(const InputVector& v) const;

  unsigned width_ = 0;
  simd::Isa isa_;
  simd::EvalFn kernel_;
  std::vector<simd::GateOp> program_;
  std::size_t net_count_ = 0;
  std::vector<std::uint32_t> a_, b_, sum_;
  std::optional<std::uint32_t> c0_;
  std::uint32_t cout_ = 0;
};

/// One-shot convenience wrapper around Simulator.
OutputWord evaluate(const Netlist& netlist, const InputVector& v);

enum class CarryIn : std::uint8_t { kZero, kOne, kRandom };

/// Description of an input-vector sequence.
///
/// Exhaustive: every (a, b) pair in lexicographic order (a outer), carry-in
/// fixed. Monte Carlo: `count` vectors from std::mt19937_64 seeded with
/// `seed`; per vector a = next() & mask, b = next() & mask and, for
/// CarryIn::kRandom, c0 = next() & 1.
struct VectorStream {
  enum class Kind : std::uint8_t { kExhaustive, kMonteCarlo };

  Kind kind = Kind::kExhaustive;
  std::uint64_t count = 0;
  std::uint64_t seed = 0;
  CarryIn carry_in = CarryIn::kZero;

  static VectorStream exhaustive(CarryIn c = CarryIn::kZero) {
    return {Kind::kExhaustive, 0, 0, c};
  }
  static VectorStream monte_carlo(std::uint64_t count, std::uint64_t seed,
                                  CarryIn c = CarryIn::kZero) {
    return {Kind::kMonteCarlo, count, seed, c};
  }
};

/// Largest width the exhaustive stream accepts (2n <= 32).
inline constexpr unsigned kMaxExhaustiveWidth = 16;

std::string describe(const VectorStream& stream);

/// Pull-style generator over a VectorStream.
class VectorSource {
 public:
  /// Throws StreamGuardError for an exhaustive stream beyond the guard,
  /// WidthError for a bad width, std::invalid_argument for an exhaustive
  /// stream with random carry-in.
  VectorSource(const VectorStream& stream, unsigned width);

  std::uint64_t total() const { return total_; }
  std::uint64_t remaining() const { return total_ - produced_; }
  /// Fills up to out.size() vectors; returns how many were written.
  std::size_t next(std::span<InputVector> out);

 private:
  VectorStream stream_;
  unsigned width_;
  std::uint64_t mask_;
  std::uint64_t total_ = 0;
  std::uint64_t produced_ = 0;
  std::mt19937_64 rng_;
};

/// Materialises a whole stream.
std::vector<InputVector> stream_vectors(const VectorStream& stream, unsigned width);

/// CSV trace: a,b,c0,sum,cout,value,exact,error_distance (decimal).
void write_trace(std::ostream& out, const Simulator& sim,
                 std::span<const InputVector> vectors);

}  // namespace approx
