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

#include "approx/simulate.hpp"

#include <algorithm>
#include <ostream>

namespace approx {

namespace {

constexpr std::size_t kChunkWords = 64;  // 4096 vectors per kernel call

std::uint32_t require_port(const Netlist& nl, bool input, const std::string& name) {
  auto net = input ? nl.find_input(name) : nl.find_output(name);
  if (!net) throw std::invalid_argument("netlist has no port " + name);
  return net->index;
}

}  // namespace

std::string to_decimal(Wide v) {
  if (v == 0) return "0";
  std::string s;
  while (v != 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  std::reverse(s.begin(), s.end());
  return s;
}

OutputWord behavioral_accurate(const InputVector& v, unsigned width) {
  if (width == 0 || width > kMaxWidth) throw WidthError("width out of range");
  Wide total = static_cast<Wide>(v.a) + v.b + (v.c0 ? 1 : 0);
  return OutputWord{static_cast<std::uint64_t>(total) & width_mask(width),
                    ((total >> width) & 1) != 0, width};
}

OutputWord behavioral_approx(const InputVector& v, const AdderSpec& spec) {
  const unsigned n = spec.width;
  const unsigned k = spec.approx_bits;
  if (k == 0) return behavioral_accurate(InputVector{v.a, v.b, false}, n);
  const std::uint64_t low_mask = width_mask(k);
  const std::uint64_t low =
      (spec.style == ApproxStyle::kXor ? (v.a ^ v.b) : (v.a | v.b)) & low_mask;
  // k >= 1 so each shifted operand is below 2^63 and the sum fits.
  const std::uint64_t high = (v.a >> k) + (v.b >> k);
  Wide value = (static_cast<Wide>(high) << k) | low;
  return OutputWord{static_cast<std::uint64_t>(value) & width_mask(n),
                    ((value >> n) & 1) != 0, n};
}

OutputWord behavioral(const InputVector& v, const AdderSpec& spec) {
  return spec.is_approximate() ? behavioral_approx(v, spec)
                               : behavioral_accurate(v, spec.width);
}

Simulator::Simulator(const Netlist& netlist, simd::Isa isa)
    : width_(netlist.width()), isa_(isa), kernel_(simd::kernel_for(isa)) {
  if (width_ == 0 || width_ > kMaxWidth) throw WidthError("netlist width out of range");
  if (auto v = topo_validate(netlist); !v.empty()) {
    throw std::invalid_argument("netlist failed validation: " + v.front().message);
  }
  program_ = simd::compile(netlist);
  net_count_ = netlist.net_count();
  for (unsigned i = 0; i < width_; ++i) {
    a_.push_back(require_port(netlist, true, "A" + std::to_string(i)));
    b_.push_back(require_port(netlist, true, "B" + std::to_string(i)));
    sum_.push_back(require_port(netlist, false, "SUM" + std::to_string(i)));
  }
  if (auto c = netlist.find_input("C0")) c0_ = c->index;
  cout_ = require_port(netlist, false, "COUT");
}

void Simulator::check(const InputVector& v) const {
  const std::uint64_t mask = width_mask(width_);
  if ((v.a & ~mask) != 0 || (v.b & ~mask) != 0) {
    throw WidthError("operand exceeds " + std::to_string(width_) + "-bit width");
  }
}

OutputWord Simulator::evaluate(const InputVector& v) const {
  OutputWord out;
  evaluate(std::span<const InputVector>(&v, 1), std::span<OutputWord>(&out, 1));
  return out;
}

void Simulator::evaluate(std::span<const InputVector> in,
                         std::span<OutputWord> out) const {
  if (in.size() != out.size()) {
    throw std::invalid_argument("evaluate: input/output size mismatch");
  }
  for (const auto& v : in) check(v);

  const std::size_t multiple = simd::word_multiple(isa_);
  const std::size_t needed_words = (in.size() + 63) / 64;
  std::size_t words = std::min(kChunkWords, std::max<std::size_t>(needed_words, 1));
  words = (words + multiple - 1) / multiple * multiple;
  const std::size_t lanes = words * 64;
  std::vector<std::uint64_t> planes(net_count_ * words);

  for (std::size_t base = 0; base < in.size(); base += lanes) {
    const std::size_t count = std::min(lanes, in.size() - base);
    auto chunk = in.subspan(base, count);

    auto pack = [&](std::uint32_t net, auto bit_of) {
      std::uint64_t* plane = planes.data() + std::size_t{net} * words;
      std::fill(plane, plane + words, 0);
      for (std::size_t j = 0; j < count; ++j) {
        plane[j / 64] |= std::uint64_t{bit_of(chunk[j])} << (j % 64);
      }
    };
    for (unsigned i = 0; i < width_; ++i) {
      pack(a_[i], [i](const InputVector& v) { return (v.a >> i) & 1; });
      pack(b_[i], [i](const InputVector& v) { return (v.b >> i) & 1; });
    }
    if (c0_) pack(*c0_, [](const InputVector& v) { return v.c0 ? 1u : 0u; });

    kernel_(program_, planes.data(), words);

    for (std::size_t j = 0; j < count; ++j) {
      out[base + j] = OutputWord{0, false, width_};
    }
    for (unsigned i = 0; i < width_; ++i) {
      const std::uint64_t* plane = planes.data() + std::size_t{sum_[i]} * words;
      for (std::size_t j = 0; j < count; ++j) {
        out[base + j].sum |= ((plane[j / 64] >> (j % 64)) & 1) << i;
      }
    }
    const std::uint64_t* plane = planes.data() + std::size_t{cout_} * words;
    for (std::size_t j = 0; j < count; ++j) {
      out[base + j].cout = ((plane[j / 64] >> (j % 64)) & 1) != 0;
    }
  }
}

OutputWord evaluate(const Netlist& netlist, const InputVector& v) {
  return Simulator(netlist, simd::Isa::kScalar).evaluate(v);
}

std::string describe(const VectorStream& stream) {
  if (stream.kind == VectorStream::Kind::kExhaustive) return "exhaustive";
  return "mc(count=" + std::to_string(stream.count) +
         ";seed=" + std::to_string(stream.seed) + ")";
}

VectorSource::VectorSource(const VectorStream& stream, unsigned width)
    : stream_(stream), width_(width), mask_(width_mask(width)), rng_(stream.seed) {
  if (width == 0 || width > kMaxWidth) throw WidthError("stream width out of range");
  if (stream.kind == VectorStream::Kind::kExhaustive) {
    if (width > kMaxExhaustiveWidth) {
      throw StreamGuardError("exhaustive enumeration of 2^" + std::to_string(2 * width) +
                             " vectors exceeds the 2^32 guard; use --stream mc");
    }
    if (stream.carry_in == CarryIn::kRandom) {
      throw std::invalid_argument("exhaustive streams need a fixed carry-in");
    }
    total_ = std::uint64_t{1} << (2 * width);
  } else {
    total_ = stream.count;
  }
}

std::size_t VectorSource::next(std::span<InputVector> out) {
  const std::size_t n = static_cast<std::size_t>(
      std::min<std::uint64_t>(out.size(), remaining()));
  const bool fixed_carry = stream_.carry_in == CarryIn::kOne;
  for (std::size_t j = 0; j < n; ++j) {
    InputVector& v = out[j];
    if (stream_.kind == VectorStream::Kind::kExhaustive) {
      const std::uint64_t idx = produced_ + j;
      v.a = idx >> width_;
      v.b = idx & mask_;
      v.c0 = fixed_carry;
    } else {
      v.a = rng_() & mask_;
      v.b = rng_() & mask_;
      v.c0 = stream_.carry_in == CarryIn::kRandom ? (rng_() & 1) != 0 : fixed_carry;
    }
  }
  produced_ += n;
  return n;
}

std::vector<InputVector> stream_vectors(const VectorStream& stream, unsigned width) {
  VectorSource src(stream, width);
  std::vector<InputVector> out(static_cast<std::size_t>(src.total()));
  src.next(out);
  return out;
}

void write_trace(std::ostream& out, const Simulator& sim,
                 std::span<const InputVector> vectors) {
  std::vector<OutputWord> results(vectors.size());
  sim.evaluate(vectors, results);
  out << "a,b,c0,sum,cout,value,exact,error_distance\n";
  for (std::size_t j = 0; j < vectors.size(); ++j) {
    const auto& v = vectors[j];
    const InputVector oracle_in{v.a, v.b, sim.has_carry_in() && v.c0};
    const Wide got = results[j].value();
    const Wide exact = behavioral_accurate(oracle_in, sim.width()).value();
    const Wide ed = got > exact ? got - exact : exact - got;
    out << v.a << ',' << v.b << ',' << (oracle_in.c0 ? 1 : 0) << ',' << results[j].sum
        << ',' << (results[j].cout ? 1 : 0) << ',' << to_decimal(got) << ','
        << to_decimal(exact) << ',' << to_decimal(ed) << '\n';
  }
}

}  // namespace approx
