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

#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "test_support.hpp"

namespace approx {
namespace {

AdderSpec approx_spec(unsigned n, Architecture arch, unsigned k, ApproxStyle style) {
  return AdderSpec::approximate(n, arch, k, style);
}

TEST(Evaluate, Examples) {
  const Netlist rca32 = build_adder(AdderSpec::accurate(32, Architecture::kRca));
  EXPECT_EQ(evaluate(rca32, {0, 0, false}).value(), Wide{0});

  const Netlist cla32 = build_adder(AdderSpec::accurate(32, Architecture::kCla));
  const OutputWord w = evaluate(cla32, {0xFFFFFFFFull, 1, false});
  EXPECT_EQ(w.sum, 0u);
  EXPECT_TRUE(w.cout);

  const Netlist rx = build_adder(approx_spec(8, Architecture::kRca, 4, ApproxStyle::kOr));
  EXPECT_EQ(evaluate(rx, {0x0F, 0x01, false}).value(), Wide{0x0F});
  EXPECT_EQ(evaluate(rx, {0x08, 0x08, false}).value(), Wide{0x08});
  // No C0 port: a carry-in request is ignored.
  EXPECT_EQ(evaluate(rx, {0x08, 0x08, true}).value(), Wide{0x08});
}

TEST(Evaluate, RejectsOperandsWiderThanTheAdder) {
  const Netlist nl = build_adder(AdderSpec::accurate(8, Architecture::kRca));
  EXPECT_THROW(evaluate(nl, {0x100, 0, false}), WidthError);
  EXPECT_THROW(evaluate(nl, {0, 0x1FF, false}), WidthError);
}

TEST(Evaluate, RejectsUnsoundNetlists) {
  Netlist bad(1, {{GateKind::kInput, {}, NetId{0}}}, {{"A0", NetId{0}}}, {});
  EXPECT_THROW(Simulator{bad}, std::invalid_argument);
}

TEST(Evaluate, IsPure) {
  const Simulator sim(build_adder(approx_spec(16, Architecture::kCla, 8, ApproxStyle::kXor)));
  const InputVector v{0xBEEF, 0x1234, false};
  const OutputWord first = sim.evaluate(v);
  for (int i = 0; i < 10; ++i) EXPECT_EQ(sim.evaluate(v), first);
}

TEST(Behavioral, Accurate) {
  EXPECT_EQ(behavioral_accurate({1, 1, true}, 4).value(), Wide{3});
  const OutputWord w = behavioral_accurate({15, 15, false}, 4);
  EXPECT_EQ(w.sum, 14u);
  EXPECT_TRUE(w.cout);
  const OutputWord top = behavioral_accurate({~0ull, ~0ull, true}, 64);
  EXPECT_EQ(top.sum, ~0ull);
  EXPECT_TRUE(top.cout);
  EXPECT_EQ(to_decimal(top.value()), "36893488147419103231");  // 2^65 - 1
}

TEST(Behavioral, Approximate) {
  EXPECT_EQ(behavioral_approx({0x88, 0x88, false}, approx_spec(8, Architecture::kRca, 4, ApproxStyle::kOr)).value(),
            Wide{0x108});
  EXPECT_EQ(behavioral_approx({0x0F, 0x0F, false}, approx_spec(8, Architecture::kRca, 4, ApproxStyle::kXor)).value(),
            Wide{0});
  std::mt19937_64 rng(1);
  for (int i = 0; i < 50; ++i) {
    const AdderSpec s = testing::random_spec(rng);
    EXPECT_EQ(behavioral_approx({0, 0, true}, s).value(), Wide{0});
  }
}

TEST(Equivalence, AccurateExhaustiveN8BothCarries) {
  const Simulator rca(build_adder(AdderSpec::accurate(8, Architecture::kRca)));
  const Simulator cla(build_adder(AdderSpec::accurate(8, Architecture::kCla)));
  for (CarryIn c : {CarryIn::kZero, CarryIn::kOne}) {
    const auto vectors = stream_vectors(VectorStream::exhaustive(c), 8);
    ASSERT_EQ(vectors.size(), 65536u);
    std::vector<OutputWord> r(vectors.size()), l(vectors.size());
    rca.evaluate(vectors, r);
    cla.evaluate(vectors, l);
    for (std::size_t i = 0; i < vectors.size(); ++i) {
      const OutputWord exact = behavioral_accurate(vectors[i], 8);
      ASSERT_EQ(r[i], exact) << vectors[i].a << "+" << vectors[i].b;
      ASSERT_EQ(l[i], exact) << vectors[i].a << "+" << vectors[i].b;
    }
  }
}

TEST(Equivalence, SingleVectorPathAgreesWithBatchPath) {
  const Netlist nl = build_adder(AdderSpec::accurate(6, Architecture::kRca));
  const auto vectors = stream_vectors(VectorStream::exhaustive(CarryIn::kOne), 6);
  const Simulator sim(nl);
  std::vector<OutputWord> batch(vectors.size());
  sim.evaluate(vectors, batch);
  for (std::size_t i = 0; i < vectors.size(); ++i) ASSERT_EQ(evaluate(nl, vectors[i]), batch[i]);
}

TEST(Equivalence, ApproximateExhaustiveSmallWidths) {
  for (unsigned n : {4u, 8u}) {
    const auto vectors = stream_vectors(VectorStream::exhaustive(), n);
    for (Architecture arch : {Architecture::kRca, Architecture::kCla}) {
      for (ApproxStyle style : {ApproxStyle::kOr, ApproxStyle::kXor}) {
        for (unsigned k = 1; k < n; ++k) {
          const AdderSpec s = approx_spec(n, arch, k, style);
          if (arch == Architecture::kCla && s.accurate_bits() % 4 != 0) continue;
          const Simulator sim(build_adder(s));
          std::vector<OutputWord> out(vectors.size());
          sim.evaluate(vectors, out);
          for (std::size_t i = 0; i < vectors.size(); ++i) {
            ASSERT_EQ(out[i], behavioral_approx(vectors[i], s)) << describe(s);
          }
        }
      }
    }
  }
}

TEST(Equivalence, MonteCarloN32) {
  const auto vectors =
      stream_vectors(VectorStream::monte_carlo(100000, 42, CarryIn::kRandom), 32);
  std::vector<OutputWord> out(vectors.size());
  for (Architecture arch : {Architecture::kRca, Architecture::kCla}) {
    for (unsigned k : {0u, 4u, 8u, 12u, 16u, 20u}) {
      const AdderSpec s = approx_spec(32, arch, k, ApproxStyle::kOr);
      Simulator(build_adder(s)).evaluate(vectors, out);
      std::size_t mismatches = 0;
      for (std::size_t i = 0; i < vectors.size(); ++i) mismatches += !(out[i] == behavioral(vectors[i], s));
      EXPECT_EQ(mismatches, 0u) << describe(s);
    }
  }
}

TEST(Equivalence, FullWidth64) {
  const auto vectors = stream_vectors(VectorStream::monte_carlo(5000, 7, CarryIn::kRandom), 64);
  for (const AdderSpec& s : {AdderSpec::accurate(64, Architecture::kRca),
                             AdderSpec::accurate(64, Architecture::kCla),
                             approx_spec(64, Architecture::kCla, 60, ApproxStyle::kXor)}) {
    const Simulator sim(build_adder(s));
    std::vector<OutputWord> out(vectors.size());
    sim.evaluate(vectors, out);
    for (std::size_t i = 0; i < vectors.size(); ++i) ASSERT_EQ(out[i], behavioral(vectors[i], s));
  }
}

TEST(Streams, ExhaustiveOrderN2) {
  const auto v = stream_vectors(VectorStream::exhaustive(), 2);
  ASSERT_EQ(v.size(), 16u);
  for (std::size_t i = 0; i < v.size(); ++i) {
    EXPECT_EQ(v[i].a, i / 4);
    EXPECT_EQ(v[i].b, i % 4);
    EXPECT_FALSE(v[i].c0);
  }
}

TEST(Streams, MonteCarloDeterminismAndSeedSensitivity) {
  const auto x = stream_vectors(VectorStream::monte_carlo(1000, 42), 32);
  const auto y = stream_vectors(VectorStream::monte_carlo(1000, 42), 32);
  const auto z = stream_vectors(VectorStream::monte_carlo(1000, 43), 32);
  EXPECT_EQ(x, y);
  EXPECT_NE(x, z);
  for (const auto& v : x) {
    EXPECT_LT(v.a, 1ull << 32);
    EXPECT_LT(v.b, 1ull << 32);
  }
}

TEST(Streams, UsesStandardMersenneTwister64) {
  // Default seed 5489: the first draw and the 10000th draw are fixed by the
  // C++ standard for std::mt19937_64.
  VectorSource src(VectorStream::monte_carlo(5000, 5489), 64);
  std::vector<InputVector> v(5000);
  ASSERT_EQ(src.next(v), 5000u);
  EXPECT_EQ(v.front().a, 14514284786278117030ull);
  EXPECT_EQ(v.back().b, 9981545732273789042ull);
  EXPECT_EQ(src.next(v), 0u);
}

TEST(Streams, Guards) {
  EXPECT_THROW(VectorSource(VectorStream::exhaustive(), 17), StreamGuardError);
  VectorSource big(VectorStream::exhaustive(), 16);
  EXPECT_EQ(big.total(), 1ull << 32);
  EXPECT_THROW(VectorSource(VectorStream::exhaustive(CarryIn::kRandom), 4), std::invalid_argument);
  EXPECT_THROW(VectorSource(VectorStream::monte_carlo(1, 1), 65), WidthError);
}

TEST(Trace, CsvRows) {
  const Simulator sim(build_adder(approx_spec(8, Architecture::kRca, 4, ApproxStyle::kOr)));
  std::ostringstream os;
  const std::vector<InputVector> v{{0x0F, 0x01, false}, {0x88, 0x88, false}};
  write_trace(os, sim, v);
  EXPECT_EQ(os.str(),
            "a,b,c0,sum,cout,value,exact,error_distance\n"
            "15,1,0,15,0,15,16,1\n"
            "136,136,0,8,1,264,272,8\n");
}

}  // namespace
}  // namespace approx
