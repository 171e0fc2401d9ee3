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
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace approx {

/// Dense index of a single wire. Assigned in construction order.
struct NetId {
  std::uint32_t index = 0;

  friend bool operator==(NetId, NetId) = default;
  friend auto operator<=>(NetId, NetId) = default;
};

enum class GateKind : std::uint8_t {
  kInput,
  kConst0,
  kNot,
  kAnd2,
  kOr2,
  kXor2,
  kAo21,  // (x & y) | z
};

/// Number of operands a gate of `kind` consumes.
constexpr int arity(GateKind kind) {
  switch (kind) {
    case GateKind::kInput:
    case GateKind::kConst0:
      return 0;
    case GateKind::kNot:
      return 1;
    case GateKind::kAnd2:
    case GateKind::kOr2:
    case GateKind::kXor2:
      return 2;
    case GateKind::kAo21:
      return 3;
  }
  return -1;
}

/// True for gates that are real logic cells (not INPUT/CONST0 sources).
constexpr bool is_logic(GateKind kind) {
  return kind != GateKind::kInput && kind != GateKind::kConst0;
}

std::string_view to_string(GateKind kind);
/// Parses the upper-case names produced by to_string. Throws on unknown.
GateKind parse_gate_kind(std::string_view name);

struct Gate {
  GateKind kind = GateKind::kConst0;
  std::vector<NetId> inputs;
  NetId output;
};

/// A named primary input or output port.
struct Port {
  std::string name;
  NetId net;
};

/// Combinational gate-level netlist.
///
/// Every net is driven by exactly one gate; primary inputs are INPUT gates.
/// Builders emit gates in topological order, but a Netlist may be assembled
/// from arbitrary parts (for example when parsed or hand-made in tests), so
/// structural soundness is established by topo_validate(), not assumed.
class Netlist {
 public:
  Netlist() = default;
  Netlist(unsigned width, std::vector<Gate> gates, std::vector<Port> inputs,
          std::vector<Port> outputs);

  unsigned width() const { return width_; }
  std::span<const Gate> gates() const { return gates_; }
  std::span<const Port> primary_inputs() const { return inputs_; }
  std::span<const Port> primary_outputs() const { return outputs_; }

  /// One past the largest net id referenced anywhere.
  std::size_t net_count() const { return net_count_; }
  /// Gates excluding INPUT and CONST0.
  std::size_t logic_gate_count() const;
  std::size_t count(GateKind kind) const;

  std::optional<NetId> find_input(std::string_view name) const;
  std::optional<NetId> find_output(std::string_view name) const;

 private:
  unsigned width_ = 0;
  std::vector<Gate> gates_;
  std::vector<Port> inputs_;
  std::vector<Port> outputs_;
  std::size_t net_count_ = 0;
};

/// Incremental construction in topological order.
class NetlistBuilder {
 public:
  explicit NetlistBuilder(unsigned width) : width_(width) {}

  NetId add_input(std::string name);
  NetId add_const0();
  /// Appends a logic gate. Throws std::invalid_argument on arity mismatch or
  /// an operand that has not been defined yet.
  NetId add_gate(GateKind kind, std::initializer_list<NetId> inputs);
  NetId add_not(NetId a) { return add_gate(GateKind::kNot, {a}); }
  NetId add_and(NetId a, NetId b) { return add_gate(GateKind::kAnd2, {a, b}); }
  NetId add_or(NetId a, NetId b) { return add_gate(GateKind::kOr2, {a, b}); }
  NetId add_xor(NetId a, NetId b) { return add_gate(GateKind::kXor2, {a, b}); }
  NetId add_ao21(NetId x, NetId y, NetId z) {
    return add_gate(GateKind::kAo21, {x, y, z});
  }
  void add_output(std::string name, NetId net);

  std::size_t gate_count() const { return gates_.size(); }
  Netlist finish() &&;

 private:
  NetId next(GateKind kind, std::vector<NetId> inputs);

  unsigned width_;
  std::vector<Gate> gates_;
  std::vector<Port> inputs_;
  std::vector<Port> outputs_;
};

enum class ViolationKind : std::uint8_t {
  kArity,
  kDefBeforeUse,
  kMultipleDrivers,
  kCycle,
  kOutputs,
};

struct Violation {
  ViolationKind kind;
  std::string message;
};

/// Checks acyclicity, operand arity, def-before-use in gate order, single
/// drivers and primary-output completeness (width + 1 ports, each driven).
/// Returns an empty list for a sound netlist.
std::vector<Violation> topo_validate(const Netlist& netlist);

/// Plain-text structural format, one gate per line:
///
///     # approx-adders netlist v1
///     width 8
///     pi A0 0
///     po SUM0 17
///     gates 45
///     0 INPUT
///     17 XOR2 3 9
///
/// The first column of a gate line is its output net id.
void write_netlist(std::ostream& out, const Netlist& netlist);
std::string to_text(const Netlist& netlist);
/// Inverse of write_netlist. Throws std::runtime_error on malformed input.
/// Does not validate structure; run topo_validate on the result.
Netlist read_netlist(std::istream& in);

}  // namespace approx
