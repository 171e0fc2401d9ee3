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

#include "approx/netlist.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace approx {

namespace {

constexpr std::string_view kHeader = "# approx-adders netlist v1";

std::size_t count_nets(std::span<const Gate> gates, std::span<const Port> ins,
                       std::span<const Port> outs) {
  std::size_t n = 0;
  auto bump = [&n](NetId id) { n = std::max<std::size_t>(n, id.index + 1); };
  for (const auto& g : gates) {
    bump(g.output);
    for (NetId in : g.inputs) bump(in);
  }
  for (const auto& p : ins) bump(p.net);
  for (const auto& p : outs) bump(p.net);
  return n;
}

std::uint32_t parse_u32(std::string_view tok, std::string_view what) {
  std::uint32_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw std::runtime_error("netlist: bad " + std::string(what) + " '" +
                             std::string(tok) + "'");
  }
  return v;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

std::string_view to_string(GateKind kind) {
  switch (kind) {
    case GateKind::kInput:
      return "INPUT";
    case GateKind::kConst0:
      return "CONST0";
    case GateKind::kNot:
      return "NOT";
    case GateKind::kAnd2:
      return "AND2";
    case GateKind::kOr2:
      return "OR2";
    case GateKind::kXor2:
      return "XOR2";
    case GateKind::kAo21:
      return "AO21";
  }
  return "?";
}

GateKind parse_gate_kind(std::string_view name) {
  for (auto k : {GateKind::kInput, GateKind::kConst0, GateKind::kNot,
                 GateKind::kAnd2, GateKind::kOr2, GateKind::kXor2,
                 GateKind::kAo21}) {
    if (to_string(k) == name) return k;
  }
  throw std::runtime_error("unknown gate kind '" + std::string(name) + "'");
}

Netlist::Netlist(unsigned width, std::vector<Gate> gates,
                 std::vector<Port> inputs, std::vector<Port> outputs)
    : width_(width),
      gates_(std::move(gates)),
      inputs_(std::move(inputs)),
      outputs_(std::move(outputs)) {
  net_count_ = count_nets(gates_, inputs_, outputs_);
}

std::size_t Netlist::logic_gate_count() const {
  return static_cast<std::size_t>(std::count_if(
      gates_.begin(), gates_.end(), [](const Gate& g) { return is_logic(g.kind); }));
}

std::size_t Netlist::count(GateKind kind) const {
  return static_cast<std::size_t>(std::count_if(
      gates_.begin(), gates_.end(), [kind](const Gate& g) { return g.kind == kind; }));
}

std::optional<NetId> Netlist::find_input(std::string_view name) const {
  for (const auto& p : inputs_)
    if (p.name == name) return p.net;
  return std::nullopt;
}

std::optional<NetId> Netlist::find_output(std::string_view name) const {
  for (const auto& p : outputs_)
    if (p.name == name) return p.net;
  return std::nullopt;
}

NetId NetlistBuilder::next(GateKind kind, std::vector<NetId> inputs) {
  NetId id{static_cast<std::uint32_t>(gates_.size())};
  gates_.push_back(Gate{kind, std::move(inputs), id});
  return id;
}

NetId NetlistBuilder::add_input(std::string name) {
  NetId id = next(GateKind::kInput, {});
  inputs_.push_back(Port{std::move(name), id});
  return id;
}

NetId NetlistBuilder::add_const0() { return next(GateKind::kConst0, {}); }

NetId NetlistBuilder::add_gate(GateKind kind, std::initializer_list<NetId> inputs) {
  if (!is_logic(kind) || static_cast<int>(inputs.size()) != arity(kind)) {
    throw std::invalid_argument("add_gate: bad operand count for " +
                                std::string(to_string(kind)));
  }
  for (NetId in : inputs) {
    if (in.index >= gates_.size()) {
      throw std::invalid_argument("add_gate: operand net " +
                                  std::to_string(in.index) + " not yet defined");
    }
  }
  return next(kind, std::vector<NetId>(inputs));
}

void NetlistBuilder::add_output(std::string name, NetId net) {
  if (net.index >= gates_.size()) {
    throw std::invalid_argument("add_output: net not defined");
  }
  outputs_.push_back(Port{std::move(name), net});
}

Netlist NetlistBuilder::finish() && {
  return Netlist(width_, std::move(gates_), std::move(inputs_), std::move(outputs_));
}

std::vector<Violation> topo_validate(const Netlist& netlist) {
  std::vector<Violation> out;
  auto gates = netlist.gates();
  const std::size_t nets = netlist.net_count();
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  // Position of the (first) driver of each net.
  std::vector<std::size_t> driver(nets, kNone);
  for (std::size_t i = 0; i < gates.size(); ++i) {
    const Gate& g = gates[i];
    if (static_cast<int>(g.inputs.size()) != arity(g.kind)) {
      out.push_back({ViolationKind::kArity,
                     "gate " + std::to_string(i) + " (" +
                         std::string(to_string(g.kind)) + ") has " +
                         std::to_string(g.inputs.size()) + " operands, expects " +
                         std::to_string(arity(g.kind))});
    }
    auto& d = driver[g.output.index];
    if (d != kNone) {
      out.push_back({ViolationKind::kMultipleDrivers,
                     "net " + std::to_string(g.output.index) + " driven by gates " +
                         std::to_string(d) + " and " + std::to_string(i)});
    } else {
      d = i;
    }
  }

  for (std::size_t i = 0; i < gates.size(); ++i) {
    for (NetId in : gates[i].inputs) {
      std::size_t d = driver[in.index];
      if (d == kNone) {
        out.push_back({ViolationKind::kDefBeforeUse,
                       "gate " + std::to_string(i) + " reads undefined net " +
                           std::to_string(in.index)});
      } else if (d >= i) {
        out.push_back({ViolationKind::kDefBeforeUse,
                       "gate " + std::to_string(i) + " reads net " +
                           std::to_string(in.index) + " before its driver (gate " +
                           std::to_string(d) + ")"});
      }
    }
  }

  // Iterative three-colour DFS over driver edges (gate -> gates driving its
  // operands). A grey operand closes a cycle.
  enum : std::uint8_t { kWhite, kGrey, kBlack };
  std::vector<std::uint8_t> colour(gates.size(), kWhite);
  std::vector<std::pair<std::size_t, std::size_t>> stack;
  for (std::size_t root = 0; root < gates.size(); ++root) {
    if (colour[root] != kWhite) continue;
    stack.push_back({root, 0});
    colour[root] = kGrey;
    while (!stack.empty()) {
      auto& [g, next_operand] = stack.back();
      const auto& ins = gates[g].inputs;
      if (next_operand == ins.size()) {
        colour[g] = kBlack;
        stack.pop_back();
        continue;
      }
      std::size_t d = driver[ins[next_operand++].index];
      if (d == kNone) continue;
      if (colour[d] == kGrey) {
        out.push_back({ViolationKind::kCycle,
                       "combinational cycle through net " +
                           std::to_string(gates[d].output.index)});
      } else if (colour[d] == kWhite) {
        colour[d] = kGrey;
        stack.push_back({d, 0});
      }
    }
  }

  auto outputs = netlist.primary_outputs();
  if (outputs.size() != netlist.width() + 1u) {
    out.push_back({ViolationKind::kOutputs,
                   "expected " + std::to_string(netlist.width() + 1) +
                       " primary outputs, found " + std::to_string(outputs.size())});
  }
  for (const auto& p : outputs) {
    if (driver[p.net.index] == kNone) {
      out.push_back({ViolationKind::kOutputs, "output " + p.name + " is undriven"});
    }
  }
  for (const auto& p : netlist.primary_inputs()) {
    std::size_t d = driver[p.net.index];
    if (d == kNone || gates[d].kind != GateKind::kInput) {
      out.push_back({ViolationKind::kOutputs,
                     "input port " + p.name + " is not an INPUT gate"});
    }
  }
  return out;
}

void write_netlist(std::ostream& out, const Netlist& netlist) {
  out << kHeader << '\n';
  out << "width " << netlist.width() << '\n';
  for (const auto& p : netlist.primary_inputs()) out << "pi " << p.name << ' ' << p.net.index << '\n';
  for (const auto& p : netlist.primary_outputs()) out << "po " << p.name << ' ' << p.net.index << '\n';
  out << "gates " << netlist.gates().size() << '\n';
  for (const auto& g : netlist.gates()) {
    out << g.output.index << ' ' << to_string(g.kind);
    for (NetId in : g.inputs) out << ' ' << in.index;
    out << '\n';
  }
}

std::string to_text(const Netlist& netlist) {
  std::ostringstream os;
  write_netlist(os, netlist);
  return os.str();
}

Netlist read_netlist(std::istream& in) {
  unsigned width = 0;
  std::vector<Gate> gates;
  std::vector<Port> inputs, outputs;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto tok = split_ws(line);
    if (tok.empty() || tok[0].front() == '#') continue;
    auto need = [&](std::size_t n) {
      if (tok.size() != n) {
        throw std::runtime_error("netlist line " + std::to_string(lineno) +
                                 ": expected " + std::to_string(n) + " fields");
      }
    };
    if (tok[0] == "width") {
      need(2);
      width = parse_u32(tok[1], "width");
    } else if (tok[0] == "pi" || tok[0] == "po") {
      need(3);
      Port p{std::string(tok[1]), NetId{parse_u32(tok[2], "net id")}};
      (tok[0] == "pi" ? inputs : outputs).push_back(std::move(p));
    } else if (tok[0] == "gates") {
      need(2);
      gates.reserve(parse_u32(tok[1], "gate count"));
    } else {
      if (tok.size() < 2) {
        throw std::runtime_error("netlist line " + std::to_string(lineno) +
                                 ": truncated gate");
      }
      Gate g;
      g.output = NetId{parse_u32(tok[0], "net id")};
      g.kind = parse_gate_kind(tok[1]);
      for (std::size_t i = 2; i < tok.size(); ++i) {
        g.inputs.push_back(NetId{parse_u32(tok[i], "operand")});
      }
      gates.push_back(std::move(g));
    }
  }
  return Netlist(width, std::move(gates), std::move(inputs), std::move(outputs));
}

}  // namespace approx
