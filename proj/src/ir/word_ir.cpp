// Copyright 2026 The synthkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "synthkit/ir/word_ir.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace synthkit::ir {

std::string_view to_string(OpKind kind) {
  switch (kind) {
  case OpKind::Input: return "Input";
  case OpKind::Register: return "Register";
  case OpKind::Const: return "Const";
  case OpKind::Not: return "Not";
  case OpKind::And: return "And";
  case OpKind::Or: return "Or";
  case OpKind::Xor: return "Xor";
  case OpKind::ReduceAnd: return "ReduceAnd";
  case OpKind::ReduceOr: return "ReduceOr";
  case OpKind::ReduceXor: return "ReduceXor";
  case OpKind::Neg: return "Neg";
  case OpKind::Add: return "Add";
  case OpKind::Sub: return "Sub";
  case OpKind::Mul: return "Mul";
  case OpKind::Fma: return "Fma";
  case OpKind::Eq: return "Eq";
  case OpKind::Ne: return "Ne";
  case OpKind::Lt: return "Lt";
  case OpKind::Le: return "Le";
  case OpKind::Gt: return "Gt";
  case OpKind::Ge: return "Ge";
  case OpKind::Shl: return "Shl";
  case OpKind::Shr: return "Shr";
  case OpKind::Mux: return "Mux";
  case OpKind::Concat: return "Concat";
  case OpKind::Replicate: return "Replicate";
  case OpKind::StaticSlice: return "StaticSlice";
  case OpKind::IndexedSliceUp: return "IndexedSliceUp";
  case OpKind::IndexedSliceDown: return "IndexedSliceDown";
  case OpKind::BitSelect: return "BitSelect";
  }
  return "?";
}

NodeId WordLevelDesign::add(WordOp op) {
  for (NodeId operand : op.operands)
    if (operand >= nodes.size())
      throw std::logic_error("operand does not precede its user");
  nodes.push_back(std::move(op));
  return static_cast<NodeId>(nodes.size() - 1);
}

unsigned width_of(const WordLevelDesign& design, NodeId node) { return design.node(node).width; }

std::vector<NodeId> topo_order(const WordLevelDesign& design) {
  std::vector<NodeId> order(design.nodes.size());
  std::iota(order.begin(), order.end(), NodeId{0});
  return order;
}

std::vector<unsigned> use_counts(const WordLevelDesign& design) {
  std::vector<unsigned> uses(design.nodes.size(), 0);
  for (const auto& op : design.nodes)
    for (NodeId operand : op.operands)
      ++uses[operand];
  for (const auto& port : design.outputs)
    ++uses[port.node];
  for (const auto& reg : design.registers)
    ++uses[reg.next];
  return uses;
}

namespace {

[[noreturn]] void broken(NodeId id, const std::string& what) {
  throw std::logic_error("node %" + std::to_string(id) + ": " + what);
}

} // namespace

void validate(const WordLevelDesign& design) {
  auto w = [&](NodeId id) { return design.node(id).width; };
  for (NodeId id = 0; id < design.nodes.size(); ++id) {
    const WordOp& op = design.nodes[id];
    for (NodeId operand : op.operands)
      if (operand >= id)
        broken(id, "operand out of topological order");
    if (op.width == 0)
      broken(id, "zero width");
    auto arity = [&](std::size_t n) {
      if (op.operands.size() != n)
        broken(id, "expected " + std::to_string(n) + " operands");
    };
    auto operands_fit = [&] {
      for (NodeId operand : op.operands)
        if (w(operand) > op.width)
          broken(id, "operand wider than result");
    };
    switch (op.kind) {
    case OpKind::Input:
    case OpKind::Register:
      arity(0);
      break;
    case OpKind::Const:
      arity(0);
      if (op.value.width() != op.width)
        broken(id, "constant width mismatch");
      break;
    case OpKind::Not:
    case OpKind::Neg:
      arity(1);
      operands_fit();
      break;
    case OpKind::And:
    case OpKind::Or:
    case OpKind::Xor:
    case OpKind::Add:
    case OpKind::Sub:
    case OpKind::Mul:
      arity(2);
      operands_fit();
      break;
    case OpKind::Fma:
      arity(3);
      operands_fit();
      break;
    case OpKind::ReduceAnd:
    case OpKind::ReduceOr:
    case OpKind::ReduceXor:
      arity(1);
      if (op.width != 1)
        broken(id, "reduction must be 1 bit");
      break;
    case OpKind::Eq:
    case OpKind::Ne:
    case OpKind::Lt:
    case OpKind::Le:
    case OpKind::Gt:
    case OpKind::Ge:
      arity(2);
      if (op.width != 1)
        broken(id, "comparison must be 1 bit");
      break;
    case OpKind::Shl:
    case OpKind::Shr:
      arity(2);
      if (w(op.operands[0]) > op.width)
        broken(id, "shifted value wider than result");
      break;
    case OpKind::Mux:
      arity(3);
      if (w(op.operands[0]) != 1)
        broken(id, "mux condition must be 1 bit");
      if (w(op.operands[1]) > op.width || w(op.operands[2]) > op.width)
        broken(id, "mux data wider than result");
      break;
    case OpKind::Concat: {
      unsigned sum = 0;
      for (NodeId operand : op.operands)
        sum += w(operand);
      if (op.operands.empty() || sum != op.width)
        broken(id, "concat width is not the sum of its operands");
      break;
    }
    case OpKind::Replicate:
      arity(1);
      if (op.params.size() != 1 || op.params[0] < 1 || op.params[0] * w(op.operands[0]) != op.width)
        broken(id, "bad replication");
      break;
    case OpKind::StaticSlice:
      arity(1);
      if (op.params.size() != 2 || op.params[1] < 0 || op.params[1] > op.params[0] ||
          op.params[0] >= w(op.operands[0]) || op.params[0] - op.params[1] + 1 != op.width)
        broken(id, "static slice bounds out of range");
      break;
    case OpKind::IndexedSliceUp:
    case OpKind::IndexedSliceDown:
      arity(2);
      if (op.params.size() != 1 || op.params[0] < 1 || op.params[0] > w(op.operands[0]) ||
          op.params[0] != op.width)
        broken(id, "indexed slice width out of range");
      break;
    case OpKind::BitSelect:
      arity(2);
      if (op.width != 1)
        broken(id, "bit select must be 1 bit");
      break;
    }
  }
  for (const auto& port : design.inputs)
    if (design.node(port.node).kind != OpKind::Input || w(port.node) != port.width)
      throw std::logic_error("input " + port.name + " is not bound to a matching Input node");
  for (const auto& port : design.outputs)
    if (w(port.node) != port.width)
      throw std::logic_error("output " + port.name + " width mismatch");
  for (const auto& reg : design.registers)
    if (design.node(reg.state).kind != OpKind::Register || w(reg.state) != reg.width ||
        w(reg.next) != reg.width)
      throw std::logic_error("register " + reg.name + " width mismatch");
}

std::string dump(const WordLevelDesign& design) {
  std::ostringstream os;
  os << "module " << design.name << "\n";
  if (!design.clock.empty())
    os << "clock " << design.clock << "\n";
  for (NodeId id = 0; id < design.nodes.size(); ++id) {
    const WordOp& op = design.nodes[id];
    os << "%" << id << " = " << to_string(op.kind) << "(" << op.width << ")";
    for (NodeId operand : op.operands)
      os << " %" << operand;
    if (op.kind == OpKind::Const) {
      os << " [" << op.value.to_verilog() << "]";
    } else if (op.kind == OpKind::Input || op.kind == OpKind::Register) {
      os << " [" << op.name << "]";
    } else if (!op.params.empty()) {
      os << " [";
      for (std::size_t i = 0; i < op.params.size(); ++i)
        os << (i ? ", " : "") << op.params[i];
      os << "]";
    }
    os << "\n";
  }
  for (const auto& port : design.outputs)
    os << "output " << port.name << " = %" << port.node << "\n";
  for (const auto& reg : design.registers)
    os << "next " << reg.name << " = %" << reg.next << "\n";
  return os.str();
}

WordLevelDesign remove_dead_nodes(const WordLevelDesign& design) {
  std::vector<bool> live(design.nodes.size(), false);
  for (const auto& port : design.outputs)
    live[port.node] = true;
  for (const auto& reg : design.registers)
    live[reg.next] = true;
  for (NodeId id = static_cast<NodeId>(design.nodes.size()); id-- > 0;) {
    const WordOp& op = design.nodes[id];
    if (op.kind == OpKind::Input || op.kind == OpKind::Register)
      live[id] = true;
    if (live[id])
      for (NodeId operand : op.operands)
        live[operand] = true;
  }

  WordLevelDesign out;
  out.name = design.name;
  out.clock = design.clock;
  std::vector<NodeId> remap(design.nodes.size(), 0);
  for (NodeId id = 0; id < design.nodes.size(); ++id) {
    if (!live[id])
      continue;
    WordOp op = design.nodes[id];
    for (NodeId& operand : op.operands)
      operand = remap[operand];
    remap[id] = out.add(std::move(op));
  }
  for (Port port : design.inputs) {
    port.node = remap[port.node];
    out.inputs.push_back(port);
  }
  for (Port port : design.outputs) {
    port.node = remap[port.node];
    out.outputs.push_back(port);
  }
  for (Register reg : design.registers) {
    reg.state = remap[reg.state];
    reg.next = remap[reg.next];
    out.registers.push_back(reg);
  }
  for (const auto& [name, info] : design.nets)
    if (live[info.node])
      out.nets[name] = NetInfo{info.width, remap[info.node]};
  return out;
}

} // namespace synthkit::ir
