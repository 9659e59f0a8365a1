// Copyright 2026 The synthkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "synthkit/ir/evaluate.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace synthkit::ir {

namespace {

BitVector bit1(bool v) { return BitVector(1, v ? 1 : 0); }

BitVector reduce_xor(const BitVector& a) {
  bool acc = false;
  for (uint64_t w : a.words())
    acc ^= std::popcount(w) & 1;
  return bit1(acc);
}

// Slice of `width` bits starting at `offset` where `offset` may be negative
// or run past the MSB; missing positions read as zero.
BitVector window(const BitVector& bus, int64_t offset, unsigned width) {
  BitVector r(width);
  for (unsigned k = 0; k < width; ++k) {
    int64_t pos = offset + k;
    if (pos >= 0 && pos < bus.width() && bus.bit(static_cast<unsigned>(pos)))
      r.set_bit(k, true);
  }
  return r;
}

// Index values too large for int64 are far outside every supported bus.
int64_t index_value(const BitVector& index) {
  if (index.significant_bits() > 40)
    return int64_t{1} << 40;
  return static_cast<int64_t>(index.low_word());
}

} // namespace

BitVector evaluate_op(const WordOp& op, std::span<const BitVector> v) {
  const unsigned w = op.width;
  auto cmp_width = [&] { return std::max(v[0].width(), v[1].width()); };
  switch (op.kind) {
  case OpKind::Input:
  case OpKind::Register:
    throw std::logic_error("leaf nodes have no operator semantics");
  case OpKind::Const: return op.value;
  case OpKind::Not: return bv_not(v[0], w);
  case OpKind::And: return bv_and(v[0], v[1], w);
  case OpKind::Or: return bv_or(v[0], v[1], w);
  case OpKind::Xor: return bv_xor(v[0], v[1], w);
  case OpKind::ReduceAnd: return bit1(v[0] == BitVector::ones(v[0].width()));
  case OpKind::ReduceOr: return bit1(!v[0].is_zero());
  case OpKind::ReduceXor: return reduce_xor(v[0]);
  case OpKind::Neg: return bv_neg(v[0], w);
  case OpKind::Add: return bv_add(v[0], v[1], w);
  case OpKind::Sub: return bv_sub(v[0], v[1], w);
  case OpKind::Mul: return bv_mul(v[0], v[1], w);
  case OpKind::Fma: return bv_add(bv_mul(v[0], v[1], w), v[2], w);
  case OpKind::Eq: return bit1(v[0].resized(cmp_width()) == v[1].resized(cmp_width()));
  case OpKind::Ne: return bit1(v[0].resized(cmp_width()) != v[1].resized(cmp_width()));
  case OpKind::Lt: return bit1(bv_compare(v[0], v[1]) < 0);
  case OpKind::Le: return bit1(bv_compare(v[0], v[1]) <= 0);
  case OpKind::Gt: return bit1(bv_compare(v[0], v[1]) > 0);
  case OpKind::Ge: return bit1(bv_compare(v[0], v[1]) >= 0);
  case OpKind::Shl: return bv_shl(v[0], v[1], w);
  case OpKind::Shr: return bv_shr(v[0], v[1], w);
  case OpKind::Mux: return (v[0].bit(0) ? v[1] : v[2]).resized(w);
  case OpKind::Concat: {
    BitVector acc = v[0];
    for (std::size_t i = 1; i < v.size(); ++i)
      acc = bv_concat(acc, v[i]);
    return acc;
  }
  case OpKind::Replicate: {
    BitVector acc = v[0];
    for (int64_t i = 1; i < op.params[0]; ++i)
      acc = bv_concat(acc, v[0]);
    return acc;
  }
  case OpKind::StaticSlice:
    return v[0].slice(static_cast<unsigned>(op.params[0]), static_cast<unsigned>(op.params[1]));
  case OpKind::IndexedSliceUp: return window(v[0], index_value(v[1]), w);
  case OpKind::IndexedSliceDown: return window(v[0], index_value(v[1]) - (w - 1), w);
  case OpKind::BitSelect: return window(v[0], index_value(v[1]), 1);
  }
  throw std::logic_error("unhandled op kind");
}

std::vector<BitVector> evaluate_nodes(const WordLevelDesign& design, std::span<const BitVector> inputs,
                                      std::span<const BitVector> state) {
  if (inputs.size() != design.inputs.size())
    throw MissingInput("expected " + std::to_string(design.inputs.size()) + " input values");
  if (state.size() != design.registers.size())
    throw MissingInput("expected " + std::to_string(design.registers.size()) + " register values");

  std::vector<BitVector> values(design.nodes.size());
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    const Port& port = design.inputs[i];
    if (inputs[i].width() != port.width)
      throw WidthMismatch("input " + port.name + " expects " + std::to_string(port.width) + " bits");
    values[port.node] = inputs[i];
  }
  for (std::size_t i = 0; i < state.size(); ++i) {
    const Register& reg = design.registers[i];
    if (state[i].width() != reg.width)
      throw WidthMismatch("register " + reg.name + " expects " + std::to_string(reg.width) + " bits");
    values[reg.state] = state[i];
  }

  std::vector<BitVector> operands;
  for (NodeId id = 0; id < design.nodes.size(); ++id) {
    const WordOp& op = design.nodes[id];
    if (op.kind == OpKind::Input || op.kind == OpKind::Register)
      continue;
    operands.clear();
    for (NodeId operand : op.operands)
      operands.push_back(values[operand]);
    values[id] = evaluate_op(op, operands);
  }
  return values;
}

EvalResult evaluate(const WordLevelDesign& design, const ValueMap& input_values,
                    const ValueMap& register_state) {
  std::vector<BitVector> inputs, state;
  for (const auto& port : design.inputs) {
    auto it = input_values.find(port.name);
    if (it == input_values.end())
      throw MissingInput("no value for input " + port.name);
    inputs.push_back(it->second);
  }
  for (const auto& reg : design.registers) {
    auto it = register_state.find(reg.name);
    if (it == register_state.end())
      throw MissingInput("no value for register " + reg.name);
    state.push_back(it->second);
  }
  auto values = evaluate_nodes(design, inputs, state);
  EvalResult result;
  for (const auto& port : design.outputs)
    result.outputs[port.name] = values[port.node];
  for (const auto& reg : design.registers)
    result.next_state[reg.name] = values[reg.next];
  return result;
}

} // namespace synthkit::ir
