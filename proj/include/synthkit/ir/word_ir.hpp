// Copyright 2026 The synthkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "synthkit/ir/bitvector.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace synthkit::ir {

using NodeId = uint32_t;

/*! \brief Word-level operation kinds.
 *
 * `Input` and `Register` are leaves carrying a port or register name.
 * `Fma` only appears after MAC fusion and computes `a * b + c`.
 */
enum class OpKind : uint8_t {
  Input,
  Register,
  Const,
  Not,
  And,
  Or,
  Xor,
  ReduceAnd,
  ReduceOr,
  ReduceXor,
  Neg,
  Add,
  Sub,
  Mul,
  Fma,
  Eq,
  Ne,
  Lt,
  Le,
  Gt,
  Ge,
  Shl,
  Shr,
  Mux,
  Concat,
  Replicate,
  StaticSlice,
  IndexedSliceUp,
  IndexedSliceDown,
  BitSelect,
};

std::string_view to_string(OpKind kind);

/*! \brief One node of the dataflow graph.
 *
 * Operand conventions:
 *  - Mux: (condition, then, else), condition is 1 bit wide
 *  - Concat: MSB operand first, as written in the source
 *  - Shl/Shr: (value, amount)
 *  - IndexedSliceUp/Down, BitSelect: (bus, index)
 *  - Fma: (multiplicand, multiplier, addend)
 *
 * Parameters: StaticSlice {hi, lo}; Replicate {count};
 * IndexedSliceUp/Down {slice width}.
 *
 * Arithmetic, bitwise, shift-value and mux-data operands narrower than the
 * node are zero-extended to the node width. Comparison operands are
 * zero-extended to the wider of the two.
 */
struct WordOp {
  OpKind kind = OpKind::Const;
  unsigned width = 1;
  std::vector<NodeId> operands;
  std::vector<int64_t> params;
  BitVector value;  ///< Const only
  std::string name; ///< Input/Register only
};

struct Port {
  std::string name;
  unsigned width = 1;
  NodeId node = 0;
};

struct Register {
  std::string name;
  unsigned width = 1;
  NodeId state = 0; ///< the Register leaf node
  NodeId next = 0;
};

struct NetInfo {
  unsigned width = 1;
  NodeId node = 0;
};

/// Width-annotated dataflow IR of one module. Nodes are stored in
/// topological order: every operand index is smaller than its user's index.
struct WordLevelDesign {
  std::string name;
  std::string clock; ///< empty for purely combinational designs
  std::vector<Port> inputs;
  std::vector<Port> outputs;
  std::vector<Register> registers;
  std::vector<WordOp> nodes;
  std::map<std::string, NetInfo> nets;

  NodeId add(WordOp op);
  const WordOp& node(NodeId id) const { return nodes.at(id); }
};

unsigned width_of(const WordLevelDesign& design, NodeId node);

/// Node ids in evaluation order. Stable: always 0..n-1 since storage is
/// already topological.
std::vector<NodeId> topo_order(const WordLevelDesign& design);

/// Number of uses of every node, counting operand edges, output ports and
/// register next-state references.
std::vector<unsigned> use_counts(const WordLevelDesign& design);

/// Throws std::logic_error when a structural invariant is broken
/// (operand order, width rules, slice bounds).
void validate(const WordLevelDesign& design);

/// Canonical text dump, one node per line: `%id = Kind(width) %a %b [params]`.
std::string dump(const WordLevelDesign& design);

/// Drops nodes not reachable from outputs or register next-state values.
/// Input and Register leaves are always kept.
WordLevelDesign remove_dead_nodes(const WordLevelDesign& design);

} // namespace synthkit::ir
