// Copyright 2026 The synthkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "synthkit/ir/word_ir.hpp"

#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace synthkit::ir {

class MissingInput : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class WidthMismatch : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

using ValueMap = std::map<std::string, BitVector>;

struct EvalResult {
  ValueMap outputs;
  ValueMap next_state;
};

/// Reference semantics of the IR: the ground truth every lowering is checked
/// against. Unsigned modular arithmetic, zero-filling shifts and slices.
EvalResult evaluate(const WordLevelDesign& design, const ValueMap& input_values,
                    const ValueMap& register_state);

/// Positional variant: `inputs` in `design.inputs` order, `state` in
/// `design.registers` order. Returns the value of every node.
std::vector<BitVector> evaluate_nodes(const WordLevelDesign& design, std::span<const BitVector> inputs,
                                      std::span<const BitVector> state);

/// Value of a single non-leaf node given its operand values.
BitVector evaluate_op(const WordOp& op, std::span<const BitVector> operands);

} // namespace synthkit::ir
