// Copyright 2026 The synthkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "synthkit/ir/word_ir.hpp"

#include <vector>

namespace synthkit::ir {

/// An `Add` whose one operand is a single-use `Mul`.
struct MacSite {
  NodeId mul_node;
  NodeId addend_node;
  NodeId add_node;

  friend bool operator==(const MacSite&, const MacSite&) = default;
};

/*! \brief Finds multiply-accumulate patterns eligible for fusion.
 *
 * A site is `Add(Mul(a, b), c)` or `Add(c, Mul(a, b))` where the Mul has
 * exactly one user (that Add) and has the Add's width. A narrower product
 * feeding a wider sum is truncated first and cannot be fused. When both
 * Add operands qualify, the left one is taken. Sites are returned in Add
 * node order and never share a Mul.
 */
std::vector<MacSite> detect_mac_sites(const WordLevelDesign& design);

/// Replaces every detected site by a single `Fma(a, b, c)` node and drops the
/// absorbed multipliers. Function is unchanged.
WordLevelDesign fuse_mac_sites(const WordLevelDesign& design);

} // namespace synthkit::ir
