// Copyright 2026 The synthkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>

namespace synthkit::opt {

/// Truth table of a 4-input function; bit m is f at minterm m, with
/// variable i at bit i of m (var0 = 0xAAAA, var1 = 0xCCCC, ...).
using TruthTable = uint16_t;

inline constexpr TruthTable kVarTable[4] = {0xAAAA, 0xCCCC, 0xF0F0, 0xFF00};

/*! \brief Input permutation, input complement and output complement.
 *
 * Applying the transform to f gives g(x) = output ^ f(y), where
 * y[perm[i]] = x[i] ^ bit i of input_mask.
 */
struct NpnTransform {
  std::array<uint8_t, 4> perm{0, 1, 2, 3};
  uint8_t input_mask = 0;
  bool output = false;

  bool operator==(const NpnTransform&) const = default;
};

TruthTable apply_transform(TruthTable tt, const NpnTransform& t);

struct NpnResult {
  TruthTable canonical = 0;
  NpnTransform transform;
};

/// Smallest table reachable from `tt` over all 768 transforms. Results come
/// from a table over all 65536 functions built on first use.
NpnResult npn_canonical(TruthTable tt);

/// Number of distinct canonical tables (the 4-input NPN classes).
std::size_t npn_class_count();

/// All 384 input transforms (permutation and input complement, no output
/// complement) in a fixed order.
const std::array<NpnTransform, 384>& input_transforms();

/// Fast apply for input transform number `index` of input_transforms().
TruthTable apply_input_transform(TruthTable tt, std::size_t index);

} // namespace synthkit::opt
