// Copyright 2026 The synthkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "synthkit/aig/aig.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace synthkit::aig {

/// Bit-parallel simulation of 64 assignments. `inputs` holds one word per
/// combinational input (PIs, then latch outputs); the result holds one word
/// per combinational output (POs, then latch next-states).
std::vector<uint64_t> simulate(const Aig& aig, std::span<const uint64_t> inputs);

/// Like simulate, but returns the pattern of every node in the table.
std::vector<uint64_t> simulate_nodes(const Aig& aig, std::span<const uint64_t> inputs);

inline uint64_t literal_value(std::span<const uint64_t> node_values, Literal l) {
  return l.complemented() ? ~node_values[l.node()] : node_values[l.node()];
}

} // namespace synthkit::aig
