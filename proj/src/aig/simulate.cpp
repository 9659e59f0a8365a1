// Copyright 2026 The synthkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "synthkit/aig/simulate.hpp"

#include <stdexcept>

namespace synthkit::aig {

std::vector<uint64_t> simulate_nodes(const Aig& aig, std::span<const uint64_t> inputs) {
  if (inputs.size() != aig.num_pis() + aig.num_latches())
    throw std::invalid_argument("simulate: expected one pattern per PI and latch");
  std::vector<uint64_t> value(aig.size(), 0);
  for (std::size_t i = 0; i < aig.num_pis(); ++i)
    value[aig.pis()[i]] = inputs[i];
  for (std::size_t i = 0; i < aig.num_latches(); ++i)
    value[aig.latches()[i].node] = inputs[aig.num_pis() + i];
  for (uint32_t i = 1; i < aig.size(); ++i) {
    if (!aig.is_and(i))
      continue;
    const Node& n = aig.node(i);
    value[i] = literal_value(value, n.fanin0) & literal_value(value, n.fanin1);
  }
  return value;
}

std::vector<uint64_t> simulate(const Aig& aig, std::span<const uint64_t> inputs) {
  auto value = simulate_nodes(aig, inputs);
  std::vector<uint64_t> out;
  for (Literal l : aig.combinational_outputs())
    out.push_back(literal_value(value, l));
  return out;
}

} // namespace synthkit::aig
