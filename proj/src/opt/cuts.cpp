// Copyright 2026 The synthkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "synthkit/opt/cuts.hpp"

#include <algorithm>
#include <stdexcept>

namespace synthkit::opt {

TruthTable expand_truth_table(TruthTable tt, const std::vector<uint32_t>& from, const std::vector<uint32_t>& to) {
  std::array<unsigned, 4> pos{};
  for (std::size_t i = 0; i < from.size(); ++i) {
    auto it = std::find(to.begin(), to.end(), from[i]);
    if (it == to.end())
      throw std::invalid_argument("expand_truth_table: leaf missing from target");
    pos[i] = static_cast<unsigned>(it - to.begin());
  }
  TruthTable out = 0;
  for (unsigned m = 0; m < 16; ++m) {
    unsigned src = 0;
    for (std::size_t i = 0; i < from.size(); ++i)
      src |= ((m >> pos[i]) & 1u) << i;
    if ((tt >> src) & 1)
      out |= static_cast<TruthTable>(1u << m);
  }
  return out;
}

namespace {

bool subset(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

} // namespace

std::vector<std::vector<Cut>> enumerate_cuts(const aig::Aig& aig, unsigned k, unsigned per_node_limit) {
  if (k < 1 || k > 4)
    throw std::invalid_argument("cut size must be between 1 and 4");
  if (per_node_limit < 1)
    throw std::invalid_argument("per-node cut limit must be positive");
  std::vector<std::vector<Cut>> cuts(aig.size());
  cuts[0].push_back(Cut{{}, 0});
  for (uint32_t n = 1; n < aig.size(); ++n) {
    Cut trivial{{n}, kVarTable[0]};
    if (!aig.is_and(n)) {
      cuts[n].push_back(trivial);
      continue;
    }
    const aig::Node& node = aig.node(n);
    std::vector<Cut> merged;
    for (const Cut& c0 : cuts[node.fanin0.node()]) {
      for (const Cut& c1 : cuts[node.fanin1.node()]) {
        std::vector<uint32_t> leaves;
        std::set_union(c0.leaves.begin(), c0.leaves.end(), c1.leaves.begin(), c1.leaves.end(),
                       std::back_inserter(leaves));
        if (leaves.size() > k)
          continue;
        TruthTable t0 = expand_truth_table(c0.tt, c0.leaves, leaves);
        TruthTable t1 = expand_truth_table(c1.tt, c1.leaves, leaves);
        if (node.fanin0.complemented())
          t0 = static_cast<TruthTable>(~t0);
        if (node.fanin1.complemented())
          t1 = static_cast<TruthTable>(~t1);
        Cut cut{std::move(leaves), static_cast<TruthTable>(t0 & t1)};
        if (std::find_if(merged.begin(), merged.end(), [&](const Cut& c) { return c.leaves == cut.leaves; }) ==
            merged.end())
          merged.push_back(std::move(cut));
      }
    }
    std::stable_sort(merged.begin(), merged.end(),
                     [](const Cut& a, const Cut& b) { return a.leaves.size() < b.leaves.size(); });
    std::vector<Cut> kept{trivial};
    for (Cut& c : merged) {
      bool dominated = std::any_of(kept.begin() + 1, kept.end(), [&](const Cut& d) { return subset(d.leaves, c.leaves); });
      if (!dominated)
        kept.push_back(std::move(c));
      if (kept.size() >= per_node_limit)
        break;
    }
    cuts[n] = std::move(kept);
  }
  return cuts;
}

} // namespace synthkit::opt
