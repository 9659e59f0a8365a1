// Copyright 2026 The synthkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "synthkit/aig/aig.hpp"
#include "synthkit/opt/npn.hpp"

#include <vector>

namespace synthkit::opt {

/// Leaves are sorted node indices; leaf i is variable i of `tt`.
struct Cut {
  std::vector<uint32_t> leaves;
  TruthTable tt = 0;

  bool operator==(const Cut&) const = default;
};

/// Truth table of `tt` (over `from` leaves) re-expressed over `to`, which
/// must contain every leaf of `from`.
TruthTable expand_truth_table(TruthTable tt, const std::vector<uint32_t>& from, const std::vector<uint32_t>& to);

/*! \brief Bottom-up K-feasible cut enumeration.
 *
 * Every node gets its trivial cut first, followed by the merged cuts of
 * its fanins with at most `k` leaves. Cuts whose leaves are a superset of
 * another cut's are dropped, and the list is cut to `per_node_limit`
 * keeping the cuts with the fewest leaves. The constant node has one cut
 * with no leaves.
 */
std::vector<std::vector<Cut>> enumerate_cuts(const aig::Aig& aig, unsigned k = 4, unsigned per_node_limit = 8);

} // namespace synthkit::opt
