// Copyright 2026 The synthkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "synthkit/aig/aig.hpp"
#include "synthkit/opt/rewrite_db.hpp"

namespace synthkit::opt {

/// Rebuilds the graph with structural hashing and drops dead nodes.
aig::Aig strash(const aig::Aig& aig);

/*! \brief Depth-oriented AND-tree rebalancing.
 *
 * Each maximal AND tree (grown through non-complemented, single-fanout
 * edges) is rebuilt over its leaves by repeatedly joining the two
 * shallowest operands. Depth never increases.
 */
aig::Aig balance(const aig::Aig& aig);

struct RewriteOptions {
  bool zero_gain = false;
  unsigned cut_size = 4;
  /// Per-node cut cap; the default keeps every 4-feasible cut in practice.
  unsigned cut_limit = 1000;
  /// Reject replacements that would make a node deeper than the original.
  bool preserve_levels = true;
};

/*! \brief Cut-based rewriting against the NPN structure database.
 *
 * Nodes are visited in topological order. For each 4-cut the database
 * structure of its class is costed against the graph built so far:
 * gain = nodes of the cut's fanout-free cone that would die, minus the
 * nodes the replacement has to add. The best candidate is applied when
 * its gain is positive, or zero with `zero_gain`. Ties go to the lower
 * resulting level, then to the lower canonical table.
 */
aig::Aig rewrite(const aig::Aig& aig, const RewriteOptions& options = {},
                 const RewriteDb& db = default_rewrite_db());

} // namespace synthkit::opt
