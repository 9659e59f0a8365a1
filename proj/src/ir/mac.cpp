// Copyright 2026 The synthkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "synthkit/ir/mac.hpp"

namespace synthkit::ir {

std::vector<MacSite> detect_mac_sites(const WordLevelDesign& design) {
  const auto uses = use_counts(design);
  std::vector<MacSite> sites;
  for (NodeId id = 0; id < design.nodes.size(); ++id) {
    const WordOp& op = design.nodes[id];
    if (op.kind != OpKind::Add)
      continue;
    for (int side = 0; side < 2; ++side) {
      NodeId candidate = op.operands[side];
      const WordOp& mul = design.node(candidate);
      if (mul.kind != OpKind::Mul || uses[candidate] != 1 || mul.width != op.width)
        continue;
      sites.push_back(MacSite{candidate, op.operands[1 - side], id});
      break;
    }
  }
  return sites;
}

WordLevelDesign fuse_mac_sites(const WordLevelDesign& design) {
  const auto sites = detect_mac_sites(design);
  if (sites.empty())
    return design;

  WordLevelDesign fused = design;
  for (const MacSite& site : sites) {
    const WordOp& mul = design.node(site.mul_node);
    WordOp& add = fused.nodes[site.add_node];
    add.kind = OpKind::Fma;
    add.operands = {mul.operands[0], mul.operands[1], site.addend_node};
  }
  return remove_dead_nodes(fused);
}

} // namespace synthkit::ir
