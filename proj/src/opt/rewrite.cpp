// Copyright 2026 The synthkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "synthkit/opt/cuts.hpp"
#include "synthkit/opt/passes.hpp"

#include "rebuild.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <tuple>
#include <unordered_set>

namespace synthkit::opt {

using aig::Aig;
using aig::kFalse;
using aig::Literal;

namespace {

// Collects the fanout-free cone of `root` above `leaves` by dereferencing.
void collect_mffc(const Aig& aig, uint32_t root, const std::vector<uint32_t>& leaves, std::vector<unsigned>& refs,
                  std::vector<uint32_t>& out) {
  out.clear();
  out.push_back(root);
  for (std::size_t i = 0; i < out.size(); ++i) {
    uint32_t n = out[i];
    for (Literal f : {aig.node(n).fanin0, aig.node(n).fanin1}) {
      uint32_t m = f.node();
      if (!aig.is_and(m) || std::binary_search(leaves.begin(), leaves.end(), m))
        continue;
      if (--refs[m] == 0)
        out.push_back(m);
    }
  }
  // Restore the reference counts.
  for (std::size_t i = out.size(); i-- > 0;) {
    uint32_t n = out[i];
    for (Literal f : {aig.node(n).fanin0, aig.node(n).fanin1}) {
      uint32_t m = f.node();
      if (aig.is_and(m) && !std::binary_search(leaves.begin(), leaves.end(), m))
        ++refs[m];
    }
  }
}

struct Plan {
  int gain = 0;
  unsigned level = 0;
  TruthTable canonical = 0;
  const NpnEntry* entry = nullptr;
  std::array<Literal, 4> leaf_lits{};
  bool output_complement = false;
};

} // namespace

Aig rewrite(const Aig& input, const RewriteOptions& options, const RewriteDb& db) {
  if (options.cut_size != 4)
    throw std::invalid_argument("rewrite supports cut_size = 4 only");
  Aig src = aig::cleanup(input);
  const std::size_t n = src.size();
  auto cuts = enumerate_cuts(src, options.cut_size, options.cut_limit);

  std::vector<unsigned> refs(n, 0);
  for (uint32_t i = 0; i < n; ++i)
    if (src.is_and(i)) {
      ++refs[src.node(i).fanin0.node()];
      ++refs[src.node(i).fanin1.node()];
    }
  for (Literal l : src.combinational_outputs())
    ++refs[l.node()];

  detail::Rebuild rb(src);
  detail::LevelTracker level(rb.out);
  std::vector<uint32_t> mffc;
  std::unordered_set<uint32_t> mffc_images;

  // Dry run of an entry over the current graph: returns (new nodes, output level)
  // and the existing nodes it would reuse.
  std::vector<Literal> lit(kGateLiteralBase + 2 * 8);
  std::vector<unsigned> lit_level(lit.size());
  std::vector<bool> known(lit.size());
  std::vector<uint32_t> reused;
  auto literal_of = [&](const Plan& p, uint8_t code, Literal& out, unsigned& lvl) -> bool {
    if (code < kLeafLiteralBase) {
      out = Literal(code);
      lvl = 0;
      return true;
    }
    if (code < kGateLiteralBase) {
      out = p.leaf_lits[(code - kLeafLiteralBase) / 2] ^ (code & 1);
      lvl = level(out);
      return true;
    }
    std::size_t g = (code - kGateLiteralBase) / 2;
    out = lit[g] ^ (code & 1);
    lvl = lit_level[g];
    return known[g];
  };

  for (uint32_t node = 0; node < n; ++node) {
    if (!src.is_and(node))
      continue;
    Literal f0 = rb.map(src.node(node).fanin0), f1 = rb.map(src.node(node).fanin1);
    unsigned default_level = 1 + std::max(level(f0), level(f1));

    std::optional<Plan> best;
    for (const Cut& cut : cuts[node]) {
      if (cut.leaves.size() == 1 && cut.leaves[0] == node)
        continue;
      NpnResult r = npn_canonical(cut.tt);
      const NpnEntry* entry = db.find(r.canonical);
      if (!entry)
        continue;
      Plan plan;
      plan.entry = entry;
      plan.canonical = r.canonical;
      plan.output_complement = r.transform.output;
      for (unsigned i = 0; i < 4; ++i) {
        unsigned y = r.transform.perm[i];
        plan.leaf_lits[i] = y < cut.leaves.size() ? rb.image[cut.leaves[y]] ^ ((r.transform.input_mask >> i) & 1)
                                                  : kFalse;
      }

      collect_mffc(src, node, cut.leaves, refs, mffc);
      mffc_images.clear();
      for (uint32_t m : mffc)
        if (m != node && rb.out.is_and(rb.image[m].node()))
          mffc_images.insert(rb.image[m].node());

      int added = 0;
      reused.clear();
      const Structure& s = entry->structure;
      for (std::size_t g = 0; g < s.gates.size(); ++g) {
        Literal a, b;
        unsigned la = 0, lb = 0;
        bool ka = literal_of(plan, s.gates[g].first, a, la);
        bool kb = literal_of(plan, s.gates[g].second, b, lb);
        std::optional<Literal> found;
        if (ka && kb)
          found = rb.out.find_and(a, b);
        if (found) {
          lit[g] = *found;
          known[g] = true;
          lit_level[g] = level(*found);
          if (rb.out.is_and(found->node()))
            reused.push_back(found->node());
        } else {
          lit[g] = kFalse;
          known[g] = false;
          lit_level[g] = 1 + std::max(la, lb);
          ++added;
        }
      }
      Literal out;
      unsigned out_level = 0;
      bool out_known = literal_of(plan, s.output, out, out_level);
      if (out_known && rb.out.is_and(out.node()))
        reused.push_back(out.node());

      // Nodes of the old cone stay alive if the replacement reaches them.
      std::unordered_set<uint32_t> kept;
      std::vector<uint32_t> stack(reused.begin(), reused.end());
      while (!stack.empty()) {
        uint32_t m = stack.back();
        stack.pop_back();
        if (!mffc_images.contains(m) || !kept.insert(m).second)
          continue;
        stack.push_back(rb.out.node(m).fanin0.node());
        stack.push_back(rb.out.node(m).fanin1.node());
      }
      plan.gain = static_cast<int>(mffc.size()) - static_cast<int>(kept.size()) - added;
      plan.level = out_level;
      if (options.preserve_levels && plan.level > default_level)
        continue;
      if (plan.gain < 0 || (plan.gain == 0 && !options.zero_gain))
        continue;
      auto better = [](const Plan& x, const Plan& y) {
        return std::tuple(-x.gain, x.level, x.canonical) < std::tuple(-y.gain, y.level, y.canonical);
      };
      if (!best || better(plan, *best))
        best = plan;
    }

    if (!best) {
      rb.image[node] = rb.out.make_and(f0, f1);
      continue;
    }
    const Structure& s = best->entry->structure;
    for (std::size_t g = 0; g < s.gates.size(); ++g) {
      Literal a, b;
      unsigned la, lb;
      literal_of(*best, s.gates[g].first, a, la);
      literal_of(*best, s.gates[g].second, b, lb);
      lit[g] = rb.out.make_and(a, b);
      known[g] = true;
      lit_level[g] = level(lit[g]);
    }
    Literal out;
    unsigned out_level;
    literal_of(*best, s.output, out, out_level);
    rb.image[node] = out ^ best->output_complement;
  }

  Aig result = rb.finish(src);
  if (!options.zero_gain && aig::node_count(result) > aig::node_count(src))
    return src;
  return result;
}

} // namespace synthkit::opt
