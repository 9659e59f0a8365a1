// Copyright 2026 The synthkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "synthkit/opt/passes.hpp"

#include "rebuild.hpp"

#include <algorithm>
#include <queue>

namespace synthkit::opt {

using aig::Aig;
using aig::kFalse;
using aig::Literal;

aig::Aig strash(const Aig& aig) { return aig::cleanup(aig); }

Aig balance(const Aig& input) {
  Aig src = aig::cleanup(input);
  const std::size_t n = src.size();
  std::vector<unsigned> refs(n, 0);
  std::vector<bool> complemented_use(n, false);
  for (uint32_t i = 0; i < n; ++i) {
    if (!src.is_and(i))
      continue;
    for (Literal f : {src.node(i).fanin0, src.node(i).fanin1}) {
      ++refs[f.node()];
      complemented_use[f.node()] = complemented_use[f.node()] || f.complemented();
    }
  }
  for (Literal l : src.combinational_outputs()) {
    refs[l.node()] += 2; // outputs always root a tree
  }
  auto absorbed = [&](uint32_t node) {
    return src.is_and(node) && refs[node] == 1 && !complemented_use[node];
  };

  detail::Rebuild rb(src);
  detail::LevelTracker level_of(rb.out);

  std::vector<Literal> leaves;
  std::vector<uint32_t> stack;
  for (uint32_t root = 0; root < n; ++root) {
    if (!src.is_and(root) || absorbed(root))
      continue;
    leaves.clear();
    stack.assign({root});
    while (!stack.empty()) {
      uint32_t node = stack.back();
      stack.pop_back();
      for (Literal f : {src.node(node).fanin1, src.node(node).fanin0}) {
        if (!f.complemented() && absorbed(f.node()))
          stack.push_back(f.node());
        else
          leaves.push_back(rb.map(f));
      }
    }
    std::sort(leaves.begin(), leaves.end());
    leaves.erase(std::unique(leaves.begin(), leaves.end()), leaves.end());
    bool contradiction = false;
    for (std::size_t i = 0; i + 1 < leaves.size(); ++i)
      contradiction = contradiction || leaves[i] == !leaves[i + 1];
    if (contradiction) {
      rb.image[root] = kFalse;
      continue;
    }
    // Join the two shallowest operands first; ties break on literal value.
    using Item = std::pair<unsigned, uint32_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    for (Literal l : leaves)
      heap.emplace(level_of(l), l.raw());
    while (heap.size() > 1) {
      Literal a{heap.top().second};
      heap.pop();
      Literal b{heap.top().second};
      heap.pop();
      Literal c = rb.out.make_and(a, b);
      heap.emplace(level_of(c), c.raw());
    }
    rb.image[root] = heap.empty() ? aig::kTrue : Literal{heap.top().second};
  }
  return rb.finish(src);
}

} // namespace synthkit::opt
