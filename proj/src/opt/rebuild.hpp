// Copyright 2026 The synthkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "synthkit/aig/aig.hpp"

#include <algorithm>
#include <vector>

namespace synthkit::opt::detail {

// Rebuilds the copy's structure into `out`, mapping old nodes to new literals.
struct Rebuild {
  aig::Aig out;
  std::vector<aig::Literal> image;
  std::vector<aig::Literal> inputs;

  explicit Rebuild(const aig::Aig& src) : image(src.size(), aig::kFalse) {
    for (std::size_t i = 0; i < src.num_pis(); ++i) {
      inputs.push_back(out.create_pi(src.pi_name(i)));
      image[src.pis()[i]] = inputs.back();
    }
    for (const aig::Latch& l : src.latches()) {
      inputs.push_back(out.create_latch(l.name));
      image[l.node] = inputs.back();
    }
  }

  aig::Literal map(aig::Literal l) const { return image[l.node()] ^ l.complemented(); }

  aig::Aig finish(const aig::Aig& src) {
    for (const aig::Output& o : src.pos())
      out.create_po(map(o.literal), o.name);
    for (std::size_t i = 0; i < src.num_latches(); ++i)
      out.set_latch_next(i, map(src.latches()[i].next));
    return aig::cleanup(out);
  }
};

/// Incrementally maintained logic levels of a growing graph.
class LevelTracker {
public:
  explicit LevelTracker(const aig::Aig& aig) : aig_(aig) {}
  unsigned operator()(aig::Literal l) {
    for (uint32_t i = static_cast<uint32_t>(level_.size()); i < aig_.size(); ++i)
      level_.push_back(aig_.is_and(i) ? 1 + std::max(level_[aig_.node(i).fanin0.node()],
                                                     level_[aig_.node(i).fanin1.node()])
                                      : 0);
    return level_[l.node()];
  }

private:
  const aig::Aig& aig_;
  std::vector<unsigned> level_;
};

} // namespace synthkit::opt::detail
