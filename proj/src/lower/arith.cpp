// Copyright 2026 The synthkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "synthkit/lower/arith.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace synthkit::lower {

using aig::Aig;
using aig::kFalse;
using aig::kTrue;
using aig::Literal;

BitNetlistFragment measure_fragment(const Aig& aig, std::initializer_list<std::span<const Literal>> inputs,
                                    Bits outputs) {
  std::unordered_set<uint32_t> boundary;
  for (auto span : inputs)
    for (Literal l : span)
      boundary.insert(l.node());
  std::unordered_map<uint32_t, unsigned> level;
  std::vector<uint32_t> stack;
  for (Literal l : outputs)
    stack.push_back(l.node());
  // Post-order DFS; a node is finished once both fanins have levels.
  while (!stack.empty()) {
    uint32_t n = stack.back();
    if (level.contains(n)) {
      stack.pop_back();
      continue;
    }
    if (!aig.is_and(n) || boundary.contains(n)) {
      level[n] = 0;
      stack.pop_back();
      continue;
    }
    uint32_t f0 = aig.node(n).fanin0.node(), f1 = aig.node(n).fanin1.node();
    auto i0 = level.find(f0), i1 = level.find(f1);
    if (i0 != level.end() && i1 != level.end()) {
      level[n] = 1 + std::max(i0->second, i1->second);
      stack.pop_back();
      continue;
    }
    if (i0 == level.end())
      stack.push_back(f0);
    if (i1 == level.end())
      stack.push_back(f1);
  }
  BitNetlistFragment frag;
  for (auto [n, l] : level)
    frag.internal_nodes += l > 0;
  for (Literal l : outputs)
    frag.depth = std::max(frag.depth, level[l.node()]);
  frag.outputs = std::move(outputs);
  return frag;
}

Bits fit(const Bits& bits, unsigned width) {
  Bits out(bits.begin(), bits.begin() + std::min<std::size_t>(bits.size(), width));
  out.resize(width, kFalse);
  return out;
}

namespace {

template <typename Op>
Literal reduce_tree(std::span<const Literal> bits, Literal empty, Op op) {
  if (bits.empty())
    return empty;
  std::vector<Literal> layer(bits.begin(), bits.end());
  while (layer.size() > 1) {
    std::vector<Literal> next;
    for (std::size_t i = 0; i + 1 < layer.size(); i += 2)
      next.push_back(op(layer[i], layer[i + 1]));
    if (layer.size() % 2)
      next.push_back(layer.back());
    layer = std::move(next);
  }
  return layer[0];
}

// Logic level of every node, extended lazily as the graph grows.
class LevelCache {
public:
  explicit LevelCache(const Aig& aig) : aig_(aig) {}
  unsigned operator()(Literal l) {
    for (uint32_t i = static_cast<uint32_t>(level_.size()); i < aig_.size(); ++i)
      level_.push_back(aig_.is_and(i) ? 1 + std::max(level_[aig_.node(i).fanin0.node()],
                                                     level_[aig_.node(i).fanin1.node()])
                                      : 0);
    return level_[l.node()];
  }

private:
  const Aig& aig_;
  std::vector<unsigned> level_;
};

struct FullAdder {
  Literal sum;
  Literal carry;
};

FullAdder full_adder(Aig& aig, Literal a, Literal b, Literal c) {
  Literal ab = aig.make_xor(a, b);
  return {aig.make_xor(ab, c), aig.make_or(aig.make_and(a, b), aig.make_and(c, ab))};
}

} // namespace

Literal reduce_and(Aig& aig, std::span<const Literal> bits) {
  return reduce_tree(bits, kTrue, [&](Literal x, Literal y) { return aig.make_and(x, y); });
}

Literal reduce_or(Aig& aig, std::span<const Literal> bits) {
  return reduce_tree(bits, kFalse, [&](Literal x, Literal y) { return aig.make_or(x, y); });
}

Literal reduce_xor(Aig& aig, std::span<const Literal> bits) {
  return reduce_tree(bits, kFalse, [&](Literal x, Literal y) { return aig.make_xor(x, y); });
}

std::vector<Bits> booth_partial_products(Aig& aig, const Bits& a_in, const Bits& b_in, unsigned width) {
  Bits a = fit(a_in, width);
  Bits b = fit(b_in, width + 2);
  auto bit = [&](const Bits& v, int i) { return i < 0 ? kFalse : v[static_cast<unsigned>(i)]; };
  std::vector<Bits> rows;
  Bits corrections(width, kFalse);
  for (unsigned j = 0; 2 * j < width; ++j) {
    int lo = 2 * static_cast<int>(j);
    Literal b_lo = bit(b, lo - 1), b_mid = bit(b, lo), b_hi = bit(b, lo + 1);
    Literal one = aig.make_xor(b_mid, b_lo);
    Literal two = aig.make_or(aig.make_and(b_hi, aig.make_and(!b_mid, !b_lo)),
                              aig.make_and(!b_hi, aig.make_and(b_mid, b_lo)));
    Literal neg = b_hi;
    Bits row(width, kFalse);
    for (unsigned k = 0; k + 2 * j < width; ++k) {
      Literal mag = aig.make_or(aig.make_and(one, a[k]), aig.make_and(two, bit(a, static_cast<int>(k) - 1)));
      row[k + 2 * j] = aig.make_xor(mag, neg);
    }
    rows.push_back(std::move(row));
    corrections[2 * j] = neg;
  }
  rows.push_back(std::move(corrections));
  return rows;
}

CarrySavePair compress_rows(Aig& aig, const std::vector<Bits>& rows, unsigned width,
                            const CompressObserver& observer) {
  std::vector<Bits> columns(width);
  for (const Bits& row : rows)
    for (unsigned c = 0; c < width && c < row.size(); ++c)
      if (row[c] != kFalse)
        columns[c].push_back(row[c]);
  LevelCache level(aig);
  unsigned stage = 0;
  if (observer)
    observer(stage, columns);
  auto too_tall = [&] {
    return std::any_of(columns.begin(), columns.end(), [](const Bits& col) { return col.size() > 2; });
  };
  while (too_tall()) {
    std::vector<Bits> next(width);
    for (unsigned c = 0; c < width; ++c) {
      Bits col = columns[c];
      std::stable_sort(col.begin(), col.end(), [&](Literal x, Literal y) { return level(x) < level(y); });
      std::size_t i = 0;
      for (; col.size() - i >= 3; i += 3) {
        FullAdder fa = full_adder(aig, col[i], col[i + 1], col[i + 2]);
        next[c].push_back(fa.sum);
        if (c + 1 < width)
          next[c + 1].push_back(fa.carry);
      }
      for (; i < col.size(); ++i)
        next[c].push_back(col[i]);
    }
    for (Bits& col : next)
      std::erase(col, kFalse);
    columns = std::move(next);
    if (observer)
      observer(++stage, columns);
  }
  CarrySavePair pair;
  pair.sum.assign(width, kFalse);
  pair.carry.assign(width, kFalse);
  for (unsigned c = 0; c < width; ++c) {
    if (columns[c].size() > 0)
      pair.sum[c] = columns[c][0];
    if (columns[c].size() > 1)
      pair.carry[c] = columns[c][1];
  }
  return pair;
}

namespace {

CarrySavePair measured(const Aig& aig, CarrySavePair pair, std::initializer_list<std::span<const Literal>> inputs) {
  Bits both = pair.sum;
  both.insert(both.end(), pair.carry.begin(), pair.carry.end());
  BitNetlistFragment m = measure_fragment(aig, inputs, std::move(both));
  pair.internal_nodes = m.internal_nodes;
  pair.depth = m.depth;
  return pair;
}

} // namespace

CarrySavePair build_booth_csa_multiplier(Aig& aig, const Bits& a, const Bits& b, unsigned width) {
  return measured(aig, compress_rows(aig, booth_partial_products(aig, a, b, width), width), {a, b});
}

CarrySavePair fuse_mac(Aig& aig, std::vector<Bits> partial_products, const Bits& addend, unsigned width) {
  partial_products.insert(partial_products.begin(), fit(addend, width));
  CarrySavePair pair = compress_rows(aig, partial_products, width);
  Bits leaves;
  for (const Bits& row : partial_products)
    leaves.insert(leaves.end(), row.begin(), row.end());
  return measured(aig, std::move(pair), {leaves});
}

BitNetlistFragment build_final_adder(Aig& aig, const Bits& x_in, const Bits& y_in, AdderArch arch,
                                     Literal carry_in, Literal* carry_out) {
  std::size_t width = std::max(x_in.size(), y_in.size());
  Bits x = fit(x_in, static_cast<unsigned>(width)), y = fit(y_in, static_cast<unsigned>(width));
  Bits sum(width, kFalse);
  Literal cout = carry_in;
  if (arch == AdderArch::RippleCarry) {
    Literal carry = carry_in;
    for (std::size_t i = 0; i < width; ++i) {
      FullAdder fa = full_adder(aig, x[i], y[i], carry);
      sum[i] = fa.sum;
      carry = fa.carry;
    }
    cout = carry;
  } else if (width > 0) {
    Bits p(width), g(width);
    for (std::size_t i = 0; i < width; ++i) {
      p[i] = aig.make_xor(x[i], y[i]);
      g[i] = aig.make_and(x[i], y[i]);
    }
    // Carry-in folds into the first generate term.
    Bits G = g, P = p;
    G[0] = aig.make_or(g[0], aig.make_and(p[0], carry_in));
    for (std::size_t span = 1; span < width; span <<= 1) {
      Bits nG = G, nP = P;
      for (std::size_t i = 0; i < width; ++i) {
        if (!(i & span))
          continue;
        std::size_t j = (i & ~(span - 1)) - 1;
        nG[i] = aig.make_or(G[i], aig.make_and(P[i], G[j]));
        nP[i] = aig.make_and(P[i], P[j]);
      }
      G = std::move(nG);
      P = std::move(nP);
    }
    for (std::size_t i = 0; i < width; ++i)
      sum[i] = aig.make_xor(p[i], i == 0 ? carry_in : G[i - 1]);
    cout = G[width - 1];
  }
  if (carry_out)
    *carry_out = cout;
  Bits cin_bits{carry_in};
  return measure_fragment(aig, {x_in, y_in, cin_bits}, std::move(sum));
}

} // namespace synthkit::lower
