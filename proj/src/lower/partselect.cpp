// Copyright 2026 The synthkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "synthkit/lower/partselect.hpp"

#include <bit>
#include <functional>
#include <map>
#include <stdexcept>
#include <unordered_map>

namespace synthkit::lower {

using aig::Aig;
using aig::kFalse;
using aig::Literal;

BitNetlistFragment lower_indexed_select_shifter(Aig& aig, const Bits& bus, const Bits& index, unsigned slice_width) {
  if (slice_width > bus.size())
    throw std::invalid_argument("slice wider than bus");
  Bits layer = bus;
  for (std::size_t k = 0; k < index.size(); ++k) {
    std::size_t shift = k < 63 ? std::size_t{1} << k : SIZE_MAX;
    Bits next(layer.size());
    for (std::size_t i = 0; i < layer.size(); ++i) {
      Literal shifted = (shift < layer.size() - i) ? layer[i + shift] : kFalse;
      next[i] = aig.make_mux(index[k], shifted, layer[i]);
    }
    layer = std::move(next);
  }
  layer.resize(slice_width);
  return measure_fragment(aig, {bus, index}, std::move(layer));
}

namespace {

enum class LeafKey { MostSignificant, LeastSignificant };

// Tree over index[0..tree_bits) followed by the in-range gating of the
// index bits above it. With the leaf level keyed on the most significant
// tree bit, level t holds 2^t + W - 1 shared positions. Keyed on the least
// significant bit, neighbouring candidates pair up first and the all-zero
// candidates past the bus collapse into whole constant subtrees.
Bits build_muxtree(Aig& aig, const Bits& bus, const Bits& index, unsigned slice_width, LeafKey key) {
  const std::size_t n = index.size();
  // Candidate start positions 0..count-1; beyond the bus every slice is 0.
  std::size_t count = n < 63 ? std::min<std::size_t>(bus.size(), std::size_t{1} << n) : bus.size();
  unsigned tree_bits = count == 1 ? 0 : static_cast<unsigned>(std::bit_width(count - 1));

  Bits upper(index.begin() + tree_bits, index.end());
  for (Literal& l : upper)
    l = !l;
  Literal in_range = reduce_and(aig, upper);
  // Folding the range term into the root select terms costs two nodes;
  // gating the outputs costs one per slice bit.
  bool fold = in_range != aig::kTrue && tree_bits > 0 && slice_width > 1;
  unsigned root_bit = key == LeafKey::MostSignificant ? 0 : tree_bits - 1;
  Literal hi, lo;
  if (fold) {
    hi = aig.make_and(index[root_bit], in_range);
    lo = aig.make_and(!index[root_bit], in_range);
  }
  auto step = [&](unsigned bit, Literal upper_lit, Literal lower_lit) {
    if (fold && bit == root_bit)
      return aig.make_or(aig.make_and(hi, upper_lit), aig.make_and(lo, lower_lit));
    return aig.make_mux(index[bit], upper_lit, lower_lit);
  };
  auto at = [](const Bits& v, std::size_t i) { return i < v.size() ? v[i] : kFalse; };

  Bits out(slice_width);
  if (key == LeafKey::MostSignificant) {
    Bits level = bus;
    for (unsigned t = tree_bits; t-- > 0;) {
      std::size_t half = std::size_t{1} << t;
      Bits next(half + slice_width - 1);
      for (std::size_t i = 0; i < next.size(); ++i)
        next[i] = step(t, at(level, i + half), at(level, i));
      level = std::move(next);
    }
    for (unsigned k = 0; k < slice_width; ++k)
      out[k] = at(level, k);
  } else {
    // Only the positions some output depends on are built.
    std::map<std::pair<unsigned, std::size_t>, Literal> memo;
    std::function<Literal(unsigned, std::size_t)> value = [&](unsigned done, std::size_t p) -> Literal {
      if (done == 0)
        return at(bus, p);
      if (p >= bus.size())
        return kFalse;
      auto [it, fresh] = memo.try_emplace({done, p});
      if (fresh) {
        unsigned bit = done - 1;
        it->second = step(bit, value(bit, p + (std::size_t{1} << bit)), value(bit, p));
      }
      return it->second;
    };
    for (unsigned k = 0; k < slice_width; ++k)
      out[k] = value(tree_bits, k);
  }
  if (!fold)
    for (Literal& l : out)
      l = aig.make_and(l, in_range);
  return out;
}

std::size_t muxtree_cost(const Bits& bus, const Bits& index, unsigned slice_width, LeafKey key) {
  Aig scratch;
  std::unordered_map<uint32_t, Literal> fresh;
  auto remap = [&](const Bits& bits) {
    Bits r;
    for (Literal l : bits) {
      if (l.is_constant()) {
        r.push_back(l);
        continue;
      }
      auto [it, inserted] = fresh.try_emplace(l.node());
      if (inserted)
        it->second = scratch.create_pi();
      r.push_back(it->second ^ l.complemented());
    }
    return r;
  };
  Bits b = remap(bus), i = remap(index);
  Bits out = build_muxtree(scratch, b, i, slice_width, key);
  return measure_fragment(scratch, {b, i}, std::move(out)).internal_nodes;
}

} // namespace

BitNetlistFragment lower_indexed_select_muxtree(Aig& aig, const Bits& bus, const Bits& index, unsigned slice_width) {
  if (slice_width > bus.size())
    throw std::invalid_argument("slice wider than bus");
  LeafKey key = muxtree_cost(bus, index, slice_width, LeafKey::LeastSignificant) <
                        muxtree_cost(bus, index, slice_width, LeafKey::MostSignificant)
                    ? LeafKey::LeastSignificant
                    : LeafKey::MostSignificant;
  Bits out = build_muxtree(aig, bus, index, slice_width, key);
  return measure_fragment(aig, {bus, index}, std::move(out));
}

} // namespace synthkit::lower
