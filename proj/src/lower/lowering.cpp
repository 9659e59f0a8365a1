// Copyright 2026 The synthkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "synthkit/lower/lowering.hpp"

#include "synthkit/ir/mac.hpp"
#include "synthkit/lower/partselect.hpp"

#include <stdexcept>

namespace synthkit::lower {

using aig::Aig;
using aig::kFalse;
using aig::kTrue;
using aig::Literal;
using ir::OpKind;

std::string bit_name(const std::string& port, unsigned width, unsigned bit) {
  return width == 1 ? port : port + "[" + std::to_string(bit) + "]";
}

namespace {

class Lowerer {
public:
  Lowerer(const ir::WordLevelDesign& design, const LoweringOptions& options)
      : design_(design), options_(options), bits_(design.nodes.size()) {}

  Aig run();

private:
  const Bits& operand(const ir::WordOp& op, std::size_t i) const { return bits_[op.operands[i]]; }
  Bits lower(const ir::WordOp& op);
  Bits add(const Bits& x, const Bits& y, unsigned width, Literal cin = kFalse, Literal* cout = nullptr) {
    return build_final_adder(aig_, fit(x, width), fit(y, width), options_.final_adder, cin, cout).outputs;
  }
  Literal less_than(const Bits& x, const Bits& y);
  Bits indexed_select(const Bits& bus, const Bits& index, unsigned width);
  Bits shift(const Bits& value, const Bits& amount, unsigned width, bool left);

  const ir::WordLevelDesign& design_;
  LoweringOptions options_;
  std::vector<Bits> bits_;
  Aig aig_;
};

Literal Lowerer::less_than(const Bits& x, const Bits& y) {
  unsigned width = static_cast<unsigned>(std::max(x.size(), y.size()));
  // x < y exactly when x + ~y + 1 does not carry out.
  Bits ny = fit(y, width);
  for (Literal& l : ny)
    l = !l;
  Literal carry = kFalse;
  build_final_adder(aig_, fit(x, width), ny, options_.final_adder, kTrue, &carry);
  return !carry;
}

Bits Lowerer::indexed_select(const Bits& bus, const Bits& index, unsigned width) {
  if (width > bus.size()) {
    // Only happens for slices wider than the bus: extend with zeros.
    Bits wide = fit(bus, width);
    return indexed_select(wide, index, width);
  }
  if (options_.part_select_strategy == PartSelectStrategy::MuxTree)
    return lower_indexed_select_muxtree(aig_, bus, index, width).outputs;
  return lower_indexed_select_shifter(aig_, bus, index, width).outputs;
}

Bits Lowerer::shift(const Bits& value, const Bits& amount, unsigned width, bool left) {
  Bits layer = fit(value, width);
  Bits overflow;
  for (std::size_t k = 0; k < amount.size(); ++k) {
    if (k >= 32 || (std::size_t{1} << k) >= width) {
      overflow.push_back(amount[k]);
      continue;
    }
    std::size_t s = std::size_t{1} << k;
    Bits next(width);
    for (std::size_t i = 0; i < width; ++i) {
      Literal moved = left ? (i >= s ? layer[i - s] : kFalse) : (i + s < width ? layer[i + s] : kFalse);
      next[i] = aig_.make_mux(amount[k], moved, layer[i]);
    }
    layer = std::move(next);
  }
  Literal keep = !reduce_or(aig_, overflow);
  for (Literal& l : layer)
    l = aig_.make_and(keep, l);
  return layer;
}

Bits Lowerer::lower(const ir::WordOp& op) {
  const unsigned w = op.width;
  auto ext = [&](std::size_t i) { return fit(operand(op, i), w); };
  auto bitwise = [&](auto f) {
    Bits x = ext(0), y = ext(1), out(w);
    for (unsigned i = 0; i < w; ++i)
      out[i] = f(x[i], y[i]);
    return out;
  };
  auto cmp_operands = [&] {
    unsigned cw = static_cast<unsigned>(std::max(operand(op, 0).size(), operand(op, 1).size()));
    return std::pair{fit(operand(op, 0), cw), fit(operand(op, 1), cw)};
  };
  switch (op.kind) {
  case OpKind::Input:
  case OpKind::Register:
    throw std::logic_error("leaf nodes are created up front");
  case OpKind::Const: {
    Bits out(w);
    for (unsigned i = 0; i < w; ++i)
      out[i] = op.value.bit(i) ? kTrue : kFalse;
    return out;
  }
  case OpKind::Not: {
    Bits out = ext(0);
    for (Literal& l : out)
      l = !l;
    return out;
  }
  case OpKind::And: return bitwise([&](Literal x, Literal y) { return aig_.make_and(x, y); });
  case OpKind::Or: return bitwise([&](Literal x, Literal y) { return aig_.make_or(x, y); });
  case OpKind::Xor: return bitwise([&](Literal x, Literal y) { return aig_.make_xor(x, y); });
  case OpKind::ReduceAnd: return {reduce_and(aig_, operand(op, 0))};
  case OpKind::ReduceOr: return {reduce_or(aig_, operand(op, 0))};
  case OpKind::ReduceXor: return {reduce_xor(aig_, operand(op, 0))};
  case OpKind::Neg: {
    Bits inv = ext(0);
    for (Literal& l : inv)
      l = !l;
    return add(inv, {}, w, kTrue);
  }
  case OpKind::Add: return add(ext(0), ext(1), w);
  case OpKind::Sub: {
    Bits inv = ext(1);
    for (Literal& l : inv)
      l = !l;
    return add(ext(0), inv, w, kTrue);
  }
  case OpKind::Mul: {
    CarrySavePair pair = build_booth_csa_multiplier(aig_, ext(0), ext(1), w);
    return add(pair.sum, pair.carry, w);
  }
  case OpKind::Fma: {
    CarrySavePair pair = fuse_mac(aig_, booth_partial_products(aig_, ext(0), ext(1), w), ext(2), w);
    return add(pair.sum, pair.carry, w);
  }
  case OpKind::Eq:
  case OpKind::Ne: {
    auto [x, y] = cmp_operands();
    Bits same(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
      same[i] = aig_.make_xnor(x[i], y[i]);
    Literal eq = reduce_and(aig_, same);
    return {op.kind == OpKind::Eq ? eq : !eq};
  }
  case OpKind::Lt: return {less_than(operand(op, 0), operand(op, 1))};
  case OpKind::Ge: return {!less_than(operand(op, 0), operand(op, 1))};
  case OpKind::Gt: return {less_than(operand(op, 1), operand(op, 0))};
  case OpKind::Le: return {!less_than(operand(op, 1), operand(op, 0))};
  case OpKind::Shl: return shift(operand(op, 0), operand(op, 1), w, true);
  case OpKind::Shr: return shift(operand(op, 0), operand(op, 1), w, false);
  case OpKind::Mux: {
    Literal c = operand(op, 0)[0];
    Bits t = ext(1), e = ext(2), out(w);
    for (unsigned i = 0; i < w; ++i)
      out[i] = aig_.make_mux(c, t[i], e[i]);
    return out;
  }
  case OpKind::Concat: {
    Bits out;
    for (std::size_t i = op.operands.size(); i-- > 0;)
      out.insert(out.end(), operand(op, i).begin(), operand(op, i).end());
    return fit(out, w);
  }
  case OpKind::Replicate: {
    Bits out;
    for (int64_t i = 0; i < op.params[0]; ++i)
      out.insert(out.end(), operand(op, 0).begin(), operand(op, 0).end());
    return fit(out, w);
  }
  case OpKind::StaticSlice: {
    const Bits& src = operand(op, 0);
    auto lo = static_cast<std::size_t>(op.params[1]);
    Bits out;
    for (unsigned i = 0; i < w; ++i)
      out.push_back(lo + i < src.size() ? src[lo + i] : kFalse);
    return out;
  }
  case OpKind::IndexedSliceUp: return indexed_select(operand(op, 0), operand(op, 1), w);
  case OpKind::BitSelect: return indexed_select(operand(op, 0), operand(op, 1), 1);
  case OpKind::IndexedSliceDown: {
    // x[i -: W] reads x[i-W+1 .. i]: prepend W-1 zeros and select upward.
    Bits padded(w - 1, kFalse);
    padded.insert(padded.end(), operand(op, 0).begin(), operand(op, 0).end());
    return indexed_select(padded, operand(op, 1), w);
  }
  }
  throw std::logic_error("unhandled op kind");
}

Aig Lowerer::run() {
  for (const ir::Port& p : design_.inputs) {
    Bits b;
    for (unsigned i = 0; i < p.width; ++i)
      b.push_back(aig_.create_pi(bit_name(p.name, p.width, i)));
    bits_[p.node] = std::move(b);
  }
  for (const ir::Register& r : design_.registers) {
    Bits b;
    for (unsigned i = 0; i < r.width; ++i)
      b.push_back(aig_.create_latch(bit_name(r.name, r.width, i)));
    bits_[r.state] = std::move(b);
  }
  for (ir::NodeId id = 0; id < design_.nodes.size(); ++id) {
    const ir::WordOp& op = design_.nodes[id];
    if (op.kind == OpKind::Input || op.kind == OpKind::Register)
      continue;
    bits_[id] = lower(op);
  }
  for (const ir::Port& p : design_.outputs) {
    Bits b = fit(bits_[p.node], p.width);
    for (unsigned i = 0; i < p.width; ++i)
      aig_.create_po(b[i], bit_name(p.name, p.width, i));
  }
  std::size_t latch = 0;
  for (const ir::Register& r : design_.registers) {
    Bits b = fit(bits_[r.next], r.width);
    for (unsigned i = 0; i < r.width; ++i)
      aig_.set_latch_next(latch++, b[i]);
  }
  return std::move(aig_);
}

} // namespace

Aig lower_design(const ir::WordLevelDesign& design, const LoweringOptions& options) {
  if (options.mac_fusion) {
    ir::WordLevelDesign fused = ir::fuse_mac_sites(design);
    return Lowerer(fused, options).run();
  }
  return Lowerer(design, options).run();
}

} // namespace synthkit::lower
