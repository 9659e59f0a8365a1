// Copyright 2026 The synthkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "synthkit/aig/aig.hpp"

#include <algorithm>
#include <stdexcept>

namespace synthkit::aig {

Aig::Aig() { nodes_.push_back(Node{}); }

Literal Aig::create_pi(std::string name) {
  uint32_t index = static_cast<uint32_t>(nodes_.size());
  nodes_.push_back(Node{NodeKind::Input, {}, {}, static_cast<uint32_t>(pis_.size())});
  pis_.push_back(index);
  pi_names_.push_back(std::move(name));
  return Literal::from_node(index);
}

Literal Aig::create_latch(std::string name) {
  uint32_t index = static_cast<uint32_t>(nodes_.size());
  nodes_.push_back(Node{NodeKind::LatchOutput, {}, {}, static_cast<uint32_t>(latches_.size())});
  latches_.push_back(Latch{index, kFalse, std::move(name)});
  return Literal::from_node(index);
}

void Aig::set_latch_next(std::size_t latch, Literal next) {
  if (next.node() >= nodes_.size())
    throw std::out_of_range("latch next-state literal out of range");
  latches_.at(latch).next = next;
}

std::size_t Aig::create_po(Literal literal, std::string name) {
  if (literal.node() >= nodes_.size())
    throw std::out_of_range("output literal out of range");
  pos_.push_back(Output{literal, std::move(name)});
  return pos_.size() - 1;
}

std::optional<Literal> Aig::fold(Literal& a, Literal& b) {
  if (a > b)
    std::swap(a, b);
  if (a == kFalse)
    return kFalse;
  if (a == kTrue)
    return b;
  if (a == b)
    return a;
  if (a == !b)
    return kFalse;
  return std::nullopt;
}

Literal Aig::make_and(Literal a, Literal b) {
  if (auto folded = fold(a, b))
    return *folded;
  auto [it, inserted] = strash_.try_emplace(key(a, b), static_cast<uint32_t>(nodes_.size()));
  if (inserted) {
    nodes_.push_back(Node{NodeKind::And, a, b, 0});
    ++num_ands_;
  }
  return Literal::from_node(it->second);
}

std::optional<Literal> Aig::find_and(Literal a, Literal b) const {
  if (auto folded = fold(a, b))
    return folded;
  auto it = strash_.find(key(a, b));
  if (it == strash_.end())
    return std::nullopt;
  return Literal::from_node(it->second);
}

Literal Aig::make_xor(Literal a, Literal b) {
  return make_or(make_and(a, !b), make_and(!a, b));
}

Literal Aig::make_mux(Literal select, Literal then_lit, Literal else_lit) {
  if (then_lit == else_lit)
    return then_lit;
  return make_or(make_and(select, then_lit), make_and(!select, else_lit));
}

std::vector<uint32_t> Aig::combinational_inputs() const {
  std::vector<uint32_t> cis(pis_.begin(), pis_.end());
  for (const Latch& l : latches_)
    cis.push_back(l.node);
  return cis;
}

std::vector<Literal> Aig::combinational_outputs() const {
  std::vector<Literal> cos;
  for (const Output& o : pos_)
    cos.push_back(o.literal);
  for (const Latch& l : latches_)
    cos.push_back(l.next);
  return cos;
}

std::vector<bool> live_nodes(const Aig& aig) {
  std::vector<bool> live(aig.size(), false);
  for (Literal l : aig.combinational_outputs())
    live[l.node()] = true;
  for (uint32_t i = static_cast<uint32_t>(aig.size()); i-- > 0;) {
    if (!live[i] || !aig.is_and(i))
      continue;
    live[aig.node(i).fanin0.node()] = true;
    live[aig.node(i).fanin1.node()] = true;
  }
  return live;
}

std::size_t node_count(const Aig& aig) {
  auto live = live_nodes(aig);
  std::size_t n = 0;
  for (uint32_t i = 0; i < aig.size(); ++i)
    n += live[i] && aig.is_and(i);
  return n;
}

std::vector<unsigned> levels(const Aig& aig) {
  std::vector<unsigned> level(aig.size(), 0);
  for (uint32_t i = 0; i < aig.size(); ++i)
    if (aig.is_and(i))
      level[i] = 1 + std::max(level[aig.node(i).fanin0.node()], level[aig.node(i).fanin1.node()]);
  return level;
}

unsigned depth(const Aig& aig) {
  auto level = levels(aig);
  unsigned d = 0;
  for (Literal l : aig.combinational_outputs())
    d = std::max(d, level[l.node()]);
  return d;
}

std::vector<Literal> copy_into(Aig& dst, const Aig& src, std::span<const Literal> inputs) {
  auto cis = src.combinational_inputs();
  if (inputs.size() != cis.size())
    throw std::invalid_argument("copy_into: input count mismatch");
  std::vector<Literal> map(src.size(), kFalse);
  for (std::size_t i = 0; i < cis.size(); ++i)
    map[cis[i]] = inputs[i];
  auto live = live_nodes(src);
  for (uint32_t i = 0; i < src.size(); ++i) {
    if (!live[i] || !src.is_and(i))
      continue;
    const Node& n = src.node(i);
    map[i] = dst.make_and(map[n.fanin0.node()] ^ n.fanin0.complemented(),
                          map[n.fanin1.node()] ^ n.fanin1.complemented());
  }
  std::vector<Literal> outs;
  for (Literal l : src.combinational_outputs())
    outs.push_back(map[l.node()] ^ l.complemented());
  return outs;
}

Aig cleanup(const Aig& aig) {
  Aig out;
  std::vector<Literal> inputs;
  for (std::size_t i = 0; i < aig.num_pis(); ++i)
    inputs.push_back(out.create_pi(aig.pi_name(i)));
  for (const Latch& l : aig.latches())
    inputs.push_back(out.create_latch(l.name));
  auto outs = copy_into(out, aig, inputs);
  for (std::size_t i = 0; i < aig.num_pos(); ++i)
    out.create_po(outs[i], aig.pos()[i].name);
  for (std::size_t i = 0; i < aig.num_latches(); ++i)
    out.set_latch_next(i, outs[aig.num_pos() + i]);
  return out;
}

bool structurally_equal(const Aig& a, const Aig& b) {
  Aig x = cleanup(a), y = cleanup(b);
  if (x.size() != y.size() || x.num_pis() != y.num_pis() || x.num_latches() != y.num_latches() ||
      x.num_pos() != y.num_pos())
    return false;
  for (uint32_t i = 0; i < x.size(); ++i) {
    const Node &p = x.node(i), &q = y.node(i);
    if (p.kind != q.kind || p.fanin0 != q.fanin0 || p.fanin1 != q.fanin1)
      return false;
  }
  for (std::size_t i = 0; i < x.num_pis(); ++i)
    if (x.pi_name(i) != y.pi_name(i))
      return false;
  for (std::size_t i = 0; i < x.num_latches(); ++i)
    if (x.latches()[i].next != y.latches()[i].next || x.latches()[i].name != y.latches()[i].name)
      return false;
  for (std::size_t i = 0; i < x.num_pos(); ++i)
    if (x.pos()[i].literal != y.pos()[i].literal || x.pos()[i].name != y.pos()[i].name)
      return false;
  return true;
}

} // namespace synthkit::aig
