// Copyright 2026 The synthkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "support.hpp"

#include "synthkit/aig/aiger.hpp"
#include "synthkit/aig/equivalence.hpp"
#include "synthkit/aig/simulate.hpp"
#include "synthkit/hdl/frontend.hpp"
#include "synthkit/lower/lowering.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace synthkit;
using namespace synthkit::aig;

namespace {

Aig random_aig(uint64_t seed, unsigned pis, unsigned ands, unsigned pos) {
  std::mt19937_64 rng(seed);
  Aig g;
  std::vector<Literal> pool;
  for (unsigned i = 0; i < pis; ++i)
    pool.push_back(g.create_pi("x" + std::to_string(i)));
  while (g.num_ands() < ands) {
    Literal a = pool[rng() % pool.size()] ^ (rng() & 1);
    Literal b = pool[rng() % pool.size()] ^ (rng() & 1);
    Literal r = g.make_and(a, b);
    if (!r.is_constant())
      pool.push_back(r);
  }
  for (unsigned i = 0; i < pos; ++i)
    g.create_po(pool[pool.size() - 1 - (rng() % std::min<std::size_t>(pool.size(), 40))] ^ (rng() & 1),
                "o" + std::to_string(i));
  return g;
}

// Scalar recursive evaluation of one literal.
bool eval_literal(const Aig& g, Literal l, const std::vector<bool>& ci_values, std::vector<int>& memo) {
  uint32_t n = l.node();
  if (memo[n] < 0) {
    const Node& node = g.node(n);
    if (node.kind == NodeKind::Constant)
      memo[n] = 0;
    else if (node.kind == NodeKind::Input)
      memo[n] = ci_values[node.position];
    else if (node.kind == NodeKind::LatchOutput)
      memo[n] = ci_values[g.num_pis() + node.position];
    else
      memo[n] = eval_literal(g, node.fanin0, ci_values, memo) && eval_literal(g, node.fanin1, ci_values, memo);
  }
  return static_cast<bool>(memo[n]) != l.complemented();
}

Aig lower_corpus(const char* name) {
  auto d = hdl::elaborate(hdl::parse_design(test::corpus_source(name)));
  return lower::lower_design(d, {lower::PartSelectStrategy::MuxTree, true, lower::AdderArch::PrefixSklansky,
                                 lower::MultiplierArch::BoothRadix4Csa});
}

} // namespace

TEST_CASE("make_and folding and hashing") {
  Aig g;
  Literal a = g.create_pi(), b = g.create_pi();
  CHECK(g.make_and(a, kFalse) == kFalse);
  CHECK(g.make_and(a, kTrue) == a);
  CHECK(g.make_and(a, a) == a);
  CHECK(g.make_and(a, !a) == kFalse);
  CHECK(g.num_ands() == 0);
  Literal x = g.make_and(a, b);
  CHECK(g.make_and(b, a) == x);
  CHECK(g.make_and(a, b) == x);
  CHECK(g.num_ands() == 1);
  CHECK(g.find_and(a, !b) == std::nullopt);
  CHECK(g.find_and(b, a) == x);
}

TEST_CASE("XOR and MUX cost three nodes") {
  Aig g;
  Literal a = g.create_pi(), b = g.create_pi(), s = g.create_pi();
  g.create_po(g.make_xor(a, b));
  CHECK(node_count(g) == 3);
  Aig h;
  a = h.create_pi(), b = h.create_pi(), s = h.create_pi();
  h.create_po(h.make_mux(s, a, b));
  CHECK(node_count(h) == 3);
}

TEST_CASE("node table invariants after random construction") {
  Aig g = random_aig(99, 12, 3000, 8);
  std::set<std::pair<uint32_t, uint32_t>> seen;
  for (uint32_t i = 0; i < g.size(); ++i) {
    if (!g.is_and(i))
      continue;
    const Node& n = g.node(i);
    CHECK(n.fanin0 < n.fanin1);
    CHECK(n.fanin0.node() < i);
    CHECK(n.fanin1.node() < i);
    CHECK_FALSE(n.fanin0.is_constant());
    CHECK(n.fanin0.node() != n.fanin1.node());
    CHECK(seen.insert({n.fanin0.raw(), n.fanin1.raw()}).second);
  }
}

TEST_CASE("simulation examples") {
  Aig buf;
  buf.create_po(buf.create_pi());
  std::vector<uint64_t> p = {0x123456789abcdef0ull};
  CHECK(simulate(buf, p) == p);

  Aig g;
  Literal a = g.create_pi(), b = g.create_pi();
  g.create_po(g.make_and(a, b));
  std::vector<uint64_t> in = {0b1100, 0b1010};
  CHECK(simulate(g, in)[0] == 0b1000);
}

TEST_CASE("word simulation equals 64 single-bit simulations") {
  Aig g = random_aig(5, 10, 400, 6);
  std::mt19937_64 rng(17);
  std::vector<uint64_t> words(10);
  for (auto& w : words)
    w = rng();
  auto packed = simulate(g, words);
  for (unsigned lane = 0; lane < 64; ++lane) {
    std::vector<uint64_t> single(10);
    for (unsigned i = 0; i < 10; ++i)
      single[i] = (words[i] >> lane) & 1;
    auto r = simulate(g, single);
    for (std::size_t o = 0; o < r.size(); ++o)
      CHECK((r[o] & 1) == ((packed[o] >> lane) & 1));
  }
}

TEST_CASE("simulation matches scalar evaluation on all 2^20 assignments") {
  const unsigned n = 20;
  Aig g = random_aig(20260101, n, 250, 4);
  std::vector<uint64_t> words(n);
  uint64_t mismatches = 0;
  std::vector<bool> values(n);
  for (uint64_t block = 0; block < (uint64_t{1} << n) / 64; ++block) {
    for (unsigned i = 0; i < n; ++i) {
      uint64_t w = 0;
      for (unsigned lane = 0; lane < 64; ++lane)
        w |= (((block * 64 + lane) >> i) & 1) << lane;
      words[i] = w;
    }
    auto out = simulate(g, words);
    for (unsigned lane = 0; lane < 64; lane += 7) {
      uint64_t m = block * 64 + lane;
      for (unsigned i = 0; i < n; ++i)
        values[i] = (m >> i) & 1;
      std::vector<int> memo(g.size(), -1);
      for (std::size_t o = 0; o < g.num_pos(); ++o)
        mismatches += eval_literal(g, g.pos()[o].literal, values, memo) != static_cast<bool>((out[o] >> lane) & 1);
    }
  }
  CHECK(mismatches == 0);
}

TEST_CASE("node count and depth examples") {
  Aig buf;
  buf.create_po(buf.create_pi());
  CHECK(node_count(buf) == 0);
  CHECK(depth(buf) == 0);

  Aig bal;
  Literal x[4];
  for (auto& l : x)
    l = bal.create_pi();
  bal.create_po(bal.make_and(bal.make_and(x[0], x[1]), bal.make_and(x[2], x[3])));
  CHECK(node_count(bal) == 3);
  CHECK(depth(bal) == 2);

  Aig chain;
  for (auto& l : x)
    l = chain.create_pi();
  chain.create_po(chain.make_and(x[0], chain.make_and(x[1], chain.make_and(x[2], x[3]))));
  CHECK(node_count(chain) == 3);
  CHECK(depth(chain) == 3);
}

TEST_CASE("dead nodes are not counted") {
  Aig g;
  Literal a = g.create_pi(), b = g.create_pi(), c = g.create_pi();
  g.make_and(a, c);
  g.create_po(g.make_and(a, b));
  CHECK(g.num_ands() == 2);
  CHECK(node_count(g) == 1);
  CHECK(cleanup(g).num_ands() == 1);
}

TEST_CASE("AIGER goldens") {
  Aig buf;
  buf.create_po(buf.create_pi());
  CHECK(write_aiger(buf) == "aag 1 1 0 1 0\n2\n2\n");

  Aig g;
  Literal a = g.create_pi(), b = g.create_pi();
  g.create_po(g.make_and(a, b));
  CHECK(write_aiger(g) == "aag 3 2 0 1 1\n2\n4\n6\n6 2 4\n");
}

TEST_CASE("AIGER symbol table and latches") {
  Aig g;
  Literal a = g.create_pi("a");
  Literal q = g.create_latch("q");
  g.set_latch_next(0, g.make_and(a, !q));
  g.create_po(!q, "y");
  std::string text = write_aiger(g);
  CHECK(text == "aag 3 1 1 1 1\n2\n4 6\n5\n6 2 5\ni0 a\nl0 q\no0 y\n");
  Aig back = read_aiger(text);
  CHECK(structurally_equal(g, back));
}

TEST_CASE("AIGER reader accepts AND lines in any order") {
  Aig g = read_aiger("aag 5 3 0 1 2\n2\n4\n6\n10\n10 8 6\n8 2 4\n");
  CHECK(node_count(g) == 2);
  CHECK(depth(g) == 2);
  std::vector<uint64_t> in = {0b11110000, 0b11001100, 0b10101010};
  CHECK(simulate(g, in)[0] == 0b10000000);
}

TEST_CASE("AIGER format errors carry line numbers") {
  auto line_of = [](std::string_view text) -> std::size_t {
    try {
      read_aiger(text);
    } catch (const FormatError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(line_of("aig 1 1 0 1 0\n2\n2\n") == 1);
  CHECK(line_of("aag 1 1 0 1 0\n3\n2\n") == 2);
  CHECK(line_of("aag 3 2 0 1 1\n2\n4\n6\n6 2 9\n") == 5);
  CHECK(line_of("aag 3 2 0 1 1\n2\n4\n6\n") == 5);
  CHECK(line_of("aag 2 0 0 1 2\n4\n2 4 4\n4 2 2\n") > 0);
}

TEST_CASE("AIGER round trip preserves the corpus structurally") {
  for (const char* name : test::kCorpus) {
    Aig g = lower_corpus(name);
    Aig back = read_aiger(write_aiger(g));
    INFO(name);
    CHECK(structurally_equal(g, back));
    CHECK(write_aiger(back) == write_aiger(g));
  }
}

TEST_CASE("equivalence verdicts") {
  Aig x, y;
  Literal a = x.create_pi("a"), b = x.create_pi("b");
  x.create_po(x.make_and(a, b), "o");
  a = y.create_pi("a"), b = y.create_pi("b");
  y.create_po(y.make_or(a, b), "o");

  CHECK(check_equivalence(x, x).equivalent);
  Verdict v = check_equivalence(x, y);
  CHECK_FALSE(v.equivalent);
  REQUIRE(v.counterexample);
  const auto& cex = *v.counterexample;
  CHECK(cex.inputs[0] != cex.inputs[1]);
  CHECK(cex.differing_outputs == std::vector<std::size_t>{0});
  CHECK(check_equivalence(y, x).equivalent == v.equivalent);

  EquivOptions random{EquivMode::Random, 1000, 3};
  CHECK_FALSE(check_equivalence(x, y, random).equivalent);
}

TEST_CASE("equivalence errors") {
  Aig x, y;
  x.create_po(x.create_pi("a"), "o");
  y.create_po(y.create_pi("b"), "o");
  CHECK_THROWS_AS(check_equivalence(x, y), SignatureMismatch);
  Aig z;
  z.create_pi("a");
  CHECK_THROWS_AS(check_equivalence(x, z), SignatureMismatch);

  Aig wide;
  Literal acc = kTrue;
  for (unsigned i = 0; i < kMaxExhaustiveBits + 1; ++i)
    acc = wide.make_and(acc, wide.create_pi());
  wide.create_po(acc);
  CHECK_THROWS_AS(check_equivalence(wide, wide), ExhaustiveTooLarge);
  CHECK(check_equivalence(wide, wide, {EquivMode::Random, 640, 1}).equivalent);
}

TEST_CASE("a corpus AIG is equivalent to itself and to its AIGER image") {
  for (const char* name : test::kCorpus) {
    Aig g = lower_corpus(name);
    EquivOptions opt{EquivMode::Random, 4096, 5};
    CHECK(check_equivalence(g, g, opt).equivalent);
    CHECK(check_equivalence(g, read_aiger(write_aiger(g)), opt).equivalent);
  }
}

TEST_CASE("miter exposes a single disagreement") {
  Aig x, y;
  Literal a = x.create_pi("a"), b = x.create_pi("b");
  x.create_po(x.make_and(a, b), "p");
  x.create_po(a, "q");
  a = y.create_pi("a"), b = y.create_pi("b");
  y.create_po(y.make_and(a, b), "p");
  y.create_po(b, "q");
  Aig m = build_miter(x, y);
  CHECK(m.num_pos() == 3);
  std::vector<uint64_t> in = {0b1100, 0b1010};
  auto out = simulate(m, in);
  CHECK((out[0] & 0xf) == 0);
  CHECK((out[1] & 0xf) == 0b0110);
  CHECK((out[2] & 0xf) == 0b0110);
}
