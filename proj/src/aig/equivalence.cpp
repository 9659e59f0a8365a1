// Copyright 2026 The synthkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "synthkit/aig/equivalence.hpp"

#include "synthkit/aig/simulate.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <mutex>
#include <random>
#include <thread>

namespace synthkit::aig {

namespace {

void check_signature(const Aig& a, const Aig& b) {
  if (a.num_pis() != b.num_pis() || a.num_latches() != b.num_latches() || a.num_pos() != b.num_pos())
    throw SignatureMismatch("interface sizes differ: " + std::to_string(a.num_pis()) + "/" +
                            std::to_string(a.num_latches()) + "/" + std::to_string(a.num_pos()) + " vs " +
                            std::to_string(b.num_pis()) + "/" + std::to_string(b.num_latches()) + "/" +
                            std::to_string(b.num_pos()));
  auto clash = [](const std::string& x, const std::string& y) { return !x.empty() && !y.empty() && x != y; };
  for (std::size_t i = 0; i < a.num_pis(); ++i)
    if (clash(a.pi_name(i), b.pi_name(i)))
      throw SignatureMismatch("input " + std::to_string(i) + " named '" + a.pi_name(i) + "' vs '" + b.pi_name(i) + "'");
  for (std::size_t i = 0; i < a.num_latches(); ++i)
    if (clash(a.latches()[i].name, b.latches()[i].name))
      throw SignatureMismatch("latch " + std::to_string(i) + " named '" + a.latches()[i].name + "' vs '" +
                              b.latches()[i].name + "'");
  for (std::size_t i = 0; i < a.num_pos(); ++i)
    if (clash(a.pos()[i].name, b.pos()[i].name))
      throw SignatureMismatch("output " + std::to_string(i) + " named '" + a.pos()[i].name + "' vs '" +
                              b.pos()[i].name + "'");
}

// Low six inputs of an exhaustive block enumerate the 64 lanes.
constexpr uint64_t kLaneMask[6] = {0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull, 0xF0F0F0F0F0F0F0F0ull,
                                   0xFF00FF00FF00FF00ull, 0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull};

struct Found {
  uint64_t order = UINT64_MAX; // first failing (block, lane) so threads agree on one witness
  std::vector<uint64_t> inputs;
  std::vector<uint64_t> diffs;
  int lane = 0;
};

} // namespace

Aig build_miter(const Aig& a, const Aig& b) {
  check_signature(a, b);
  Aig m;
  std::vector<Literal> ins;
  for (std::size_t i = 0; i < a.num_pis(); ++i)
    ins.push_back(m.create_pi(a.pi_name(i)));
  for (std::size_t i = 0; i < a.num_latches(); ++i)
    ins.push_back(m.create_pi(a.latches()[i].name));
  auto oa = copy_into(m, a, ins);
  auto ob = copy_into(m, b, ins);
  Literal any = kFalse;
  std::vector<Literal> diffs;
  for (std::size_t i = 0; i < oa.size(); ++i) {
    diffs.push_back(m.make_xor(oa[i], ob[i]));
    any = m.make_or(any, diffs.back());
  }
  for (Literal d : diffs)
    m.create_po(d);
  m.create_po(any, "miter");
  return m;
}

Verdict check_equivalence(const Aig& a, const Aig& b, const EquivOptions& options) {
  Aig miter = cleanup(build_miter(a, b));
  const std::size_t n = miter.num_pis();
  const std::size_t outs = miter.num_pos() - 1;

  uint64_t blocks = 0;
  uint64_t last_mask = ~0ull;
  Verdict verdict;
  if (options.mode == EquivMode::Exhaustive) {
    if (n > kMaxExhaustiveBits)
      throw ExhaustiveTooLarge(std::to_string(n) + " input bits exceed the exhaustive limit of " +
                               std::to_string(kMaxExhaustiveBits));
    blocks = n <= 6 ? 1 : (uint64_t{1} << (n - 6));
    if (n < 6)
      last_mask = (uint64_t{1} << (uint64_t{1} << n)) - 1;
    verdict.vectors_checked = uint64_t{1} << n;
  } else {
    blocks = (options.vectors + 63) / 64;
    if (options.vectors % 64)
      last_mask = (uint64_t{1} << (options.vectors % 64)) - 1;
    verdict.vectors_checked = options.vectors;
  }

  // Random stimuli are drawn up front from one generator so the vectors do
  // not depend on the thread count.
  std::vector<uint64_t> random_words;
  if (options.mode == EquivMode::Random) {
    std::mt19937_64 rng(options.seed);
    random_words.resize(blocks * n);
    for (auto& w : random_words)
      w = rng();
  }

  auto stimulus = [&](uint64_t block, std::vector<uint64_t>& in) {
    in.resize(n);
    if (options.mode == EquivMode::Random) {
      std::copy_n(random_words.begin() + static_cast<std::ptrdiff_t>(block * n), n, in.begin());
      return;
    }
    for (std::size_t i = 0; i < n; ++i)
      in[i] = i < 6 ? kLaneMask[i] : ((block >> (i - 6)) & 1 ? ~0ull : 0ull);
  };

  unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<uint64_t>(threads, std::max<uint64_t>(1, blocks / 64)));
  std::atomic<uint64_t> next{0};
  std::atomic<uint64_t> best_order{UINT64_MAX};
  std::mutex mu;
  Found found;
  constexpr uint64_t kChunk = 64;

  auto worker = [&] {
    std::vector<uint64_t> in;
    for (;;) {
      uint64_t start = next.fetch_add(kChunk);
      if (start >= blocks || start * 64 > best_order.load())
        return;
      for (uint64_t block = start; block < std::min(blocks, start + kChunk); ++block) {
        stimulus(block, in);
        auto out = simulate(miter, in);
        uint64_t hit = out[outs] & (block + 1 == blocks ? last_mask : ~0ull);
        if (!hit)
          continue;
        int lane = std::countr_zero(hit);
        uint64_t order = block * 64 + static_cast<uint64_t>(lane);
        std::lock_guard lock(mu);
        if (order < found.order) {
          found = Found{order, in, std::vector<uint64_t>(out.begin(), out.end() - 1), lane};
          best_order = order;
        }
        return;
      }
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back(worker);
    for (auto& t : pool)
      t.join();
  }

  if (found.order != UINT64_MAX) {
    verdict.equivalent = false;
    Counterexample cex;
    for (uint64_t w : found.inputs)
      cex.inputs.push_back((w >> found.lane) & 1);
    for (std::size_t i = 0; i < found.diffs.size(); ++i)
      if ((found.diffs[i] >> found.lane) & 1)
        cex.differing_outputs.push_back(i);
    verdict.counterexample = std::move(cex);
  }
  return verdict;
}

} // namespace synthkit::aig
