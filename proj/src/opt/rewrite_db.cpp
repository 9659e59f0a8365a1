// Copyright 2026 The synthkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "synthkit/opt/rewrite_db.hpp"

#include <algorithm>
#include <charconv>
#include <mutex>
#include <sstream>
#include <thread>
#include <tuple>
#include <unordered_set>

namespace synthkit::opt {

namespace {

TruthTable literal_table(const std::vector<TruthTable>& gate_tts, uint8_t lit) {
  TruthTable t;
  if (lit < kLeafLiteralBase)
    t = 0;
  else if (lit < kGateLiteralBase)
    t = kVarTable[(lit - kLeafLiteralBase) / 2];
  else
    t = gate_tts[(lit - kGateLiteralBase) / 2];
  return (lit & 1) ? static_cast<TruthTable>(~t) : t;
}

} // namespace

TruthTable structure_truth_table(const Structure& s) {
  std::vector<TruthTable> tts;
  for (auto [a, b] : s.gates)
    tts.push_back(static_cast<TruthTable>(literal_table(tts, a) & literal_table(tts, b)));
  return literal_table(tts, s.output);
}

unsigned structure_depth(const Structure& s) {
  std::vector<unsigned> d;
  auto level = [&](uint8_t lit) { return lit < kGateLiteralBase ? 0u : d[(lit - kGateLiteralBase) / 2]; };
  for (auto [a, b] : s.gates)
    d.push_back(1 + std::max(level(a), level(b)));
  return level(s.output);
}

namespace {

using Gate = std::pair<uint8_t, uint8_t>;

struct State {
  std::vector<Gate> gates;
  std::vector<TruthTable> tts;
  std::vector<uint8_t> depths;
};

uint8_t signal_literal(std::size_t s) {
  return static_cast<uint8_t>(s < 4 ? kLeafLiteralBase + 2 * s : kGateLiteralBase + 2 * (s - 4));
}

TruthTable normalize(TruthTable t) { return (t & 1) ? static_cast<TruthTable>(~t) : t; }

// Orders candidates: fewer nodes, then lower depth, then discovery order.
struct Rank {
  unsigned nodes = ~0u;
  unsigned depth = ~0u;
  std::array<uint32_t, 4> seq{};
  auto operator<=>(const Rank&) const = default;
};

struct Candidate {
  Rank rank;
  std::vector<Gate> gates; // gate list whose last gate computes the function
};

using BestTable = std::vector<Candidate>; // indexed by canonical table

void offer(BestTable& best, TruthTable tt, const Rank& rank, const std::vector<Gate>& gates, const Gate* extra = nullptr,
           const Gate* extra2 = nullptr) {
  Candidate& slot = best[npn_canonical(tt).canonical];
  if (!(rank < slot.rank))
    return;
  slot.rank = rank;
  slot.gates = gates;
  if (extra)
    slot.gates.push_back(*extra);
  if (extra2)
    slot.gates.push_back(*extra2);
}

// Canonical key of a state: lexicographically smallest sorted list of
// (normalized table, depth) over all 384 input transforms.
std::vector<uint32_t> state_key(const State& s) {
  std::vector<uint32_t> best, cur(s.tts.size());
  for (std::size_t t = 0; t < 384; ++t) {
    for (std::size_t i = 0; i < s.tts.size(); ++i)
      cur[i] = (uint32_t{normalize(apply_input_transform(s.tts[i], t))} << 8) | s.depths[i];
    std::sort(cur.begin(), cur.end());
    if (best.empty() || cur < best)
      best = cur;
  }
  return best;
}

struct KeyHash {
  std::size_t operator()(const std::vector<uint32_t>& k) const {
    std::size_t h = 1469598103934665603ull;
    for (uint32_t v : k)
      h = (h ^ v) * 1099511628211ull;
    return h;
  }
};

// Calls fn(gate, tt, depth, option) for every non-redundant new gate over the
// state's signals, in a fixed order. With `must_use`, one fanin must be that signal.
template <typename Fn>
void for_each_extension(const State& s, Fn&& fn, std::size_t must_use = SIZE_MAX) {
  const std::size_t n = 4 + s.gates.size();
  auto table = [&](std::size_t sig) { return sig < 4 ? kVarTable[sig] : s.tts[sig - 4]; };
  auto depth = [&](std::size_t sig) -> unsigned { return sig < 4 ? 0 : s.depths[sig - 4]; };
  uint32_t option = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (must_use != SIZE_MAX && i != must_use && j != must_use)
        continue;
      for (unsigned pol = 0; pol < 4; ++pol, ++option) {
        TruthTable a = table(i), b = table(j);
        if (pol & 1)
          a = static_cast<TruthTable>(~a);
        if (pol & 2)
          b = static_cast<TruthTable>(~b);
        TruthTable t = a & b;
        TruthTable nt = normalize(t);
        if (nt == 0)
          continue;
        bool redundant = false;
        for (std::size_t k = 0; k < n && !redundant; ++k)
          redundant = normalize(table(k)) == nt;
        if (redundant)
          continue;
        Gate g{static_cast<uint8_t>(signal_literal(i) | (pol & 1)), static_cast<uint8_t>(signal_literal(j) | (pol >> 1))};
        fn(g, t, 1 + std::max(depth(i), depth(j)), option);
      }
    }
  }
}

State extend(const State& s, const Gate& g, TruthTable t, unsigned depth) {
  State next = s;
  next.gates.push_back(g);
  next.tts.push_back(t);
  next.depths.push_back(static_cast<uint8_t>(depth));
  return next;
}

// Keeps only the cone of the last gate and rewrites it over canonical
// coordinates so that it computes `npn_canonical(f).canonical`.
Structure canonical_structure(const std::vector<Gate>& gates) {
  std::vector<bool> used(gates.size(), false);
  used.back() = true;
  for (std::size_t j = gates.size(); j-- > 0;) {
    if (!used[j])
      continue;
    for (uint8_t lit : {gates[j].first, gates[j].second})
      if (lit >= kGateLiteralBase)
        used[(lit - kGateLiteralBase) / 2] = true;
  }
  Structure raw;
  std::vector<uint8_t> remap(gates.size(), 0);
  for (std::size_t j = 0; j < gates.size(); ++j) {
    if (!used[j])
      continue;
    auto map = [&](uint8_t lit) {
      return lit < kGateLiteralBase ? lit
                                    : static_cast<uint8_t>(remap[(lit - kGateLiteralBase) / 2] | (lit & 1));
    };
    raw.gates.emplace_back(map(gates[j].first), map(gates[j].second));
    remap[j] = static_cast<uint8_t>(kGateLiteralBase + 2 * (raw.gates.size() - 1));
  }
  raw.output = static_cast<uint8_t>(kGateLiteralBase + 2 * (raw.gates.size() - 1));

  // canonical(x) = o ^ f(y) with y[perm[i]] = x[i] ^ mask_i: leaf y_j becomes x_i (complemented by mask_i).
  NpnResult r = npn_canonical(structure_truth_table(raw));
  std::array<uint8_t, 4> leaf_image{};
  for (unsigned i = 0; i < 4; ++i)
    leaf_image[r.transform.perm[i]] =
        static_cast<uint8_t>(kLeafLiteralBase + 2 * i + ((r.transform.input_mask >> i) & 1));
  auto map = [&](uint8_t lit) {
    if (lit < kLeafLiteralBase || lit >= kGateLiteralBase)
      return lit;
    return static_cast<uint8_t>(leaf_image[(lit - kLeafLiteralBase) / 2] ^ (lit & 1));
  };
  Structure out;
  for (auto [a, b] : raw.gates) {
    uint8_t x = map(a), y = map(b);
    out.gates.emplace_back(std::min(x, y), std::max(x, y));
  }
  out.output = static_cast<uint8_t>(raw.output ^ (r.transform.output ? 1 : 0));
  return out;
}

} // namespace

RewriteDb build_rewrite_db(unsigned max_nodes, DbBuildStats* stats, unsigned threads) {
  constexpr unsigned kDedupLevels = 5;
  BestTable best(65536);
  // Constant and single-variable classes need no gates.
  best[npn_canonical(0).canonical] = Candidate{Rank{0, 0, {}}, {}};
  best[npn_canonical(kVarTable[0]).canonical] = Candidate{Rank{0, 0, {}}, {}};

  std::vector<State> frontier{State{}};
  unsigned level = 0;
  for (; level < std::min(max_nodes, kDedupLevels); ++level) {
    std::vector<State> next;
    std::unordered_set<std::vector<uint32_t>, KeyHash> seen;
    for (uint32_t si = 0; si < frontier.size(); ++si) {
      const State& s = frontier[si];
      for_each_extension(s, [&](const Gate& g, TruthTable t, unsigned depth, uint32_t option) {
        offer(best, t, Rank{level + 1, depth, {level + 1, si, option, 0}}, s.gates, &g);
        State child = extend(s, g, t, depth);
        if (seen.insert(state_key(child)).second)
          next.push_back(std::move(child));
      });
    }
    if (stats)
      stats->states_per_level.push_back(next.size());
    frontier = std::move(next);
  }

  // The last two sizes are expanded without keeping states. A size-7 root
  // must use the sixth gate; otherwise the same gate set was a size-6 state.
  if (max_nodes > level) {
    unsigned workers = threads ? threads : std::max(1u, std::thread::hardware_concurrency());
    std::vector<BestTable> local(workers, BestTable(65536));
    std::atomic<std::size_t> next_state{0};
    const bool two_levels = max_nodes >= level + 2;
    const unsigned base = level;
    auto work = [&](unsigned w) {
      BestTable& mine = local[w];
      for (;;) {
        std::size_t si = next_state.fetch_add(1);
        if (si >= frontier.size())
          return;
        const State& s = frontier[si];
        for_each_extension(s, [&](const Gate& g6, TruthTable t6, unsigned d6, uint32_t o6) {
          offer(mine, t6, Rank{base + 1, d6, {base + 1, static_cast<uint32_t>(si), o6, 0}}, s.gates, &g6);
          if (!two_levels)
            return;
          State child = extend(s, g6, t6, d6);
          for_each_extension(
              child,
              [&](const Gate& g7, TruthTable t7, unsigned d7, uint32_t o7) {
                Candidate& slot = mine[npn_canonical(t7).canonical];
                if (slot.rank.nodes < base + 2)
                  return;
                offer(mine, t7, Rank{base + 2, d7, {base + 2, static_cast<uint32_t>(si), o6, o7}}, s.gates, &g6,
                      &g7);
              },
              4 + base);
        });
      }
    };
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back(work, w);
    for (auto& t : pool)
      t.join();
    for (const BestTable& table : local)
      for (std::size_t c = 0; c < table.size(); ++c)
        if (table[c].rank < best[c].rank)
          best[c] = table[c];
  }

  std::map<TruthTable, NpnEntry> entries;
  for (std::size_t c = 0; c < best.size(); ++c) {
    if (best[c].rank.nodes == ~0u)
      continue;
    NpnEntry e;
    e.canonical = static_cast<TruthTable>(c);
    if (best[c].gates.empty()) {
      for (uint8_t lit = 0; lit < kGateLiteralBase; ++lit) {
        e.structure.output = lit;
        if (structure_truth_table(e.structure) == c)
          break;
      }
    } else {
      e.structure = canonical_structure(best[c].gates);
    }
    e.nodes = static_cast<unsigned>(e.structure.gates.size());
    e.depth = structure_depth(e.structure);
    entries.emplace(e.canonical, std::move(e));
  }
  return RewriteDb(std::move(entries));
}

std::string serialize_rewrite_db(const RewriteDb& db) {
  std::ostringstream os;
  os << kRewriteDbHeader << "\n";
  os << "classes " << db.size() << "\n";
  char hex[8];
  for (const auto& [tt, e] : db.entries()) {
    std::snprintf(hex, sizeof hex, "%04x", tt);
    os << hex << " " << e.nodes << " " << e.depth << " " << unsigned{e.structure.output};
    for (auto [a, b] : e.structure.gates)
      os << " " << unsigned{a} << "," << unsigned{b};
    os << "\n";
  }
  return os.str();
}

RewriteDb parse_rewrite_db(std::string_view text) {
  std::istringstream is{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  auto fail = [&](const std::string& msg) { throw DbFormatError("line " + std::to_string(line_no) + ": " + msg); };
  if (!std::getline(is, line) || (++line_no, line != kRewriteDbHeader))
    fail("expected header '" + std::string(kRewriteDbHeader) + "'");
  std::size_t count = 0;
  if (!std::getline(is, line) || (++line_no, std::sscanf(line.c_str(), "classes %zu", &count) != 1))
    fail("expected class count");
  std::map<TruthTable, NpnEntry> entries;
  while (std::getline(is, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string hex;
    NpnEntry e;
    unsigned output = 0;
    if (!(ls >> hex >> e.nodes >> e.depth >> output) || hex.size() != 4)
      fail("malformed entry");
    unsigned tt = 0;
    if (std::from_chars(hex.data(), hex.data() + 4, tt, 16).ptr != hex.data() + 4)
      fail("malformed truth table");
    e.canonical = static_cast<TruthTable>(tt);
    e.structure.output = static_cast<uint8_t>(output);
    std::string gate;
    while (ls >> gate) {
      unsigned a = 0, b = 0;
      if (std::sscanf(gate.c_str(), "%u,%u", &a, &b) != 2)
        fail("malformed gate '" + gate + "'");
      uint8_t limit = static_cast<uint8_t>(kGateLiteralBase + 2 * e.structure.gates.size());
      if (a >= limit || b >= limit)
        fail("gate references a later gate");
      e.structure.gates.emplace_back(static_cast<uint8_t>(a), static_cast<uint8_t>(b));
    }
    if (e.structure.output >= kGateLiteralBase + 2 * e.structure.gates.size())
      fail("output references a missing gate");
    if (structure_truth_table(e.structure) != e.canonical)
      fail("structure does not implement its class");
    if (e.nodes != e.structure.gates.size() || e.depth != structure_depth(e.structure))
      fail("cost fields disagree with the structure");
    entries.emplace(e.canonical, std::move(e));
  }
  if (entries.size() != count)
    fail("class count mismatch");
  return RewriteDb(std::move(entries));
}

const RewriteDb& default_rewrite_db() {
  static const RewriteDb db = build_rewrite_db();
  return db;
}

} // namespace synthkit::opt
