// Copyright 2026 The synthkit Authors
// SPDX-License-Identifier: Apache-2.0

// Acceptance run: one PASS/FAIL line per criterion AC-1..AC-8. Exit status
// is non-zero when any criterion fails.

#include "support.hpp"

#include "synthkit/aig/aiger.hpp"
#include "synthkit/aig/simulate.hpp"
#include "synthkit/hdl/frontend.hpp"
#include "synthkit/lower/arith.hpp"
#include "synthkit/lower/lowering.hpp"
#include "synthkit/lower/verify.hpp"
#include "synthkit/opt/npn.hpp"
#include "synthkit/opt/rewrite_db.hpp"
#include "synthkit/opt/script.hpp"
#include "synthkit/qor/flow.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <set>

using namespace synthkit;
using aig::Aig;
using aig::Literal;

namespace {

// Pinned tolerances.
constexpr double kAc3NodeRatio = 0.9;
constexpr double kAc4LevelRatio = 0.95;
constexpr double kAc8SecondsLimit = 600.0;
constexpr std::size_t kNpnClasses = 222;
constexpr unsigned kDbMaxNodes = 7;
constexpr unsigned kExhaustiveBitLimit = 20;
constexpr uint64_t kRandomVectors = 100000;

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

void note(Outcome& o, bool ok, const std::string& part) {
  o.pass &= ok;
  o.detail += (o.detail.empty() ? "" : "; ") + part + (ok ? "" : " [violated]");
}

ir::WordLevelDesign corpus_design(const std::string& name) {
  return hdl::elaborate(hdl::parse_design(test::corpus_source(name)));
}

lower::LoweringOptions lowering(bool muxtree, bool fusion) {
  return {muxtree ? lower::PartSelectStrategy::MuxTree : lower::PartSelectStrategy::Shifter, fusion,
          lower::AdderArch::PrefixSklansky, lower::MultiplierArch::BoothRadix4Csa};
}

qor::QoRReport flow(const std::string& name, bool muxtree, bool fusion, const std::string& script) {
  qor::FlowConfig c;
  c.lowering = lowering(muxtree, fusion);
  c.script = script;
  c.equivalence = qor::EquivChoice::Off;
  return qor::run_flow(test::corpus_path(name), c).report;
}

Outcome ac1() {
  Outcome o;
  std::size_t checked = 0;
  for (const char* name : test::kCorpus) {
    ir::WordLevelDesign d = corpus_design(name);
    std::size_t bits = lower::input_bit_count(d);
    lower::OracleTable oracle(d, lower::oracle_options(bits, kExhaustiveBitLimit, kRandomVectors, 1));
    for (bool muxtree : {false, true})
      for (bool fusion : {false, true})
        for (const auto& script : {opt::basic_script(), opt::enhanced_script()}) {
          Aig g = opt::run_script(lower::lower_design(d, lowering(muxtree, fusion)), script).first;
          aig::Verdict v = oracle.check(g);
          ++checked;
          if (!v.equivalent)
            note(o, false,
                 fmt("%s ps=%s fusion=%d script=%zu-pass counterexample", name, muxtree ? "muxtree" : "shifter",
                     int{fusion}, script.passes.size()));
        }
    o.detail += (o.detail.empty() ? "" : "; ") +
                fmt("%s %s %llu vectors", name, bits <= kExhaustiveBitLimit ? "exhaustive" : "random",
                    static_cast<unsigned long long>(oracle.vectors()));
  }
  o.detail = fmt("%zu netlists, 0 counterexamples allowed; ", checked) + o.detail;
  return o;
}

Outcome ac2() {
  Outcome o;
  qor::QoRReport shifter = flow("psel_scan", false, false, "basic");
  qor::QoRReport muxtree = flow("psel_scan", true, false, "basic");
  note(o, muxtree.aig_nodes < shifter.aig_nodes,
       fmt("psel_scan nodes muxtree %zu < shifter %zu", muxtree.aig_nodes, shifter.aig_nodes));
  note(o, muxtree.logic_levels < shifter.logic_levels,
       fmt("LL muxtree %u < shifter %u", muxtree.logic_levels, shifter.logic_levels));
  return o;
}

Outcome ac3() {
  Outcome o;
  qor::QoRReport basic = flow("rng_rom", true, false, "basic");
  qor::QoRReport enhanced = flow("rng_rom", true, false, "enhanced");
  note(o, static_cast<double>(enhanced.aig_nodes) <= kAc3NodeRatio * static_cast<double>(basic.aig_nodes),
       fmt("rng_rom nodes enhanced %zu <= %.2f x basic %zu (ratio %.3f)", enhanced.aig_nodes, kAc3NodeRatio,
           basic.aig_nodes, static_cast<double>(enhanced.aig_nodes) / static_cast<double>(basic.aig_nodes)));
  note(o, enhanced.aig_depth <= basic.aig_depth,
       fmt("depth enhanced %u <= basic %u", enhanced.aig_depth, basic.aig_depth));
  std::size_t pairs = 0, violations = 0;
  for (const char* name : test::kCorpus) {
    ir::WordLevelDesign d = corpus_design(name);
    for (bool muxtree : {false, true})
      for (bool fusion : {false, true}) {
        Aig g = lower::lower_design(d, lowering(muxtree, fusion));
        std::size_t b = aig::node_count(opt::run_script(g, opt::basic_script()).first);
        std::size_t e = aig::node_count(opt::run_script(g, opt::enhanced_script()).first);
        ++pairs;
        if (e > b) {
          ++violations;
          note(o, false, fmt("%s ps=%d fusion=%d enhanced %zu > basic %zu", name, int{muxtree}, int{fusion}, e, b));
        }
      }
  }
  note(o, violations == 0, fmt("enhanced <= basic nodes on %zu corpus lowerings", pairs));
  return o;
}

Outcome ac4() {
  Outcome o;
  qor::QoRReport u32 = flow("mac32", true, false, "enhanced");
  qor::QoRReport f32 = flow("mac32", true, true, "enhanced");
  note(o, static_cast<double>(f32.logic_levels) <= kAc4LevelRatio * static_cast<double>(u32.logic_levels),
       fmt("mac32 LL fused %u <= %.2f x unfused %u (ratio %.3f)", f32.logic_levels, kAc4LevelRatio, u32.logic_levels,
           static_cast<double>(f32.logic_levels) / static_cast<double>(u32.logic_levels)));
  qor::QoRReport u16 = flow("mac16", true, false, "enhanced");
  qor::QoRReport f16 = flow("mac16", true, true, "enhanced");
  note(o, f16.logic_levels < u16.logic_levels,
       fmt("mac16 LL fused %u < unfused %u", f16.logic_levels, u16.logic_levels));
  return o;
}

// Exhaustive 64-lane simulation over all assignments of the PIs, compared
// lane by lane against plain integer arithmetic.
uint64_t exhaustive_mismatches(const Aig& g, const std::function<uint64_t(uint64_t)>& expected) {
  const std::size_t n = g.num_pis();
  const uint64_t lane_patterns[6] = {0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull, 0xF0F0F0F0F0F0F0F0ull,
                                     0xFF00FF00FF00FF00ull, 0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull};
  uint64_t blocks = n <= 6 ? 1 : uint64_t{1} << (n - 6);
  uint64_t mismatches = 0;
  std::vector<uint64_t> in(n);
  for (uint64_t block = 0; block < blocks; ++block) {
    for (std::size_t i = 0; i < n; ++i)
      in[i] = i < 6 ? lane_patterns[i] : (((block >> (i - 6)) & 1) ? ~uint64_t{0} : 0);
    std::vector<uint64_t> out = aig::simulate(g, in);
    for (unsigned lane = 0; lane < 64; ++lane) {
      uint64_t m = (block << 6) | lane;
      uint64_t want = expected(m);
      uint64_t got = 0;
      for (std::size_t k = 0; k < out.size(); ++k)
        got |= ((out[k] >> lane) & 1) << k;
      mismatches += got != want;
    }
  }
  return mismatches;
}

Aig multiplier(unsigned operand_bits, unsigned width, bool with_addend) {
  Aig g;
  auto inputs = [&] {
    lower::Bits b;
    for (unsigned i = 0; i < operand_bits; ++i)
      b.push_back(g.create_pi());
    return lower::fit(b, width);
  };
  lower::Bits a = inputs(), b = inputs();
  lower::CarrySavePair cs = with_addend
                                ? lower::fuse_mac(g, lower::booth_partial_products(g, a, b, width), inputs(), width)
                                : lower::build_booth_csa_multiplier(g, a, b, width);
  for (Literal l : lower::build_final_adder(g, cs.sum, cs.carry, lower::AdderArch::PrefixSklansky).outputs)
    g.create_po(l);
  return g;
}

Outcome ac5() {
  Outcome o;
  uint64_t m8 = exhaustive_mismatches(multiplier(8, 8, false), [](uint64_t m) { return ((m & 0xff) * (m >> 8)) & 0xff; });
  note(o, m8 == 0, fmt("8-bit multiplier mod 2^8: %llu mismatches over 2^16", static_cast<unsigned long long>(m8)));
  uint64_t m16 = exhaustive_mismatches(multiplier(8, 16, false), [](uint64_t m) { return (m & 0xff) * (m >> 8); });
  note(o, m16 == 0, fmt("8x8->16 product: %llu mismatches over 2^16", static_cast<unsigned long long>(m16)));
  uint64_t f8 = exhaustive_mismatches(multiplier(8, 8, true), [](uint64_t m) {
    return ((m & 0xff) * ((m >> 8) & 0xff) + (m >> 16)) & 0xff;
  });
  note(o, f8 == 0, fmt("8-bit fused MAC mod 2^8: %llu mismatches over 2^24", static_cast<unsigned long long>(f8)));
  uint64_t f16 = exhaustive_mismatches(multiplier(8, 16, true), [](uint64_t m) {
    return (m & 0xff) * ((m >> 8) & 0xff) + (m >> 16);
  });
  note(o, f16 == 0, fmt("8x8+8->16 fused MAC: %llu mismatches over 2^24", static_cast<unsigned long long>(f16)));
  return o;
}

// Orbit count with union-find over the group generators: adjacent input
// swaps, complement of input 0, complement of the output.
std::size_t orbit_count() {
  std::vector<uint32_t> parent(1 << 16);
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](uint32_t x) {
    while (parent[x] != x)
      x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](uint32_t a, uint32_t b) { parent[find(a)] = find(b); };
  for (uint32_t f = 0; f < (1u << 16); ++f) {
    for (unsigned i = 0; i < 3; ++i) {
      uint32_t g = 0;
      for (unsigned m = 0; m < 16; ++m) {
        unsigned a = (m >> i) & 1, b = (m >> (i + 1)) & 1;
        unsigned src = (m & ~(3u << i)) | (b << i) | (a << (i + 1));
        g |= ((f >> src) & 1) << m;
      }
      unite(f, g);
    }
    uint32_t neg = 0;
    for (unsigned m = 0; m < 16; ++m)
      neg |= ((f >> (m ^ 1)) & 1) << m;
    unite(f, neg);
    unite(f, ~f & 0xffff);
  }
  std::size_t roots = 0;
  for (uint32_t f = 0; f < (1u << 16); ++f)
    roots += find(f) == f;
  return roots;
}

using Gates = std::vector<std::pair<uint8_t, uint8_t>>;

// Truth table and live gate count of a gate list, evaluated directly.
std::pair<opt::TruthTable, unsigned> eval_gates(const Gates& gates, uint8_t out) {
  std::vector<uint16_t> val(opt::kGateLiteralBase + 2 * gates.size());
  val[1] = 0xFFFF;
  for (unsigned i = 0; i < 4; ++i) {
    val[opt::kLeafLiteralBase + 2 * i] = opt::kVarTable[i];
    val[opt::kLeafLiteralBase + 2 * i + 1] = static_cast<uint16_t>(~opt::kVarTable[i]);
  }
  for (std::size_t j = 0; j < gates.size(); ++j) {
    uint16_t v = val[gates[j].first] & val[gates[j].second];
    val[opt::kGateLiteralBase + 2 * j] = v;
    val[opt::kGateLiteralBase + 2 * j + 1] = static_cast<uint16_t>(~v);
  }
  std::vector<bool> live(gates.size());
  std::vector<uint8_t> stack{out};
  while (!stack.empty()) {
    uint8_t l = stack.back();
    stack.pop_back();
    if (l < opt::kGateLiteralBase || live[(l - opt::kGateLiteralBase) / 2])
      continue;
    std::size_t j = (l - opt::kGateLiteralBase) / 2;
    live[j] = true;
    stack.push_back(gates[j].first);
    stack.push_back(gates[j].second);
  }
  return {val[out], static_cast<unsigned>(std::count(live.begin(), live.end(), true))};
}

// Exact minimum AND count for every function needing at most `max_gates`
// gates, by enumerating all gate sequences.
std::vector<uint8_t> brute_force_minimum(unsigned max_gates) {
  std::vector<uint8_t> best(1 << 16, 0xFF);
  std::vector<uint16_t> lits;
  best[0] = best[0xFFFF] = 0;
  for (uint16_t v : opt::kVarTable) {
    lits.push_back(v);
    lits.push_back(static_cast<uint16_t>(~v));
    best[v] = best[static_cast<uint16_t>(~v)] = 0;
  }
  auto recurse = [&](auto&& self, unsigned used) -> void {
    if (used == max_gates)
      return;
    std::size_t n = lits.size();
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b) {
        uint16_t g = lits[a] & lits[b];
        auto cost = static_cast<uint8_t>(used + 1);
        best[g] = std::min(best[g], cost);
        best[static_cast<uint16_t>(~g)] = std::min(best[static_cast<uint16_t>(~g)], cost);
        lits.push_back(g);
        lits.push_back(static_cast<uint16_t>(~g));
        self(self, used + 1);
        lits.resize(n);
      }
  };
  recurse(recurse, 0);
  return best;
}

Outcome ac6() {
  Outcome o;
  std::set<opt::TruthTable> canon;
  for (uint32_t f = 0; f < (1u << 16); ++f)
    canon.insert(opt::npn_canonical(static_cast<opt::TruthTable>(f)).canonical);
  std::size_t orbits = orbit_count();
  note(o, canon.size() == kNpnClasses && orbits == kNpnClasses && opt::npn_class_count() == kNpnClasses,
       fmt("classes %zu (orbit count %zu, expected %zu)", canon.size(), orbits, kNpnClasses));

  opt::RewriteDb db = opt::build_rewrite_db(kDbMaxNodes);
  std::string first = opt::serialize_rewrite_db(db);
  std::string second = opt::serialize_rewrite_db(opt::build_rewrite_db(kDbMaxNodes));
  note(o, first == second, fmt("two builds byte-identical (%zu bytes, %zu classes)", first.size(), db.size()));

  auto cost_of = [&](opt::TruthTable f) -> unsigned {
    const opt::NpnEntry* e = db.find(opt::npn_canonical(f).canonical);
    return e ? e->nodes : ~0u;
  };

  // Exact minima up to four gates.
  std::vector<uint8_t> best = brute_force_minimum(4);
  std::size_t exact_bad = 0, exact_classes = 0;
  std::set<opt::TruthTable> seen;
  for (uint32_t f = 0; f < (1u << 16); ++f) {
    if (best[f] == 0xFF)
      continue;
    auto tt = static_cast<opt::TruthTable>(f);
    exact_bad += cost_of(tt) != best[f];
    exact_classes += seen.insert(opt::npn_canonical(tt).canonical).second;
  }
  note(o, exact_bad == 0, fmt("brute-force minima match on %zu classes of <= 4 gates", exact_classes));

  // Every one- and two-gate extension of a stored structure lands in a
  // stored class no more expensive than the extension.
  std::size_t ext = 0, ext_bad = 0;
  auto extend = [&](auto&& self, Gates gates, unsigned depth_left) -> void {
    if (gates.size() >= kDbMaxNodes || depth_left == 0)
      return;
    uint8_t limit = static_cast<uint8_t>(opt::kGateLiteralBase + 2 * gates.size());
    for (uint8_t a = opt::kLeafLiteralBase; a < limit; ++a)
      for (uint8_t b = a + 1; b < limit; ++b) {
        if ((a ^ b) == 1)
          continue;
        gates.emplace_back(a, b);
        auto [tt, live] = eval_gates(gates, static_cast<uint8_t>(limit));
        ++ext;
        ext_bad += cost_of(tt) > live;
        self(self, gates, depth_left - 1);
        gates.pop_back();
      }
  };
  for (const auto& [c, e] : db.entries())
    extend(extend, e.structure.gates, e.nodes <= kDbMaxNodes - 2 ? 2 : 1);
  note(o, ext_bad == 0, fmt("%zu structure extensions covered", ext));

  // Random structures of up to seven gates.
  std::mt19937_64 rng(2026);
  std::size_t samples = 1000000, sample_bad = 0;
  for (std::size_t k = 0; k < samples; ++k) {
    unsigned n = 1 + static_cast<unsigned>(rng() % kDbMaxNodes);
    Gates gates;
    for (unsigned j = 0; j < n; ++j) {
      unsigned span = opt::kGateLiteralBase + 2 * j - opt::kLeafLiteralBase;
      gates.emplace_back(static_cast<uint8_t>(opt::kLeafLiteralBase + rng() % span),
                         static_cast<uint8_t>(opt::kLeafLiteralBase + rng() % span));
    }
    auto [tt, live] = eval_gates(gates, static_cast<uint8_t>(opt::kGateLiteralBase + 2 * (n - 1)));
    sample_bad += cost_of(tt) > live;
  }
  note(o, sample_bad == 0, fmt("%zu random structures of <= %u gates covered", samples, kDbMaxNodes));
  return o;
}

Outcome ac7() {
  Outcome o;
  std::size_t round_trips = 0, bad = 0;
  for (const char* name : test::kCorpus) {
    ir::WordLevelDesign d = corpus_design(name);
    for (bool optimized : {false, true}) {
      Aig g = lower::lower_design(d, lowering(true, true));
      if (optimized)
        g = opt::run_script(g, opt::basic_script()).first;
      std::string text = aig::write_aiger(g);
      Aig back = aig::read_aiger(text);
      ++round_trips;
      if (!aig::structurally_equal(g, back) || aig::write_aiger(back) != text) {
        ++bad;
        note(o, false, fmt("%s round trip differs", name));
      }
    }
  }
  note(o, bad == 0, fmt("%zu corpus round trips structure-preserving", round_trips));

  Aig buffer;
  buffer.create_po(buffer.create_pi());
  Aig and2;
  Literal a = and2.create_pi(), b = and2.create_pi();
  and2.create_po(and2.make_and(a, b));
  for (auto [file, g] : {std::pair<const char*, const Aig*>{"buffer.aag", &buffer}, {"and2.aag", &and2}}) {
    std::string golden = test::read_file(std::string(SYNTHKIT_GOLDEN_DIR) + "/" + file);
    bool ok = aig::write_aiger(*g) == golden && aig::structurally_equal(aig::read_aiger(golden), *g);
    note(o, ok, fmt("golden %s byte-identical", file));
  }
  return o;
}

Outcome ac8() {
  Outcome o;
  std::vector<std::string> files;
  for (const char* name : test::kCorpus)
    files.push_back(test::corpus_path(name));
  std::vector<qor::FlowConfig> columns;
  for (const char* c : {"iguana", "mux", "abc", "mac"})
    columns.push_back(qor::default_column(c));
  auto start = std::chrono::steady_clock::now();
  qor::ComparisonTable t = qor::compare_configs(files, columns);
  double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  note(o, seconds < kAc8SecondsLimit, fmt("completed in %.1f s < %.0f s", seconds, kAc8SecondsLimit));
  std::size_t nonequivalent = 0;
  for (const auto& row : t.cells)
    for (const auto& r : row)
      nonequivalent += r.equivalence != "equivalent";
  note(o, nonequivalent == 0, "every cell equivalent");
  const auto& ig = t.aggregate.at(0);
  const auto& mux = t.aggregate.at(1);
  const auto& abc = t.aggregate.at(2);
  const auto& mac = t.aggregate.at(3);
  note(o, mux.area_ge <= ig.area_ge, fmt("area mux %.2f <= iguana %.2f", mux.area_ge, ig.area_ge));
  note(o, abc.logic_levels <= mux.logic_levels, fmt("LL abc %u <= mux %u", abc.logic_levels, mux.logic_levels));
  note(o, mac.logic_levels <= abc.logic_levels, fmt("LL mac %u <= abc %u", mac.logic_levels, abc.logic_levels));
  return o;
}

} // namespace

int main() {
  const std::pair<const char*, Outcome (*)()> criteria[] = {{"AC-1", ac1}, {"AC-2", ac2}, {"AC-3", ac3},
                                                            {"AC-4", ac4}, {"AC-5", ac5}, {"AC-6", ac6},
                                                            {"AC-7", ac7}, {"AC-8", ac8}};
  int failures = 0;
  for (const auto& [id, run] : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %s (%.1f s): %s\n", id, o.pass ? "PASS" : "FAIL", s, o.detail.c_str());
    std::fflush(stdout);
    failures += !o.pass;
  }
  return failures == 0 ? 0 : 1;
}
