// Copyright 2026 The synthkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "support.hpp"

#include "synthkit/aig/simulate.hpp"
#include "synthkit/hdl/frontend.hpp"
#include "synthkit/lower/lowering.hpp"
#include "synthkit/opt/script.hpp"
#include "synthkit/qor/flow.hpp"
#include "synthkit/qor/mapping.hpp"
#include "synthkit/qor/report.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <random>
#include <sys/wait.h>

using namespace synthkit;
using namespace synthkit::qor;
using aig::Aig;
using aig::Literal;

namespace {

std::size_t count_of(const NetlistMetrics& m, const std::string& cell) {
  auto it = m.cell_counts.find(cell);
  return it == m.cell_counts.end() ? 0 : it->second;
}

NetlistMetrics metrics(const Aig& g) { return measure(map_to_cells(g)); }

Aig optimized_corpus(const char* name) {
  FlowConfig c;
  c.equivalence = EquivChoice::Off;
  return run_flow(test::corpus_path(name), c).aig;
}

int run_cli(const std::string& args) {
  std::string cmd = std::string(SYNTHKIT_CLI) + " " + args + " > /dev/null 2>&1";
  int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string temp_file(const std::string& name, const std::string& contents) {
  auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << contents;
  return path.string();
}

const char* kIdentity = "module id(input [3:0] a, output [3:0] y); assign y = a; endmodule";

} // namespace

TEST_CASE("mapping examples") {
  CellLibrary lib = CellLibrary::standard();
  REQUIRE(lib.find(CellFunction::Nand2));
  CHECK(lib.find(CellFunction::Nand2)->area_ge == 1.0);
  CHECK(lib.find(CellFunction::Inv)->area_ge == 0.67);

  Aig buf;
  buf.create_po(buf.create_pi());
  NetlistMetrics m = metrics(buf);
  CHECK(m.cell_counts.empty());
  CHECK(m.area_ge == 0.0);
  CHECK(m.logic_levels == 0);

  Aig and2;
  Literal a = and2.create_pi(), b = and2.create_pi();
  and2.create_po(and2.make_and(a, b));
  m = metrics(and2);
  CHECK(count_of(m, "NAND2") == 1);
  CHECK(count_of(m, "INV") == 1);
  CHECK(m.area_ge == doctest::Approx(1.67));
  CHECK(m.logic_levels == 2);

  Aig nand2;
  a = nand2.create_pi();
  b = nand2.create_pi();
  nand2.create_po(!nand2.make_and(a, b));
  m = metrics(nand2);
  CHECK(count_of(m, "NAND2") == 1);
  CHECK(count_of(m, "INV") == 0);
  CHECK(m.logic_levels == 1);

  Aig inv;
  inv.create_po(!inv.create_pi());
  m = metrics(inv);
  CHECK(count_of(m, "INV") == 1);
  CHECK(m.area_ge == doctest::Approx(0.67));

  Aig tie;
  tie.create_pi();
  tie.create_po(aig::kTrue);
  tie.create_po(aig::kFalse);
  m = metrics(tie);
  CHECK(m.cell_counts.empty());
  MappedNetlist n = map_to_cells(tie);
  CHECK(n.po_nets == std::vector<uint32_t>{MappedNetlist::kTieHigh, MappedNetlist::kTieLow});
}

TEST_CASE("balanced four-input AND costs three NAND2 and three INV") {
  Aig g;
  Literal a = g.create_pi(), b = g.create_pi(), c = g.create_pi(), d = g.create_pi();
  g.create_po(g.make_and(g.make_and(a, b), g.make_and(c, d)));
  NetlistMetrics m = metrics(g);
  CHECK(count_of(m, "NAND2") == 3);
  CHECK(count_of(m, "INV") == 3);
  CHECK(m.area_ge == doctest::Approx(3 * 1.0 + 3 * 0.67));
  CHECK(m.logic_levels == 4);
}

TEST_CASE("an inverter is shared by every positive use") {
  Aig g;
  Literal a = g.create_pi(), b = g.create_pi(), c = g.create_pi();
  Literal ab = g.make_and(a, b);
  g.create_po(g.make_and(ab, c));
  g.create_po(ab);
  g.create_po(!ab);
  NetlistMetrics m = metrics(g);
  CHECK(count_of(m, "NAND2") == 2);
  CHECK(count_of(m, "INV") == 2);
}

TEST_CASE("empty library is rejected") {
  Aig g;
  Literal a = g.create_pi(), b = g.create_pi();
  g.create_po(g.make_and(a, b));
  CHECK_THROWS_AS(map_to_cells(g, CellLibrary{}), LibraryIncomplete);
}

TEST_CASE("mapped netlists simulate like their AIG") {
  std::mt19937_64 rng(41);
  for (const char* name : test::kCorpus) {
    Aig g = optimized_corpus(name);
    MappedNetlist n = map_to_cells(g);
    CHECK(n.pi_nets.size() == g.num_pis());
    CHECK(n.latch_nets.size() == g.num_latches());
    CHECK(n.po_nets.size() == g.num_pos());
    std::vector<uint64_t> in(g.num_pis() + g.num_latches());
    for (int block = 0; block < 157; ++block) {
      for (auto& w : in)
        w = rng();
      INFO(name);
      CHECK(simulate_netlist(n, in) == aig::simulate(g, in));
    }
  }
}

TEST_CASE("metrics ignore input and output order") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const unsigned pis = 6, ands = 40, pos = 5;
    std::vector<std::array<uint32_t, 4>> recipe;
    for (unsigned i = 0; i < ands; ++i)
      recipe.push_back({static_cast<uint32_t>(rng() % (pis + i)), static_cast<uint32_t>(rng() & 1),
                        static_cast<uint32_t>(rng() % (pis + i)), static_cast<uint32_t>(rng() & 1)});
    std::vector<std::pair<uint32_t, bool>> outs;
    for (unsigned i = 0; i < pos; ++i)
      outs.push_back({static_cast<uint32_t>(pis + rng() % ands), static_cast<bool>(rng() & 1)});

    auto build = [&](bool reversed) {
      Aig g;
      std::vector<Literal> pool(pis);
      for (unsigned k = 0; k < pis; ++k) {
        unsigned i = reversed ? pis - 1 - k : k;
        pool[i] = g.create_pi();
      }
      for (const auto& r : recipe)
        pool.push_back(g.make_and(pool[r[0]] ^ (r[1] != 0), pool[r[2]] ^ (r[3] != 0)));
      for (unsigned k = 0; k < pos; ++k) {
        const auto& o = outs[reversed ? pos - 1 - k : k];
        g.create_po(pool[o.first] ^ o.second);
      }
      return g;
    };
    NetlistMetrics x = metrics(build(false)), y = metrics(build(true));
    CHECK(x.area_ge == y.area_ge);
    CHECK(x.logic_levels == y.logic_levels);
    CHECK(x.cell_counts == y.cell_counts);
  }
}

TEST_CASE("identity module flows to an empty netlist") {
  FlowResult r = run_flow_source(kIdentity, "id.v", FlowConfig{});
  CHECK(r.report.design == "id");
  CHECK(r.report.area_ge == 0.0);
  CHECK(r.report.logic_levels == 0);
  CHECK(r.report.aig_nodes == 0);
  CHECK(r.report.equivalence == "equivalent");
  REQUIRE(r.verdict.has_value());
  CHECK(r.verdict->vectors_checked == 16);
}

TEST_CASE("frontend errors propagate out of the flow") {
  CHECK_THROWS_AS(run_flow_source("module m(input a, output y); assign y = b; endmodule", "m.v", FlowConfig{}),
                  hdl::FrontendError);
  FlowConfig wrong_top;
  wrong_top.top = "other";
  CHECK_THROWS(run_flow_source(kIdentity, "id.v", wrong_top));
}

TEST_CASE("report json round trip") {
  FlowConfig c;
  c.script = "enhanced";
  c.label = "abc";
  FlowResult r = run_flow(test::corpus_path("rng_rom"), c);
  std::string text = to_json(r.report);
  auto j = nlohmann::json::parse(text);
  for (const char* key : {"design", "config_label", "area_ge", "logic_levels", "aig_nodes", "aig_depth",
                          "cell_counts", "runtime_s", "per_pass", "equivalence", "vectors_checked"})
    CHECK(j.contains(key));
  CHECK(j["per_pass"].size() == opt::enhanced_script().passes.size());
  QoRReport back = report_from_json(text);
  CHECK(to_json(back) == text);
  CHECK(back.design == "rng_rom");
  CHECK(back.equivalence == "equivalent");
  CHECK(back.vectors_checked == 64);
  CHECK(back.cell_counts == r.report.cell_counts);
  CHECK(to_text(back).find("rng_rom") != std::string::npos);
}

TEST_CASE("reports are deterministic apart from runtime") {
  auto strip = [](QoRReport r) {
    r.runtime_s = 0;
    for (auto& p : r.per_pass)
      p.runtime_s = 0;
    return to_json(r);
  };
  FlowConfig c;
  c.script = "enhanced";
  c.lowering.mac_fusion = true;
  c.equivalence = EquivChoice::Off;
  std::string src = test::corpus_source("mac16");
  CHECK(strip(run_flow_source(src, "mac16.v", c).report) == strip(run_flow_source(src, "mac16.v", c).report));
}

TEST_CASE("report area matches the summed cell counts") {
  FlowConfig c;
  c.equivalence = EquivChoice::Off;
  for (const char* name : test::kCorpus) {
    QoRReport r = run_flow(test::corpus_path(name), c).report;
    double area = 0;
    for (const auto& [cell, n] : r.cell_counts)
      area += (cell == "INV" ? 0.67 : 1.0) * static_cast<double>(n);
    CHECK(r.area_ge == doctest::Approx(area).epsilon(1e-9));
  }
}

TEST_CASE("comparison columns") {
  CHECK(default_column("iguana").lowering.part_select_strategy == lower::PartSelectStrategy::Shifter);
  CHECK(default_column("mux").script == "basic");
  CHECK(default_column("abc").script == "enhanced");
  CHECK_FALSE(default_column("abc").lowering.mac_fusion);
  CHECK(default_column("mac").lowering.mac_fusion);
  CHECK_THROWS_AS(default_column("yosys"), std::invalid_argument);
  CHECK_THROWS_AS(compare_configs({test::corpus_path("rng_rom")}, {default_column("mux")}), std::invalid_argument);

  FlowConfig again = default_column("mux");
  again.label = "mux2";
  std::vector<std::string> files = {test::corpus_path("psel_scan"), test::corpus_path("rng_rom")};
  ComparisonTable t = compare_configs(files, {default_column("mux"), again});
  REQUIRE(t.cells.size() == 2);
  CHECK(t.columns == std::vector<std::string>{"mux", "mux2"});
  for (const auto& row : t.cells) {
    CHECK(row[0].area_ge == row[1].area_ge);
    CHECK(row[0].logic_levels == row[1].logic_levels);
    CHECK(row[0].aig_nodes == row[1].aig_nodes);
  }
  REQUIRE(t.aggregate.size() == 2);
  CHECK(t.aggregate[0].aig_nodes == t.cells[0][0].aig_nodes + t.cells[1][0].aig_nodes);
  CHECK(t.aggregate[0].logic_levels == t.cells[0][0].logic_levels + t.cells[1][0].logic_levels);
  std::string table = format_comparison(t);
  CHECK(table.find("psel_scan") != std::string::npos);
  CHECK(table.find("mux2") != std::string::npos);
}

TEST_CASE("command line exit codes") {
  std::string good = temp_file("synthkit_id.v", kIdentity);
  std::string bad = temp_file("synthkit_bad.v", "module m(input a, output y); assign y = ; endmodule");
  CHECK(run_cli("synth " + good) == 0);
  CHECK(run_cli("synth " + good + " --report json --script enhanced --mac-fusion on") == 0);
  CHECK(run_cli("") == 1);
  CHECK(run_cli("synth " + good + " --partselect barrel") == 1);
  CHECK(run_cli("synth " + good + " --script /nonexistent/script.txt") == 1);
  CHECK(run_cli("synth " + bad) == 2);
  CHECK(run_cli("compare " + good + " --columns iguana,mux") == 0);
}
