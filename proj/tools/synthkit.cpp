// Copyright 2026 The synthkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "synthkit/hdl/ast.hpp"
#include "synthkit/opt/rewrite_db.hpp"
#include "synthkit/opt/script.hpp"
#include "synthkit/qor/flow.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <map>

namespace {

using namespace synthkit;

enum Exit { kOk = 0, kUsage = 1, kFrontend = 2, kNotEquivalent = 3 };

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text))
    throw std::runtime_error("cannot write '" + path + "'");
}

std::string comparison_json(const qor::ComparisonTable& t) {
  nlohmann::ordered_json j;
  j["columns"] = t.columns;
  auto reports = [](const std::vector<qor::QoRReport>& row) {
    nlohmann::ordered_json a = nlohmann::ordered_json::array();
    for (const auto& r : row)
      a.push_back(nlohmann::ordered_json::parse(qor::to_json(r)));
    return a;
  };
  j["designs"] = nlohmann::ordered_json::array();
  for (std::size_t d = 0; d < t.designs.size(); ++d)
    j["designs"].push_back({{"design", t.designs[d]}, {"cells", reports(t.cells[d])}});
  j["aggregate"] = reports(t.aggregate);
  return j.dump(2) + "\n";
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"synthkit: RTL-to-gates synthesis experiments"};
  app.require_subcommand(1);

  qor::FlowConfig cfg;
  std::string file, partselect = "muxtree", fusion = "off", adder = "prefix", equiv = "auto", report = "text";
  auto* synth = app.add_subcommand("synth", "Synthesize one design and report QoR");
  synth->add_option("file", file, "Verilog source")->required()->check(CLI::ExistingFile);
  synth->add_option("--top", cfg.top, "Expected top module name");
  synth->add_option("--partselect", partselect, "Indexed part-select lowering")
      ->check(CLI::IsMember({"shifter", "muxtree"}));
  synth->add_option("--mac-fusion", fusion, "Fuse multiply-add into FMA units")->check(CLI::IsMember({"on", "off"}));
  synth->add_option("--script", cfg.script, "basic, enhanced or a script file");
  synth->add_option("--adder", adder, "Carry-propagate adder")->check(CLI::IsMember({"ripple", "prefix"}));
  synth->add_option("--equiv", equiv, "Equivalence check against the reference lowering")
      ->check(CLI::IsMember({"auto", "exhaustive", "random", "off"}));
  synth->add_option("--vectors", cfg.vectors, "Random vectors");
  synth->add_option("--seed", cfg.seed, "Random seed");
  synth->add_option("--emit-aiger", cfg.aiger_path, "Write the optimized AIG as ASCII AIGER");
  synth->add_option("--report", report, "Report format")->check(CLI::IsMember({"text", "json"}));
  std::string out_path;
  synth->add_option("--out", out_path, "Report file (default stdout)");

  std::vector<std::string> files;
  std::string columns = "iguana,mux,abc,mac", compare_report = "text", compare_out;
  auto* compare = app.add_subcommand("compare", "Cumulative QoR table over several designs");
  compare->add_option("files", files, "Verilog sources")->required()->check(CLI::ExistingFile);
  compare->add_option("--columns", columns, "Comma-separated columns from iguana,mux,abc,mac");
  compare->add_option("--report", compare_report, "Table format")->check(CLI::IsMember({"text", "json"}));
  compare->add_option("--out", compare_out, "Output file (default stdout)");

  auto* db = app.add_subcommand("db", "Rewrite structure database");
  db->require_subcommand(1);
  std::string db_out;
  auto* db_build = db->add_subcommand("build", "Enumerate structures and write the cache file");
  db_build->add_option("--out", db_out, "Cache file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*synth) {
      cfg.lowering.part_select_strategy =
          partselect == "shifter" ? lower::PartSelectStrategy::Shifter : lower::PartSelectStrategy::MuxTree;
      cfg.lowering.mac_fusion = fusion == "on";
      cfg.lowering.final_adder = adder == "ripple" ? lower::AdderArch::RippleCarry : lower::AdderArch::PrefixSklansky;
      static const std::map<std::string, qor::EquivChoice> modes{{"auto", qor::EquivChoice::Auto},
                                                                 {"exhaustive", qor::EquivChoice::Exhaustive},
                                                                 {"random", qor::EquivChoice::Random},
                                                                 {"off", qor::EquivChoice::Off}};
      cfg.equivalence = modes.at(equiv);
      cfg.format = report == "json" ? qor::ReportFormat::Json : qor::ReportFormat::Text;
      cfg.report_path = out_path;
      qor::FlowResult result = qor::run_flow(file, cfg);
      if (out_path.empty())
        std::cout << qor::render_report(result.report, cfg.format);
      if (result.verdict && !result.verdict->equivalent) {
        std::cerr << "equivalence check failed: outputs";
        for (std::size_t o : result.verdict->counterexample->differing_outputs)
          std::cerr << " " << o;
        std::cerr << " differ\n";
        return kNotEquivalent;
      }
      return kOk;
    }
    if (*compare) {
      std::vector<qor::FlowConfig> configs;
      std::stringstream ss(columns);
      for (std::string name; std::getline(ss, name, ',');)
        configs.push_back(qor::default_column(name));
      qor::ComparisonTable table = qor::compare_configs(files, configs);
      emit(compare_report == "json" ? comparison_json(table) : qor::format_comparison(table), compare_out);
      for (const auto& r : table.aggregate)
        if (r.equivalence == "counterexample")
          return kNotEquivalent;
      return kOk;
    }
    if (*db_build) {
      emit(opt::serialize_rewrite_db(opt::build_rewrite_db()), db_out);
      return kOk;
    }
  } catch (const hdl::FrontendError& e) {
    std::cerr << e.what() << "\n";
    return kFrontend;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
