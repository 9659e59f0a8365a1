// Copyright 2026 The synthkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "synthkit/qor/flow.hpp"

#include "synthkit/aig/aiger.hpp"
#include "synthkit/hdl/frontend.hpp"
#include "synthkit/lower/verify.hpp"
#include "synthkit/qor/mapping.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace synthkit::qor {

lower::LoweringOptions reference_lowering() {
  return {lower::PartSelectStrategy::Shifter, false, lower::AdderArch::RippleCarry,
          lower::MultiplierArch::BoothRadix4Csa};
}

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text))
    throw std::runtime_error("cannot write '" + path + "'");
}

opt::OptScript load_script(const std::string& choice) {
  if (choice == "basic")
    return opt::basic_script();
  if (choice == "enhanced")
    return opt::enhanced_script();
  return opt::parse_script(read_file(choice));
}

} // namespace

std::string render_report(const QoRReport& report, ReportFormat format) {
  return format == ReportFormat::Json ? to_json(report) : to_text(report);
}

FlowResult run_flow_source(std::string_view source, const std::string& file_name, const FlowConfig& config) {
  auto start = std::chrono::steady_clock::now();
  opt::OptScript script = load_script(config.script);
  hdl::Ast ast = hdl::parse_design(source, file_name);
  if (!config.top.empty() && ast.module_name != config.top)
    throw hdl::FrontendError("UnknownModule", ast.span,
                             "top module '" + config.top + "' not found (file defines '" + ast.module_name + "')");
  ir::WordLevelDesign design = hdl::elaborate(ast);

  aig::Aig lowered = lower::lower_design(design, config.lowering);
  auto [optimized, stats] = opt::run_script(lowered, script);

  FlowResult result;
  QoRReport& r = result.report;
  r.design = design.name;
  r.config_label = config.label;
  r.per_pass = std::move(stats);
  r.aig_nodes = aig::node_count(optimized);
  r.aig_depth = aig::depth(optimized);
  NetlistMetrics m = measure(map_to_cells(optimized));
  r.area_ge = m.area_ge;
  r.logic_levels = m.logic_levels;
  r.cell_counts = m.cell_counts;

  if (config.equivalence != EquivChoice::Off) {
    aig::Aig reference = lower::lower_design(design, reference_lowering());
    aig::EquivOptions eo;
    std::size_t bits = lower::input_bit_count(design);
    if (config.equivalence == EquivChoice::Auto)
      eo = lower::oracle_options(bits, 20, config.vectors, config.seed);
    else
      eo.mode = config.equivalence == EquivChoice::Exhaustive ? aig::EquivMode::Exhaustive : aig::EquivMode::Random;
    eo.vectors = config.vectors;
    eo.seed = config.seed;
    result.verdict = aig::check_equivalence(optimized, reference, eo);
    r.equivalence = result.verdict->equivalent ? "equivalent" : "counterexample";
    r.vectors_checked = result.verdict->vectors_checked;
  }
  result.aig = std::move(optimized);
  r.runtime_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  if (!config.aiger_path.empty())
    write_file(config.aiger_path, aig::write_aiger(result.aig));
  if (!config.report_path.empty())
    write_file(config.report_path, render_report(r, config.format));
  return result;
}

FlowResult run_flow(const std::string& source_path, const FlowConfig& config) {
  return run_flow_source(read_file(source_path), source_path, config);
}

FlowConfig default_column(const std::string& name) {
  FlowConfig c;
  c.label = name;
  if (name == "iguana") {
    c.lowering.part_select_strategy = lower::PartSelectStrategy::Shifter;
  } else if (name == "mux") {
  } else if (name == "abc") {
    c.script = "enhanced";
  } else if (name == "mac") {
    c.script = "enhanced";
    c.lowering.mac_fusion = true;
  } else {
    throw std::invalid_argument("unknown column '" + name + "' (expected iguana, mux, abc or mac)");
  }
  return c;
}

ComparisonTable compare_configs(const std::vector<std::string>& sources, const std::vector<FlowConfig>& configs) {
  if (configs.size() < 2)
    throw std::invalid_argument("compare needs at least two configurations");
  ComparisonTable t;
  for (const FlowConfig& c : configs) {
    t.columns.push_back(c.label);
    QoRReport agg;
    agg.design = "aggregate";
    agg.config_label = c.label;
    t.aggregate.push_back(agg);
  }
  for (const std::string& path : sources) {
    std::vector<QoRReport> row;
    for (std::size_t k = 0; k < configs.size(); ++k) {
      FlowConfig c = configs[k];
      c.report_path.clear();
      c.aiger_path.clear();
      QoRReport r = run_flow(path, c).report;
      QoRReport& agg = t.aggregate[k];
      agg.area_ge += r.area_ge;
      agg.logic_levels += r.logic_levels;
      agg.aig_nodes += r.aig_nodes;
      agg.aig_depth += r.aig_depth;
      agg.runtime_s += r.runtime_s;
      agg.vectors_checked += r.vectors_checked;
      if (agg.equivalence == "skipped" || r.equivalence == "counterexample")
        agg.equivalence = r.equivalence;
      for (const auto& [cell, n] : r.cell_counts)
        agg.cell_counts[cell] += n;
      row.push_back(std::move(r));
    }
    t.designs.push_back(row.front().design);
    t.cells.push_back(std::move(row));
  }
  return t;
}

std::string format_comparison(const ComparisonTable& t) {
  std::ostringstream os;
  char buf[64];
  auto block = [&](const std::string& title, const std::vector<QoRReport>& row) {
    os << title << "\n";
    std::snprintf(buf, sizeof buf, "  %-14s", "");
    os << buf;
    for (const std::string& c : t.columns) {
      std::snprintf(buf, sizeof buf, "%14s", c.c_str());
      os << buf;
    }
    os << "\n";
    auto line = [&](const char* name, auto value, const char* fmt) {
      std::snprintf(buf, sizeof buf, "  %-14s", name);
      os << buf;
      for (std::size_t k = 0; k < row.size(); ++k) {
        bool improved = k > 0 && value(row[k]) < value(row[k - 1]);
        char num[32];
        std::snprintf(num, sizeof num, fmt, value(row[k]));
        std::snprintf(buf, sizeof buf, "%13s%c", num, improved ? '*' : ' ');
        os << buf;
      }
      os << "\n";
    };
    line("area_ge", [](const QoRReport& r) { return r.area_ge; }, "%.2f");
    line("logic_levels", [](const QoRReport& r) { return r.logic_levels; }, "%u");
    line("aig_nodes", [](const QoRReport& r) { return r.aig_nodes; }, "%zu");
    line("runtime_s", [](const QoRReport& r) { return r.runtime_s; }, "%.3f");
  };
  for (std::size_t d = 0; d < t.designs.size(); ++d)
    block(t.designs[d], t.cells[d]);
  block("aggregate", t.aggregate);
  return os.str();
}

} // namespace synthkit::qor
