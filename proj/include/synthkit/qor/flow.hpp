// Copyright 2026 The synthkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "synthkit/aig/aig.hpp"
#include "synthkit/aig/equivalence.hpp"
#include "synthkit/lower/lowering.hpp"
#include "synthkit/qor/report.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace synthkit::qor {

enum class EquivChoice { Auto, Exhaustive, Random, Off };
enum class ReportFormat { Text, Json };

struct FlowConfig {
  std::string label;
  std::string top; ///< empty accepts any module name
  lower::LoweringOptions lowering{lower::PartSelectStrategy::MuxTree, false, lower::AdderArch::PrefixSklansky,
                                  lower::MultiplierArch::BoothRadix4Csa};
  std::string script = "basic"; ///< "basic", "enhanced" or a script file path
  /// Auto: exhaustive up to 20 input and latch bits, random otherwise.
  EquivChoice equivalence = EquivChoice::Auto;
  uint64_t vectors = 100000;
  uint64_t seed = 1;
  ReportFormat format = ReportFormat::Text;
  std::string report_path; ///< written when non-empty
  std::string aiger_path;  ///< written when non-empty
};

struct FlowResult {
  QoRReport report;
  aig::Aig aig;
  std::optional<aig::Verdict> verdict;
};

/// Reference lowering the flow checks every result against: shifter
/// part-selects, no fusion, ripple adders, no optimization.
lower::LoweringOptions reference_lowering();

/*! \brief parse, elaborate, lower, optimize, map and measure one design.
 *
 * The optimized AIG is checked against the reference lowering of the same
 * design. Frontend errors propagate; a failed check is reported through
 * `verdict` and `report.equivalence`.
 */
FlowResult run_flow(const std::string& source_path, const FlowConfig& config);
FlowResult run_flow_source(std::string_view source, const std::string& file_name, const FlowConfig& config);

std::string render_report(const QoRReport& report, ReportFormat format);

/// Cumulative columns: iguana = shifter + basic, mux = muxtree + basic,
/// abc = muxtree + enhanced, mac = muxtree + fusion + enhanced.
FlowConfig default_column(const std::string& name);

struct ComparisonTable {
  std::vector<std::string> designs;
  std::vector<std::string> columns;
  std::vector<std::vector<QoRReport>> cells; ///< [design][column]
  std::vector<QoRReport> aggregate;          ///< per column, summed over designs
};

/// Requires at least two configs.
ComparisonTable compare_configs(const std::vector<std::string>& sources, const std::vector<FlowConfig>& configs);

/// Plain-text table; `*` marks a value that improved on the previous column.
std::string format_comparison(const ComparisonTable& table);

} // namespace synthkit::qor
