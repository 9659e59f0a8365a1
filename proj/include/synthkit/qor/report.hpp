// Copyright 2026 The synthkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "synthkit/opt/script.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace synthkit::qor {

struct QoRReport {
  std::string design;
  std::string config_label;
  double area_ge = 0.0;
  unsigned logic_levels = 0;
  std::size_t aig_nodes = 0;
  unsigned aig_depth = 0;
  std::map<std::string, std::size_t> cell_counts;
  double runtime_s = 0.0;
  std::vector<opt::PassStats> per_pass;
  std::string equivalence = "skipped"; ///< "equivalent", "counterexample" or "skipped"
  uint64_t vectors_checked = 0;
};

/// Single JSON object whose keys are the QoRReport field names.
std::string to_json(const QoRReport& report);
QoRReport report_from_json(const std::string& text);

std::string to_text(const QoRReport& report);

} // namespace synthkit::qor
