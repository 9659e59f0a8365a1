// Copyright 2026 The synthkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "synthkit/qor/report.hpp"

#include <json.hpp>

#include <cstdio>
#include <sstream>

namespace synthkit::opt {

void to_json(nlohmann::ordered_json& j, const PassStats& s) {
  j = nlohmann::ordered_json{{"pass", s.pass},
                             {"nodes_before", s.nodes_before},
                             {"nodes_after", s.nodes_after},
                             {"depth_before", s.depth_before},
                             {"depth_after", s.depth_after},
                             {"runtime_s", s.runtime_s}};
}

void from_json(const nlohmann::ordered_json& j, PassStats& s) {
  j.at("pass").get_to(s.pass);
  j.at("nodes_before").get_to(s.nodes_before);
  j.at("nodes_after").get_to(s.nodes_after);
  j.at("depth_before").get_to(s.depth_before);
  j.at("depth_after").get_to(s.depth_after);
  j.at("runtime_s").get_to(s.runtime_s);
}

} // namespace synthkit::opt

namespace synthkit::qor {

std::string to_json(const QoRReport& r) {
  nlohmann::ordered_json j{{"design", r.design},
                           {"config_label", r.config_label},
                           {"area_ge", r.area_ge},
                           {"logic_levels", r.logic_levels},
                           {"aig_nodes", r.aig_nodes},
                           {"aig_depth", r.aig_depth},
                           {"cell_counts", r.cell_counts},
                           {"runtime_s", r.runtime_s},
                           {"per_pass", r.per_pass},
                           {"equivalence", r.equivalence},
                           {"vectors_checked", r.vectors_checked}};
  return j.dump(2) + "\n";
}

QoRReport report_from_json(const std::string& text) {
  auto j = nlohmann::ordered_json::parse(text);
  QoRReport r;
  j.at("design").get_to(r.design);
  j.at("config_label").get_to(r.config_label);
  j.at("area_ge").get_to(r.area_ge);
  j.at("logic_levels").get_to(r.logic_levels);
  j.at("aig_nodes").get_to(r.aig_nodes);
  j.at("aig_depth").get_to(r.aig_depth);
  j.at("cell_counts").get_to(r.cell_counts);
  j.at("runtime_s").get_to(r.runtime_s);
  j.at("per_pass").get_to(r.per_pass);
  j.at("equivalence").get_to(r.equivalence);
  j.at("vectors_checked").get_to(r.vectors_checked);
  return r;
}

std::string to_text(const QoRReport& r) {
  std::ostringstream os;
  char buf[128];
  os << "design        " << r.design << "\n";
  if (!r.config_label.empty())
    os << "config        " << r.config_label << "\n";
  std::snprintf(buf, sizeof buf, "%.2f", r.area_ge);
  os << "area_ge       " << buf << "\n";
  os << "logic_levels  " << r.logic_levels << "\n";
  os << "aig_nodes     " << r.aig_nodes << "\n";
  os << "aig_depth     " << r.aig_depth << "\n";
  os << "cells        ";
  for (const auto& [name, count] : r.cell_counts)
    os << " " << name << "=" << count;
  os << "\n";
  std::snprintf(buf, sizeof buf, "%.3f", r.runtime_s);
  os << "runtime_s     " << buf << "\n";
  os << "equivalence   " << r.equivalence;
  if (r.vectors_checked)
    os << " (" << r.vectors_checked << " vectors)";
  os << "\n";
  if (!r.per_pass.empty()) {
    os << "passes\n";
    for (const auto& p : r.per_pass) {
      std::snprintf(buf, sizeof buf, "  %-8s nodes %6zu -> %6zu  depth %4u -> %4u  %.3fs\n", p.pass.c_str(),
                    p.nodes_before, p.nodes_after, p.depth_before, p.depth_after, p.runtime_s);
      os << buf;
    }
  }
  return os.str();
}

} // namespace synthkit::qor
