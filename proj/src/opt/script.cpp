// Copyright 2026 The synthkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "synthkit/opt/script.hpp"

#include "synthkit/opt/passes.hpp"

#include <charconv>
#include <chrono>
#include <sstream>

namespace synthkit::opt {

OptScript basic_script() { return OptScript{{{"strash", {}}, {"balance", {}}}}; }

OptScript enhanced_script() {
  return OptScript{{{"strash", {}},
                    {"balance", {}},
                    {"rewrite", {}},
                    {"rewrite", {{"zero_gain", "true"}}},
                    {"balance", {}},
                    {"rewrite", {}},
                    {"balance", {}}}};
}

namespace {

bool parse_bool(const std::string& pass, const std::string& key, const std::string& value) {
  if (value == "true" || value == "1")
    return true;
  if (value == "false" || value == "0")
    return false;
  throw BadParameter(pass + ": " + key + " expects true/false, got '" + value + "'");
}

unsigned parse_unsigned(const std::string& pass, const std::string& key, const std::string& value) {
  unsigned v = 0;
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
  if (ec != std::errc() || ptr != value.data() + value.size())
    throw BadParameter(pass + ": " + key + " expects an unsigned integer, got '" + value + "'");
  return v;
}

RewriteOptions rewrite_options(const PassInvocation& p) {
  RewriteOptions o;
  for (const auto& [key, value] : p.parameters) {
    if (key == "zero_gain")
      o.zero_gain = parse_bool(p.name, key, value);
    else if (key == "preserve_levels")
      o.preserve_levels = parse_bool(p.name, key, value);
    else if (key == "cut_size")
      o.cut_size = parse_unsigned(p.name, key, value);
    else if (key == "cut_limit")
      o.cut_limit = parse_unsigned(p.name, key, value);
    else
      throw BadParameter(p.name + ": unknown parameter '" + key + "'");
  }
  if (o.cut_size != 4)
    throw BadParameter(p.name + ": cut_size must be 4");
  if (o.cut_limit < 1)
    throw BadParameter(p.name + ": cut_limit must be at least 1");
  return o;
}

} // namespace

void validate_script(const OptScript& script) {
  for (const PassInvocation& p : script.passes) {
    if (p.name == "strash" || p.name == "balance") {
      if (!p.parameters.empty())
        throw BadParameter(p.name + ": takes no parameters, got '" + p.parameters.begin()->first + "'");
    } else if (p.name == "rewrite") {
      rewrite_options(p);
    } else {
      throw UnknownPass("unknown pass '" + p.name + "'");
    }
  }
}

OptScript parse_script(std::string_view text) {
  OptScript script;
  std::istringstream is{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    std::istringstream ls(line);
    std::string word;
    if (!(ls >> word))
      continue;
    PassInvocation p{word, {}};
    while (ls >> word) {
      auto eq = word.find('=');
      if (eq == std::string::npos || eq == 0)
        throw BadParameter("line " + std::to_string(line_no) + ": expected key=value, got '" + word + "'");
      p.parameters[word.substr(0, eq)] = word.substr(eq + 1);
    }
    try {
      validate_script(OptScript{{p}});
    } catch (const UnknownPass& e) {
      throw UnknownPass("line " + std::to_string(line_no) + ": " + e.what());
    } catch (const BadParameter& e) {
      throw BadParameter("line " + std::to_string(line_no) + ": " + e.what());
    }
    script.passes.push_back(std::move(p));
  }
  return script;
}

std::string format_script(const OptScript& script) {
  std::string out;
  for (const PassInvocation& p : script.passes) {
    out += p.name;
    for (const auto& [k, v] : p.parameters)
      out += " " + k + "=" + v;
    out += "\n";
  }
  return out;
}

std::pair<aig::Aig, std::vector<PassStats>> run_script(const aig::Aig& input, const OptScript& script,
                                                       const RewriteDb* db) {
  validate_script(script);
  aig::Aig current = input;
  std::vector<PassStats> stats;
  for (const PassInvocation& p : script.passes) {
    PassStats s;
    s.pass = p.name;
    s.nodes_before = aig::node_count(current);
    s.depth_before = aig::depth(current);
    auto start = std::chrono::steady_clock::now();
    if (p.name == "strash")
      current = strash(current);
    else if (p.name == "balance")
      current = balance(current);
    else
      current = rewrite(current, rewrite_options(p), db ? *db : default_rewrite_db());
    s.runtime_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    s.nodes_after = aig::node_count(current);
    s.depth_after = aig::depth(current);
    stats.push_back(std::move(s));
  }
  return {std::move(current), std::move(stats)};
}

} // namespace synthkit::opt
