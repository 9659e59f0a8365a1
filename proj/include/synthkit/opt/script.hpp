// Copyright 2026 The synthkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "synthkit/aig/aig.hpp"
#include "synthkit/opt/rewrite_db.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace synthkit::opt {

class UnknownPass : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class BadParameter : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct PassInvocation {
  std::string name;
  std::map<std::string, std::string> parameters;

  bool operator==(const PassInvocation&) const = default;
};

struct OptScript {
  std::vector<PassInvocation> passes;

  bool operator==(const OptScript&) const = default;
};

struct PassStats {
  std::string pass;
  std::size_t nodes_before = 0;
  std::size_t nodes_after = 0;
  unsigned depth_before = 0;
  unsigned depth_after = 0;
  double runtime_s = 0.0;
};

/// strash, balance
OptScript basic_script();
/// strash, balance, rewrite, rewrite -z, balance, rewrite, balance
OptScript enhanced_script();

/// One pass per line: `name key=value ...`. Blank lines and `#` comments
/// are ignored. Passes and parameters are validated.
OptScript parse_script(std::string_view text);
std::string format_script(const OptScript& script);

/// Throws UnknownPass or BadParameter.
void validate_script(const OptScript& script);

/// Runs the passes in order. `db` defaults to default_rewrite_db(), which is
/// only built when the script contains a rewrite pass.
std::pair<aig::Aig, std::vector<PassStats>> run_script(const aig::Aig& aig, const OptScript& script,
                                                       const RewriteDb* db = nullptr);

} // namespace synthkit::opt
