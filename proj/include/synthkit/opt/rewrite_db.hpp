// Copyright 2026 The synthkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "synthkit/opt/npn.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace synthkit::opt {

/*! \brief AND/complement DAG over four placeholder leaves.
 *
 * Literal encoding: 0 and 1 are the constants, 2 + 2i (+1) is leaf i
 * (complemented), 10 + 2j (+1) is gate j. Gates only reference earlier
 * gates.
 */
struct Structure {
  std::vector<std::pair<uint8_t, uint8_t>> gates;
  uint8_t output = 0;

  bool operator==(const Structure&) const = default;
};

inline constexpr uint8_t kLeafLiteralBase = 2;
inline constexpr uint8_t kGateLiteralBase = 10;

TruthTable structure_truth_table(const Structure& s);
unsigned structure_depth(const Structure& s);

struct NpnEntry {
  TruthTable canonical = 0;
  Structure structure;
  unsigned nodes = 0;
  unsigned depth = 0;

  bool operator==(const NpnEntry&) const = default;
};

class DbFormatError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Best known structure per NPN class, keyed by canonical table.
class RewriteDb {
public:
  RewriteDb() = default;
  explicit RewriteDb(std::map<TruthTable, NpnEntry> entries) : entries_(std::move(entries)) {}

  const NpnEntry* find(TruthTable canonical) const {
    auto it = entries_.find(canonical);
    return it == entries_.end() ? nullptr : &it->second;
  }
  const std::map<TruthTable, NpnEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

  bool operator==(const RewriteDb&) const = default;

private:
  std::map<TruthTable, NpnEntry> entries_;
};

struct DbBuildStats {
  std::vector<std::size_t> states_per_level; ///< Distinct structures kept per size, after symmetry reduction.
};

/*! \brief Breadth-first enumeration of AND/complement DAGs over 4 inputs.
 *
 * Structures up to `dedup_levels` gates are kept as states, merged when
 * an input permutation/complement maps one gate set onto another
 * (with equal gate depths). Larger sizes up to `max_nodes` are expanded
 * from those states without storing them. Each class keeps the structure
 * with the fewest nodes, then the lowest depth, then the first found.
 */
RewriteDb build_rewrite_db(unsigned max_nodes = 7, DbBuildStats* stats = nullptr, unsigned threads = 0);

/// Text cache format with a version header; byte-identical for equal databases.
std::string serialize_rewrite_db(const RewriteDb& db);
RewriteDb parse_rewrite_db(std::string_view text);

/// Process-wide database, built on first use.
const RewriteDb& default_rewrite_db();

inline constexpr std::string_view kRewriteDbHeader = "synthkit-rewrite-db v1";

} // namespace synthkit::opt
