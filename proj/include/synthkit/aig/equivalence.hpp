// Copyright 2026 The synthkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "synthkit/aig/aig.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace synthkit::aig {

class SignatureMismatch : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class ExhaustiveTooLarge : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

inline constexpr unsigned kMaxExhaustiveBits = 24;

enum class EquivMode { Exhaustive, Random };

struct EquivOptions {
  EquivMode mode = EquivMode::Exhaustive;
  uint64_t vectors = 100000; ///< Random mode only.
  uint64_t seed = 1;
  unsigned threads = 0; ///< 0 picks hardware concurrency.
};

struct Counterexample {
  std::vector<bool> inputs; ///< PIs then latch states.
  std::vector<std::size_t> differing_outputs; ///< Indices into POs, then latch next-states.
};

struct Verdict {
  bool equivalent = true;
  uint64_t vectors_checked = 0;
  std::optional<Counterexample> counterexample;
};

/// Combinational equivalence by miter simulation. Latches are matched by
/// position and treated as pseudo inputs and outputs. Names must agree
/// wherever both sides carry one.
Verdict check_equivalence(const Aig& a, const Aig& b, const EquivOptions& options = {});

/// Miter of a and b over shared inputs, one PO per combinational output
/// pair (the XOR) plus a final PO that ORs them all.
Aig build_miter(const Aig& a, const Aig& b);

} // namespace synthkit::aig
