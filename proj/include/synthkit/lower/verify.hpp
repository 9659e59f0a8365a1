// Copyright 2026 The synthkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "synthkit/aig/aig.hpp"
#include "synthkit/aig/equivalence.hpp"
#include "synthkit/ir/word_ir.hpp"

#include <cstdint>
#include <vector>

namespace synthkit::lower {

/*! \brief Expected output patterns of a design, computed once with the
 * word-level evaluator and reusable against any number of AIGs.
 *
 * Stimuli cover all input and register bits, in the bit order used by
 * lower_design: exhaustive sweeps enumerate every assignment, random mode
 * draws seeded vectors exactly like aig::check_equivalence.
 */
class OracleTable {
public:
  OracleTable(const ir::WordLevelDesign& design, const aig::EquivOptions& options);

  /// Compares the AIG's combinational outputs against the stored patterns.
  aig::Verdict check(const aig::Aig& aig) const;

  std::size_t input_bits() const { return input_bits_; }
  uint64_t vectors() const { return vectors_; }

private:
  std::vector<uint64_t> stimulus(uint64_t block) const;

  aig::EquivOptions options_;
  std::size_t input_bits_ = 0;
  std::size_t output_bits_ = 0;
  uint64_t blocks_ = 0;
  uint64_t vectors_ = 0;
  std::vector<uint64_t> random_words_;
  std::vector<uint64_t> expected_; ///< blocks_ x output_bits_
};

/// Default oracle mode: exhaustive up to `exhaustive_limit` input bits,
/// otherwise `vectors` seeded random vectors.
aig::EquivOptions oracle_options(std::size_t input_bits, unsigned exhaustive_limit = 20,
                                 uint64_t vectors = 100000, uint64_t seed = 1);

std::size_t input_bit_count(const ir::WordLevelDesign& design);

} // namespace synthkit::lower
