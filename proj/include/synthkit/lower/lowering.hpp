// Copyright 2026 The synthkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "synthkit/aig/aig.hpp"
#include "synthkit/ir/word_ir.hpp"
#include "synthkit/lower/arith.hpp"

#include <string>

namespace synthkit::lower {

enum class PartSelectStrategy { Shifter, MuxTree };
enum class MultiplierArch { BoothRadix4Csa };

struct LoweringOptions {
  PartSelectStrategy part_select_strategy = PartSelectStrategy::Shifter;
  bool mac_fusion = false;
  AdderArch final_adder = AdderArch::RippleCarry;
  MultiplierArch multiplier = MultiplierArch::BoothRadix4Csa;
};

/*! \brief Bit-blasts a word-level design.
 *
 * Creates one PI per input bit and one latch per register bit, in
 * declaration order and LSB first, named `port[i]` (plain `port` for 1-bit
 * ports). Output bits become POs; register next-state values drive the
 * latch inputs. With `mac_fusion`, multiply-add pairs found by
 * ir::detect_mac_sites are lowered as one fused unit.
 */
aig::Aig lower_design(const ir::WordLevelDesign& design, const LoweringOptions& options = {});

/// Name of bit `bit` of a `width`-bit port, as used for AIG symbols.
std::string bit_name(const std::string& port, unsigned width, unsigned bit);

} // namespace synthkit::lower
