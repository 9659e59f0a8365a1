// Copyright 2026 The synthkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "synthkit/aig/aig.hpp"

#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

namespace synthkit::lower {

/// Bit vector of AIG literals, LSB first.
using Bits = std::vector<aig::Literal>;

/// Output bits of a lowered word operation plus the size and depth of the
/// logic built between its inputs and outputs.
struct BitNetlistFragment {
  Bits outputs;
  std::size_t internal_nodes = 0;
  unsigned depth = 0;
};

/// Redundant (sum, carry) pair left by a carry-save reduction.
struct CarrySavePair {
  Bits sum;
  Bits carry;
  std::size_t internal_nodes = 0;
  unsigned depth = 0;
};

enum class AdderArch { RippleCarry, PrefixSklansky };

/// Counts the AND nodes in the cone of `outputs` above the nodes of
/// `inputs`, and the longest path through that cone.
BitNetlistFragment measure_fragment(const aig::Aig& aig, std::initializer_list<std::span<const aig::Literal>> inputs,
                                    Bits outputs);

/// Radix-4 Booth partial products of the unsigned product a * b mod
/// 2^width. Both operands are zero-extended or truncated to `width`. Each
/// row is `width` bits; the final row collects the two's-complement
/// correction bits of the negative digits.
std::vector<Bits> booth_partial_products(aig::Aig& aig, const Bits& a, const Bits& b, unsigned width);

/// Called after every compressor stage with the current column contents.
using CompressObserver = std::function<void(unsigned stage, const std::vector<Bits>& columns)>;

/// Greedy per-column 3:2 reduction of `rows` down to two rows, mod 2^width.
/// Each stage places full adders on the earliest-arriving bits of every
/// column holding three or more bits.
CarrySavePair compress_rows(aig::Aig& aig, const std::vector<Bits>& rows, unsigned width,
                            const CompressObserver& observer = {});

CarrySavePair build_booth_csa_multiplier(aig::Aig& aig, const Bits& a, const Bits& b, unsigned width);

/// Multiply-add with the addend entering the compressor tree as an extra
/// initial row next to the partial products.
CarrySavePair fuse_mac(aig::Aig& aig, std::vector<Bits> partial_products, const Bits& addend, unsigned width);

/// x + y + carry_in mod 2^W. `carry_out`, when given, receives the carry
/// out of the top bit.
BitNetlistFragment build_final_adder(aig::Aig& aig, const Bits& x, const Bits& y, AdderArch arch,
                                     aig::Literal carry_in = aig::kFalse, aig::Literal* carry_out = nullptr);

/// Zero-extends or truncates to `width`.
Bits fit(const Bits& bits, unsigned width);

/// Balanced reduction trees.
aig::Literal reduce_and(aig::Aig& aig, std::span<const aig::Literal> bits);
aig::Literal reduce_or(aig::Aig& aig, std::span<const aig::Literal> bits);
aig::Literal reduce_xor(aig::Aig& aig, std::span<const aig::Literal> bits);

} // namespace synthkit::lower
