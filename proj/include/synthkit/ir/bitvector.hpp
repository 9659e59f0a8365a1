// Copyright 2026 The synthkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace synthkit::ir {

/// Unsigned two-state bit vector of arbitrary positive width.
///
/// All arithmetic is modular in the width of the result. Bits above the
/// width are always kept zero, so word-wise comparison is value comparison.
class BitVector {
public:
  BitVector() = default;

  /// Throws std::invalid_argument if `value` does not fit in `width` bits.
  BitVector(unsigned width, uint64_t value);
  explicit BitVector(unsigned width) : BitVector(width, 0) {}

  static BitVector ones(unsigned width);
  /// Bits above `width` are discarded.
  static BitVector from_words(unsigned width, std::vector<uint64_t> words);

  /// Parses digits in base 2, 10 or 16 (underscores ignored) into a vector
  /// just wide enough to hold the value (at least 1 bit).
  static BitVector from_digits(std::string_view digits, unsigned base);

  unsigned width() const { return width_; }
  bool bit(unsigned i) const;
  void set_bit(unsigned i, bool value);

  uint64_t low_word() const { return words_.empty() ? 0 : words_[0]; }
  const std::vector<uint64_t>& words() const { return words_; }

  bool is_zero() const;
  /// Index of the highest set bit plus one; 0 for zero.
  unsigned significant_bits() const;

  /// Zero-extends or truncates.
  BitVector resized(unsigned width) const;
  BitVector slice(unsigned hi, unsigned lo) const;

  std::string to_hex() const;
  /// Verilog-style literal, e.g. "8'hb2".
  std::string to_verilog() const;

  friend bool operator==(const BitVector&, const BitVector&) = default;

private:
  void mask_top();

  unsigned width_ = 0;
  std::vector<uint64_t> words_;
};

/// Operands are zero-extended or truncated to `width` first.
BitVector bv_add(const BitVector& a, const BitVector& b, unsigned width);
BitVector bv_sub(const BitVector& a, const BitVector& b, unsigned width);
BitVector bv_mul(const BitVector& a, const BitVector& b, unsigned width);
BitVector bv_neg(const BitVector& a, unsigned width);
BitVector bv_not(const BitVector& a, unsigned width);
BitVector bv_and(const BitVector& a, const BitVector& b, unsigned width);
BitVector bv_or(const BitVector& a, const BitVector& b, unsigned width);
BitVector bv_xor(const BitVector& a, const BitVector& b, unsigned width);
BitVector bv_shl(const BitVector& a, const BitVector& amount, unsigned width);
BitVector bv_shr(const BitVector& a, const BitVector& amount, unsigned width);

/// Unsigned three-way comparison of the numeric values.
std::strong_ordering bv_compare(const BitVector& a, const BitVector& b);

BitVector bv_concat(const BitVector& msb, const BitVector& lsb);

} // namespace synthkit::ir
