// Copyright 2026 The synthkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "synthkit/ir/bitvector.hpp"

#include <algorithm>
#include <bit>
#include <optional>
#include <stdexcept>

namespace synthkit::ir {

namespace {

std::size_t words_for(unsigned width) { return (width + 63) / 64; }

} // namespace

BitVector::BitVector(unsigned width, uint64_t value) : width_(width), words_(words_for(width), 0) {
  if (width < 64 && (value >> width) != 0)
    throw std::invalid_argument("value does not fit in " + std::to_string(width) + " bits");
  if (!words_.empty())
    words_[0] = value;
}

BitVector BitVector::ones(unsigned width) {
  BitVector v(width);
  std::fill(v.words_.begin(), v.words_.end(), ~uint64_t{0});
  v.mask_top();
  return v;
}

BitVector BitVector::from_words(unsigned width, std::vector<uint64_t> words) {
  BitVector v;
  v.width_ = width;
  words.resize(words_for(width), 0);
  v.words_ = std::move(words);
  v.mask_top();
  return v;
}

BitVector BitVector::from_digits(std::string_view digits, unsigned base) {
  // Little-endian 32-bit limbs keep the multiply-accumulate inside 64 bits.
  std::vector<uint32_t> limbs{0};
  for (char ch : digits) {
    if (ch == '_')
      continue;
    unsigned d;
    if (ch >= '0' && ch <= '9')
      d = ch - '0';
    else if (ch >= 'a' && ch <= 'f')
      d = ch - 'a' + 10;
    else if (ch >= 'A' && ch <= 'F')
      d = ch - 'A' + 10;
    else
      throw std::invalid_argument(std::string("bad digit '") + ch + "'");
    if (d >= base)
      throw std::invalid_argument(std::string("digit '") + ch + "' out of range for base");
    uint64_t carry = d;
    for (auto& limb : limbs) {
      uint64_t t = uint64_t{limb} * base + carry;
      limb = static_cast<uint32_t>(t);
      carry = t >> 32;
    }
    if (carry)
      limbs.push_back(static_cast<uint32_t>(carry));
  }
  unsigned bits = 0;
  for (std::size_t i = limbs.size(); i-- > 0;) {
    if (limbs[i]) {
      bits = static_cast<unsigned>(i * 32 + std::bit_width(limbs[i]));
      break;
    }
  }
  BitVector v(std::max(bits, 1u));
  for (std::size_t i = 0; i < limbs.size() && i / 2 < v.words_.size(); ++i)
    v.words_[i / 2] |= uint64_t{limbs[i]} << (32 * (i % 2));
  return v;
}

bool BitVector::bit(unsigned i) const {
  if (i >= width_)
    return false;
  return (words_[i / 64] >> (i % 64)) & 1;
}

void BitVector::set_bit(unsigned i, bool value) {
  if (i >= width_)
    throw std::out_of_range("bit index past width");
  uint64_t m = uint64_t{1} << (i % 64);
  if (value)
    words_[i / 64] |= m;
  else
    words_[i / 64] &= ~m;
}

bool BitVector::is_zero() const {
  return std::all_of(words_.begin(), words_.end(), [](uint64_t w) { return w == 0; });
}

unsigned BitVector::significant_bits() const {
  for (std::size_t i = words_.size(); i-- > 0;)
    if (words_[i])
      return static_cast<unsigned>(i * 64 + std::bit_width(words_[i]));
  return 0;
}

BitVector BitVector::resized(unsigned width) const {
  BitVector r(width);
  std::size_t n = std::min(r.words_.size(), words_.size());
  std::copy_n(words_.begin(), n, r.words_.begin());
  r.mask_top();
  return r;
}

BitVector BitVector::slice(unsigned hi, unsigned lo) const {
  BitVector r(hi - lo + 1);
  for (unsigned i = lo; i <= hi; ++i)
    if (bit(i))
      r.set_bit(i - lo, true);
  return r;
}

std::string BitVector::to_hex() const {
  static constexpr char digits[] = "0123456789abcdef";
  std::string s;
  unsigned nibbles = std::max(1u, (width_ + 3) / 4);
  for (unsigned n = nibbles; n-- > 0;) {
    unsigned v = 0;
    for (unsigned b = 0; b < 4; ++b)
      v |= unsigned(bit(n * 4 + b)) << b;
    s.push_back(digits[v]);
  }
  return s;
}

std::string BitVector::to_verilog() const { return std::to_string(width_) + "'h" + to_hex(); }

void BitVector::mask_top() {
  if (width_ % 64 && !words_.empty())
    words_.back() &= (uint64_t{1} << (width_ % 64)) - 1;
}

BitVector bv_add(const BitVector& a, const BitVector& b, unsigned width) {
  BitVector x = a.resized(width), y = b.resized(width);
  std::vector<uint64_t> w(x.words().size());
  unsigned __int128 carry = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    unsigned __int128 t = (unsigned __int128)x.words()[i] + y.words()[i] + carry;
    w[i] = static_cast<uint64_t>(t);
    carry = t >> 64;
  }
  return BitVector::from_words(width, std::move(w));
}

BitVector bv_not(const BitVector& a, unsigned width) {
  std::vector<uint64_t> w = a.resized(width).words();
  for (auto& x : w)
    x = ~x;
  return BitVector::from_words(width, std::move(w));
}

BitVector bv_neg(const BitVector& a, unsigned width) {
  return bv_add(bv_not(a, width), BitVector(width, width ? 1 : 0), width);
}

BitVector bv_sub(const BitVector& a, const BitVector& b, unsigned width) {
  return bv_add(a, bv_neg(b, width), width);
}

BitVector bv_mul(const BitVector& a, const BitVector& b, unsigned width) {
  BitVector x = a.resized(width), y = b.resized(width);
  std::size_t n = x.words().size();
  std::vector<uint64_t> acc(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    uint64_t carry = 0;
    for (std::size_t j = 0; i + j < n; ++j) {
      unsigned __int128 t = (unsigned __int128)x.words()[i] * y.words()[j] + acc[i + j] + carry;
      acc[i + j] = static_cast<uint64_t>(t);
      carry = static_cast<uint64_t>(t >> 64);
    }
  }
  return BitVector::from_words(width, std::move(acc));
}

namespace {

template <typename Op>
BitVector bitwise(const BitVector& a, const BitVector& b, unsigned width, Op op) {
  std::vector<uint64_t> x = a.resized(width).words();
  const std::vector<uint64_t> y = b.resized(width).words();
  for (std::size_t i = 0; i < x.size(); ++i)
    x[i] = op(x[i], y[i]);
  return BitVector::from_words(width, std::move(x));
}

// Shift amounts of 2^32 or more always exceed any supported width.
std::optional<unsigned> small_amount(const BitVector& amount) {
  if (amount.significant_bits() > 32)
    return std::nullopt;
  return static_cast<unsigned>(amount.low_word());
}

} // namespace

BitVector bv_and(const BitVector& a, const BitVector& b, unsigned width) {
  return bitwise(a, b, width, [](uint64_t x, uint64_t y) { return x & y; });
}
BitVector bv_or(const BitVector& a, const BitVector& b, unsigned width) {
  return bitwise(a, b, width, [](uint64_t x, uint64_t y) { return x | y; });
}
BitVector bv_xor(const BitVector& a, const BitVector& b, unsigned width) {
  return bitwise(a, b, width, [](uint64_t x, uint64_t y) { return x ^ y; });
}

BitVector bv_shl(const BitVector& a, const BitVector& amount, unsigned width) {
  BitVector r(width);
  auto s = small_amount(amount);
  if (!s || *s >= width)
    return r;
  for (unsigned i = *s; i < width; ++i)
    r.set_bit(i, a.bit(i - *s));
  return r;
}

BitVector bv_shr(const BitVector& a, const BitVector& amount, unsigned width) {
  BitVector r(width);
  auto s = small_amount(amount);
  if (!s || *s >= width)
    return r;
  BitVector x = a.resized(width);
  for (unsigned i = 0; i + *s < width; ++i)
    r.set_bit(i, x.bit(i + *s));
  return r;
}

std::strong_ordering bv_compare(const BitVector& a, const BitVector& b) {
  std::size_t n = std::max(a.words().size(), b.words().size());
  for (std::size_t i = n; i-- > 0;) {
    uint64_t x = i < a.words().size() ? a.words()[i] : 0;
    uint64_t y = i < b.words().size() ? b.words()[i] : 0;
    if (x != y)
      return x <=> y;
  }
  return std::strong_ordering::equal;
}

BitVector bv_concat(const BitVector& msb, const BitVector& lsb) {
  BitVector r(msb.width() + lsb.width());
  for (unsigned i = 0; i < lsb.width(); ++i)
    r.set_bit(i, lsb.bit(i));
  for (unsigned i = 0; i < msb.width(); ++i)
    r.set_bit(lsb.width() + i, msb.bit(i));
  return r;
}

} // namespace synthkit::ir
