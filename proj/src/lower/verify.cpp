// Copyright 2026 The synthkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "synthkit/lower/verify.hpp"

#include "synthkit/aig/simulate.hpp"
#include "synthkit/ir/evaluate.hpp"

#include <bit>
#include <random>

namespace synthkit::lower {

namespace {

constexpr uint64_t kLaneMask[6] = {0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull, 0xF0F0F0F0F0F0F0F0ull,
                                   0xFF00FF00FF00FF00ull, 0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull};

} // namespace

std::size_t input_bit_count(const ir::WordLevelDesign& design) {
  std::size_t n = 0;
  for (const ir::Port& p : design.inputs)
    n += p.width;
  for (const ir::Register& r : design.registers)
    n += r.width;
  return n;
}

aig::EquivOptions oracle_options(std::size_t input_bits, unsigned exhaustive_limit, uint64_t vectors,
                                 uint64_t seed) {
  aig::EquivOptions o;
  o.mode = input_bits <= exhaustive_limit ? aig::EquivMode::Exhaustive : aig::EquivMode::Random;
  o.vectors = vectors;
  o.seed = seed;
  return o;
}

std::vector<uint64_t> OracleTable::stimulus(uint64_t block) const {
  std::vector<uint64_t> in(input_bits_);
  if (options_.mode == aig::EquivMode::Random) {
    std::copy_n(random_words_.begin() + static_cast<std::ptrdiff_t>(block * input_bits_), input_bits_, in.begin());
    return in;
  }
  for (std::size_t i = 0; i < input_bits_; ++i)
    in[i] = i < 6 ? kLaneMask[i] : ((block >> (i - 6)) & 1 ? ~0ull : 0ull);
  return in;
}

OracleTable::OracleTable(const ir::WordLevelDesign& design, const aig::EquivOptions& options)
    : options_(options), input_bits_(input_bit_count(design)) {
  for (const ir::Port& p : design.outputs)
    output_bits_ += p.width;
  for (const ir::Register& r : design.registers)
    output_bits_ += r.width;

  if (options_.mode == aig::EquivMode::Exhaustive) {
    if (input_bits_ > aig::kMaxExhaustiveBits)
      throw aig::ExhaustiveTooLarge(std::to_string(input_bits_) + " input bits exceed the exhaustive limit");
    blocks_ = input_bits_ <= 6 ? 1 : uint64_t{1} << (input_bits_ - 6);
    vectors_ = uint64_t{1} << input_bits_;
  } else {
    blocks_ = (options_.vectors + 63) / 64;
    vectors_ = options_.vectors;
    std::mt19937_64 rng(options_.seed);
    random_words_.resize(blocks_ * input_bits_);
    for (auto& w : random_words_)
      w = rng();
  }

  expected_.assign(blocks_ * output_bits_, 0);
  std::vector<ir::BitVector> inputs, state;
  for (uint64_t block = 0; block < blocks_; ++block) {
    auto in = stimulus(block);
    unsigned lanes = static_cast<unsigned>(std::min<uint64_t>(64, vectors_ - block * 64));
    for (unsigned lane = 0; lane < lanes; ++lane) {
      std::size_t bit = 0;
      auto word = [&](unsigned width) {
        ir::BitVector v(width);
        for (unsigned i = 0; i < width; ++i, ++bit)
          v.set_bit(i, (in[bit] >> lane) & 1);
        return v;
      };
      inputs.clear();
      state.clear();
      for (const ir::Port& p : design.inputs)
        inputs.push_back(word(p.width));
      for (const ir::Register& r : design.registers)
        state.push_back(word(r.width));
      auto values = ir::evaluate_nodes(design, inputs, state);
      uint64_t* out = &expected_[block * output_bits_];
      std::size_t o = 0;
      auto emit = [&](const ir::BitVector& v, unsigned width) {
        for (unsigned i = 0; i < width; ++i, ++o)
          if (i < v.width() && v.bit(i))
            out[o] |= uint64_t{1} << lane;
      };
      for (const ir::Port& p : design.outputs)
        emit(values[p.node], p.width);
      for (const ir::Register& r : design.registers)
        emit(values[r.next], r.width);
    }
  }
}

aig::Verdict OracleTable::check(const aig::Aig& aig) const {
  if (aig.num_pis() + aig.num_latches() != input_bits_ || aig.num_pos() + aig.num_latches() != output_bits_)
    throw aig::SignatureMismatch("AIG interface does not match the design");
  aig::Verdict verdict;
  verdict.vectors_checked = vectors_;
  for (uint64_t block = 0; block < blocks_; ++block) {
    auto in = stimulus(block);
    auto out = aig::simulate(aig, in);
    unsigned lanes = static_cast<unsigned>(std::min<uint64_t>(64, vectors_ - block * 64));
    uint64_t mask = lanes == 64 ? ~0ull : (uint64_t{1} << lanes) - 1;
    const uint64_t* want = &expected_[block * output_bits_];
    uint64_t bad = 0;
    for (std::size_t o = 0; o < output_bits_; ++o)
      bad |= (out[o] ^ want[o]) & mask;
    if (!bad)
      continue;
    int lane = std::countr_zero(bad);
    aig::Counterexample cex;
    for (uint64_t w : in)
      cex.inputs.push_back((w >> lane) & 1);
    for (std::size_t o = 0; o < output_bits_; ++o)
      if (((out[o] ^ want[o]) >> lane) & 1)
        cex.differing_outputs.push_back(o);
    verdict.equivalent = false;
    verdict.counterexample = std::move(cex);
    return verdict;
  }
  return verdict;
}

} // namespace synthkit::lower
