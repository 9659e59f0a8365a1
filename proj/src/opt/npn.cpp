// Copyright 2026 The synthkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "synthkit/opt/npn.hpp"

#include <algorithm>
#include <vector>

namespace synthkit::opt {

namespace {

unsigned image_minterm(unsigned m, const NpnTransform& t) {
  // g at minterm m reads f at minterm y.
  unsigned y = 0;
  for (unsigned i = 0; i < 4; ++i)
    if (((m >> i) & 1) ^ ((t.input_mask >> i) & 1))
      y |= 1u << t.perm[i];
  return y;
}

struct InputTables {
  std::array<NpnTransform, 384> transforms;
  // Byte lookup: image = lo[t][tt & 0xff] | hi[t][tt >> 8].
  std::vector<std::array<uint16_t, 256>> lo, hi;

  InputTables() : lo(384), hi(384) {
    std::array<uint8_t, 4> perm{0, 1, 2, 3};
    std::size_t index = 0;
    do {
      for (unsigned mask = 0; mask < 16; ++mask) {
        NpnTransform t{perm, static_cast<uint8_t>(mask), false};
        transforms[index] = t;
        // Source minterm y contributes to every destination minterm m with image(m) == y.
        std::array<uint16_t, 16> dest{};
        for (unsigned m = 0; m < 16; ++m)
          dest[image_minterm(m, t)] |= static_cast<uint16_t>(1u << m);
        for (unsigned byte = 0; byte < 256; ++byte) {
          uint16_t l = 0, h = 0;
          for (unsigned b = 0; b < 8; ++b)
            if ((byte >> b) & 1) {
              l |= dest[b];
              h |= dest[b + 8];
            }
          lo[index][byte] = l;
          hi[index][byte] = h;
        }
        ++index;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }

  TruthTable apply(TruthTable tt, std::size_t t) const {
    return static_cast<TruthTable>(lo[t][tt & 0xff] | hi[t][tt >> 8]);
  }
};

const InputTables& input_tables() {
  static const InputTables tables;
  return tables;
}

struct CanonTable {
  std::vector<TruthTable> canonical;
  std::vector<uint16_t> transform; // index * 2 + output bit
  std::size_t classes = 0;

  CanonTable() : canonical(65536), transform(65536) {
    const InputTables& in = input_tables();
    std::vector<bool> seen(65536, false);
    for (uint32_t f = 0; f < 65536; ++f) {
      TruthTable best = 0xFFFF;
      uint16_t best_t = 0;
      bool first = true;
      for (std::size_t t = 0; t < 384; ++t) {
        TruthTable g = in.apply(static_cast<TruthTable>(f), t);
        for (unsigned o = 0; o < 2; ++o) {
          TruthTable h = o ? static_cast<TruthTable>(~g) : g;
          if (first || h < best) {
            best = h;
            best_t = static_cast<uint16_t>(t * 2 + o);
            first = false;
          }
        }
      }
      canonical[f] = best;
      transform[f] = best_t;
      if (!seen[best]) {
        seen[best] = true;
        ++classes;
      }
    }
  }
};

const CanonTable& canon_table() {
  static const CanonTable table;
  return table;
}

} // namespace

TruthTable apply_transform(TruthTable tt, const NpnTransform& t) {
  TruthTable out = 0;
  for (unsigned m = 0; m < 16; ++m)
    if ((tt >> image_minterm(m, t)) & 1)
      out |= static_cast<TruthTable>(1u << m);
  return t.output ? static_cast<TruthTable>(~out) : out;
}

NpnResult npn_canonical(TruthTable tt) {
  const CanonTable& c = canon_table();
  uint16_t code = c.transform[tt];
  NpnTransform t = input_tables().transforms[code / 2];
  t.output = code & 1;
  return {c.canonical[tt], t};
}

std::size_t npn_class_count() { return canon_table().classes; }

const std::array<NpnTransform, 384>& input_transforms() { return input_tables().transforms; }

TruthTable apply_input_transform(TruthTable tt, std::size_t index) { return input_tables().apply(tt, index); }

} // namespace synthkit::opt
