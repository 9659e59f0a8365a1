// Copyright 2026 The synthkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "synthkit/lower/arith.hpp"

namespace synthkit::lower {

/// (bus >> index)[slice_width-1:0] as a logarithmic barrel shifter with one
/// full-width 2:1 mux layer per index bit, least significant bit first.
/// Bits shifted in from beyond the bus read as 0.
BitNetlistFragment lower_indexed_select_shifter(aig::Aig& aig, const Bits& bus, const Bits& index,
                                                unsigned slice_width);

/*! \brief Same function as a tree of slice-wide 2:1 mux blocks.
 *
 * Candidates are the slices starting at every in-range index value, with
 * bits beyond the bus tied to 0. By default the leaf level selects on the
 * most significant tree index bit and the root on bit 0, so every level is
 * only as wide as the distinct candidate bits it still distinguishes. The
 * opposite key order is used instead when it needs fewer nodes, which
 * happens for narrow slices over buses whose size is not a power of two.
 * Index bits above the tree gate the result through a shared in-range term.
 */
BitNetlistFragment lower_indexed_select_muxtree(aig::Aig& aig, const Bits& bus, const Bits& index,
                                                unsigned slice_width);

} // namespace synthkit::lower
