// Copyright 2026 The synthkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "synthkit/aig/aig.hpp"

#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace synthkit::qor {

enum class CellFunction { Inv, Nand2 };

struct Cell {
  std::string name;
  CellFunction function = CellFunction::Nand2;
  double area_ge = 1.0;
  unsigned delay = 1;
};

struct CellLibrary {
  std::vector<Cell> cells;

  /// NAND2 = 1.0 GE, INV = 0.67 GE, unit delay.
  static CellLibrary standard();
  const Cell* find(CellFunction f) const;
};

class LibraryIncomplete : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct CellInstance {
  std::string cell;
  CellFunction function = CellFunction::Nand2;
  std::vector<uint32_t> inputs;
  uint32_t output = 0;
};

/*! \brief Gate-level netlist over nets numbered from 0.
 *
 * Nets 0 and 1 are the tie-low and tie-high constants, which cost no area.
 * Instances are listed in topological order.
 */
struct MappedNetlist {
  static constexpr uint32_t kTieLow = 0;
  static constexpr uint32_t kTieHigh = 1;

  uint32_t num_nets = 2;
  std::vector<CellInstance> instances;
  std::vector<uint32_t> pi_nets;
  std::vector<std::string> pi_names;
  std::vector<uint32_t> latch_nets;      ///< latch outputs
  std::vector<uint32_t> latch_next_nets; ///< latch inputs
  std::vector<std::string> latch_names;
  std::vector<uint32_t> po_nets;
  std::vector<std::string> po_names;
};

/// Each AND becomes a NAND2; an INV is shared by all non-complemented uses
/// of it, and each complemented PI or latch output gets one INV.
MappedNetlist map_to_cells(const aig::Aig& aig, const CellLibrary& lib = CellLibrary::standard());

struct NetlistMetrics {
  double area_ge = 0.0;
  unsigned logic_levels = 0;
  std::map<std::string, std::size_t> cell_counts;
};

/// Area sums instance areas; logic levels count every cell on the longest
/// input-to-output path.
NetlistMetrics measure(const MappedNetlist& netlist, const CellLibrary& lib = CellLibrary::standard());

/// 64-way parallel gate simulation; same conventions as aig::simulate.
std::vector<uint64_t> simulate_netlist(const MappedNetlist& netlist, std::span<const uint64_t> inputs);

} // namespace synthkit::qor
