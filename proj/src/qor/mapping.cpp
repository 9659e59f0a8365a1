// Copyright 2026 The synthkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "synthkit/qor/mapping.hpp"

#include <algorithm>
#include <cmath>

namespace synthkit::qor {

using aig::Literal;

CellLibrary CellLibrary::standard() {
  return CellLibrary{{Cell{"NAND2", CellFunction::Nand2, 1.0, 1}, Cell{"INV", CellFunction::Inv, 0.67, 1}}};
}

const Cell* CellLibrary::find(CellFunction f) const {
  auto it = std::find_if(cells.begin(), cells.end(), [&](const Cell& c) { return c.function == f; });
  return it == cells.end() ? nullptr : &*it;
}

MappedNetlist map_to_cells(const aig::Aig& aig, const CellLibrary& lib) {
  const Cell* nand = lib.find(CellFunction::Nand2);
  const Cell* inv = lib.find(CellFunction::Inv);
  if (!nand || !inv)
    throw LibraryIncomplete("cell library needs both INV and NAND2");

  MappedNetlist net;
  const std::size_t n = aig.size();
  constexpr uint32_t kNone = UINT32_MAX;
  // Per node: net carrying the node's value and net carrying its complement.
  std::vector<uint32_t> positive(n, kNone), negative(n, kNone);
  positive[0] = MappedNetlist::kTieLow;
  negative[0] = MappedNetlist::kTieHigh;
  for (std::size_t i = 0; i < aig.num_pis(); ++i) {
    positive[aig.pis()[i]] = net.num_nets++;
    net.pi_nets.push_back(positive[aig.pis()[i]]);
    net.pi_names.push_back(aig.pi_name(i));
  }
  for (const aig::Latch& l : aig.latches()) {
    positive[l.node] = net.num_nets++;
    net.latch_nets.push_back(positive[l.node]);
    net.latch_names.push_back(l.name);
  }
  auto add = [&](const Cell* cell, std::vector<uint32_t> inputs) {
    uint32_t out = net.num_nets++;
    net.instances.push_back(CellInstance{cell->name, cell->function, std::move(inputs), out});
    return out;
  };
  auto net_of = [&](Literal l) {
    uint32_t node = l.node();
    if (!l.complemented())
      return positive[node] != kNone ? positive[node] : (positive[node] = add(inv, {negative[node]}));
    return negative[node] != kNone ? negative[node] : (negative[node] = add(inv, {positive[node]}));
  };
  auto live = aig::live_nodes(aig);
  for (uint32_t i = 0; i < n; ++i) {
    if (!live[i] || !aig.is_and(i))
      continue;
    uint32_t a = net_of(aig.node(i).fanin0);
    uint32_t b = net_of(aig.node(i).fanin1);
    negative[i] = add(nand, {a, b});
  }
  for (const aig::Output& o : aig.pos()) {
    net.po_nets.push_back(net_of(o.literal));
    net.po_names.push_back(o.name);
  }
  for (const aig::Latch& l : aig.latches())
    net.latch_next_nets.push_back(net_of(l.next));
  return net;
}

NetlistMetrics measure(const MappedNetlist& netlist, const CellLibrary& lib) {
  NetlistMetrics m;
  std::vector<unsigned> arrival(netlist.num_nets, 0);
  for (const CellInstance& c : netlist.instances) {
    auto it = std::find_if(lib.cells.begin(), lib.cells.end(), [&](const Cell& x) { return x.name == c.cell; });
    if (it == lib.cells.end())
      throw LibraryIncomplete("cell '" + c.cell + "' is not in the library");
    ++m.cell_counts[c.cell];
    unsigned in = 0;
    for (uint32_t x : c.inputs)
      in = std::max(in, arrival[x]);
    arrival[c.output] = in + it->delay;
  }
  // Summed per cell type and rounded to 0.01 GE so reports stay stable.
  for (const auto& [name, count] : m.cell_counts) {
    auto it = std::find_if(lib.cells.begin(), lib.cells.end(), [&](const Cell& x) { return x.name == name; });
    m.area_ge += it->area_ge * static_cast<double>(count);
  }
  m.area_ge = std::round(m.area_ge * 100.0) / 100.0;
  for (uint32_t x : netlist.po_nets)
    m.logic_levels = std::max(m.logic_levels, arrival[x]);
  for (uint32_t x : netlist.latch_next_nets)
    m.logic_levels = std::max(m.logic_levels, arrival[x]);
  return m;
}

std::vector<uint64_t> simulate_netlist(const MappedNetlist& netlist, std::span<const uint64_t> inputs) {
  if (inputs.size() != netlist.pi_nets.size() + netlist.latch_nets.size())
    throw std::invalid_argument("simulate_netlist: expected one pattern per PI and latch");
  std::vector<uint64_t> value(netlist.num_nets, 0);
  value[MappedNetlist::kTieHigh] = ~0ull;
  std::size_t k = 0;
  for (uint32_t x : netlist.pi_nets)
    value[x] = inputs[k++];
  for (uint32_t x : netlist.latch_nets)
    value[x] = inputs[k++];
  for (const CellInstance& c : netlist.instances)
    value[c.output] = c.function == CellFunction::Inv ? ~value[c.inputs[0]] : ~(value[c.inputs[0]] & value[c.inputs[1]]);
  std::vector<uint64_t> out;
  for (uint32_t x : netlist.po_nets)
    out.push_back(value[x]);
  for (uint32_t x : netlist.latch_next_nets)
    out.push_back(value[x]);
  return out;
}

} // namespace synthkit::qor
