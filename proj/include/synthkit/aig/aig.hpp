// Copyright 2026 The synthkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace synthkit::aig {

/// AIGER-style literal: 2 * node index + complement bit.
class Literal {
public:
  constexpr Literal() = default;
  constexpr explicit Literal(uint32_t raw) : raw_(raw) {}

  static constexpr Literal from_node(uint32_t node, bool complemented = false) {
    return Literal(node * 2 + (complemented ? 1 : 0));
  }

  constexpr uint32_t raw() const { return raw_; }
  constexpr uint32_t node() const { return raw_ >> 1; }
  constexpr bool complemented() const { return raw_ & 1; }
  constexpr bool is_constant() const { return raw_ < 2; }
  constexpr Literal regular() const { return Literal(raw_ & ~1u); }

  constexpr Literal operator!() const { return Literal(raw_ ^ 1); }
  constexpr Literal operator^(bool complement) const { return Literal(raw_ ^ (complement ? 1 : 0)); }

  constexpr auto operator<=>(const Literal&) const = default;

private:
  uint32_t raw_ = 0;
};

inline constexpr Literal kFalse{0};
inline constexpr Literal kTrue{1};

enum class NodeKind : uint8_t { Constant, Input, LatchOutput, And };

struct Node {
  NodeKind kind = NodeKind::Constant;
  Literal fanin0; ///< And only; fanin0 < fanin1
  Literal fanin1;
  uint32_t position = 0; ///< Input / LatchOutput: index into pis() / latches()
};

struct Latch {
  uint32_t node = 0;
  Literal next;
  std::string name;
};

struct Output {
  Literal literal;
  std::string name;
};

/*! \brief And-inverter graph with structural hashing.
 *
 * Node 0 is constant false. Nodes are only appended, so both fanins of an
 * AND node always have smaller indices. `make_and` folds constants and
 * trivial cases and returns an existing node for a repeated fanin pair;
 * nodes that become unreachable stay in the table until `cleanup`.
 *
 * Construction is single-writer. Const member functions may be called
 * concurrently once construction has finished.
 */
class Aig {
public:
  Aig();

  Literal create_pi(std::string name = {});
  /// Returns the latch output literal; set the next-state with set_latch_next.
  Literal create_latch(std::string name = {});
  void set_latch_next(std::size_t latch, Literal next);
  std::size_t create_po(Literal literal, std::string name = {});
  void set_po(std::size_t index, Literal literal) { pos_.at(index).literal = literal; }

  Literal make_and(Literal a, Literal b);
  /// Structural lookup without creating anything; applies the same folding.
  std::optional<Literal> find_and(Literal a, Literal b) const;

  Literal make_or(Literal a, Literal b) { return !make_and(!a, !b); }
  Literal make_xor(Literal a, Literal b);
  Literal make_xnor(Literal a, Literal b) { return !make_xor(a, b); }
  Literal make_mux(Literal select, Literal then_lit, Literal else_lit);

  std::size_t size() const { return nodes_.size(); }
  const Node& node(uint32_t index) const { return nodes_[index]; }
  bool is_and(uint32_t index) const { return nodes_[index].kind == NodeKind::And; }
  bool is_ci(uint32_t index) const {
    return nodes_[index].kind == NodeKind::Input || nodes_[index].kind == NodeKind::LatchOutput;
  }

  std::span<const uint32_t> pis() const { return pis_; }
  const std::vector<Latch>& latches() const { return latches_; }
  const std::vector<Output>& pos() const { return pos_; }
  const std::string& pi_name(std::size_t i) const { return pi_names_[i]; }

  std::size_t num_pis() const { return pis_.size(); }
  std::size_t num_latches() const { return latches_.size(); }
  std::size_t num_pos() const { return pos_.size(); }
  /// Every AND node in the table, dead or alive.
  std::size_t num_ands() const { return num_ands_; }

  /// Combinational inputs: PIs then latch outputs, as node indices.
  std::vector<uint32_t> combinational_inputs() const;
  /// Combinational outputs: PO literals then latch next-state literals.
  std::vector<Literal> combinational_outputs() const;

private:
  static uint64_t key(Literal a, Literal b) { return (uint64_t{a.raw()} << 32) | b.raw(); }
  // Applies the folding rules; returns a literal when no node is needed.
  static std::optional<Literal> fold(Literal& a, Literal& b);

  std::vector<Node> nodes_;
  std::vector<uint32_t> pis_;
  std::vector<std::string> pi_names_;
  std::vector<Latch> latches_;
  std::vector<Output> pos_;
  std::unordered_map<uint64_t, uint32_t> strash_;
  std::size_t num_ands_ = 0;
};

/// Live AND nodes: those reachable from a PO or latch next-state.
std::size_t node_count(const Aig& aig);

/// Longest PI/latch-output to PO/latch-input path counted in AND nodes.
unsigned depth(const Aig& aig);

/// Per-node logic level (0 for constant and combinational inputs).
std::vector<unsigned> levels(const Aig& aig);

/// Marks nodes reachable from the combinational outputs.
std::vector<bool> live_nodes(const Aig& aig);

/// Compacted copy: PIs first, then latches, then live AND nodes in
/// topological order. Names, PO and latch order are preserved.
Aig cleanup(const Aig& aig);

/// Same interface and identical node tables after cleanup.
bool structurally_equal(const Aig& a, const Aig& b);

/// Appends a copy of `src`'s logic to `dst`, using `inputs` for its
/// combinational inputs. Returns the images of `src`'s combinational outputs.
std::vector<Literal> copy_into(Aig& dst, const Aig& src, std::span<const Literal> inputs);

} // namespace synthkit::aig
