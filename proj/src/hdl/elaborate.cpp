// Copyright 2026 The synthkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "synthkit/hdl/frontend.hpp"
#include "synthkit/ir/evaluate.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>

namespace synthkit::hdl {

namespace {

using ir::NodeId;
using ir::OpKind;
using ir::WordOp;

enum class SymbolKind { Input, Output, Wire, Reg };

struct Symbol {
  SymbolKind kind = SymbolKind::Wire;
  unsigned width = 1;
  SourceSpan span;
  std::vector<int> bit_driver; // continuous assign index per bit, -1 if undriven
  int seq_driver = -1;
  enum class State { Unvisited, InProgress, Done } state = State::Unvisited;
  NodeId node = 0;
};

class Elaborator {
public:
  explicit Elaborator(const Ast& ast) : ast_(ast) {}

  ir::WordLevelDesign run() {
    design_.name = ast_.module_name;
    declare();
    collect_drivers();
    find_clock();
    create_leaves();

    for (const PortDecl& p : ast_.ports) {
      if (p.direction != PortDirection::Output)
        continue;
      NodeId node = resolve(p.name, p.span);
      design_.outputs.push_back(ir::Port{p.name, p.width, node});
    }
    for (auto& reg : design_.registers) {
      const SequentialAssign& s = ast_.sequential[symbols_.at(reg.name).seq_driver];
      reg.next = fit(build(s.value, reg.width), reg.width);
    }
    // Unused wires are still checked for drivers, widths and cycles.
    for (const auto& name : declaration_order_)
      if (symbols_.at(name).kind == SymbolKind::Wire || symbols_.at(name).kind == SymbolKind::Output)
        resolve(name, symbols_.at(name).span);

    for (const auto& name : declaration_order_) {
      const Symbol& sym = symbols_.at(name);
      if (name != design_.clock)
        design_.nets[name] = ir::NetInfo{sym.width, sym.node};
    }
    return ir::remove_dead_nodes(design_);
  }

private:
  void declare_symbol(const std::string& name, SymbolKind kind, unsigned width, const SourceSpan& span) {
    if (auto it = symbols_.find(name); it != symbols_.end())
      throw Redeclaration(span, "'" + name + "' already declared at " + it->second.span.to_string());
    Symbol s;
    s.kind = kind;
    s.width = width;
    s.span = span;
    s.bit_driver.assign(width, -1);
    symbols_.emplace(name, std::move(s));
    declaration_order_.push_back(name);
  }

  void declare() {
    for (const PortDecl& p : ast_.ports) {
      SymbolKind kind = p.direction == PortDirection::Input ? SymbolKind::Input
                        : p.is_reg                         ? SymbolKind::Reg
                                                           : SymbolKind::Output;
      declare_symbol(p.name, kind, p.width, p.span);
      if (p.direction == PortDirection::Output)
        output_names_.insert(p.name);
    }
    for (const NetDecl& n : ast_.nets)
      declare_symbol(n.name, n.is_reg ? SymbolKind::Reg : SymbolKind::Wire, n.width, n.span);
  }

  Symbol& lookup(const std::string& name, const SourceSpan& span) {
    auto it = symbols_.find(name);
    if (it == symbols_.end())
      throw UndeclaredIdentifier(span, "'" + name + "' is not declared");
    return it->second;
  }

  void collect_drivers() {
    for (std::size_t i = 0; i < ast_.assigns.size(); ++i) {
      const ContinuousAssign& a = ast_.assigns[i];
      Symbol& sym = lookup(a.target.name, a.target.span);
      if (sym.kind == SymbolKind::Input)
        throw MultipleDrivers(a.span, "input '" + a.target.name + "' cannot be assigned");
      if (sym.kind == SymbolKind::Reg)
        throw UnsupportedConstruct(a.span, "continuous assignment to reg '" + a.target.name + "'");
      unsigned hi = a.target.hi.value_or(sym.width - 1);
      unsigned lo = a.target.lo.value_or(0);
      if (lo > hi || hi >= sym.width)
        throw WidthMismatch(a.target.span, "select [" + std::to_string(hi) + ":" + std::to_string(lo) +
                                               "] out of range for '" + a.target.name + "' of width " +
                                               std::to_string(sym.width));
      for (unsigned b = lo; b <= hi; ++b) {
        if (sym.bit_driver[b] >= 0)
          throw MultipleDrivers(a.span, "bit " + std::to_string(b) + " of '" + a.target.name +
                                            "' already driven at " +
                                            ast_.assigns[sym.bit_driver[b]].span.to_string());
        sym.bit_driver[b] = static_cast<int>(i);
      }
    }
    for (std::size_t i = 0; i < ast_.sequential.size(); ++i) {
      const SequentialAssign& s = ast_.sequential[i];
      Symbol& sym = lookup(s.target, s.span);
      if (sym.kind != SymbolKind::Reg)
        throw UnsupportedConstruct(s.span, "non-blocking assignment to non-reg '" + s.target + "'");
      if (sym.seq_driver >= 0)
        throw MultipleDrivers(s.span, "register '" + s.target + "' already assigned at " +
                                          ast_.sequential[sym.seq_driver].span.to_string());
      sym.seq_driver = static_cast<int>(i);
    }
  }

  void find_clock() {
    for (const SequentialAssign& s : ast_.sequential) {
      if (design_.clock.empty()) {
        Symbol& sym = lookup(s.clock, s.span);
        if (sym.kind != SymbolKind::Input || sym.width != 1)
          throw UnsupportedConstruct(s.span, "clock '" + s.clock + "' must be a 1-bit input");
        design_.clock = s.clock;
      } else if (s.clock != design_.clock) {
        throw UnsupportedConstruct(s.span, "multiple clocks ('" + design_.clock + "' and '" + s.clock + "')");
      }
    }
  }

  void create_leaves() {
    for (const PortDecl& p : ast_.ports) {
      if (p.direction != PortDirection::Input || p.name == design_.clock)
        continue;
      WordOp op;
      op.kind = OpKind::Input;
      op.width = p.width;
      op.name = p.name;
      Symbol& sym = symbols_.at(p.name);
      sym.node = design_.add(std::move(op));
      sym.state = Symbol::State::Done;
      design_.inputs.push_back(ir::Port{p.name, p.width, sym.node});
    }
    for (const auto& name : declaration_order_) {
      Symbol& sym = symbols_.at(name);
      if (sym.kind != SymbolKind::Reg)
        continue;
      if (sym.seq_driver < 0)
        throw UndrivenNet(sym.span, "register '" + name + "' is never assigned");
      WordOp op;
      op.kind = OpKind::Register;
      op.width = sym.width;
      op.name = name;
      sym.node = design_.add(std::move(op));
      sym.state = Symbol::State::Done;
      design_.registers.push_back(ir::Register{name, sym.width, sym.node, 0});
    }
  }

  NodeId resolve(const std::string& name, const SourceSpan& use) {
    Symbol& sym = lookup(name, use);
    if (name == design_.clock && !design_.clock.empty())
      throw UnsupportedConstruct(use, "clock '" + name + "' used as data");
    if (sym.state == Symbol::State::Done)
      return sym.node;
    if (sym.state == Symbol::State::InProgress)
      throw CombinationalCycle(use, "combinational cycle through '" + name + "'");
    sym.state = Symbol::State::InProgress;

    // Group driven bits into per-assign pieces, LSB first.
    std::vector<std::pair<unsigned, int>> pieces; // (lo, assign index)
    for (unsigned b = 0; b < sym.width; ++b) {
      if (sym.bit_driver[b] < 0)
        throw UndrivenNet(sym.span, "bit " + std::to_string(b) + " of '" + name + "' has no driver");
      if (pieces.empty() || pieces.back().second != sym.bit_driver[b])
        pieces.emplace_back(b, sym.bit_driver[b]);
    }
    std::vector<NodeId> parts;
    for (const auto& [lo, index] : pieces) {
      const ContinuousAssign& a = ast_.assigns[index];
      unsigned width = a.target.hi.value_or(sym.width - 1) - lo + 1;
      parts.push_back(fit(build(a.value, width), width));
    }
    NodeId node = parts.front();
    if (parts.size() > 1) {
      WordOp cat;
      cat.kind = OpKind::Concat;
      cat.width = sym.width;
      cat.operands.assign(parts.rbegin(), parts.rend());
      node = emit(std::move(cat));
    }
    sym.node = node;
    sym.state = Symbol::State::Done;
    return node;
  }

  // --- width rules ---

  unsigned self_width(const Expr& e) {
    switch (e.kind) {
    case ExprKind::Identifier:
      return lookup(e.name, e.span).width;
    case ExprKind::Number:
      return std::max(1u, e.value.significant_bits());
    case ExprKind::SizedConstant:
      return e.const_width;
    case ExprKind::Unary:
      if (e.unary_op == UnaryOp::BitNot || e.unary_op == UnaryOp::Negate)
        return self_width(e.operands[0]);
      return 1;
    case ExprKind::Binary:
      switch (e.binary_op) {
      case BinaryOp::Eq:
      case BinaryOp::Ne:
      case BinaryOp::Lt:
      case BinaryOp::Le:
      case BinaryOp::Gt:
      case BinaryOp::Ge:
        return 1;
      case BinaryOp::Shl:
      case BinaryOp::Shr:
        return self_width(e.operands[0]);
      default:
        return std::max(self_width(e.operands[0]), self_width(e.operands[1]));
      }
    case ExprKind::Ternary:
      return std::max(self_width(e.operands[1]), self_width(e.operands[2]));
    case ExprKind::Concat: {
      unsigned sum = 0;
      for (const Expr& op : e.operands) {
        if (op.kind == ExprKind::Number)
          throw UnsupportedConstruct(op.span, "unsized constant in concatenation");
        sum += self_width(op);
      }
      return sum;
    }
    case ExprKind::Replicate:
      if (e.operands[0].kind == ExprKind::Number)
        throw UnsupportedConstruct(e.operands[0].span, "unsized constant in replication");
      return e.count * self_width(e.operands[0]);
    case ExprKind::BitSelect:
      return 1;
    case ExprKind::PartSelect:
      return e.hi >= e.lo ? e.hi - e.lo + 1 : 1;
    case ExprKind::IndexedPartSelect:
      return e.slice_width;
    }
    return 1;
  }

  NodeId emit(WordOp op) {
    bool foldable = !op.operands.empty() &&
                    std::all_of(op.operands.begin(), op.operands.end(),
                                [&](NodeId id) { return design_.node(id).kind == OpKind::Const; });
    if (foldable) {
      std::vector<ir::BitVector> values;
      for (NodeId id : op.operands)
        values.push_back(design_.node(id).value);
      WordOp c;
      c.kind = OpKind::Const;
      c.width = op.width;
      c.value = ir::evaluate_op(op, values);
      return design_.add(std::move(c));
    }
    return design_.add(std::move(op));
  }

  NodeId constant(const ir::BitVector& value) {
    WordOp c;
    c.kind = OpKind::Const;
    c.width = value.width();
    c.value = value;
    return design_.add(std::move(c));
  }

  NodeId make(OpKind kind, unsigned width, std::vector<NodeId> operands, std::vector<int64_t> params = {}) {
    WordOp op;
    op.kind = kind;
    op.width = width;
    op.operands = std::move(operands);
    op.params = std::move(params);
    return emit(std::move(op));
  }

  // Zero-extends or truncates to exactly `width`.
  NodeId fit(NodeId node, unsigned width) {
    unsigned w = design_.node(node).width;
    if (w == width)
      return node;
    if (w > width)
      return make(OpKind::StaticSlice, width, {node}, {int64_t(width) - 1, 0});
    return make(OpKind::Concat, width, {constant(ir::BitVector(width - w)), node});
  }

  NodeId to_bool(NodeId node) {
    if (design_.node(node).width == 1)
      return node;
    return make(OpKind::ReduceOr, 1, {node});
  }

  std::optional<uint64_t> constant_value(NodeId node) {
    const WordOp& op = design_.node(node);
    if (op.kind != OpKind::Const || op.value.significant_bits() > 40)
      return std::nullopt;
    return op.value.low_word();
  }

  NodeId build(const Expr& e, unsigned ctx) {
    switch (e.kind) {
    case ExprKind::Identifier:
      return resolve(e.name, e.span);
    case ExprKind::Number:
      return constant(e.value.resized(self_width(e)));
    case ExprKind::SizedConstant:
      if (e.value.significant_bits() > e.const_width)
        throw WidthMismatch(e.span, "constant value does not fit in " + std::to_string(e.const_width) + " bits");
      return constant(e.value.resized(e.const_width));
    case ExprKind::Unary:
      return build_unary(e, ctx);
    case ExprKind::Binary:
      return build_binary(e, ctx);
    case ExprKind::Ternary: {
      NodeId cond = to_bool(build(e.operands[0], self_width(e.operands[0])));
      unsigned w = std::max(ctx, self_width(e));
      return make(OpKind::Mux, w, {cond, build(e.operands[1], w), build(e.operands[2], w)});
    }
    case ExprKind::Concat: {
      std::vector<NodeId> parts;
      for (const Expr& op : e.operands)
        parts.push_back(build(op, self_width(op)));
      return make(OpKind::Concat, self_width(e), std::move(parts));
    }
    case ExprKind::Replicate: {
      if (e.count == 0)
        throw WidthMismatch(e.span, "replication count must be positive");
      NodeId inner = build(e.operands[0], self_width(e.operands[0]));
      return make(OpKind::Replicate, self_width(e), {inner}, {int64_t(e.count)});
    }
    case ExprKind::BitSelect: {
      NodeId bus = resolve(e.name, e.span);
      unsigned bus_width = design_.node(bus).width;
      NodeId index = build(e.operands[0], self_width(e.operands[0]));
      if (auto i = constant_value(index)) {
        if (*i >= bus_width)
          throw WidthMismatch(e.span, "bit-select index " + std::to_string(*i) + " out of range for '" + e.name +
                                          "' of width " + std::to_string(bus_width));
        return make(OpKind::StaticSlice, 1, {bus}, {int64_t(*i), int64_t(*i)});
      }
      return make(OpKind::BitSelect, 1, {bus, index});
    }
    case ExprKind::PartSelect: {
      NodeId bus = resolve(e.name, e.span);
      unsigned bus_width = design_.node(bus).width;
      if (e.lo > e.hi || e.hi >= bus_width)
        throw WidthMismatch(e.span, "part-select [" + std::to_string(e.hi) + ":" + std::to_string(e.lo) +
                                        "] out of range for '" + e.name + "' of width " + std::to_string(bus_width));
      if (e.lo == 0 && e.hi + 1 == bus_width)
        return bus;
      return make(OpKind::StaticSlice, e.hi - e.lo + 1, {bus}, {int64_t(e.hi), int64_t(e.lo)});
    }
    case ExprKind::IndexedPartSelect: {
      NodeId bus = resolve(e.name, e.span);
      unsigned bus_width = design_.node(bus).width;
      if (e.slice_width < 1 || e.slice_width > bus_width)
        throw WidthMismatch(e.span, "slice width " + std::to_string(e.slice_width) + " out of range for '" +
                                        e.name + "' of width " + std::to_string(bus_width));
      NodeId index = build(e.operands[0], self_width(e.operands[0]));
      return make(e.descending ? OpKind::IndexedSliceDown : OpKind::IndexedSliceUp, e.slice_width, {bus, index},
                  {int64_t(e.slice_width)});
    }
    }
    throw ParseError(e.span, "unhandled expression");
  }

  NodeId build_unary(const Expr& e, unsigned ctx) {
    const Expr& operand = e.operands[0];
    switch (e.unary_op) {
    case UnaryOp::BitNot:
    case UnaryOp::Negate: {
      unsigned w = std::max(ctx, self_width(operand));
      return make(e.unary_op == UnaryOp::BitNot ? OpKind::Not : OpKind::Neg, w, {build(operand, w)});
    }
    case UnaryOp::LogicalNot:
      return make(OpKind::Not, 1, {to_bool(build(operand, self_width(operand)))});
    case UnaryOp::ReduceAnd:
      return make(OpKind::ReduceAnd, 1, {build(operand, self_width(operand))});
    case UnaryOp::ReduceOr:
      return make(OpKind::ReduceOr, 1, {build(operand, self_width(operand))});
    case UnaryOp::ReduceXor:
      return make(OpKind::ReduceXor, 1, {build(operand, self_width(operand))});
    }
    throw ParseError(e.span, "unhandled unary operator");
  }

  NodeId build_binary(const Expr& e, unsigned ctx) {
    const Expr& a = e.operands[0];
    const Expr& b = e.operands[1];
    auto comparison = [&](OpKind kind) {
      unsigned w = std::max(self_width(a), self_width(b));
      return make(kind, 1, {build(a, w), build(b, w)});
    };
    auto arithmetic = [&](OpKind kind) {
      unsigned w = std::max({ctx, self_width(a), self_width(b)});
      return make(kind, w, {build(a, w), build(b, w)});
    };
    auto shift = [&](OpKind kind) {
      unsigned w = std::max(ctx, self_width(a));
      return make(kind, w, {build(a, w), build(b, self_width(b))});
    };
    switch (e.binary_op) {
    case BinaryOp::Add: return arithmetic(OpKind::Add);
    case BinaryOp::Sub: return arithmetic(OpKind::Sub);
    case BinaryOp::Mul: return arithmetic(OpKind::Mul);
    case BinaryOp::And: return arithmetic(OpKind::And);
    case BinaryOp::Or: return arithmetic(OpKind::Or);
    case BinaryOp::Xor: return arithmetic(OpKind::Xor);
    case BinaryOp::Shl: return shift(OpKind::Shl);
    case BinaryOp::Shr: return shift(OpKind::Shr);
    case BinaryOp::Eq: return comparison(OpKind::Eq);
    case BinaryOp::Ne: return comparison(OpKind::Ne);
    case BinaryOp::Lt: return comparison(OpKind::Lt);
    case BinaryOp::Le: return comparison(OpKind::Le);
    case BinaryOp::Gt: return comparison(OpKind::Gt);
    case BinaryOp::Ge: return comparison(OpKind::Ge);
    }
    throw ParseError(e.span, "unhandled binary operator");
  }

  const Ast& ast_;
  ir::WordLevelDesign design_;
  std::map<std::string, Symbol> symbols_;
  std::vector<std::string> declaration_order_;
  std::set<std::string> output_names_;
};

} // namespace

ir::WordLevelDesign elaborate(const Ast& ast) { return Elaborator(ast).run(); }

} // namespace synthkit::hdl
