// Copyright 2026 The synthkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "synthkit/ir/bitvector.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace synthkit::hdl {

struct SourceSpan {
  std::string file;
  unsigned line = 1;
  unsigned column = 1;

  std::string to_string() const;
};

/* Frontend diagnostics. Every message starts with the source span. */

class FrontendError : public std::runtime_error {
public:
  FrontendError(const std::string& kind, const SourceSpan& span, const std::string& message);
  const SourceSpan& span() const { return span_; }
  const std::string& kind() const { return kind_; }

private:
  std::string kind_;
  SourceSpan span_;
};

#define SYNTHKIT_FRONTEND_ERROR(Name)                                                                        \
  class Name : public FrontendError {                                                                        \
  public:                                                                                                    \
    Name(const SourceSpan& span, const std::string& message) : FrontendError(#Name, span, message) {}       \
  }

SYNTHKIT_FRONTEND_ERROR(LexError);
SYNTHKIT_FRONTEND_ERROR(ParseError);
SYNTHKIT_FRONTEND_ERROR(UnsupportedConstruct);
SYNTHKIT_FRONTEND_ERROR(UndeclaredIdentifier);
SYNTHKIT_FRONTEND_ERROR(Redeclaration);
SYNTHKIT_FRONTEND_ERROR(WidthMismatch);
SYNTHKIT_FRONTEND_ERROR(MultipleDrivers);
SYNTHKIT_FRONTEND_ERROR(UndrivenNet);
SYNTHKIT_FRONTEND_ERROR(CombinationalCycle);

#undef SYNTHKIT_FRONTEND_ERROR

enum class ExprKind {
  Identifier,
  Number,        ///< unsized decimal literal
  SizedConstant, ///< W'dN, W'bB, W'hH
  Unary,
  Binary,
  Ternary,
  Concat,
  Replicate,
  BitSelect,          ///< x[i]
  PartSelect,         ///< x[hi:lo]
  IndexedPartSelect,  ///< x[i +: W] or x[i -: W]
};

enum class UnaryOp { BitNot, LogicalNot, Negate, ReduceAnd, ReduceOr, ReduceXor };
enum class BinaryOp { Add, Sub, Mul, And, Or, Xor, Shl, Shr, Eq, Ne, Lt, Le, Gt, Ge };

std::string_view spelling(UnaryOp op);
std::string_view spelling(BinaryOp op);

/*! \brief Expression tree node.
 *
 * Selects store the selected identifier in `name`; the index expression of
 * BitSelect and IndexedPartSelect is `operands[0]`. Replicate keeps its
 * count in `count` and the replicated expression in `operands[0]`.
 */
struct Expr {
  ExprKind kind = ExprKind::Number;
  SourceSpan span;
  std::string name;
  ir::BitVector value;      ///< Number and SizedConstant; as wide as the digits need
  unsigned const_width = 0; ///< declared width of a SizedConstant
  char base = 'd';          ///< SizedConstant radix as written: 'b', 'd' or 'h'
  UnaryOp unary_op = UnaryOp::BitNot;
  BinaryOp binary_op = BinaryOp::Add;
  unsigned hi = 0, lo = 0;  ///< PartSelect
  unsigned slice_width = 0; ///< IndexedPartSelect
  bool descending = false;  ///< IndexedPartSelect: -:
  unsigned count = 0;       ///< Replicate
  std::vector<Expr> operands;
};

/// Equality ignores source spans.
bool same_structure(const Expr& a, const Expr& b);

enum class PortDirection { Input, Output };

struct PortDecl {
  std::string name;
  PortDirection direction = PortDirection::Input;
  unsigned width = 1;
  bool is_reg = false;
  SourceSpan span;
};

struct NetDecl {
  std::string name;
  unsigned width = 1;
  bool is_reg = false;
  SourceSpan span;
};

/// Assignment target: a whole net, `x[hi:lo]` or `x[i]` with constant bounds.
struct LValue {
  std::string name;
  std::optional<unsigned> hi, lo;
  SourceSpan span;
};

struct ContinuousAssign {
  LValue target;
  Expr value;
  SourceSpan span;
};

struct SequentialAssign {
  std::string clock;
  std::string target;
  Expr value;
  SourceSpan span;
};

/// Pre-elaboration structure of a single module.
struct Ast {
  std::string module_name;
  SourceSpan span;
  std::vector<PortDecl> ports;
  std::vector<NetDecl> nets;
  std::vector<ContinuousAssign> assigns;
  std::vector<SequentialAssign> sequential;
};

/// Equality ignores source spans.
bool same_structure(const Ast& a, const Ast& b);

} // namespace synthkit::hdl
