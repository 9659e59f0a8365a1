// Copyright 2026 The synthkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "synthkit/hdl/frontend.hpp"

#include <algorithm>
#include <sstream>

namespace synthkit::hdl {

std::string SourceSpan::to_string() const {
  return (file.empty() ? std::string("<input>") : file) + ":" + std::to_string(line) + ":" + std::to_string(column);
}

FrontendError::FrontendError(const std::string& kind, const SourceSpan& span, const std::string& message)
    : std::runtime_error(span.to_string() + ": " + kind + ": " + message), kind_(kind), span_(span) {}

std::string_view spelling(UnaryOp op) {
  switch (op) {
  case UnaryOp::BitNot: return "~";
  case UnaryOp::LogicalNot: return "!";
  case UnaryOp::Negate: return "-";
  case UnaryOp::ReduceAnd: return "&";
  case UnaryOp::ReduceOr: return "|";
  case UnaryOp::ReduceXor: return "^";
  }
  return "?";
}

std::string_view spelling(BinaryOp op) {
  switch (op) {
  case BinaryOp::Add: return "+";
  case BinaryOp::Sub: return "-";
  case BinaryOp::Mul: return "*";
  case BinaryOp::And: return "&";
  case BinaryOp::Or: return "|";
  case BinaryOp::Xor: return "^";
  case BinaryOp::Shl: return "<<";
  case BinaryOp::Shr: return ">>";
  case BinaryOp::Eq: return "==";
  case BinaryOp::Ne: return "!=";
  case BinaryOp::Lt: return "<";
  case BinaryOp::Le: return "<=";
  case BinaryOp::Gt: return ">";
  case BinaryOp::Ge: return ">=";
  }
  return "?";
}

bool same_structure(const Expr& a, const Expr& b) {
  if (a.kind != b.kind || a.operands.size() != b.operands.size())
    return false;
  switch (a.kind) {
  case ExprKind::Identifier:
    if (a.name != b.name)
      return false;
    break;
  case ExprKind::Number:
    if (a.value.resized(std::max(a.value.width(), b.value.width())) !=
        b.value.resized(std::max(a.value.width(), b.value.width())))
      return false;
    break;
  case ExprKind::SizedConstant:
    if (a.const_width != b.const_width || a.base != b.base ||
        a.value.resized(std::max(a.value.width(), b.value.width())) !=
            b.value.resized(std::max(a.value.width(), b.value.width())))
      return false;
    break;
  case ExprKind::Unary:
    if (a.unary_op != b.unary_op)
      return false;
    break;
  case ExprKind::Binary:
    if (a.binary_op != b.binary_op)
      return false;
    break;
  case ExprKind::Replicate:
    if (a.count != b.count)
      return false;
    break;
  case ExprKind::BitSelect:
    if (a.name != b.name)
      return false;
    break;
  case ExprKind::PartSelect:
    if (a.name != b.name || a.hi != b.hi || a.lo != b.lo)
      return false;
    break;
  case ExprKind::IndexedPartSelect:
    if (a.name != b.name || a.slice_width != b.slice_width || a.descending != b.descending)
      return false;
    break;
  case ExprKind::Ternary:
  case ExprKind::Concat:
    break;
  }
  for (std::size_t i = 0; i < a.operands.size(); ++i)
    if (!same_structure(a.operands[i], b.operands[i]))
      return false;
  return true;
}

bool same_structure(const Ast& a, const Ast& b) {
  if (a.module_name != b.module_name || a.ports.size() != b.ports.size() || a.nets.size() != b.nets.size() ||
      a.assigns.size() != b.assigns.size() || a.sequential.size() != b.sequential.size())
    return false;
  for (std::size_t i = 0; i < a.ports.size(); ++i) {
    const auto &p = a.ports[i], &q = b.ports[i];
    if (p.name != q.name || p.direction != q.direction || p.width != q.width || p.is_reg != q.is_reg)
      return false;
  }
  for (std::size_t i = 0; i < a.nets.size(); ++i) {
    const auto &p = a.nets[i], &q = b.nets[i];
    if (p.name != q.name || p.width != q.width || p.is_reg != q.is_reg)
      return false;
  }
  for (std::size_t i = 0; i < a.assigns.size(); ++i) {
    const auto &p = a.assigns[i], &q = b.assigns[i];
    if (p.target.name != q.target.name || p.target.hi != q.target.hi || p.target.lo != q.target.lo ||
        !same_structure(p.value, q.value))
      return false;
  }
  for (std::size_t i = 0; i < a.sequential.size(); ++i) {
    const auto &p = a.sequential[i], &q = b.sequential[i];
    if (p.clock != q.clock || p.target != q.target || !same_structure(p.value, q.value))
      return false;
  }
  return true;
}

namespace {

std::string to_decimal(const ir::BitVector& v) {
  std::vector<uint32_t> limbs;
  for (uint64_t w : v.words()) {
    limbs.push_back(static_cast<uint32_t>(w));
    limbs.push_back(static_cast<uint32_t>(w >> 32));
  }
  std::string digits;
  auto nonzero = [&] { return std::any_of(limbs.begin(), limbs.end(), [](uint32_t l) { return l != 0; }); };
  while (nonzero()) {
    uint64_t rem = 0;
    for (std::size_t i = limbs.size(); i-- > 0;) {
      uint64_t cur = (rem << 32) | limbs[i];
      limbs[i] = static_cast<uint32_t>(cur / 10);
      rem = cur % 10;
    }
    digits.push_back(static_cast<char>('0' + rem));
  }
  if (digits.empty())
    digits = "0";
  std::reverse(digits.begin(), digits.end());
  return digits;
}

std::string to_binary(const ir::BitVector& v) {
  std::string s;
  for (unsigned i = std::max(1u, v.significant_bits()); i-- > 0;)
    s.push_back(v.bit(i) ? '1' : '0');
  return s;
}

std::string range(unsigned width) { return width > 1 ? "[" + std::to_string(width - 1) + ":0] " : ""; }

void print(std::ostream& os, const Expr& e) {
  switch (e.kind) {
  case ExprKind::Identifier:
    os << e.name;
    return;
  case ExprKind::Number:
    os << to_decimal(e.value);
    return;
  case ExprKind::SizedConstant:
    os << e.const_width << "'" << e.base;
    if (e.base == 'h') {
      std::string hex = e.value.to_hex();
      hex.erase(0, std::min(hex.find_first_not_of('0'), hex.size() - 1));
      os << hex;
    } else if (e.base == 'b') {
      os << to_binary(e.value);
    } else {
      os << to_decimal(e.value);
    }
    return;
  case ExprKind::Unary:
    os << "(" << spelling(e.unary_op);
    print(os, e.operands[0]);
    os << ")";
    return;
  case ExprKind::Binary:
    os << "(";
    print(os, e.operands[0]);
    os << " " << spelling(e.binary_op) << " ";
    print(os, e.operands[1]);
    os << ")";
    return;
  case ExprKind::Ternary:
    os << "(";
    print(os, e.operands[0]);
    os << " ? ";
    print(os, e.operands[1]);
    os << " : ";
    print(os, e.operands[2]);
    os << ")";
    return;
  case ExprKind::Concat:
    os << "{";
    for (std::size_t i = 0; i < e.operands.size(); ++i) {
      if (i)
        os << ", ";
      print(os, e.operands[i]);
    }
    os << "}";
    return;
  case ExprKind::Replicate:
    os << "{" << e.count << "{";
    print(os, e.operands[0]);
    os << "}}";
    return;
  case ExprKind::BitSelect:
    os << e.name << "[";
    print(os, e.operands[0]);
    os << "]";
    return;
  case ExprKind::PartSelect:
    os << e.name << "[" << e.hi << ":" << e.lo << "]";
    return;
  case ExprKind::IndexedPartSelect:
    os << e.name << "[";
    print(os, e.operands[0]);
    os << (e.descending ? " -: " : " +: ") << e.slice_width << "]";
    return;
  }
}

} // namespace

std::string print_expr(const Expr& expr) {
  std::ostringstream os;
  print(os, expr);
  return os.str();
}

std::string print_design(const Ast& ast) {
  std::ostringstream os;
  os << "module " << ast.module_name << "(";
  for (std::size_t i = 0; i < ast.ports.size(); ++i) {
    const PortDecl& p = ast.ports[i];
    os << (i ? ",\n  " : "\n  ") << (p.direction == PortDirection::Input ? "input " : "output ")
       << (p.is_reg ? "reg " : "") << range(p.width) << p.name;
  }
  os << (ast.ports.empty() ? ");\n" : "\n);\n");
  for (const NetDecl& n : ast.nets)
    os << "  " << (n.is_reg ? "reg " : "wire ") << range(n.width) << n.name << ";\n";
  for (const ContinuousAssign& a : ast.assigns) {
    os << "  assign " << a.target.name;
    if (a.target.hi) {
      if (*a.target.hi == *a.target.lo)
        os << "[" << *a.target.hi << "]";
      else
        os << "[" << *a.target.hi << ":" << *a.target.lo << "]";
    }
    os << " = " << print_expr(a.value) << ";\n";
  }
  for (const SequentialAssign& s : ast.sequential)
    os << "  always @(posedge " << s.clock << ") " << s.target << " <= " << print_expr(s.value) << ";\n";
  os << "endmodule\n";
  return os.str();
}

} // namespace synthkit::hdl
