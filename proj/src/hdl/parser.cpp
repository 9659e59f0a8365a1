// Copyright 2026 The synthkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "synthkit/hdl/frontend.hpp"

#include "lexer.hpp"

#include <algorithm>
#include <set>

namespace synthkit::hdl {

namespace {

// Legal Verilog keywords that start module items outside the subset.
const std::set<std::string, std::less<>> kUnsupportedItems = {
    "parameter", "localparam", "generate", "genvar", "integer", "initial", "function", "task",
    "case", "if", "for", "while", "real", "time", "always_ff", "always_comb", "always_latch",
    "logic", "inout", "specify", "tri", "supply0", "supply1", "defparam", "event", "typedef",
    "input", "output", "wand", "wor",
};

constexpr unsigned kMaxWidth = 1u << 20;

class Parser {
public:
  Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  Ast parse() {
    Ast ast;
    ast.span = peek().span;
    expect_keyword("module");
    ast.module_name = expect_identifier("module name").text;
    if (is_punct("#"))
      unsupported(peek(), "module parameter list");
    expect_punct("(");
    if (!is_punct(")"))
      parse_ports(ast);
    expect_punct(")");
    expect_punct(";");
    while (!is_keyword("endmodule")) {
      if (peek().kind == TokenKind::End)
        throw ParseError(peek().span, "missing endmodule");
      parse_item(ast);
    }
    next();
    if (peek().kind != TokenKind::End) {
      if (is_keyword("module"))
        unsupported(peek(), "multiple modules per file");
      throw ParseError(peek().span, "unexpected '" + peek().text + "' after endmodule");
    }
    return ast;
  }

private:
  const Token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }
  const Token& next() {
    const Token& t = toks_[pos_];
    if (pos_ + 1 < toks_.size())
      ++pos_;
    return t;
  }

  bool is_punct(std::string_view p, std::size_t ahead = 0) const {
    return peek(ahead).kind == TokenKind::Punct && peek(ahead).text == p;
  }
  bool is_keyword(std::string_view k, std::size_t ahead = 0) const {
    return peek(ahead).kind == TokenKind::Identifier && peek(ahead).text == k;
  }

  [[noreturn]] void unsupported(const Token& t, const std::string& what) { throw UnsupportedConstruct(t.span, what); }

  [[noreturn]] void expected(const std::string& what) {
    const Token& t = peek();
    std::string found = t.kind == TokenKind::End ? "end of input" : "'" + t.text + "'";
    throw ParseError(t.span, "expected " + what + ", found " + found);
  }

  void expect_punct(std::string_view p) {
    if (!is_punct(p))
      expected("'" + std::string(p) + "'");
    next();
  }
  void expect_keyword(std::string_view k) {
    if (!is_keyword(k))
      expected("'" + std::string(k) + "'");
    next();
  }

  static bool reserved(const std::string& s) {
    static const std::set<std::string, std::less<>> words = {
        "module", "endmodule", "input", "output", "wire", "reg", "assign", "always", "posedge",
        "negedge", "begin", "end", "signed", "unsigned"};
    return words.count(s) || kUnsupportedItems.count(s);
  }

  const Token& expect_identifier(const std::string& what) {
    if (peek().kind != TokenKind::Identifier || reserved(peek().text))
      expected(what);
    return next();
  }

  unsigned expect_number(const std::string& what) {
    if (peek().kind != TokenKind::Number)
      expected(what);
    const Token& t = next();
    if (t.value.significant_bits() > 31)
      throw ParseError(t.span, what + " too large");
    return static_cast<unsigned>(t.value.low_word());
  }

  // `[hi:0]`; returns the width.
  unsigned parse_range() {
    const Token& open = peek();
    expect_punct("[");
    unsigned hi = expect_number("range MSB");
    expect_punct(":");
    unsigned lo = expect_number("range LSB");
    expect_punct("]");
    if (hi < lo)
      unsupported(open, "ascending range");
    if (lo != 0)
      unsupported(open, "range not ending at bit 0");
    if (hi + 1 > kMaxWidth)
      throw ParseError(open.span, "range too wide");
    return hi + 1;
  }

  void parse_ports(Ast& ast) {
    if (peek().kind == TokenKind::Identifier && !is_keyword("input") && !is_keyword("output")) {
      if (is_keyword("inout"))
        unsupported(peek(), "inout port");
      unsupported(peek(), "non-ANSI port list");
    }
    PortDecl current;
    for (;;) {
      if (is_keyword("input") || is_keyword("output")) {
        current = PortDecl{};
        current.direction = next().text == "input" ? PortDirection::Input : PortDirection::Output;
        if (is_keyword("wire")) {
          next();
        } else if (is_keyword("reg")) {
          if (current.direction == PortDirection::Input)
            throw ParseError(peek().span, "input ports cannot be reg");
          next();
          current.is_reg = true;
        } else if (is_keyword("logic")) {
          unsupported(peek(), "logic type");
        }
        if (is_keyword("signed"))
          unsupported(peek(), "signed port");
        current.width = is_punct("[") ? parse_range() : 1;
      } else if (is_keyword("inout")) {
        unsupported(peek(), "inout port");
      }
      const Token& name = expect_identifier("port name");
      PortDecl port = current;
      port.name = name.text;
      port.span = name.span;
      ast.ports.push_back(port);
      if (is_punct("["))
        unsupported(peek(), "unpacked array port");
      if (!is_punct(","))
        break;
      next();
    }
  }

  void parse_item(Ast& ast) {
    const Token& t = peek();
    if (t.kind != TokenKind::Identifier)
      throw ParseError(t.span, "expected module item, found '" + t.text + "'");
    if (t.text == "wire" || t.text == "reg") {
      parse_net_decl(ast);
    } else if (t.text == "assign") {
      next();
      for (;;) {
        ContinuousAssign a;
        a.span = peek().span;
        a.target = parse_lvalue();
        expect_punct("=");
        a.value = parse_expr();
        ast.assigns.push_back(std::move(a));
        if (!is_punct(","))
          break;
        next();
      }
      expect_punct(";");
    } else if (t.text == "always") {
      parse_always(ast);
    } else if (kUnsupportedItems.count(t.text)) {
      if (t.text == "input" || t.text == "output")
        unsupported(t, "port declaration in module body");
      unsupported(t, "'" + t.text + "'");
    } else if (peek(1).kind == TokenKind::Identifier || is_punct("#", 1)) {
      unsupported(t, "module instantiation");
    } else {
      throw ParseError(t.span, "expected module item, found '" + t.text + "'");
    }
  }

  void parse_net_decl(Ast& ast) {
    bool is_reg = next().text == "reg";
    if (is_keyword("signed"))
      unsupported(peek(), "signed net");
    unsigned width = is_punct("[") ? parse_range() : 1;
    for (;;) {
      const Token& name = expect_identifier("net name");
      if (is_punct("["))
        unsupported(peek(), "memory");
      ast.nets.push_back(NetDecl{name.text, width, is_reg, name.span});
      if (is_punct("=")) {
        if (is_reg)
          unsupported(peek(), "reg initializer");
        next();
        ContinuousAssign a;
        a.span = name.span;
        a.target = LValue{name.text, std::nullopt, std::nullopt, name.span};
        a.value = parse_expr();
        ast.assigns.push_back(std::move(a));
      }
      if (!is_punct(","))
        break;
      next();
    }
    expect_punct(";");
  }

  LValue parse_lvalue() {
    if (is_punct("{"))
      unsupported(peek(), "concatenation as assignment target");
    const Token& name = expect_identifier("assignment target");
    LValue lv{name.text, std::nullopt, std::nullopt, name.span};
    if (is_punct("[")) {
      const Token& open = next();
      if (peek().kind != TokenKind::Number)
        unsupported(open, "non-constant select in assignment target");
      unsigned hi = expect_number("select bound");
      unsigned lo = hi;
      if (is_punct(":")) {
        next();
        lo = expect_number("select bound");
      } else if (is_punct("+:") || is_punct("-:")) {
        unsupported(peek(), "indexed part-select in assignment target");
      }
      expect_punct("]");
      lv.hi = hi;
      lv.lo = lo;
    }
    return lv;
  }

  void parse_always(Ast& ast) {
    const Token& kw = next();
    if (!is_punct("@"))
      unsupported(kw, "always block without event control");
    next();
    if (is_punct("*"))
      unsupported(peek(), "combinational always block");
    expect_punct("(");
    if (is_punct("*"))
      unsupported(peek(), "combinational always block");
    if (is_keyword("negedge"))
      unsupported(peek(), "negedge clock");
    expect_keyword("posedge");
    std::string clock = expect_identifier("clock name").text;
    if (is_keyword("or") || is_punct(","))
      unsupported(peek(), "multiple event triggers");
    expect_punct(")");
    parse_statement(ast, clock);
  }

  void parse_statement(Ast& ast, const std::string& clock) {
    if (is_keyword("begin")) {
      next();
      if (is_punct(":"))
        unsupported(peek(), "named block");
      while (!is_keyword("end")) {
        if (peek().kind == TokenKind::End)
          throw ParseError(peek().span, "missing 'end'");
        parse_statement(ast, clock);
      }
      next();
      return;
    }
    const Token& t = peek();
    if (t.kind == TokenKind::Identifier && (t.text == "if" || t.text == "case" || t.text == "for"))
      unsupported(t, "'" + t.text + "' statement");
    const Token& target = expect_identifier("register name");
    if (is_punct("["))
      unsupported(peek(), "partial register assignment");
    if (is_punct("="))
      unsupported(peek(), "blocking assignment in clocked block");
    expect_punct("<=");
    SequentialAssign s;
    s.clock = clock;
    s.target = target.text;
    s.span = target.span;
    s.value = parse_expr();
    expect_punct(";");
    ast.sequential.push_back(std::move(s));
  }

  // --- expressions, lowest precedence first ---

  Expr parse_expr() { return parse_ternary(); }

  Expr parse_ternary() {
    Expr cond = parse_binary(0);
    if (!is_punct("?"))
      return cond;
    Expr e;
    e.kind = ExprKind::Ternary;
    e.span = next().span;
    Expr then_e = parse_ternary();
    expect_punct(":");
    Expr else_e = parse_ternary();
    e.operands = {std::move(cond), std::move(then_e), std::move(else_e)};
    return e;
  }

  struct BinaryLevel {
    std::vector<std::pair<std::string_view, BinaryOp>> ops;
  };

  static const std::vector<BinaryLevel>& levels() {
    static const std::vector<BinaryLevel> table = {
        {{{"|", BinaryOp::Or}}},
        {{{"^", BinaryOp::Xor}}},
        {{{"&", BinaryOp::And}}},
        {{{"==", BinaryOp::Eq}, {"!=", BinaryOp::Ne}}},
        {{{"<", BinaryOp::Lt}, {"<=", BinaryOp::Le}, {">", BinaryOp::Gt}, {">=", BinaryOp::Ge}}},
        {{{"<<", BinaryOp::Shl}, {">>", BinaryOp::Shr}}},
        {{{"+", BinaryOp::Add}, {"-", BinaryOp::Sub}}},
        {{{"*", BinaryOp::Mul}}},
    };
    return table;
  }

  void reject_binary_outside_subset() {
    static const std::set<std::string, std::less<>> ops = {"&&", "||", "**", "/", "%", "<<<", ">>>",
                                                           "===", "!==", "~^", "^~"};
    if (peek().kind == TokenKind::Punct && ops.count(peek().text))
      unsupported(peek(), "operator '" + peek().text + "'");
  }

  Expr parse_binary(std::size_t level) {
    if (level == levels().size())
      return parse_unary();
    Expr lhs = parse_binary(level + 1);
    for (;;) {
      reject_binary_outside_subset();
      const BinaryLevel& lv = levels()[level];
      auto it = std::find_if(lv.ops.begin(), lv.ops.end(), [&](const auto& op) { return is_punct(op.first); });
      if (it == lv.ops.end())
        return lhs;
      Expr e;
      e.kind = ExprKind::Binary;
      e.binary_op = it->second;
      e.span = next().span;
      Expr rhs = parse_binary(level + 1);
      e.operands = {std::move(lhs), std::move(rhs)};
      lhs = std::move(e);
    }
  }

  Expr parse_unary() {
    static const std::vector<std::pair<std::string_view, UnaryOp>> ops = {
        {"~", UnaryOp::BitNot}, {"!", UnaryOp::LogicalNot}, {"-", UnaryOp::Negate},
        {"&", UnaryOp::ReduceAnd}, {"|", UnaryOp::ReduceOr}, {"^", UnaryOp::ReduceXor},
    };
    if (is_punct("~&") || is_punct("~|") || is_punct("~^") || is_punct("^~"))
      unsupported(peek(), "reduction operator '" + peek().text + "'");
    if (is_punct("+"))
      unsupported(peek(), "unary plus");
    for (const auto& [text, op] : ops) {
      if (is_punct(text)) {
        Expr e;
        e.kind = ExprKind::Unary;
        e.unary_op = op;
        e.span = next().span;
        e.operands.push_back(parse_unary());
        return e;
      }
    }
    return parse_primary();
  }

  Expr parse_primary() {
    const Token& t = peek();
    Expr e;
    e.span = t.span;
    switch (t.kind) {
    case TokenKind::Number:
      e.kind = ExprKind::Number;
      e.value = next().value;
      return e;
    case TokenKind::SizedConstant:
      e.kind = ExprKind::SizedConstant;
      e.const_width = t.width;
      e.base = t.base;
      e.value = next().value;
      return e;
    case TokenKind::SystemName:
      unsupported(t, t.text);
    case TokenKind::Identifier:
      if (reserved(t.text))
        expected("expression");
      e.kind = ExprKind::Identifier;
      e.name = next().text;
      if (is_punct("("))
        unsupported(peek(), "function call");
      if (is_punct("["))
        return parse_select(std::move(e));
      return e;
    case TokenKind::Punct:
      if (t.text == "(") {
        next();
        Expr inner = parse_expr();
        expect_punct(")");
        return inner;
      }
      if (t.text == "{")
        return parse_braces();
      if (t.text == "'{")
        unsupported(t, "assignment pattern");
      expected("expression");
    case TokenKind::End:
      expected("expression");
    }
    expected("expression");
  }

  Expr parse_select(Expr ident) {
    const Token& open = next(); // [
    Expr first = parse_expr();
    Expr e;
    e.span = open.span;
    e.name = ident.name;
    if (is_punct(":")) {
      next();
      Expr second = parse_expr();
      if (first.kind != ExprKind::Number || second.kind != ExprKind::Number)
        unsupported(open, "non-constant part-select bounds");
      if (first.value.significant_bits() > 31 || second.value.significant_bits() > 31)
        throw ParseError(open.span, "part-select bound too large");
      e.kind = ExprKind::PartSelect;
      e.hi = static_cast<unsigned>(first.value.low_word());
      e.lo = static_cast<unsigned>(second.value.low_word());
    } else if (is_punct("+:") || is_punct("-:")) {
      e.kind = ExprKind::IndexedPartSelect;
      e.descending = next().text == "-:";
      const Token& w = peek();
      if (w.kind != TokenKind::Number)
        unsupported(w, "non-constant indexed part-select width");
      e.slice_width = expect_number("slice width");
      e.operands.push_back(std::move(first));
    } else {
      e.kind = ExprKind::BitSelect;
      e.operands.push_back(std::move(first));
    }
    expect_punct("]");
    if (is_punct("["))
      unsupported(peek(), "multi-dimensional select");
    return e;
  }

  Expr parse_braces() {
    const Token& open = next(); // {
    Expr first = parse_expr();
    if (is_punct("{")) {
      if (first.kind != ExprKind::Number)
        unsupported(open, "non-constant replication count");
      if (first.value.significant_bits() > 20)
        throw ParseError(open.span, "replication count too large");
      Expr e;
      e.kind = ExprKind::Replicate;
      e.span = open.span;
      e.count = static_cast<unsigned>(first.value.low_word());
      Expr inner = parse_braces();
      if (inner.operands.size() == 1)
        e.operands.push_back(std::move(inner.operands[0]));
      else
        e.operands.push_back(std::move(inner));
      expect_punct("}");
      return e;
    }
    Expr e;
    e.kind = ExprKind::Concat;
    e.span = open.span;
    e.operands.push_back(std::move(first));
    while (is_punct(",")) {
      next();
      e.operands.push_back(parse_expr());
    }
    expect_punct("}");
    return e;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

} // namespace

Ast parse_design(std::string_view source, const std::string& file) {
  return Parser(tokenize(source, file)).parse();
}

} // namespace synthkit::hdl
