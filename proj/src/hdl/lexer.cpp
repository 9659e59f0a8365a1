// Copyright 2026 The synthkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "lexer.hpp"

#include <array>
#include <cctype>

namespace synthkit::hdl {

namespace {

// Longest match first.
constexpr std::array<std::string_view, 22> kMultiCharPuncts = {
    "<<<", ">>>", "===", "!==", "<<", ">>", "<=", ">=", "==", "!=", "&&",
    "||",  "+:",  "-:",  "**",  "~&", "~|", "~^", "^~", "->", "::", "'{",
};

constexpr std::string_view kSingleCharPuncts = "()[]{},;:?@#=+-*/%&|^~!<>.'";

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '$'; }

class Lexer {
public:
  Lexer(std::string_view src, const std::string& file) : src_(src), file_(file) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_space_and_comments();
      Token t;
      t.span = here();
      if (pos_ >= src_.size()) {
        out.push_back(std::move(t));
        return out;
      }
      char c = src_[pos_];
      if (ident_start(c)) {
        std::size_t start = pos_;
        while (pos_ < src_.size() && ident_char(src_[pos_]))
          advance();
        t.kind = TokenKind::Identifier;
        t.text = std::string(src_.substr(start, pos_ - start));
      } else if (c == '$') {
        std::size_t start = pos_;
        advance();
        while (pos_ < src_.size() && ident_char(src_[pos_]))
          advance();
        t.kind = TokenKind::SystemName;
        t.text = std::string(src_.substr(start, pos_ - start));
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        lex_number(t);
      } else if (c == '"') {
        throw UnsupportedConstruct(t.span, "string literal");
      } else if (c == '`') {
        throw UnsupportedConstruct(t.span, "compiler directive");
      } else {
        lex_punct(t);
      }
      out.push_back(std::move(t));
    }
  }

private:
  SourceSpan here() const { return SourceSpan{file_, line_, column_}; }

  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  bool starts_with(std::string_view s) const { return src_.substr(pos_, s.size()) == s; }

  void skip_space_and_comments() {
    while (pos_ < src_.size()) {
      if (std::isspace(static_cast<unsigned char>(src_[pos_]))) {
        advance();
      } else if (starts_with("//")) {
        while (pos_ < src_.size() && src_[pos_] != '\n')
          advance();
      } else if (starts_with("/*")) {
        SourceSpan open = here();
        advance();
        advance();
        while (pos_ < src_.size() && !starts_with("*/"))
          advance();
        if (pos_ >= src_.size())
          throw LexError(open, "unterminated block comment");
        advance();
        advance();
      } else {
        return;
      }
    }
  }

  std::string take_digits(bool allow_hex) {
    std::string digits;
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      bool ok = std::isdigit(static_cast<unsigned char>(c)) || c == '_' ||
                (allow_hex && std::isxdigit(static_cast<unsigned char>(c)));
      bool four_state = c == 'x' || c == 'X' || c == 'z' || c == 'Z' || c == '?';
      if (four_state)
        throw UnsupportedConstruct(here(), "four-state constant digit '" + std::string(1, c) + "'");
      if (!ok)
        break;
      digits.push_back(c);
      advance();
    }
    return digits;
  }

  void lex_number(Token& t) {
    std::string digits = take_digits(false);
    if (pos_ >= src_.size() || src_[pos_] != '\'') {
      t.kind = TokenKind::Number;
      t.text = digits;
      t.value = ir::BitVector::from_digits(digits, 10);
      return;
    }
    advance(); // '
    ir::BitVector w = ir::BitVector::from_digits(digits, 10);
    if (w.is_zero() || w.significant_bits() > 20)
      throw LexError(t.span, "constant width must be between 1 and 2^20");
    t.width = static_cast<unsigned>(w.low_word());
    if (pos_ >= src_.size())
      throw LexError(t.span, "truncated sized constant");
    char b = static_cast<char>(std::tolower(static_cast<unsigned char>(src_[pos_])));
    if (b == 's')
      throw UnsupportedConstruct(t.span, "signed constant");
    if (b == 'o')
      throw UnsupportedConstruct(t.span, "octal constant");
    if (b != 'b' && b != 'd' && b != 'h')
      throw LexError(here(), std::string("bad radix '") + src_[pos_] + "'");
    advance();
    unsigned base = b == 'b' ? 2 : b == 'd' ? 10 : 16;
    std::string body = take_digits(base == 16);
    if (body.empty() || body.find_first_not_of('_') == std::string::npos)
      throw LexError(t.span, "sized constant has no digits");
    try {
      t.value = ir::BitVector::from_digits(body, base);
    } catch (const std::invalid_argument& e) {
      throw LexError(t.span, e.what());
    }
    t.kind = TokenKind::SizedConstant;
    t.base = b;
    t.text = digits + "'" + b + body;
  }

  void lex_punct(Token& t) {
    for (std::string_view p : kMultiCharPuncts) {
      if (starts_with(p)) {
        for (std::size_t i = 0; i < p.size(); ++i)
          advance();
        t.kind = TokenKind::Punct;
        t.text = std::string(p);
        return;
      }
    }
    char c = src_[pos_];
    if (kSingleCharPuncts.find(c) == std::string_view::npos)
      throw LexError(t.span, std::string("unexpected character '") + c + "'");
    if (c == '\'')
      throw UnsupportedConstruct(t.span, "unsized based constant");
    advance();
    t.kind = TokenKind::Punct;
    t.text = std::string(1, c);
  }

  std::string_view src_;
  std::string file_;
  std::size_t pos_ = 0;
  unsigned line_ = 1;
  unsigned column_ = 1;
};

} // namespace

std::vector<Token> tokenize(std::string_view source, const std::string& file) {
  return Lexer(source, file).run();
}

} // namespace synthkit::hdl
