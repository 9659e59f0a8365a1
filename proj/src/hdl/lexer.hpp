// Copyright 2026 The synthkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "synthkit/hdl/ast.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace synthkit::hdl {

enum class TokenKind { Identifier, SystemName, Number, SizedConstant, Punct, End };

struct Token {
  TokenKind kind = TokenKind::End;
  std::string text;
  SourceSpan span;
  // SizedConstant only
  unsigned width = 0;
  char base = 'd';
  ir::BitVector value;
};

std::vector<Token> tokenize(std::string_view source, const std::string& file);

} // namespace synthkit::hdl
