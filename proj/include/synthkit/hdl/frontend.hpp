// Copyright 2026 The synthkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "synthkit/hdl/ast.hpp"
#include "synthkit/ir/word_ir.hpp"

#include <string>
#include <string_view>

namespace synthkit::hdl {

/*! \brief Parses one module of the synthesizable subset.
 *
 * Accepted: ANSI port lists, `wire`/`reg` declarations with `[N:0]` ranges,
 * `assign`, and `always @(posedge clk)` blocks of non-blocking assignments.
 * Expressions cover the unsigned operators, ternary, concatenation,
 * replication and the four select forms. Anything else that is legal
 * Verilog raises UnsupportedConstruct naming the construct.
 */
Ast parse_design(std::string_view source, const std::string& file = "<input>");

/// Canonical source text; `parse_design(print_design(ast))` reproduces `ast`.
std::string print_design(const Ast& ast);
std::string print_expr(const Expr& expr);

/// Resolves widths, folds constants, checks drivers and orders the nodes.
ir::WordLevelDesign elaborate(const Ast& ast);

} // namespace synthkit::hdl
