// Copyright 2026 The synthkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "support.hpp"

#include "synthkit/hdl/frontend.hpp"
#include "synthkit/ir/evaluate.hpp"

#include <doctest.h>

#include <random>
#include <regex>

using namespace synthkit;
using namespace synthkit::hdl;

namespace {

template <typename E>
std::string error_of(std::string_view src, const std::string& file = "t.v") {
  try {
    elaborate(parse_design(src, file));
  } catch (const E& e) {
    return e.what();
  }
  FAIL("expected error not raised");
  return {};
}

const ir::WordOp* find_op(const ir::WordLevelDesign& d, ir::OpKind k) {
  for (const auto& op : d.nodes)
    if (op.kind == k)
      return &op;
  return nullptr;
}

// Random expression trees over a[7:0], b[3:0], i[2:0].
class ExprGen {
public:
  explicit ExprGen(uint64_t seed) : rng_(seed) {}

  Expr expr(int depth) {
    int pick = depth <= 0 ? static_cast<int>(rng_() % 3) : static_cast<int>(rng_() % 11);
    Expr e;
    switch (pick) {
    case 0:
      e.kind = ExprKind::Identifier;
      e.name = ident();
      break;
    case 1:
      e.kind = ExprKind::Number;
      e.value = ir::BitVector(32, rng_() % 1000);
      break;
    case 2: {
      e.kind = ExprKind::SizedConstant;
      e.const_width = 1 + static_cast<unsigned>(rng_() % 12);
      e.base = "bdh"[rng_() % 3];
      e.value = ir::BitVector(e.const_width, rng_() & ((uint64_t{1} << e.const_width) - 1));
      break;
    }
    case 3:
      e.kind = ExprKind::Unary;
      e.unary_op = static_cast<UnaryOp>(rng_() % 6);
      e.operands.push_back(expr(depth - 1));
      break;
    case 4:
    case 5:
      e.kind = ExprKind::Binary;
      e.binary_op = static_cast<BinaryOp>(rng_() % 14);
      e.operands.push_back(expr(depth - 1));
      e.operands.push_back(expr(depth - 1));
      break;
    case 6:
      e.kind = ExprKind::Ternary;
      for (int k = 0; k < 3; ++k)
        e.operands.push_back(expr(depth - 1));
      break;
    case 7:
      e.kind = ExprKind::Concat;
      for (unsigned k = 0, n = 1 + rng_() % 3; k < n; ++k)
        e.operands.push_back(expr(depth - 1));
      break;
    case 8:
      e.kind = ExprKind::Replicate;
      e.count = 1 + static_cast<unsigned>(rng_() % 4);
      e.operands.push_back(expr(depth - 1));
      break;
    case 9:
      e.kind = rng_() % 2 ? ExprKind::BitSelect : ExprKind::PartSelect;
      e.name = ident();
      if (e.kind == ExprKind::BitSelect) {
        e.operands.push_back(expr(depth - 1));
      } else {
        e.lo = static_cast<unsigned>(rng_() % 4);
        e.hi = e.lo + static_cast<unsigned>(rng_() % 4);
      }
      break;
    default:
      e.kind = ExprKind::IndexedPartSelect;
      e.name = ident();
      e.slice_width = 1 + static_cast<unsigned>(rng_() % 4);
      e.descending = rng_() % 2;
      e.operands.push_back(expr(depth - 1));
      break;
    }
    return e;
  }

  Ast module(int assigns) {
    Ast ast;
    ast.module_name = "gen";
    ast.ports = {{"clk", PortDirection::Input, 1, false, {}},
                 {"a", PortDirection::Input, 8, false, {}},
                 {"b", PortDirection::Input, 4, false, {}},
                 {"i", PortDirection::Input, 3, false, {}},
                 {"y", PortDirection::Output, 8, false, {}},
                 {"q", PortDirection::Output, 4, true, {}}};
    ast.nets = {{"w", 6, false, {}}, {"r", 2, true, {}}};
    for (int k = 0; k < assigns; ++k) {
      ContinuousAssign a;
      a.target.name = k % 2 ? "y" : "w";
      if (k % 3 == 2) {
        a.target.hi = 3;
        a.target.lo = static_cast<unsigned>(rng_() % 4);
      }
      a.value = expr(4);
      ast.assigns.push_back(std::move(a));
    }
    ast.sequential.push_back({"clk", "q", expr(3), {}});
    ast.sequential.push_back({"clk", "r", expr(3), {}});
    return ast;
  }

private:
  std::string ident() { return std::string(1, "abi"[rng_() % 3]); }
  std::mt19937_64 rng_;
};

} // namespace

TEST_CASE("identity module parses with one assign") {
  Ast ast = parse_design("module id(input [3:0] a, output [3:0] y); assign y = a; endmodule");
  CHECK(ast.module_name == "id");
  REQUIRE(ast.ports.size() == 2);
  CHECK(ast.ports[0].width == 4);
  CHECK(ast.ports[1].width == 4);
  CHECK(ast.assigns.size() == 1);
}

TEST_CASE("indexed part-select keeps its slice width") {
  Ast ast = parse_design(
      "module m(input [15:0] x, input [3:0] i, output [3:0] y); assign y = x[i +: 4]; endmodule");
  const Expr& v = ast.assigns.at(0).value;
  CHECK(v.kind == ExprKind::IndexedPartSelect);
  CHECK(v.slice_width == 4);
  CHECK_FALSE(v.descending);
}

TEST_CASE("constructs outside the subset are named") {
  auto unsupported = [](std::string_view src) {
    try {
      parse_design(src);
    } catch (const UnsupportedConstruct& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  CHECK(unsupported("module m(input [3:0] a, input [3:0] b, output [3:0] y); assign y = $signed(a) * b; endmodule")
            .find("$signed") != std::string::npos);
  CHECK(unsupported("module m(input a, input b, output y); assign y = a && b; endmodule").find("&&") !=
        std::string::npos);
  CHECK(unsupported("module m #(parameter N = 1)(input a, output y); assign y = a; endmodule")
            .find("parameter") != std::string::npos);
}

TEST_CASE("lexical and grammar errors") {
  CHECK_THROWS_AS(parse_design("module m(input a, output y); assign y = 4'q1; endmodule"), LexError);
  CHECK_THROWS_AS(parse_design("module m(input a, output y); /* open"), LexError);
  CHECK_THROWS_AS(parse_design("module m(input a, output y); assign y = ; endmodule"), ParseError);
  CHECK_THROWS_AS(parse_design("module m(input a, output y) assign y = a; endmodule"), ParseError);
}

TEST_CASE("addition is computed at the target width") {
  auto d = elaborate(parse_design("module m(input [3:0] a, input [3:0] b, output [7:0] y);\n"
                                  "  assign y[7:0] = a[3:0] + b[3:0];\nendmodule"));
  const ir::WordOp* add = find_op(d, ir::OpKind::Add);
  REQUIRE(add);
  CHECK(add->width == 8);
  auto r = ir::evaluate(d, {{"a", ir::BitVector(4, 15)}, {"b", ir::BitVector(4, 15)}}, {});
  CHECK(r.outputs.at("y") == ir::BitVector(8, 30));
}

TEST_CASE("elaboration errors") {
  CHECK(error_of<CombinationalCycle>("module m(output y); wire a; wire b; assign a = b; assign b = a; "
                                     "assign y = a; endmodule")
            .find("cycle") != std::string::npos);
  CHECK_FALSE(error_of<WidthMismatch>("module m(output [3:0] y); assign y = 4'd18; endmodule").empty());
  CHECK_FALSE(
      error_of<MultipleDrivers>("module m(input a, output y); assign y = a; assign y = ~a; endmodule").empty());
  CHECK_FALSE(error_of<UndeclaredIdentifier>("module m(input a, output y); assign y = z; endmodule").empty());
  CHECK_FALSE(error_of<UndrivenNet>("module m(input a, output [1:0] y); assign y[0] = a; endmodule").empty());
  CHECK_FALSE(error_of<Redeclaration>("module m(input a, output y); wire a; assign y = a; endmodule").empty());
}

TEST_CASE("every frontend error carries a source span") {
  const std::regex span(R"(^f\.v:\d+:\d+: )");
  std::vector<std::string> messages = {
      error_of<FrontendError>("module m(input a, output y); assign y = a # 1; endmodule", "f.v"),
      error_of<FrontendError>("module m(input a, output y);\n  assign y = ;\nendmodule", "f.v"),
      error_of<FrontendError>("module m(output [3:0] y);\n\n  assign y = 4'd18;\nendmodule", "f.v"),
      error_of<FrontendError>("module m(input a, output y); assign y = $clog2(a); endmodule", "f.v"),
      error_of<FrontendError>("module m(output y); wire a; assign a = a; assign y = a; endmodule", "f.v"),
  };
  for (const auto& m : messages) {
    INFO(m);
    CHECK(std::regex_search(m, span));
  }
  CHECK(error_of<FrontendError>("module m(output [3:0] y);\n\n  assign y = 4'd18;\nendmodule", "f.v")
            .rfind("f.v:3:", 0) == 0);
}

TEST_CASE("printer round trip on generated modules") {
  ExprGen gen(20260117);
  for (int k = 0; k < 300; ++k) {
    Ast ast = gen.module(1 + k % 5);
    std::string text = print_design(ast);
    INFO(text);
    Ast back = parse_design(text);
    CHECK(same_structure(ast, back));
    CHECK(print_design(back) == text);
  }
}

TEST_CASE("printer round trip on the corpus") {
  for (const char* name : test::kCorpus) {
    Ast ast = parse_design(test::corpus_source(name));
    CHECK(same_structure(ast, parse_design(print_design(ast))));
  }
}

TEST_CASE("elaboration is deterministic") {
  for (const char* name : test::kCorpus) {
    std::string src = test::corpus_source(name);
    CHECK(ir::dump(elaborate(parse_design(src))) == ir::dump(elaborate(parse_design(src))));
  }
}

TEST_CASE("sequential designs record the clock and registers") {
  auto d = elaborate(parse_design(test::corpus_source("scoreboard")));
  CHECK(d.clock == "clk");
  REQUIRE(d.registers.size() == 2);
  CHECK(d.registers[0].name == "entries");
  CHECK(d.registers[0].width == 32);
  CHECK(d.registers[1].width == 4);
}
