// Copyright 2026 The persum Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cmath>
#include <string>
#include <vector>

#include "persum/expr.hpp"
#include "test_support.hpp"

namespace persum {
namespace {

TEST(Tokenize, KindsAndPositions) {
  const auto toks = tokenize(" sin(k*pi/2) ");
  ASSERT_EQ(toks.size(), 8u);
  EXPECT_EQ(toks[0].kind, TokenKind::Ident);
  EXPECT_EQ(toks[0].lexeme, "sin");
  EXPECT_EQ(toks[0].position, 1u);
  EXPECT_EQ(toks[1].kind, TokenKind::LParen);
  EXPECT_EQ(toks[5].kind, TokenKind::Slash);
  EXPECT_EQ(toks[6].lexeme, "2");
  EXPECT_EQ(toks[7].kind, TokenKind::RParen);
  EXPECT_EQ(to_string(TokenKind::Caret), "Caret");
  EXPECT_TRUE(tokenize("   ").empty());
}

TEST(Tokenize, NumbersAndBadCharacters) {
  const auto toks = tokenize("0.25+3");
  ASSERT_EQ(toks.size(), 3u);
  EXPECT_EQ(toks[0].lexeme, "0.25");
  try {
    tokenize("2..5");
    FAIL() << "expected LexError";
  } catch (const LexError& e) {
    EXPECT_EQ(e.offset(), 2u);
  }
  try {
    tokenize("k # 2");
    FAIL() << "expected LexError";
  } catch (const LexError& e) {
    EXPECT_EQ(e.offset(), 2u);
  }
}

TEST(Parse, NamedWeightsEvaluateToPeriodValues) {
  const auto s = parse_expression("sin(k*pi/2)");
  const double sv[] = {0, 1, 0, -1};
  for (int k = 0; k < 12; ++k) EXPECT_NEAR(s(k).real(), sv[k % 4], 1e-14) << k;
  const auto c = parse_expression("cos(2*k*pi/3)");
  const double cv[] = {1, -0.5, -0.5};
  for (int k = 0; k < 12; ++k) EXPECT_NEAR(c(k).real(), cv[k % 3], 1e-14) << k;
  const auto a = parse_expression("(-1)^k");
  for (int k = 0; k < 12; ++k) EXPECT_EQ(a(k).real(), k % 2 ? -1.0 : 1.0) << k;
  EXPECT_EQ(detect_period(s, 64), 4);
  EXPECT_EQ(detect_period(c, 64), 3);
  EXPECT_EQ(detect_period(a, 64), 2);
}

TEST(Parse, PrecedenceAndAssociativity) {
  EXPECT_EQ(eval(parse_expression("2^3^2"), 0).real(), 512.0);
  EXPECT_EQ(eval(parse_expression("-2^2"), 0).real(), -4.0);
  EXPECT_EQ(eval(parse_expression("2^-1"), 0).real(), 0.5);
  EXPECT_EQ(eval(parse_expression("1-2-3"), 0).real(), -4.0);
  EXPECT_EQ(eval(parse_expression("12/2/3"), 0).real(), 2.0);
  EXPECT_EQ(eval(parse_expression("1+2*k"), 5).real(), 11.0);
  EXPECT_EQ(eval(parse_expression("--k"), 5).real(), 5.0);
  EXPECT_NEAR(eval(parse_expression("e"), 0).real(), std::exp(1.0), 0.0);
  EXPECT_EQ(eval(parse_expression("floor(k/3)"), 8).real(), 2.0);
  EXPECT_EQ(eval(parse_expression("abs(0-k)"), 8).real(), 8.0);
}

TEST(Parse, ErrorsCarryOffsets) {
  auto offset_of = [](const std::string& src) -> std::ptrdiff_t {
    try {
      parse_expression(src);
    } catch (const SyntaxError& e) {
      return static_cast<std::ptrdiff_t>(e.offset());
    }
    return -1;
  };
  EXPECT_THROW(parse_expression("k+"), ParseError);
  EXPECT_EQ(offset_of("k+"), 2);
  EXPECT_THROW(parse_expression("foo(k)"), SemanticError);
  EXPECT_EQ(offset_of("1+foo(k)"), 2);
  EXPECT_THROW(parse_expression("x"), SemanticError);
  EXPECT_THROW(parse_expression("(k"), ParseError);
  EXPECT_THROW(parse_expression("k)"), ParseError);
  EXPECT_THROW(parse_expression(""), ParseError);
  EXPECT_THROW(parse_expression("sin k"), ParseError);
  EXPECT_THROW(parse_expression("k k"), ParseError);
  EXPECT_THROW(parse_expression("2..5"), LexError);
}

TEST(Eval, DomainFailures) {
  EXPECT_THROW(eval(parse_expression("1/k"), 0), EvalError);
  EXPECT_THROW(eval(parse_expression("log(k)"), 0), EvalError);
  EXPECT_THROW(eval(parse_expression("(-2)^0.5"), 0), EvalError);
  EXPECT_NO_THROW(eval(parse_expression("1/k"), 1));
  EXPECT_EQ(eval(parse_expression("(-2)^3"), 0).real(), -8.0);
}

TEST(Period, ConstantsAndNonPeriodic) {
  EXPECT_EQ(detect_period(parse_expression("3"), 64), 1);
  EXPECT_EQ(detect_period(parse_expression("k-3*floor(k/3)"), 64), 3);
  EXPECT_EQ(detect_period(parse_expression("cos(k*pi/6)"), 64), 12);
  EXPECT_THROW(detect_period(parse_expression("k"), 64), NotPeriodicError);
  EXPECT_THROW(detect_period(parse_expression("cos(k*pi/6)"), 8), NotPeriodicError);
  EXPECT_THROW(detect_period(parse_expression("1"), 1), InvalidParameter);
}

TEST(Period, WeightFromExpression) {
  const auto w = weight_from_expression(parse_expression("sin(k*pi/2)"));
  EXPECT_EQ(w, PeriodicWeight::quarter_sine());
  const auto one = weight_from_expression(parse_expression("1"));
  EXPECT_EQ(one.q(), 2);
  EXPECT_EQ(one(1), 1.0);
  const auto alt = weight_from_expression(parse_expression("(-1)^k"));
  EXPECT_EQ(alt, PeriodicWeight::alternating());
}

// Random expression text over the full grammar. Depth is bounded so the
// strings stay short.
std::string random_expr(testing::Gen& gen, int depth) {
  if (depth == 0 || gen.integer(0, 9) < 3) {
    switch (gen.integer(0, 4)) {
      case 0:
        return "k";
      case 1:
        return "pi";
      case 2:
        return std::to_string(gen.integer(0, 99));
      case 3:
        return std::to_string(gen.integer(0, 9)) + "." + std::to_string(gen.integer(0, 99));
      default:
        return "e";
    }
  }
  static const char* kOps[] = {"+", "-", "*", "/", "^"};
  static const char* kFns[] = {"sin", "cos", "tan", "log", "exp", "abs", "floor"};
  switch (gen.integer(0, 3)) {
    case 0:
      return "-" + random_expr(gen, depth - 1);
    case 1:
      return std::string(kFns[gen.integer(0, 6)]) + "(" + random_expr(gen, depth - 1) + ")";
    case 2:
      return "(" + random_expr(gen, depth - 1) + ")";
    default:
      return random_expr(gen, depth - 1) + kOps[gen.integer(0, 4)] + random_expr(gen, depth - 1);
  }
}

TEST(Parse, PropertyPrintRoundTrip) {
  testing::Gen gen(71);
  int evaluated = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    const std::string src = random_expr(gen, 5);
    const Expr first = parse_expression(src);
    const std::string printed = first.to_string();
    const Expr second = parse_expression(printed);
    ASSERT_TRUE(first == second) << src << " -> " << printed;
    ASSERT_EQ(second.to_string(), printed) << src;
    for (std::int64_t k : {0, 1, 7}) {
      Complex a;
      Complex b;
      try {
        a = first(k);
      } catch (const EvalError&) {
        ASSERT_THROW(second(k), EvalError) << printed;
        continue;
      }
      b = second(k);
      if (std::isfinite(std::abs(a))) {
        ASSERT_EQ(a, b) << printed << " k=" << k;
        ++evaluated;
      }
    }
  }
  EXPECT_GT(evaluated, 1000);
}

TEST(Parse, TokenSpanOverload) {
  const auto toks = tokenize("k*2");
  EXPECT_FALSE(parse(toks) == parse_expression("2*k"));
  EXPECT_TRUE(parse(toks) == parse_expression("(k)*(2)"));
}

}  // namespace
}  // namespace persum
