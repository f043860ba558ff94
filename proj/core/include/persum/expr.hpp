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

#ifndef PERSUM_EXPR_HPP
#define PERSUM_EXPR_HPP

// Expressions in one integer variable k, used to describe weights g(k) and
// sequences f(k) on the command line.
//
// Grammar:
//   expr  := term (('+' | '-') term)*
//   term  := unary (('*' | '/') unary)*
//   unary := '-' unary | power
//   power := atom ('^' unary)?
//   atom  := number | 'k' | 'pi' | 'e' | ident '(' expr ')' | '(' expr ')'
//
// '^' is right-associative and its base is an atom, so -1^k is -(1^k) and
// the alternating sign must be written (-1)^k. Functions: sin cos tan log
// exp abs floor.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "persum/numeric.hpp"
#include "persum/periodic.hpp"

namespace persum {

enum class TokenKind {
  Number,
  Ident,
  Plus,
  Minus,
  Star,
  Slash,
  Caret,
  LParen,
  RParen,
  Comma,
};

std::string_view to_string(TokenKind kind);

struct Token {
  TokenKind kind;
  std::string lexeme;
  std::size_t position;  ///< byte offset in the source

  friend bool operator==(const Token&, const Token&) = default;
};

/// Longest-munch lexer. Throws LexError with the byte offset of the first
/// character that cannot start a token.
std::vector<Token> tokenize(std::string_view src);

enum class BinaryOp { Add, Sub, Mul, Div, Pow };
enum class Function { Sin, Cos, Tan, Log, Exp, Abs, Floor };

struct Node;
using NodePtr = std::shared_ptr<const Node>;

struct Constant {
  Complex value;
  std::string spelling;  ///< literal text, "pi" or "e"
};
struct Variable {};
struct Negate {
  NodePtr operand;
};
struct Binary {
  BinaryOp op;
  NodePtr lhs;
  NodePtr rhs;
};
struct Call {
  Function fn;
  NodePtr arg;
};

struct Node {
  std::variant<Constant, Variable, Negate, Binary, Call> data;
};

/// Immutable parsed expression; cheap to copy.
class Expr {
 public:
  explicit Expr(NodePtr root) : root_(std::move(root)) {}

  const Node& root() const { return *root_; }

  /// Evaluates at k. Throws EvalError on division by zero, log 0, a negative
  /// base with a non-integer exponent, or floor of a non-real value.
  Complex operator()(std::int64_t k) const;

  /// Canonical text with only the parentheses the grammar needs.
  std::string to_string() const;

  /// Structural equality (constants compared by value).
  friend bool operator==(const Expr& a, const Expr& b);

 private:
  NodePtr root_;
};

/// Recursive-descent parser over the token list. Throws ParseError on an
/// unexpected token or unbalanced parentheses, SemanticError on an unknown
/// function or identifier.
Expr parse(std::span<const Token> tokens);

/// tokenize + parse.
Expr parse_expression(std::string_view src);

inline Complex eval(const Expr& e, std::int64_t k) { return e(k); }

inline constexpr double kDefaultPeriodTolerance = 1e-9;

/// Smallest q in 1..q_max with |e(k+q) - e(k)| <= tol for k in 0..4 q_max.
/// Constant expressions report 1. Throws NotPeriodicError otherwise.
int detect_period(const Expr& e, int q_max,
                  double tol = kDefaultPeriodTolerance);

/// Samples one detected period into a PeriodicWeight. A period of 1 is
/// lifted to q = 2 by repeating the value. Components below 1e-14 in
/// magnitude are set to zero so sin(k pi) style roundoff does not register
/// as a nonzero weight.
PeriodicWeight weight_from_expression(const Expr& e, int q_max = 64,
                                      double tol = kDefaultPeriodTolerance);

}  // namespace persum

#endif  // PERSUM_EXPR_HPP
