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

#include "persum/expr.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <optional>
#include <utility>

namespace persum {

namespace {

struct FunctionName {
  std::string_view name;
  Function fn;
};

constexpr std::array<FunctionName, 7> kFunctions = {{
    {"sin", Function::Sin},
    {"cos", Function::Cos},
    {"tan", Function::Tan},
    {"log", Function::Log},
    {"exp", Function::Exp},
    {"abs", Function::Abs},
    {"floor", Function::Floor},
}};

std::optional<Function> lookup_function(std::string_view name) {
  for (const auto& entry : kFunctions) {
    if (entry.name == name) return entry.fn;
  }
  return std::nullopt;
}

std::string_view function_name(Function fn) {
  for (const auto& entry : kFunctions) {
    if (entry.fn == fn) return entry.name;
  }
  return "?";
}

bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_lower(char c) { return c >= 'a' && c <= 'z'; }

NodePtr make(Node node) { return std::make_shared<const Node>(std::move(node)); }

class Parser {
 public:
  explicit Parser(std::span<const Token> tokens) : tokens_(tokens) {}

  NodePtr parse_all() {
    if (tokens_.empty()) throw ParseError("empty expression", 0);
    NodePtr e = expr();
    if (!at_end()) unexpected();
    return e;
  }

 private:
  bool at_end() const { return pos_ >= tokens_.size(); }

  bool accept(TokenKind kind) {
    if (!at_end() && tokens_[pos_].kind == kind) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::size_t end_offset() const {
    const Token& last = tokens_.back();
    return last.position + last.lexeme.size();
  }

  [[noreturn]] void unexpected() const {
    if (at_end()) throw ParseError("unexpected end of expression", end_offset());
    const Token& t = tokens_[pos_];
    throw ParseError("unexpected '" + t.lexeme + "'", t.position);
  }

  void expect(TokenKind kind) {
    if (!accept(kind)) unexpected();
  }

  NodePtr expr() {
    NodePtr lhs = term();
    while (true) {
      if (accept(TokenKind::Plus)) {
        lhs = make({Binary{BinaryOp::Add, lhs, term()}});
      } else if (accept(TokenKind::Minus)) {
        lhs = make({Binary{BinaryOp::Sub, lhs, term()}});
      } else {
        return lhs;
      }
    }
  }

  NodePtr term() {
    NodePtr lhs = unary();
    while (true) {
      if (accept(TokenKind::Star)) {
        lhs = make({Binary{BinaryOp::Mul, lhs, unary()}});
      } else if (accept(TokenKind::Slash)) {
        lhs = make({Binary{BinaryOp::Div, lhs, unary()}});
      } else {
        return lhs;
      }
    }
  }

  NodePtr unary() {
    if (accept(TokenKind::Minus)) return make({Negate{unary()}});
    return power();
  }

  NodePtr power() {
    NodePtr base = atom();
    if (accept(TokenKind::Caret)) {
      return make({Binary{BinaryOp::Pow, base, unary()}});
    }
    return base;
  }

  NodePtr atom() {
    if (at_end()) unexpected();
    const Token& t = tokens_[pos_];
    switch (t.kind) {
      case TokenKind::Number: {
        ++pos_;
        double value = 0.0;
        const auto* first = t.lexeme.data();
        const auto* last = first + t.lexeme.size();
        const auto result = std::from_chars(first, last, value);
        if (result.ec != std::errc()) {
          throw ParseError("bad number '" + t.lexeme + "'", t.position);
        }
        return make({Constant{value, t.lexeme}});
      }
      case TokenKind::Ident: {
        ++pos_;
        if (t.lexeme == "k") return make({Variable{}});
        if (t.lexeme == "pi") return make({Constant{kPi, "pi"}});
        if (t.lexeme == "e") return make({Constant{std::exp(1.0), "e"}});
        const auto fn = lookup_function(t.lexeme);
        if (!at_end() && tokens_[pos_].kind == TokenKind::LParen) {
          if (!fn) {
            throw SemanticError("unknown function '" + t.lexeme + "'",
                                t.position);
          }
          ++pos_;
          NodePtr arg = expr();
          expect(TokenKind::RParen);
          return make({Call{*fn, arg}});
        }
        if (fn) {
          throw ParseError("function '" + t.lexeme + "' needs '('",
                           t.position + t.lexeme.size());
        }
        throw SemanticError("unknown identifier '" + t.lexeme + "'",
                            t.position);
      }
      case TokenKind::LParen: {
        ++pos_;
        NodePtr inner = expr();
        expect(TokenKind::RParen);
        return inner;
      }
      default:
        unexpected();
    }
  }

  std::span<const Token> tokens_;
  std::size_t pos_ = 0;
};

bool is_real(Complex z) { return z.imag() == 0.0; }

bool is_integral(Complex z) {
  return is_real(z) && std::isfinite(z.real()) &&
         std::trunc(z.real()) == z.real();
}

Complex integer_power(Complex base, double exponent) {
  if (is_real(base)) return std::pow(base.real(), exponent);
  // Repeated squaring keeps integer powers of complex bases exact in form.
  auto n = static_cast<long long>(std::abs(exponent));
  Complex result = 1.0;
  Complex b = base;
  while (n > 0) {
    if (n & 1) result *= b;
    b *= b;
    n >>= 1;
  }
  return exponent < 0 ? 1.0 / result : result;
}

Complex power(Complex base, Complex exponent) {
  if (base == 0.0 && is_real(exponent) && exponent.real() < 0.0) {
    throw EvalError("division by zero in power");
  }
  if (is_integral(exponent) && std::abs(exponent.real()) <= 1e9) {
    return integer_power(base, exponent.real());
  }
  if (is_real(base) && base.real() < 0.0) {
    throw EvalError("negative base with non-integer exponent");
  }
  if (is_real(base) && is_real(exponent)) {
    return std::pow(base.real(), exponent.real());
  }
  return std::pow(base, exponent);
}

Complex apply(Function fn, Complex x) {
  const bool real = is_real(x);
  switch (fn) {
    case Function::Sin:
      return real ? Complex(std::sin(x.real())) : std::sin(x);
    case Function::Cos:
      return real ? Complex(std::cos(x.real())) : std::cos(x);
    case Function::Tan:
      return real ? Complex(std::tan(x.real())) : std::tan(x);
    case Function::Log:
      if (x == 0.0) throw EvalError("log of zero");
      return (real && x.real() > 0.0) ? Complex(std::log(x.real()))
                                      : std::log(x);
    case Function::Exp:
      return real ? Complex(std::exp(x.real())) : std::exp(x);
    case Function::Abs:
      return std::abs(x);
    case Function::Floor:
      if (!real) throw EvalError("floor of a non-real value");
      return std::floor(x.real());
  }
  throw EvalError("unknown function");
}

Complex evaluate(const Node& node, std::int64_t k) {
  return std::visit(
      [k](const auto& n) -> Complex {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Constant>) {
          return n.value;
        } else if constexpr (std::is_same_v<T, Variable>) {
          return static_cast<double>(k);
        } else if constexpr (std::is_same_v<T, Negate>) {
          return -evaluate(*n.operand, k);
        } else if constexpr (std::is_same_v<T, Call>) {
          return apply(n.fn, evaluate(*n.arg, k));
        } else {
          const Complex a = evaluate(*n.lhs, k);
          const Complex b = evaluate(*n.rhs, k);
          switch (n.op) {
            case BinaryOp::Add:
              return a + b;
            case BinaryOp::Sub:
              return a - b;
            case BinaryOp::Mul:
              return a * b;
            case BinaryOp::Div:
              if (b == 0.0) throw EvalError("division by zero");
              return a / b;
            case BinaryOp::Pow:
              return power(a, b);
          }
          throw EvalError("unknown operator");
        }
      },
      node.data);
}

// Binding strength used by the printer.
constexpr int kPrecSum = 1;
constexpr int kPrecProduct = 2;
constexpr int kPrecUnary = 3;
constexpr int kPrecPower = 4;
constexpr int kPrecAtom = 5;

int precedence(const Node& node) {
  if (const auto* b = std::get_if<Binary>(&node.data)) {
    switch (b->op) {
      case BinaryOp::Add:
      case BinaryOp::Sub:
        return kPrecSum;
      case BinaryOp::Mul:
      case BinaryOp::Div:
        return kPrecProduct;
      case BinaryOp::Pow:
        return kPrecPower;
    }
  }
  if (std::holds_alternative<Negate>(node.data)) return kPrecUnary;
  return kPrecAtom;
}

std::string print(const Node& node);

std::string print_min(const Node& node, int min_prec) {
  std::string s = print(node);
  return precedence(node) < min_prec ? "(" + s + ")" : s;
}

std::string format_constant(const Constant& c) {
  if (!c.spelling.empty()) return c.spelling;
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(),
                                 c.value.real());
  (void)ec;
  return std::string(buf.data(), end);
}

std::string print(const Node& node) {
  return std::visit(
      [](const auto& n) -> std::string {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Constant>) {
          return format_constant(n);
        } else if constexpr (std::is_same_v<T, Variable>) {
          return "k";
        } else if constexpr (std::is_same_v<T, Negate>) {
          return "-" + print_min(*n.operand, kPrecUnary);
        } else if constexpr (std::is_same_v<T, Call>) {
          return std::string(function_name(n.fn)) + "(" + print(*n.arg) + ")";
        } else {
          switch (n.op) {
            case BinaryOp::Add:
              return print_min(*n.lhs, kPrecSum) + "+" +
                     print_min(*n.rhs, kPrecSum + 1);
            case BinaryOp::Sub:
              return print_min(*n.lhs, kPrecSum) + "-" +
                     print_min(*n.rhs, kPrecSum + 1);
            case BinaryOp::Mul:
              return print_min(*n.lhs, kPrecProduct) + "*" +
                     print_min(*n.rhs, kPrecProduct + 1);
            case BinaryOp::Div:
              return print_min(*n.lhs, kPrecProduct) + "/" +
                     print_min(*n.rhs, kPrecProduct + 1);
            case BinaryOp::Pow:
              return print_min(*n.lhs, kPrecAtom) + "^" +
                     print_min(*n.rhs, kPrecUnary);
          }
          return "?";
        }
      },
      node.data);
}

bool same(const Node& a, const Node& b) {
  if (a.data.index() != b.data.index()) return false;
  return std::visit(
      [&b](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        const T& y = std::get<T>(b.data);
        if constexpr (std::is_same_v<T, Constant>) {
          return x.value == y.value;
        } else if constexpr (std::is_same_v<T, Variable>) {
          return true;
        } else if constexpr (std::is_same_v<T, Negate>) {
          return same(*x.operand, *y.operand);
        } else if constexpr (std::is_same_v<T, Call>) {
          return x.fn == y.fn && same(*x.arg, *y.arg);
        } else {
          return x.op == y.op && same(*x.lhs, *y.lhs) && same(*x.rhs, *y.rhs);
        }
      },
      a.data);
}

}  // namespace

std::string_view to_string(TokenKind kind) {
  switch (kind) {
    case TokenKind::Number:
      return "Number";
    case TokenKind::Ident:
      return "Ident";
    case TokenKind::Plus:
      return "Plus";
    case TokenKind::Minus:
      return "Minus";
    case TokenKind::Star:
      return "Star";
    case TokenKind::Slash:
      return "Slash";
    case TokenKind::Caret:
      return "Caret";
    case TokenKind::LParen:
      return "LParen";
    case TokenKind::RParen:
      return "RParen";
    case TokenKind::Comma:
      return "Comma";
  }
  return "?";
}

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < src.size()) {
    const char c = src[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (is_digit(c)) {
      while (i < src.size() && is_digit(src[i])) ++i;
      if (i < src.size() && src[i] == '.') {
        ++i;
        while (i < src.size() && is_digit(src[i])) ++i;
      }
      tokens.push_back({TokenKind::Number,
                        std::string(src.substr(start, i - start)), start});
      continue;
    }
    if (is_lower(c)) {
      while (i < src.size() && is_lower(src[i])) ++i;
      tokens.push_back({TokenKind::Ident,
                        std::string(src.substr(start, i - start)), start});
      continue;
    }
    TokenKind kind;
    switch (c) {
      case '+':
        kind = TokenKind::Plus;
        break;
      case '-':
        kind = TokenKind::Minus;
        break;
      case '*':
        kind = TokenKind::Star;
        break;
      case '/':
        kind = TokenKind::Slash;
        break;
      case '^':
        kind = TokenKind::Caret;
        break;
      case '(':
        kind = TokenKind::LParen;
        break;
      case ')':
        kind = TokenKind::RParen;
        break;
      case ',':
        kind = TokenKind::Comma;
        break;
      default:
        throw LexError(std::string("unexpected character '") + c + "'", i);
    }
    tokens.push_back({kind, std::string(1, c), start});
    ++i;
  }
  return tokens;
}

Expr parse(std::span<const Token> tokens) {
  return Expr(Parser(tokens).parse_all());
}

Expr parse_expression(std::string_view src) {
  const auto tokens = tokenize(src);
  return parse(tokens);
}

Complex Expr::operator()(std::int64_t k) const { return evaluate(*root_, k); }

std::string Expr::to_string() const { return print(*root_); }

bool operator==(const Expr& a, const Expr& b) { return same(*a.root_, *b.root_); }

int detect_period(const Expr& e, int q_max, double tol) {
  if (q_max < 2) throw InvalidParameter("q_max must be >= 2");
  const std::int64_t window = 4 * static_cast<std::int64_t>(q_max);
  std::vector<Complex> samples(static_cast<std::size_t>(window + q_max + 1));
  for (std::size_t k = 0; k < samples.size(); ++k) {
    samples[k] = e(static_cast<std::int64_t>(k));
  }
  for (int q = 1; q <= q_max; ++q) {
    bool periodic = true;
    for (std::int64_t k = 0; k <= window && periodic; ++k) {
      const auto i = static_cast<std::size_t>(k);
      periodic = std::abs(samples[i + static_cast<std::size_t>(q)] -
                          samples[i]) <= tol;
    }
    if (periodic) return q;
  }
  throw NotPeriodicError("no period <= " + std::to_string(q_max) + " found");
}

PeriodicWeight weight_from_expression(const Expr& e, int q_max, double tol) {
  const int q = detect_period(e, q_max, tol);
  const int lifted = q == 1 ? 2 : q;
  std::vector<Complex> values(static_cast<std::size_t>(lifted));
  for (int p = 0; p < lifted; ++p) {
    Complex v = e(p);
    if (std::abs(v.real()) < 1e-14) v.real(0.0);
    if (std::abs(v.imag()) < 1e-14) v.imag(0.0);
    values[static_cast<std::size_t>(p)] = v;
  }
  return PeriodicWeight(std::move(values));
}

}  // namespace persum
