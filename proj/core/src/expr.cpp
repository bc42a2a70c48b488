#include "ga3/expr.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>
#include <utility>

namespace ga3::expr {

namespace {

struct SymbolEntry {
  std::string_view name;
  Symbol symbol;
};

constexpr std::array<SymbolEntry, 11> kSymbols{{
    {"e1", Symbol::E1},
    {"e2", Symbol::E2},
    {"e3", Symbol::E3},
    {"e12", Symbol::E12},
    {"e13", Symbol::E13},
    {"e23", Symbol::E23},
    {"e123", Symbol::E123},
    {"i", Symbol::I},
    {"u+", Symbol::UPlus},
    {"u-", Symbol::UMinus},
    {"pi", Symbol::Pi},
}};

struct FunctionEntry {
  std::string_view name;
  UnaryOp op;
};

constexpr std::array<FunctionEntry, 5> kFunctions{{
    {"exp", UnaryOp::Exp},
    {"rev", UnaryOp::Rev},
    {"inv", UnaryOp::Inv},
    {"gi", UnaryOp::GradeInvolution},
    {"cc", UnaryOp::CliffordConj},
}};

enum class Tok { Number, Ident, Plus, Minus, Star, Bar, Caret, Slash, LParen, RParen, Comma, End };

struct Token {
  Tok kind;
  std::string_view text;
  std::size_t pos;
  double number = 0.0;
};

std::string describe(const Token& t) {
  if (t.kind == Tok::End) return "end of input";
  return "'" + std::string(t.text) + "'";
}

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  Token next() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    const std::size_t start = pos_;
    if (pos_ >= src_.size()) return {Tok::End, {}, start};
    const char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number(start);
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return ident(start);
    ++pos_;
    const std::string_view text = src_.substr(start, 1);
    switch (c) {
      case '+': return {Tok::Plus, text, start};
      case '-': return {Tok::Minus, text, start};
      case '*': return {Tok::Star, text, start};
      case '|': return {Tok::Bar, text, start};
      case '^': return {Tok::Caret, text, start};
      case '/': return {Tok::Slash, text, start};
      case '(': return {Tok::LParen, text, start};
      case ')': return {Tok::RParen, text, start};
      case ',': return {Tok::Comma, text, start};
      default: throw SyntaxError(start, "an expression, found '" + std::string(text) + "'");
    }
  }

 private:
  Token number(std::size_t start) {
    bool digits = false;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
      ++pos_;
      digits = true;
    }
    if (pos_ < src_.size() && src_[pos_] == '.') {
      ++pos_;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        ++pos_;
        digits = true;
      }
    }
    if (!digits) throw SyntaxError(start, "a digit");
    const std::string_view text = src_.substr(start, pos_ - start);
    Token t{Tok::Number, text, start};
    const auto [ptr, ec] =
        std::from_chars(text.data(), text.data() + text.size(), t.number, std::chars_format::fixed);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
      throw SyntaxError(start, "a number");
    }
    return t;
  }

  Token ident(std::size_t start) {
    while (pos_ < src_.size() &&
           (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
      ++pos_;
    }
    // u+ and u- are single tokens when the sign immediately follows.
    if (pos_ - start == 1 && src_[start] == 'u' && pos_ < src_.size() &&
        (src_[pos_] == '+' || src_[pos_] == '-')) {
      ++pos_;
    }
    return {Tok::Ident, src_.substr(start, pos_ - start), start};
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

class Parser {
 public:
  explicit Parser(std::string_view src) : lexer_(src) { advance(); }

  ExprPtr parse_all() {
    ExprPtr e = expression();
    if (cur_.kind != Tok::End) {
      throw SyntaxError(cur_.pos, "an operator or end of input, found " + describe(cur_));
    }
    return e;
  }

 private:
  void advance() { cur_ = lexer_.next(); }

  void expect(Tok kind, std::string_view what) {
    if (cur_.kind != kind) {
      throw SyntaxError(cur_.pos, std::string(what) + ", found " + describe(cur_));
    }
    advance();
  }

  ExprPtr expression() {
    ExprPtr lhs = term();
    while (cur_.kind == Tok::Plus || cur_.kind == Tok::Minus) {
      const BinaryOp op = cur_.kind == Tok::Plus ? BinaryOp::Add : BinaryOp::Sub;
      const std::size_t pos = cur_.pos;
      advance();
      lhs = Expr::binary(op, std::move(lhs), term(), pos);
    }
    return lhs;
  }

  ExprPtr term() {
    ExprPtr lhs = unary();
    for (;;) {
      BinaryOp op;
      switch (cur_.kind) {
        case Tok::Star: op = BinaryOp::Mul; break;
        case Tok::Bar: op = BinaryOp::Inner; break;
        case Tok::Caret: op = BinaryOp::Outer; break;
        case Tok::Slash: op = BinaryOp::Div; break;
        default: return lhs;
      }
      const std::size_t pos = cur_.pos;
      advance();
      lhs = Expr::binary(op, std::move(lhs), unary(), pos);
    }
  }

  ExprPtr unary() {
    if (cur_.kind == Tok::Minus) {
      const std::size_t pos = cur_.pos;
      advance();
      return Expr::unary(UnaryOp::Neg, unary(), pos);
    }
    return primary();
  }

  ExprPtr primary() {
    const Token t = cur_;
    switch (t.kind) {
      case Tok::Number:
        advance();
        return Expr::literal(t.number, t.pos);
      case Tok::LParen: {
        advance();
        ExprPtr e = expression();
        expect(Tok::RParen, "')'");
        return e;
      }
      case Tok::Ident:
        advance();
        return identifier(t);
      default:
        throw SyntaxError(t.pos, "an expression, found " + describe(t));
    }
  }

  ExprPtr identifier(const Token& t) {
    for (const auto& s : kSymbols) {
      if (s.name == t.text) return Expr::symbol(s.symbol, t.pos);
    }
    if (t.text == "grade") {
      expect(Tok::LParen, "'('");
      ExprPtr operand = expression();
      expect(Tok::Comma, "','");
      ExprPtr k = expression();
      expect(Tok::RParen, "')'");
      return Expr::binary(BinaryOp::Grade, std::move(operand), std::move(k), t.pos);
    }
    for (const auto& f : kFunctions) {
      if (f.name == t.text) {
        expect(Tok::LParen, "'('");
        ExprPtr operand = expression();
        expect(Tok::RParen, "')'");
        return Expr::unary(f.op, std::move(operand), t.pos);
      }
    }
    throw UnknownSymbol(std::string(t.text), t.pos);
  }

  Lexer lexer_;
  Token cur_{Tok::End, {}, 0};
};

Multivector symbol_value(Symbol s) {
  switch (s) {
    case Symbol::E1: return basis::e1;
    case Symbol::E2: return basis::e2;
    case Symbol::E3: return basis::e3;
    case Symbol::E12: return basis::e12;
    case Symbol::E13: return basis::e13;
    case Symbol::E23: return basis::e23;
    case Symbol::E123:
    case Symbol::I: return basis::e123;
    case Symbol::UPlus: return basis::u_plus;
    case Symbol::UMinus: return basis::u_minus;
    case Symbol::Pi: return Multivector(std::numbers::pi);
  }
  return {};
}

int grade_index(const Multivector& k, std::size_t pos) {
  Multivector scalar_only = k;
  scalar_only[Blade::Scalar] = 0.0;
  const double v = k[Blade::Scalar];
  if (scalar_only.max_norm() != 0.0 || v != std::floor(v) || v < 0.0 || v > 3.0) {
    throw EvalError(Error(Errc::GradeOutOfRange, "grade index must be an integer in 0..3"), pos);
  }
  return static_cast<int>(v);
}

struct Evaluator {
  Multivector operator()(const Literal& l) const { return Multivector(l.value); }
  Multivector operator()(const SymbolRef& s) const { return symbol_value(s.symbol); }

  Multivector operator()(const Unary& u) const {
    const Multivector x = evaluate(*u.operand);
    try {
      switch (u.op) {
        case UnaryOp::Neg: return -x;
        case UnaryOp::Rev: return reverse(x);
        case UnaryOp::Inv: return inverse(x);
        case UnaryOp::GradeInvolution: return grade_involution(x);
        case UnaryOp::CliffordConj: return clifford_conjugation(x);
        case UnaryOp::Exp: return exp(x);
      }
    } catch (const Error& err) {
      throw EvalError(err, pos);
    }
    return {};
  }

  Multivector operator()(const Binary& b) const {
    const Multivector lhs = evaluate(*b.lhs);
    const Multivector rhs = evaluate(*b.rhs);
    try {
      switch (b.op) {
        case BinaryOp::Add: return lhs + rhs;
        case BinaryOp::Sub: return lhs - rhs;
        case BinaryOp::Mul: return lhs * rhs;
        case BinaryOp::Inner: return inner_product(lhs, rhs);
        case BinaryOp::Outer: return outer_product(lhs, rhs);
        case BinaryOp::Div: return lhs * inverse(rhs);
        case BinaryOp::Grade: return grade(lhs, grade_index(rhs, b.rhs->position()));
      }
    } catch (const Error& err) {
      throw EvalError(err, pos);
    }
    return {};
  }

  std::size_t pos;
};

// Binding strength used by the printer: 1 additive, 2 multiplicative,
// 3 prefix minus, 4 atoms and calls.
int precedence(const Expr& e) {
  return std::visit(
      [](const auto& n) -> int {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Binary>) {
          if (n.op == BinaryOp::Add || n.op == BinaryOp::Sub) return 1;
          if (n.op == BinaryOp::Grade) return 4;
          return 2;
        } else if constexpr (std::is_same_v<T, Unary>) {
          return n.op == UnaryOp::Neg ? 3 : 4;
        } else {
          return 4;
        }
      },
      e.node());
}

std::string format_literal(double v) {
  std::array<char, 400> buf{};
  const auto [end, ec] =
      std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::fixed);
  return std::string(buf.data(), end);
}

std::string wrap(const Expr& e, bool parens) {
  std::string s = print(e);
  return parens ? "(" + s + ")" : s;
}

}  // namespace

std::string_view spelling(Symbol s) {
  for (const auto& e : kSymbols) {
    if (e.symbol == s) return e.name;
  }
  return "?";
}

std::string_view spelling(UnaryOp op) {
  if (op == UnaryOp::Neg) return "-";
  for (const auto& f : kFunctions) {
    if (f.op == op) return f.name;
  }
  return "?";
}

std::string_view spelling(BinaryOp op) {
  switch (op) {
    case BinaryOp::Add: return "+";
    case BinaryOp::Sub: return "-";
    case BinaryOp::Mul: return "*";
    case BinaryOp::Inner: return "|";
    case BinaryOp::Outer: return "^";
    case BinaryOp::Div: return "/";
    case BinaryOp::Grade: return "grade";
  }
  return "?";
}

ExprPtr Expr::literal(double v, std::size_t pos) { return std::make_unique<Expr>(Literal{v}, pos); }

ExprPtr Expr::symbol(Symbol s, std::size_t pos) {
  return std::make_unique<Expr>(SymbolRef{s}, pos);
}

ExprPtr Expr::unary(UnaryOp op, ExprPtr operand, std::size_t pos) {
  return std::make_unique<Expr>(Unary{op, std::move(operand)}, pos);
}

ExprPtr Expr::binary(BinaryOp op, ExprPtr lhs, ExprPtr rhs, std::size_t pos) {
  return std::make_unique<Expr>(Binary{op, std::move(lhs), std::move(rhs)}, pos);
}

bool operator==(const Expr& a, const Expr& b) {
  if (a.node_.index() != b.node_.index()) return false;
  return std::visit(
      [&b](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        const T& y = std::get<T>(b.node_);
        if constexpr (std::is_same_v<T, Literal>) {
          return x.value == y.value;
        } else if constexpr (std::is_same_v<T, SymbolRef>) {
          return x.symbol == y.symbol;
        } else if constexpr (std::is_same_v<T, Unary>) {
          return x.op == y.op && *x.operand == *y.operand;
        } else {
          return x.op == y.op && *x.lhs == *y.lhs && *x.rhs == *y.rhs;
        }
      },
      a.node_);
}

ExprPtr parse(std::string_view source) { return Parser(source).parse_all(); }

Multivector evaluate(const Expr& e) { return std::visit(Evaluator{e.position()}, e.node()); }

std::string print(const Expr& e) {
  return std::visit(
      [&e](const auto& n) -> std::string {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Literal>) {
          return format_literal(n.value);
        } else if constexpr (std::is_same_v<T, SymbolRef>) {
          return std::string(spelling(n.symbol));
        } else if constexpr (std::is_same_v<T, Unary>) {
          if (n.op == UnaryOp::Neg) return "-" + wrap(*n.operand, precedence(*n.operand) < 3);
          return std::string(spelling(n.op)) + "(" + print(*n.operand) + ")";
        } else {
          if (n.op == BinaryOp::Grade) {
            return "grade(" + print(*n.lhs) + ", " + print(*n.rhs) + ")";
          }
          const int p = precedence(e);
          return wrap(*n.lhs, precedence(*n.lhs) < p) + " " + std::string(spelling(n.op)) + " " +
                 wrap(*n.rhs, precedence(*n.rhs) <= p);
        }
      },
      e.node());
}

std::string caret_diagnostic(std::string_view source, const ExprError& err) {
  std::string out(source);
  out += '\n';
  out.append(std::min(err.position(), source.size()), ' ');
  out += "^\n";
  out += err.what();
  return out;
}

}  // namespace ga3::expr
