#pragma once

// A small expression language over G3 multivectors.
//
//   expr    = term { ("+" | "-") term } ;
//   term    = unary { ("*" | "|" | "^" | "/") unary } ;
//   unary   = "-" unary | primary ;
//   primary = number | symbol | call | "(" expr ")" ;
//   call    = ("exp" | "rev" | "inv" | "gi" | "cc") "(" expr ")"
//           | "grade" "(" expr "," expr ")" ;
//   symbol  = "e1" | "e2" | "e3" | "e12" | "e13" | "e23" | "e123" | "i"
//           | "u+" | "u-" | "pi" ;
//   number  = digit { digit } [ "." { digit } ] | "." digit { digit } ;
//
// "*" is the geometric product, "|" and "^" the grade-wise inner and outer
// products, "/" right division by an invertible element. All four share one
// precedence tier and associate to the left, so "a*b|c" is "(a*b)|c".
// Numbers have no exponent part: "2e12" is a syntax error, write "2*e12".

#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ga3/error.hpp"
#include "ga3/multivector.hpp"

namespace ga3::expr {

enum class Symbol { E1, E2, E3, E12, E13, E23, E123, I, UPlus, UMinus, Pi };
enum class UnaryOp { Neg, Rev, Inv, GradeInvolution, CliffordConj, Exp };
enum class BinaryOp { Add, Sub, Mul, Inner, Outer, Div, Grade };

std::string_view spelling(Symbol s);
std::string_view spelling(UnaryOp op);
std::string_view spelling(BinaryOp op);

class Expr;
using ExprPtr = std::unique_ptr<Expr>;

struct Literal {
  double value;
};
struct SymbolRef {
  Symbol symbol;
};
struct Unary {
  UnaryOp op;
  ExprPtr operand;
};
// Grade is stored as a binary node: grade(lhs, rhs).
struct Binary {
  BinaryOp op;
  ExprPtr lhs;
  ExprPtr rhs;
};

class Expr {
 public:
  using Node = std::variant<Literal, SymbolRef, Unary, Binary>;

  Expr(Node node, std::size_t position) : node_(std::move(node)), position_(position) {}

  const Node& node() const { return node_; }
  std::size_t position() const { return position_; }

  static ExprPtr literal(double v, std::size_t pos = 0);
  static ExprPtr symbol(Symbol s, std::size_t pos = 0);
  static ExprPtr unary(UnaryOp op, ExprPtr operand, std::size_t pos = 0);
  static ExprPtr binary(BinaryOp op, ExprPtr lhs, ExprPtr rhs, std::size_t pos = 0);

  // Structural equality; source positions are ignored.
  friend bool operator==(const Expr& a, const Expr& b);

 private:
  Node node_;
  std::size_t position_;
};

class ExprError : public std::runtime_error {
 public:
  ExprError(const std::string& what, std::size_t position)
      : std::runtime_error(what), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class SyntaxError : public ExprError {
 public:
  SyntaxError(std::size_t position, std::string expected)
      : ExprError("syntax error at " + std::to_string(position) + ": expected " + expected,
                  position),
        expected_(std::move(expected)) {}
  const std::string& expected() const noexcept { return expected_; }

 private:
  std::string expected_;
};

class UnknownSymbol : public ExprError {
 public:
  UnknownSymbol(std::string name, std::size_t position)
      : ExprError("unknown symbol '" + name + "' at " + std::to_string(position), position),
        name_(std::move(name)) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

class EvalError : public ExprError {
 public:
  EvalError(const ga3::Error& cause, std::size_t position)
      : ExprError(std::string(to_string(cause.code())) + " at " + std::to_string(position) +
                      ": " + cause.what(),
                  position),
        cause_(cause.code()) {}
  Errc cause() const noexcept { return cause_; }

 private:
  Errc cause_;
};

// Throws SyntaxError or UnknownSymbol.
ExprPtr parse(std::string_view source);

// Throws EvalError.
Multivector evaluate(const Expr& e);

// Minimal-parenthesis rendering; parse(print(e)) is structurally equal to e.
std::string print(const Expr& e);

// Source line followed by a caret under the error position.
std::string caret_diagnostic(std::string_view source, const ExprError& err);

}  // namespace ga3::expr
