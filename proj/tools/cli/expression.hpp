#pragma once

// Integrand expressions in x:
//   number | x | (e) | e+e | e-e | e*e | e/e | -e | e^n (integer n) | f(e)
// with f in {sin, cos, exp, ln, sqrt}. Precedence ^ > unary minus > * / > + -;
// binary operators associate left, ^ to the right.

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "osci/cheb.hpp"
#include "osci/error.hpp"

namespace osci::cli {

enum class Op { number, var, add, sub, mul, div, neg, pow, sin, cos, exp, ln, sqrt };

struct Node;
using Expr = std::shared_ptr<const Node>;

struct Node {
  Op op;
  double value = 0.0;  // number
  int exponent = 0;    // pow
  Expr a;
  Expr b;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : Error(Stage::parse, what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

Expr parse_expression(std::string_view text);

/// Text that parses back to an identical tree.
std::string to_string(const Expr& e);

bool equal(const Expr& a, const Expr& b);

double evaluate(const Expr& e, double x);

/// d/dx with light simplification (constant folding, 0 and 1 elimination).
Expr derivative(const Expr& e);

/// Derivatives of orders 0..max_order.
std::vector<Expr> derivatives(const Expr& e, int max_order);

/// Throws DomainError (Stage::parse) if e or any derivative up to max_order is
/// not finite at one of `probes` evenly spaced points of [0, 1].
void validate(const Expr& e, int max_order, int probes = 101);

/// Integrand with the symbolic derivatives as endpoint derivatives.
cheb::Integrand make_integrand(const Expr& e, int max_order);

struct Builtin {
  std::string_view name;
  std::string_view text;
};

/// ex41, ex42, ex43 and one.
const std::vector<Builtin>& builtins();

/// Builtin name or expression text.
Expr resolve_integrand(std::string_view name_or_text);

}  // namespace osci::cli
