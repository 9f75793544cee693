#include "expression.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace osci::cli {
namespace {

Expr make(Op op, Expr a = nullptr, Expr b = nullptr) {
  return std::make_shared<const Node>(Node{op, 0.0, 0, std::move(a), std::move(b)});
}

Expr num(double v) { return std::make_shared<const Node>(Node{Op::number, v, 0, nullptr, nullptr}); }

Expr power(Expr base, int n) {
  return std::make_shared<const Node>(Node{Op::pow, 0.0, n, std::move(base), nullptr});
}

bool is_num(const Expr& e, double v) { return e->op == Op::number && e->value == v; }

constexpr long long kMaxExponent = 1 << 20;

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  Expr parse() {
    skip();
    if (pos_ == s_.size()) throw ParseError(0, "empty expression");
    Expr e = sum();
    skip();
    if (pos_ != s_.size()) throw ParseError(pos_, std::string("unexpected '") + s_[pos_] + "'");
    return e;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) {
      throw ParseError(pos_, pos_ < s_.size() ? std::string("expected '") + c + "' but found '" + s_[pos_] + "'"
                                              : std::string("expected '") + c + "' at end of input");
    }
  }

  Expr sum() {
    Expr e = product();
    for (;;) {
      if (accept('+')) {
        e = make(Op::add, e, product());
      } else if (accept('-')) {
        e = make(Op::sub, e, product());
      } else {
        return e;
      }
    }
  }

  Expr product() {
    Expr e = unary();
    for (;;) {
      if (accept('*')) {
        e = make(Op::mul, e, unary());
      } else if (accept('/')) {
        e = make(Op::div, e, unary());
      } else {
        return e;
      }
    }
  }

  Expr unary() {
    if (accept('-')) return make(Op::neg, unary());
    return pow_expr();
  }

  Expr pow_expr() {
    Expr base = atom();
    if (!accept('^')) return base;
    return power(base, integer_exponent());
  }

  // Right-associative chain of integer literals: 2^3 in x^2^3 is folded to 8.
  int integer_exponent() {
    skip();
    const std::size_t at = pos_;
    const bool negative = accept('-');
    skip();
    std::size_t end = pos_;
    while (end < s_.size() && std::isdigit(static_cast<unsigned char>(s_[end]))) ++end;
    const bool fractional = end < s_.size() && (s_[end] == '.' || s_[end] == 'e' || s_[end] == 'E');
    if (end == pos_ || fractional) throw ParseError(at, "exponent must be an integer literal");
    long long n = 0;
    const auto res = std::from_chars(s_.data() + pos_, s_.data() + end, n);
    if (res.ec != std::errc{} || n > kMaxExponent) throw ParseError(at, "exponent out of range");
    pos_ = end;
    if (accept('^')) {
      const int m = integer_exponent();
      if (m < 0) throw ParseError(at, "exponent must be an integer literal");
      long long folded = 1;
      for (int i = 0; i < m; ++i) {
        folded *= n;
        if (folded > kMaxExponent) throw ParseError(at, "exponent out of range");
      }
      n = folded;
    }
    return static_cast<int>(negative ? -n : n);
  }

  Expr atom() {
    skip();
    if (pos_ == s_.size()) throw ParseError(pos_, "unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Expr e = sum();
      expect(')');
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t at = pos_;
      std::size_t end = pos_;
      while (end < s_.size() && std::isalnum(static_cast<unsigned char>(s_[end]))) ++end;
      const std::string_view id = s_.substr(pos_, end - pos_);
      pos_ = end;
      if (id == "x") return make(Op::var);
      Op op;
      if (id == "sin") {
        op = Op::sin;
      } else if (id == "cos") {
        op = Op::cos;
      } else if (id == "exp") {
        op = Op::exp;
      } else if (id == "ln") {
        op = Op::ln;
      } else if (id == "sqrt") {
        op = Op::sqrt;
      } else {
        throw ParseError(at, "unknown identifier '" + std::string(id) + "'");
      }
      expect('(');
      Expr arg = sum();
      expect(')');
      return make(op, arg);
    }
    throw ParseError(pos_, std::string("unexpected '") + c + "'");
  }

  Expr number() {
    const std::size_t at = pos_;
    std::size_t end = pos_;
    while (end < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[end])) || s_[end] == '.')) ++end;
    if (end < s_.size() && (s_[end] == 'e' || s_[end] == 'E')) {
      std::size_t e = end + 1;
      if (e < s_.size() && (s_[e] == '+' || s_[e] == '-')) ++e;
      if (e < s_.size() && std::isdigit(static_cast<unsigned char>(s_[e]))) {
        end = e;
        while (end < s_.size() && std::isdigit(static_cast<unsigned char>(s_[end]))) ++end;
      }
    }
    double v = 0.0;
    const auto res = std::from_chars(s_.data() + at, s_.data() + end, v);
    if (res.ec != std::errc{} || res.ptr != s_.data() + end) throw ParseError(at, "malformed number");
    pos_ = end;
    return num(v);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

int precedence(const Expr& e) {
  switch (e->op) {
    case Op::add:
    case Op::sub: return 1;
    case Op::mul:
    case Op::div: return 2;
    case Op::neg: return 3;
    case Op::pow: return 4;
    case Op::number: return e->value < 0.0 ? 3 : 5;
    default: return 5;
  }
}

std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", std::abs(v));
  std::string out = buf;
  if (out.find_first_of("0123456789") == std::string::npos) {
    throw DomainError(Stage::parse, "cannot print a non-finite constant");
  }
  return v < 0.0 ? "-" + out : out;
}

std::string wrap(const Expr& e, int min_prec) {
  const std::string s = to_string(e);
  return precedence(e) >= min_prec ? s : "(" + s + ")";
}

// Simplifying constructors used by the derivative.
Expr s_add(Expr a, Expr b) {
  if (is_num(a, 0.0)) return b;
  if (is_num(b, 0.0)) return a;
  if (a->op == Op::number && b->op == Op::number) return num(a->value + b->value);
  return make(Op::add, a, b);
}

Expr s_neg(Expr a) {
  if (a->op == Op::number) return num(-a->value);
  if (a->op == Op::neg) return a->a;
  return make(Op::neg, a);
}

Expr s_sub(Expr a, Expr b) {
  if (is_num(b, 0.0)) return a;
  if (is_num(a, 0.0)) return s_neg(b);
  if (a->op == Op::number && b->op == Op::number) return num(a->value - b->value);
  return make(Op::sub, a, b);
}

Expr s_mul(Expr a, Expr b) {
  if (is_num(a, 0.0) || is_num(b, 0.0)) return num(0.0);
  if (is_num(a, 1.0)) return b;
  if (is_num(b, 1.0)) return a;
  if (a->op == Op::number && b->op == Op::number) return num(a->value * b->value);
  if (b->op == Op::number) return make(Op::mul, b, a);
  return make(Op::mul, a, b);
}

Expr s_div(Expr a, Expr b) {
  if (is_num(a, 0.0)) return num(0.0);
  if (is_num(b, 1.0)) return a;
  return make(Op::div, a, b);
}

Expr s_pow(Expr a, int n) {
  if (n == 0) return num(1.0);
  if (n == 1) return a;
  return power(a, n);
}

}  // namespace

Expr parse_expression(std::string_view text) { return Parser(text).parse(); }

std::string to_string(const Expr& e) {
  switch (e->op) {
    case Op::number: return format_number(e->value);
    case Op::var: return "x";
    case Op::add: return wrap(e->a, 1) + " + " + wrap(e->b, 2);
    case Op::sub: return wrap(e->a, 1) + " - " + wrap(e->b, 2);
    case Op::mul: return wrap(e->a, 2) + "*" + wrap(e->b, 3);
    case Op::div: return wrap(e->a, 2) + "/" + wrap(e->b, 3);
    case Op::neg: return "-" + wrap(e->a, 3);
    case Op::pow: return wrap(e->a, 5) + "^" + std::to_string(e->exponent);
    case Op::sin: return "sin(" + to_string(e->a) + ")";
    case Op::cos: return "cos(" + to_string(e->a) + ")";
    case Op::exp: return "exp(" + to_string(e->a) + ")";
    case Op::ln: return "ln(" + to_string(e->a) + ")";
    case Op::sqrt: return "sqrt(" + to_string(e->a) + ")";
  }
  return {};
}

bool equal(const Expr& a, const Expr& b) {
  if (!a || !b) return !a && !b;
  if (a->op != b->op) return false;
  if (a->op == Op::number && a->value != b->value) return false;
  if (a->op == Op::pow && a->exponent != b->exponent) return false;
  return equal(a->a, b->a) && equal(a->b, b->b);
}

double evaluate(const Expr& e, double x) {
  switch (e->op) {
    case Op::number: return e->value;
    case Op::var: return x;
    case Op::add: return evaluate(e->a, x) + evaluate(e->b, x);
    case Op::sub: return evaluate(e->a, x) - evaluate(e->b, x);
    case Op::mul: return evaluate(e->a, x) * evaluate(e->b, x);
    case Op::div: return evaluate(e->a, x) / evaluate(e->b, x);
    case Op::neg: return -evaluate(e->a, x);
    case Op::pow: return std::pow(evaluate(e->a, x), e->exponent);
    case Op::sin: return std::sin(evaluate(e->a, x));
    case Op::cos: return std::cos(evaluate(e->a, x));
    case Op::exp: return std::exp(evaluate(e->a, x));
    case Op::ln: return std::log(evaluate(e->a, x));
    case Op::sqrt: return std::sqrt(evaluate(e->a, x));
  }
  return 0.0;
}

Expr derivative(const Expr& e) {
  switch (e->op) {
    case Op::number: return num(0.0);
    case Op::var: return num(1.0);
    case Op::add: return s_add(derivative(e->a), derivative(e->b));
    case Op::sub: return s_sub(derivative(e->a), derivative(e->b));
    case Op::mul:
      return s_add(s_mul(derivative(e->a), e->b), s_mul(e->a, derivative(e->b)));
    case Op::div: {
      const Expr num_part = s_sub(s_mul(derivative(e->a), e->b), s_mul(e->a, derivative(e->b)));
      return s_div(num_part, s_pow(e->b, 2));
    }
    case Op::neg: return s_neg(derivative(e->a));
    case Op::pow:
      return s_mul(s_mul(num(e->exponent), s_pow(e->a, e->exponent - 1)), derivative(e->a));
    case Op::sin: return s_mul(make(Op::cos, e->a), derivative(e->a));
    case Op::cos: return s_neg(s_mul(make(Op::sin, e->a), derivative(e->a)));
    case Op::exp: return s_mul(e, derivative(e->a));
    case Op::ln: return s_div(derivative(e->a), e->a);
    case Op::sqrt: return s_div(derivative(e->a), s_mul(num(2.0), e));
  }
  return num(0.0);
}

std::vector<Expr> derivatives(const Expr& e, int max_order) {
  std::vector<Expr> out{e};
  for (int l = 1; l <= max_order; ++l) out.push_back(derivative(out.back()));
  return out;
}

void validate(const Expr& e, int max_order, int probes) {
  const std::vector<Expr> ds = derivatives(e, max_order);
  for (int i = 0; i < probes; ++i) {
    const double x = probes == 1 ? 0.5 : static_cast<double>(i) / (probes - 1);
    for (std::size_t l = 0; l < ds.size(); ++l) {
      if (!std::isfinite(evaluate(ds[l], x))) {
        throw DomainError(Stage::parse, (l == 0 ? std::string("integrand") : "derivative " + std::to_string(l)) +
                                            " is not finite at x = " + format_number(x));
      }
    }
  }
}

cheb::Integrand make_integrand(const Expr& e, int max_order) {
  auto ds = std::make_shared<const std::vector<Expr>>(derivatives(e, max_order));
  return cheb::Integrand(
      [ds](double x) { return cheb::cplx{evaluate((*ds)[0], x), 0.0}; },
      [ds, e](int ell, double endpoint) {
        if (ell < static_cast<int>(ds->size())) return cheb::cplx{evaluate((*ds)[ell], endpoint), 0.0};
        Expr d = ds->back();
        for (int l = static_cast<int>(ds->size()) - 1; l < ell; ++l) d = derivative(d);
        return cheb::cplx{evaluate(d, endpoint), 0.0};
      });
}

const std::vector<Builtin>& builtins() {
  static const std::vector<Builtin> list{
      {"ex41", "cos(x)"},
      {"ex42", "1/(1 + 16*x^2)"},
      {"ex43", "1/(1 + (1 + x)^2)"},
      {"one", "1"},
  };
  return list;
}

Expr resolve_integrand(std::string_view name_or_text) {
  for (const Builtin& b : builtins()) {
    if (b.name == name_or_text) return parse_expression(b.text);
  }
  return parse_expression(name_or_text);
}

}  // namespace osci::cli
