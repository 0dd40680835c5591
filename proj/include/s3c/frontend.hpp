#pragma once

#include <cctype>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "s3c/render.hpp"

namespace s3c {

// ---------------------------------------------------------------- lexer

struct Token {
  enum Kind { number, ident, punct, end } kind = end;
  std::string text;
  int line = 1, col = 1;
};

class ParseError : public Error {
 public:
  ParseError(int line, int col, const std::string& msg, std::set<std::string> expected = {})
      : Error(format(line, col, msg, expected)), line_(line), col_(col), expected_(std::move(expected)) {}

  int line() const { return line_; }
  int col() const { return col_; }
  const std::set<std::string>& expected() const { return expected_; }

 private:
  static std::string format(int line, int col, const std::string& msg, const std::set<std::string>& exp) {
    std::string s = "parse error at line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + msg;
    if (!exp.empty()) {
      s += "; expected one of:";
      for (auto& e : exp) s += " " + e;
    }
    return s;
  }
  int line_, col_;
  std::set<std::string> expected_;
};

inline std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t q = 0; q < n; ++q, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < src.size()) {
    unsigned char ch = static_cast<unsigned char>(src[i]);
    if (std::isspace(ch)) {
      advance(1);
      continue;
    }
    Token t;
    t.line = line;
    t.col = col;
    std::size_t j = i;
    if (std::isdigit(ch)) {
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      t.kind = Token::number;
    } else if (std::isalpha(ch)) {
      while (j < src.size() && std::isalnum(static_cast<unsigned char>(src[j]))) ++j;
      std::string_view w = src.substr(i, j - i);
      if ((w == "z1" || w == "z2") && j < src.size() && src[j] == '~') ++j;
      t.kind = Token::ident;
    } else if (std::string_view("+-*/()[],;|^").find(static_cast<char>(ch)) != std::string_view::npos) {
      j = i + 1;
      t.kind = Token::punct;
    } else {
      std::string shown = std::isprint(ch) ? std::string(1, static_cast<char>(ch)) : "\\x" + std::to_string(ch);
      throw ParseError(line, col, "unexpected character '" + shown + "'");
    }
    t.text = std::string(src.substr(i, j - i));
    advance(j - i);
    out.push_back(std::move(t));
  }
  Token e;
  e.line = line;
  e.col = col;
  out.push_back(e);
  return out;
}

// ---------------------------------------------------------------- AST

struct Expr {
  enum Kind { scalar, atom, basis, vpoly, coord, func, product, sum, neg, bracket, tensor, central, nder, literal };
  Kind kind = scalar;
  std::string name;            // atom, function, coordinate or matrix name
  GQ value;                    // scalar literal
  std::vector<int> ints;       // basis / v / power / matrix / ak indices
  std::vector<char> signs;     // sum: '+' or '-' per child
  std::vector<std::shared_ptr<const Expr>> kids;
};

using ExprPtr = std::shared_ptr<const Expr>;

namespace detail {

class Parser {
 public:
  explicit Parser(std::string_view src) : toks_(tokenize(src)) {}

  ExprPtr parse_all() {
    ExprPtr e = expr();
    const Token& t = peek();
    if (t.kind != Token::end) {
      if (t.text == ")" || t.text == "]") throw ParseError(t.line, t.col, "unbalanced '" + t.text + "'");
      fail({"+", "-", "*", "end of input"});
    }
    return e;
  }

 private:
  static constexpr int max_depth = 256;

  const Token& peek(std::size_t ahead = 0) const { return toks_[std::min(pos_ + ahead, toks_.size() - 1)]; }
  const Token& next() {
    const Token& t = toks_[pos_];
    if (pos_ + 1 < toks_.size()) ++pos_;
    return t;
  }
  bool is(const char* p) const { return peek().kind == Token::punct && peek().text == p; }
  bool accept(const char* p) {
    if (!is(p)) return false;
    next();
    return true;
  }

  [[noreturn]] void fail(std::set<std::string> expected) const {
    const Token& t = peek();
    std::string got = t.kind == Token::end ? "end of input" : "'" + t.text + "'";
    throw ParseError(t.line, t.col, "unexpected " + got, std::move(expected));
  }

  void expect(const char* p) {
    if (accept(p)) return;
    std::string_view s(p);
    if ((s == ")" || s == "]") && !open_.empty() && peek().kind == Token::end) {
      const Token& o = open_.back();
      throw ParseError(o.line, o.col, "unbalanced '" + o.text + "' (no matching '" + std::string(s) + "')", {p});
    }
    fail({p});
  }

  void open() {
    open_.push_back(peek());
    next();
  }
  void close(const char* p) {
    expect(p);
    open_.pop_back();
  }

  int integer() {
    if (peek().kind != Token::number) fail({"integer"});
    const std::string& s = next().text;
    if (s.size() > 6) throw ParseError(peek().line, peek().col, "integer too large: " + s);
    return std::stoi(s);
  }

  struct Depth {
    Parser& p;
    explicit Depth(Parser& q) : p(q) {
      if (++p.depth_ > max_depth) throw ParseError(p.peek().line, p.peek().col, "expression nested too deeply");
    }
    ~Depth() { --p.depth_; }
  };

  ExprPtr expr() {
    Depth guard(*this);
    auto node = std::make_shared<Expr>();
    node->kind = Expr::sum;
    node->signs.push_back('+');
    node->kids.push_back(term());
    while (is("+") || is("-")) {
      node->signs.push_back(next().text[0]);
      node->kids.push_back(term());
    }
    if (node->kids.size() == 1) return node->kids.front();
    return node;
  }

  ExprPtr term() {
    ExprPtr left = factor();
    while (accept("*")) {
      auto node = std::make_shared<Expr>();
      node->kind = Expr::product;
      node->kids = {left, factor()};
      left = node;
    }
    return left;
  }

  bool starts_scalar() const { return peek().kind == Token::number || (peek().kind == Token::ident && peek().text == "i"); }

  bool starts_atom() const {
    const Token& t = peek();
    if (t.kind == Token::punct) return t.text == "(" || t.text == "[";
    return t.kind == Token::ident && t.text != "i";
  }

  ExprPtr factor() {
    Depth guard(*this);
    if (accept("-")) {
      auto node = std::make_shared<Expr>();
      node->kind = Expr::neg;
      node->kids.push_back(factor());
      return node;
    }
    if (starts_scalar()) {
      ExprPtr s = scalar();
      if (!starts_atom()) return s;
      auto node = std::make_shared<Expr>();
      node->kind = Expr::product;
      node->kids = {s, atom()};
      return node;
    }
    if (!starts_atom()) fail(first_set());
    return atom();
  }

  static std::set<std::string> first_set() {
    return {"-", "integer", "i", "(", "[", "I", "J", "kappa", "kappastar", "mu", "lambdastar", "phi", "v",
            "tensor", "ak", "nder", "sigma", "tau", "tr", "Theta0", "Theta1", "Theta2", "n", "Dslash",
            "z1", "z1~", "z2", "z2~"};
  }

  ExprPtr scalar() {
    auto node = std::make_shared<Expr>();
    node->kind = Expr::scalar;
    if (peek().kind == Token::ident) {  // bare "i"
      next();
      node->value = GQ::i();
      return node;
    }
    mpz_class num(next().text), den = 1;
    if (is("/") && peek(1).kind == Token::number) {
      next();
      den = mpz_class(next().text);
      if (den == 0) throw ParseError(peek().line, peek().col, "zero denominator");
    }
    Rational r(mpq_class(num, den));
    if (peek().kind == Token::ident && peek().text == "i") {
      next();
      node->value = GQ(Rational(0), r);
    } else {
      node->value = GQ(r);
    }
    return node;
  }

  ExprPtr atom() {
    auto node = std::make_shared<Expr>();
    if (is("(")) {
      open();
      ExprPtr inner = expr();
      if (accept("|")) {
        node->kind = Expr::literal;
        node->kids = {inner, expr()};
        close(")");
        return node;
      }
      close(")");
      return inner;
    }
    if (is("[")) {
      open();
      node->kind = Expr::bracket;
      ExprPtr l = expr();
      expect(",");
      node->kids = {l, expr()};
      close("]");
      return node;
    }
    const Token& t = next();
    const std::string& w = t.text;
    node->name = w;
    if (w == "I" || w == "J" || w == "kappa" || w == "kappastar" || w == "mu" || w == "lambdastar") {
      node->kind = Expr::atom;
    } else if (w == "z1" || w == "z1~" || w == "z2" || w == "z2~") {
      node->kind = Expr::coord;
      node->ints = {1};
      if (accept("^")) node->ints[0] = integer();
    } else if (w == "phi") {
      node->kind = Expr::basis;
      if (!is("+") && !is("-")) fail({"+", "-"});
      node->name = next().text;
      open_paren();
      node->ints.push_back(integer());
      expect(",");
      node->ints.push_back(integer());
      expect(",");
      node->ints.push_back(integer());
      close(")");
    } else if (w == "v") {
      node->kind = Expr::vpoly;
      open_paren();
      node->ints.push_back(integer());
      expect(";");
      node->ints.push_back(integer());
      expect(",");
      node->ints.push_back(integer());
      close(")");
    } else if (w == "sigma" || w == "tau" || w == "tr" || w == "Theta0" || w == "Theta1" || w == "Theta2" ||
               w == "n" || w == "Dslash") {
      node->kind = Expr::func;
      open_paren();
      node->kids.push_back(expr());
      close(")");
    } else if (w == "tensor") {
      node->kind = Expr::tensor;
      open_paren();
      node->kids.push_back(expr());
      expect(",");
      if (peek().kind != Token::ident || (peek().text != "E" && peek().text != "H")) fail({"E", "H"});
      std::string m = next().text;
      node->ints.push_back(m == "E" ? 0 : 1);
      open_paren();
      node->ints.push_back(integer());
      if (m == "E") {
        expect(",");
        node->ints.push_back(integer());
      }
      close(")");
      close(")");
    } else if (w == "ak") {
      node->kind = Expr::central;
      open_paren();
      node->ints.push_back(integer());
      close(")");
    } else if (w == "nder") {
      node->kind = Expr::nder;
    } else {
      throw ParseError(t.line, t.col, "unknown name '" + w + "'", first_set());
    }
    return node;
  }

  void open_paren() {
    if (!is("(")) fail({"("});
    open();
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  int depth_ = 0;
  std::vector<Token> open_;
};

}  // namespace detail

inline ExprPtr parse(std::string_view text) { return detail::Parser(text).parse_all(); }

// ---------------------------------------------------------------- evaluation

using Value = std::variant<GQ, Spinor, CurrentElement, ExtendedElement>;

inline const char* kind_name(const Value& v) {
  static const char* names[] = {"scalar", "spinor", "current", "extended"};
  return names[v.index()];
}

class EvalError : public Error {
 public:
  using Error::Error;
};

namespace detail {

inline ExtendedElement as_extended(const Value& v) {
  if (auto* c = std::get_if<CurrentElement>(&v)) return ExtendedElement(*c);
  return std::get<ExtendedElement>(v);
}

inline bool is_matrix(const Value& v) { return v.index() >= 2; }

[[noreturn]] inline void kind_error(const char* what, const Value& x, const Value& y) {
  throw EvalError(std::string("cannot ") + what + " " + kind_name(x) + " and " + kind_name(y));
}

inline Value scale(const GQ& k, const Value& v) {
  return std::visit([&](const auto& x) -> Value { return k * x; }, v);
}

class Evaluator {
 public:
  static constexpr int kMaxBasisDegree = 24;

  explicit Evaluator(int n) : n_(n) {
    if (n < 2) throw EvalError("algebra size must be at least 2");
  }

  Value eval(const Expr& e, bool component = false) {
    switch (e.kind) {
      case Expr::scalar: return e.value;
      case Expr::atom: return named(e.name);
      case Expr::basis: {
        BasisIndex b{e.name == "+" ? Sign::plus : Sign::minus, e.ints[0], e.ints[1], e.ints[2]};
        if (!b.valid()) throw EvalError("basis index out of range: phi" + b.str());
        if (b.m > kMaxBasisDegree) throw EvalError("basis degree above " + std::to_string(kMaxBasisDegree));
        return basis_sphere(b);
      }
      case Expr::vpoly:
        if (e.ints[0] > 64 || e.ints[1] + e.ints[2] > 64) throw EvalError("v index too large");
        return Spinor(basis_v(e.ints[0], e.ints[1], e.ints[2]), Poly());
      case Expr::coord: {
        int p = e.ints[0];
        if (p > 64) throw EvalError("exponent too large");
        Monomial m;
        if (e.name == "z1") m.a = p;
        if (e.name == "z1~") m.b = p;
        if (e.name == "z2") m.c = p;
        if (e.name == "z2~") m.d = p;
        return Spinor(Poly::monomial(m), Poly());
      }
      case Expr::func: return func(e.name, eval(*e.kids[0]));
      case Expr::product: return product(eval(*e.kids[0], component), eval(*e.kids[1], component));
      case Expr::neg: return scale(GQ(-1), eval(*e.kids[0], component));
      case Expr::sum: {
        Value acc = eval(*e.kids[0], component);
        for (std::size_t q = 1; q < e.kids.size(); ++q) {
          Value rhs = eval(*e.kids[q], component);
          if (e.signs[q] == '-') rhs = scale(GQ(-1), rhs);
          acc = add(acc, rhs, component);
        }
        return acc;
      }
      case Expr::bracket: return bracket(eval(*e.kids[0]), eval(*e.kids[1]));
      case Expr::tensor: return tensor_of(eval(*e.kids[0]), e.ints);
      case Expr::central:
        if (e.ints[0] < 0 || e.ints[0] > 2) throw EvalError("ak index must be 0, 1 or 2");
        return ExtendedElement::central(n_, e.ints[0]);
      case Expr::nder: return ExtendedElement::derivation(n_);
      case Expr::literal: {
        Poly u = component_of(eval(*e.kids[0], true)), v = component_of(eval(*e.kids[1], true));
        return Spinor(u, v);
      }
    }
    throw EvalError("unknown expression node");
  }

 private:
  static Spinor named(const std::string& w) {
    if (w == "I") return unit_I();
    if (w == "J") return unit_J();
    if (w == "kappa") return kappa();
    if (w == "kappastar") return kappa_star();
    if (w == "mu") return mu();
    return lambda_star();
  }

  static Spinor as_function(const Value& v) {
    if (auto* s = std::get_if<GQ>(&v)) return Spinor(Poly(*s), Poly());
    return std::get<Spinor>(v);
  }

  static Poly component_of(const Value& v) {
    if (auto* s = std::get_if<GQ>(&v)) return Poly(*s);
    if (auto* x = std::get_if<Spinor>(&v)) {
      if (!x->v().is_zero()) throw EvalError("spinor literal components must be functions (p | 0)");
      return x->u();
    }
    throw EvalError(std::string("spinor literal component cannot be ") + kind_name(v));
  }

  Value add(const Value& x, const Value& y, bool component) {
    if (x.index() == y.index()) {
      return std::visit([&](const auto& a) -> Value { return a + std::get<std::decay_t<decltype(a)>>(y); }, x);
    }
    if (is_matrix(x) && is_matrix(y)) return as_extended(x) + as_extended(y);
    bool mixed_scalar = (x.index() == 0 && y.index() == 1) || (x.index() == 1 && y.index() == 0);
    if (component && mixed_scalar) return as_function(x) + as_function(y);
    kind_error("add", x, y);
  }

  Value product(const Value& x, const Value& y) {
    if (auto* k = std::get_if<GQ>(&x)) return scale(*k, y);
    if (auto* k = std::get_if<GQ>(&y)) return scale(*k, x);
    if (x.index() == 1 && y.index() == 1) return spinor_mul(std::get<Spinor>(x), std::get<Spinor>(y));
    if (x.index() == 2 && y.index() == 2) return matrix_mul(std::get<CurrentElement>(x), std::get<CurrentElement>(y));
    kind_error("multiply", x, y);
  }

  Value bracket(const Value& x, const Value& y) {
    if (x.index() == 1 && y.index() == 1) return spinor_bracket(std::get<Spinor>(x), std::get<Spinor>(y));
    if (x.index() == 2 && y.index() == 2)
      return current_bracket(std::get<CurrentElement>(x), std::get<CurrentElement>(y));
    if (is_matrix(x) && is_matrix(y)) return ghat_bracket(as_extended(x), as_extended(y));
    kind_error("bracket", x, y);
  }

  Value func(const std::string& f, const Value& v) {
    if (f == "n") {
      if (auto* x = std::get_if<Spinor>(&v)) return radial_n(*x);
      if (auto* c = std::get_if<CurrentElement>(&v)) return radial_n(*c);
      if (auto* X = std::get_if<ExtendedElement>(&v)) return ExtendedElement(radial_n(X->mat));
      throw EvalError("n expects a spinor, current or extended value, got scalar");
    }
    auto* x = std::get_if<Spinor>(&v);
    if (!x) throw EvalError(f + " expects a spinor, got " + kind_name(v));
    if (f == "sigma") return involution(Involution::sigma, *x);
    if (f == "tau") return involution(Involution::tau, *x);
    if (f == "tr") return Spinor(trace(*x), Poly(), x->space());
    if (f == "Dslash") return dirac(DiracOp::tangential, *x);
    return theta_action(f.back() - '0', *x);
  }

  Value tensor_of(const Value& v, const std::vector<int>& m) {
    Spinor x = as_function_or_spinor(v);
    ScalarMatrix X(n_);
    if (m[0] == 0) {
      int i = m[1], j = m[2];
      if (i < 1 || j < 1 || i > n_ || j > n_) throw EvalError("E(i,j) index out of range for n = " + std::to_string(n_));
      X = ScalarMatrix::unit(n_, i - 1, j - 1);
    } else {
      int i = m[1];
      if (i < 1 || i >= n_) throw EvalError("H(i) index out of range for n = " + std::to_string(n_));
      X = ScalarMatrix::unit(n_, i - 1, i - 1) - ScalarMatrix::unit(n_, i, i);
    }
    return tensor(x, X);
  }

  static Spinor as_function_or_spinor(const Value& v) {
    if (v.index() > 1) throw EvalError(std::string("tensor expects a spinor, got ") + kind_name(v));
    return as_function(v);
  }

  int n_;
};

}  // namespace detail

inline Value eval(const Expr& e, int n = 2) { return detail::Evaluator(n).eval(e); }
inline Value eval(std::string_view text, int n = 2) { return eval(*parse(text), n); }

inline std::string render_text(const Value& v) {
  return std::visit([](const auto& x) { return to_text(x); }, v);
}

inline json render_json(const Value& v) {
  if (auto* s = std::get_if<GQ>(&v)) return s->str();
  return std::visit(
      [](const auto& x) -> json {
        if constexpr (std::is_same_v<std::decay_t<decltype(x)>, GQ>)
          return x.str();
        else
          return to_json(x);
      },
      v);
}

inline std::string render(const Value& v, bool as_json) { return as_json ? render_json(v).dump() : render_text(v); }

}  // namespace s3c
