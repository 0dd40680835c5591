#pragma once

#include <algorithm>
#include <climits>
#include <compare>
#include <map>
#include <utility>
#include <vector>

#include "s3c/rational.hpp"

namespace s3c {

// z1^a z1~^b z2^c z2~^d |z|^(2s)
struct Monomial {
  int a = 0, b = 0, c = 0, d = 0, s = 0;

  int degree() const { return a + b + c + d; }
  bool is_normal() const { return s == 0 && std::min(c, d) == 0; }
  // Phase charge under the torus action (z1, z2) -> (e^{ix} z1, e^{iy} z2).
  std::pair<int, int> charge() const { return {a - b, c - d}; }
  Monomial conj() const { return {b, a, d, c, s}; }

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

namespace detail {

inline int checked_add(int x, int y) {
  long r = static_cast<long>(x) + y;
  if (r > INT_MAX / 4 || r < INT_MIN / 4) throw Error("exponent overflow");
  return static_cast<int>(r);
}

}  // namespace detail

inline Monomial operator*(const Monomial& x, const Monomial& y) {
  using detail::checked_add;
  return {checked_add(x.a, y.a), checked_add(x.b, y.b), checked_add(x.c, y.c),
          checked_add(x.d, y.d), checked_add(x.s, y.s)};
}

class Poly {
 public:
  using Terms = std::map<Monomial, GQ>;

  Poly() = default;
  Poly(const GQ& c) { add_term({}, c); }
  Poly(long c) : Poly(GQ(c)) {}
  static Poly monomial(const Monomial& m, const GQ& c = GQ(1)) {
    Poly p;
    p.add_term(m, c);
    return p;
  }
  static Poly z1() { return monomial({1, 0, 0, 0, 0}); }
  static Poly z1bar() { return monomial({0, 1, 0, 0, 0}); }
  static Poly z2() { return monomial({0, 0, 1, 0, 0}); }
  static Poly z2bar() { return monomial({0, 0, 0, 1, 0}); }

  void add_term(const Monomial& m, const GQ& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(m, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  int max_degree() const {
    int d = 0;
    for (auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
  }
  bool is_normal() const {
    return std::all_of(terms_.begin(), terms_.end(), [](auto& t) { return t.first.is_normal(); });
  }
  bool has_radial() const {
    return std::any_of(terms_.begin(), terms_.end(), [](auto& t) { return t.first.s != 0; });
  }
  GQ coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? GQ() : it->second;
  }

  Poly operator-() const {
    Poly r;
    for (auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
  }
  Poly& operator+=(const Poly& o) {
    for (auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    for (auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  Poly& operator*=(const GQ& k) {
    if (k.is_zero()) terms_.clear();
    for (auto& [m, c] : terms_) c *= k;
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const GQ& k) { return a *= k; }
  friend Poly operator*(const GQ& k, Poly a) { return a *= k; }
  friend Poly operator*(const Poly& p, const Poly& q) {
    Poly r;
    for (auto& [m1, c1] : p.terms_)
      for (auto& [m2, c2] : q.terms_) r.add_term(m1 * m2, c1 * c2);
    return r;
  }
  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  Terms terms_;
};

inline Poly poly_mul(const Poly& p, const Poly& q) { return p * q; }

inline Poly conj(const Poly& p) {
  Poly r;
  for (auto& [m, c] : p.terms()) r.add_term(m.conj(), c.conj());
  return r;
}

// Multiply by a single monomial.
inline Poly shift(const Poly& p, const Monomial& by, const GQ& k = GQ(1)) {
  Poly r;
  for (auto& [m, c] : p.terms()) r.add_term(m * by, c * k);
  return r;
}

// Restriction to |z| = 1: drop s, then eliminate z2 z2~ = 1 - z1 z1~.
inline Poly normal_form(const Poly& p) {
  Poly r;
  for (auto& [m, c] : p.terms()) {
    int t = std::min(m.c, m.d);
    for (int j = 0; j <= t; ++j) {
      GQ k = c * Rational(binomial(t, j));
      if (j % 2) k = -k;
      r.add_term({m.a + j, m.b + j, m.c - t, m.d - t, 0}, k);
    }
  }
  return r;
}

// Unify radial powers to the smallest one present. Two ambient polys denote
// the same function off the origin iff their difference canonicalizes to 0.
inline Poly ambient_canonical(const Poly& p) {
  if (p.is_zero()) return p;
  int s0 = INT_MAX;
  for (auto& [m, c] : p.terms()) s0 = std::min(s0, m.s);
  Poly r;
  for (auto& [m, c] : p.terms()) {
    int e = m.s - s0;
    for (int j = 0; j <= e; ++j)
      r.add_term({m.a + j, m.b + j, m.c + e - j, m.d + e - j, s0}, c * Rational(binomial(e, j)));
  }
  return r;
}

inline bool ambient_equal(const Poly& p, const Poly& q) { return ambient_canonical(p - q).is_zero(); }

enum class Var { z1, z1bar, z2, z2bar };

// Formal partial derivative, z and z~ independent; |z|^(2s) by the chain rule.
inline Poly derivative(Var v, const Poly& p) {
  Poly r;
  for (auto& [m, c] : p.terms()) {
    Monomial base = m, rad = m;
    int e = 0;
    switch (v) {
      case Var::z1: e = m.a; base.a -= 1; rad.b += 1; break;
      case Var::z1bar: e = m.b; base.b -= 1; rad.a += 1; break;
      case Var::z2: e = m.c; base.c -= 1; rad.d += 1; break;
      case Var::z2bar: e = m.d; base.d -= 1; rad.c += 1; break;
    }
    if (e) r.add_term(base, c * GQ(e));
    if (m.s) {
      rad.s -= 1;
      r.add_term(rad, c * GQ(m.s));
    }
  }
  return r;
}

enum class FieldOp { dz1, dz1bar, dz2, dz2bar, eplus, eminus, theta, theta0, theta1, theta2, nu, nubar, nrad };

inline bool is_tangential(FieldOp f) {
  switch (f) {
    case FieldOp::eplus: case FieldOp::eminus: case FieldOp::theta:
    case FieldOp::theta0: case FieldOp::theta1: case FieldOp::theta2:
      return true;
    default:
      return false;
  }
}

namespace detail {

template <class F>
Poly scale_terms(const Poly& p, F weight) {
  Poly r;
  for (auto& [m, c] : p.terms()) r.add_term(m, c * weight(m));
  return r;
}

inline Poly raw_field(FieldOp f, const Poly& p) {
  const Monomial Z1{1, 0, 0, 0, 0}, Z1B{0, 1, 0, 0, 0}, Z2{0, 0, 1, 0, 0}, Z2B{0, 0, 0, 1, 0};
  const GQ i = GQ::i();
  switch (f) {
    case FieldOp::dz1: return derivative(Var::z1, p);
    case FieldOp::dz1bar: return derivative(Var::z1bar, p);
    case FieldOp::dz2: return derivative(Var::z2, p);
    case FieldOp::dz2bar: return derivative(Var::z2bar, p);
    case FieldOp::eplus:
      return shift(derivative(Var::z2bar, p), Z1) - shift(derivative(Var::z1bar, p), Z2);
    case FieldOp::eminus:
      return shift(derivative(Var::z2, p), Z1B) - shift(derivative(Var::z1, p), Z2B);
    case FieldOp::theta:
      return scale_terms(p, [](const Monomial& m) { return GQ(m.a - m.b + m.c - m.d); });
    case FieldOp::theta0: return raw_field(FieldOp::theta, p) * i;
    case FieldOp::theta1: return raw_field(FieldOp::eplus, p) + raw_field(FieldOp::eminus, p);
    case FieldOp::theta2: return (raw_field(FieldOp::eplus, p) - raw_field(FieldOp::eminus, p)) * i;
    case FieldOp::nu:
      return scale_terms(p, [](const Monomial& m) { return GQ(m.a + m.c + m.s); });
    case FieldOp::nubar:
      return scale_terms(p, [](const Monomial& m) { return GQ(m.b + m.d + m.s); });
    case FieldOp::nrad:
      return scale_terms(p, [](const Monomial& m) { return GQ(Rational(m.degree() + 2 * m.s, 2)); });
  }
  return {};
}

}  // namespace detail

// Tangential fields and nrad keep normal-form input in normal form.
inline Poly apply_field(FieldOp f, const Poly& p) {
  Poly r = detail::raw_field(f, p);
  if ((is_tangential(f) || f == FieldOp::nrad) && p.is_normal()) return normal_form(r);
  return r;
}

inline Poly laplacian(const Poly& p) {
  if (p.has_radial()) throw Error("ambient polynomial required");
  return derivative(Var::z1, derivative(Var::z1bar, p)) + derivative(Var::z2, derivative(Var::z2bar, p));
}

// Normalized mean over S^3 of z1^a z1~^b z2^c z2~^d; valid for any exponents.
inline Rational sphere_moment(const Monomial& m) {
  if (m.a != m.b || m.c != m.d) return Rational(0);
  return Rational(mpq_class(factorial(m.a) * factorial(m.c), factorial(m.a + m.c + 1)));
}

inline GQ integrate_s3(const Poly& p) {
  if (!p.is_normal()) throw Error("integrate_s3: input is not in S3 normal form");
  GQ r;
  for (auto& [m, c] : p.terms()) {
    Rational w = sphere_moment(m);
    if (!w.is_zero()) r += c * GQ(w);
  }
  return r;
}

// Normalized mean of p * conj(q) over S^3, computed pairwise.
inline GQ sphere_pairing(const Poly& p, const Poly& q) {
  GQ r;
  for (auto& [m1, c1] : p.terms())
    for (auto& [m2, c2] : q.terms()) {
      if (m1.charge() != m2.charge()) continue;
      r += c1 * c2.conj() * GQ(sphere_moment(m1 * m2.conj()));
    }
  return r;
}

}  // namespace s3c
