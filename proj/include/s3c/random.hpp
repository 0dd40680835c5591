#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "s3c/current.hpp"

namespace s3c::gen {

using Rng = std::mt19937_64;

// Independent stream per (seed, salt).
inline Rng stream(std::uint64_t seed, std::string_view salt) {
  std::uint64_t h = 1469598103934665603ull;
  for (char c : salt) h = (h ^ static_cast<unsigned char>(c)) * 1099511628211ull;
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(h), static_cast<std::uint32_t>(h >> 32)};
  return Rng(seq);
}

inline int uniform(Rng& r, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(r); }
inline bool coin(Rng& r) { return uniform(r, 0, 1) == 1; }

inline Rational small_rational(Rng& r) { return Rational(uniform(r, -3, 3), uniform(r, 1, 3)); }

inline GQ scalar(Rng& r) { return {small_rational(r), coin(r) ? Rational(0) : small_rational(r)}; }

inline GQ nonzero_scalar(Rng& r) {
  for (;;) {
    GQ c = scalar(r);
    if (!c.is_zero()) return c;
  }
}

inline BasisIndex index(Rng& r, int max_m) {
  BasisIndex b;
  b.sign = coin(r) ? Sign::plus : Sign::minus;
  b.m = uniform(r, 0, max_m);
  b.l = uniform(r, 0, b.m);
  b.k = uniform(r, 0, b.m + 1);
  return b;
}

// Random element of span{phi~_b : m <= max_m} with 1..3 terms.
inline Spinor spinor(Rng& r, int max_m) {
  Spinor x;
  int terms = uniform(r, 1, 3);
  for (int t = 0; t < terms; ++t) x += basis_sphere(index(r, max_m)) * nonzero_scalar(r);
  return x;
}

inline Spinor nonzero_spinor(Rng& r, int max_m) {
  for (;;) {
    Spinor x = spinor(r, max_m);
    if (!x.is_zero()) return x;
  }
}

// Homogeneous spinor together with its degree N.
inline std::pair<Spinor, int> homogeneous(Rng& r, int max_m) {
  BasisIndex b = index(r, max_m);
  Spinor x = basis_sphere(b) * nonzero_scalar(r);
  if (coin(r)) {
    BasisIndex c = b;
    c.l = uniform(r, 0, c.m);
    c.k = uniform(r, 0, c.m + 1);
    x += basis_sphere(c) * nonzero_scalar(r);
  }
  if (x.is_zero()) x = basis_sphere(b);
  return {x, b.degree()};
}

inline Poly normal_poly(Rng& r, int max_deg, int terms) {
  Poly p;
  for (int t = 0; t < terms; ++t) {
    Monomial m;
    m.a = uniform(r, 0, max_deg);
    m.b = uniform(r, 0, max_deg - m.a);
    int rest = max_deg - m.a - m.b;
    (coin(r) ? m.c : m.d) = uniform(r, 0, rest);
    p.add_term(m, nonzero_scalar(r));
  }
  return p;
}

inline CurrentElement current(Rng& r, int n, int max_m) {
  CurrentElement A(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (coin(r)) A.set(i, j, spinor(r, max_m));
  if (A.is_zero()) A.set(uniform(r, 0, n - 1), uniform(r, 0, n - 1), nonzero_spinor(r, max_m));
  return A;
}

inline ExtendedElement extended(Rng& r, int n, int max_m, bool with_t) {
  ExtendedElement X(current(r, n, max_m));
  for (auto& a : X.a) a = nonzero_scalar(r);
  if (with_t) X.t = nonzero_scalar(r);
  return X;
}

}  // namespace s3c::gen
