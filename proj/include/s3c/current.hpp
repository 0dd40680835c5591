#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "s3c/cocycle.hpp"

namespace s3c {

// Dense n x n matrix over ℚ(i), 0-based.
class ScalarMatrix {
 public:
  explicit ScalarMatrix(int n = 2) : n_(n), data_(static_cast<std::size_t>(n) * n) {}
  static ScalarMatrix unit(int n, int i, int j) {
    ScalarMatrix r(n);
    r(i, j) = GQ(1);
    return r;
  }

  int size() const { return n_; }
  GQ& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * n_ + j]; }
  const GQ& operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * n_ + j]; }

  friend ScalarMatrix operator*(const ScalarMatrix& x, const ScalarMatrix& y) {
    ScalarMatrix r(x.n_);
    for (int i = 0; i < x.n_; ++i)
      for (int t = 0; t < x.n_; ++t) {
        if (x(i, t).is_zero()) continue;
        for (int j = 0; j < x.n_; ++j) r(i, j) += x(i, t) * y(t, j);
      }
    return r;
  }
  friend ScalarMatrix operator+(ScalarMatrix x, const ScalarMatrix& y) {
    for (std::size_t q = 0; q < x.data_.size(); ++q) x.data_[q] += y.data_[q];
    return x;
  }
  friend ScalarMatrix operator-(ScalarMatrix x, const ScalarMatrix& y) {
    for (std::size_t q = 0; q < x.data_.size(); ++q) x.data_[q] -= y.data_[q];
    return x;
  }
  friend ScalarMatrix operator*(const GQ& k, ScalarMatrix x) {
    for (auto& v : x.data_) v *= k;
    return x;
  }
  friend bool operator==(const ScalarMatrix&, const ScalarMatrix&) = default;

 private:
  int n_;
  std::vector<GQ> data_;
};

inline ScalarMatrix commutator(const ScalarMatrix& x, const ScalarMatrix& y) { return x * y - y * x; }

// Trace form (X|Y) = Tr(XY).
inline GQ trace_form(const ScalarMatrix& x, const ScalarMatrix& y) {
  GQ r;
  ScalarMatrix p = x * y;
  for (int i = 0; i < x.size(); ++i) r += p(i, i);
  return r;
}

struct SimpleAlgebra {
  int n = 2;
  std::vector<std::vector<int>> cartan;
  std::vector<ScalarMatrix> h, e, f;
  ScalarMatrix e_theta, f_theta, h_theta;
  std::vector<std::vector<int>> positive_roots;

  int rank() const { return n - 1; }

  // Root of E_ij (eps_i - eps_j) over the simple roots; zero on the diagonal.
  std::vector<int> root_of(int i, int j) const {
    std::vector<int> r(rank(), 0);
    for (int t = std::min(i, j); t < std::max(i, j); ++t) r[t] = i < j ? 1 : -1;
    return r;
  }
};

inline SimpleAlgebra make_sl(int n) {
  if (n < 2) throw Error("make_sl: n must be at least 2");
  SimpleAlgebra g;
  g.n = n;
  int l = n - 1;
  g.cartan.assign(l, std::vector<int>(l, 0));
  for (int i = 0; i < l; ++i) {
    g.cartan[i][i] = 2;
    if (i + 1 < l) g.cartan[i][i + 1] = g.cartan[i + 1][i] = -1;
    g.h.push_back(ScalarMatrix::unit(n, i, i) - ScalarMatrix::unit(n, i + 1, i + 1));
    g.e.push_back(ScalarMatrix::unit(n, i, i + 1));
    g.f.push_back(ScalarMatrix::unit(n, i + 1, i));
  }
  g.e_theta = ScalarMatrix::unit(n, 0, n - 1);
  g.f_theta = ScalarMatrix::unit(n, n - 1, 0);
  g.h_theta = commutator(g.e_theta, g.f_theta);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.positive_roots.push_back(g.root_of(i, j));
  return g;
}

inline CurrentElement tensor(const Spinor& x, const ScalarMatrix& X) {
  CurrentElement r(X.size());
  if (x.is_zero()) return r;
  if (x.space() != Space::sphere) throw Error("tensor requires a sphere spinor");
  for (int i = 0; i < X.size(); ++i)
    for (int j = 0; j < X.size(); ++j)
      if (!X(i, j).is_zero()) r.set(i, j, x * X(i, j));
  return r;
}

inline CurrentElement current_bracket(const CurrentElement& A, const CurrentElement& B) {
  return matrix_mul(A, B) - matrix_mul(B, A);
}

inline CurrentElement radial_n(const CurrentElement& A) {
  CurrentElement r(A.size());
  for (auto& [key, x] : A.entries()) r.set(key.first, key.second, radial_n(x));
  return r;
}

// Element of ĝ: matrix part, central coordinates a_0..a_2, derivation coordinate t.
struct ExtendedElement {
  CurrentElement mat;
  std::array<GQ, 3> a{};
  GQ t;

  explicit ExtendedElement(int n = 2) : mat(n) {}
  explicit ExtendedElement(CurrentElement m) : mat(std::move(m)) {}

  int size() const { return mat.size(); }
  bool is_zero() const { return mat.is_zero() && a[0].is_zero() && a[1].is_zero() && a[2].is_zero() && t.is_zero(); }

  static ExtendedElement central(int n, int k) {
    ExtendedElement r(n);
    r.a.at(k) = GQ(1);
    return r;
  }
  static ExtendedElement derivation(int n) {
    ExtendedElement r(n);
    r.t = GQ(1);
    return r;
  }

  ExtendedElement& operator+=(const ExtendedElement& o) {
    mat += o.mat;
    for (int k = 0; k < 3; ++k) a[k] += o.a[k];
    t += o.t;
    return *this;
  }
  ExtendedElement& operator*=(const GQ& c) {
    mat *= c;
    for (auto& x : a) x *= c;
    t *= c;
    return *this;
  }
  ExtendedElement operator-() const {
    ExtendedElement r = *this;
    return r *= GQ(-1);
  }
  ExtendedElement& operator-=(const ExtendedElement& o) { return *this += -o; }
  friend ExtendedElement operator+(ExtendedElement x, const ExtendedElement& y) { return x += y; }
  friend ExtendedElement operator-(ExtendedElement x, const ExtendedElement& y) { return x -= y; }
  friend ExtendedElement operator*(const GQ& c, ExtendedElement x) { return x *= c; }
  friend bool operator==(const ExtendedElement&, const ExtendedElement&) = default;
};

inline ExtendedElement ghat_bracket(const ExtendedElement& x, const ExtendedElement& y) {
  x.mat.same_size(y.mat);
  ExtendedElement r(current_bracket(x.mat, y.mat));
  if (!x.t.is_zero()) r.mat += x.t * radial_n(y.mat);
  if (!y.t.is_zero()) r.mat -= y.t * radial_n(x.mat);
  for (int k = 0; k < 3; ++k) r.a[k] = cocycle_matrix(k, x.mat, y.mat);
  return r;
}

inline std::array<CurrentElement, 3> triangular_split(const CurrentElement& A) {
  std::array<CurrentElement, 3> parts{CurrentElement(A.size()), CurrentElement(A.size()), CurrentElement(A.size())};
  for (auto& [key, x] : A.entries()) {
    int which = key.first < key.second ? 0 : (key.first == key.second ? 1 : 2);
    parts[which].set(key.first, key.second, x);
  }
  return parts;
}

// Weight (m/2)δ + α (+ Λ coordinates, always 0 here).
struct WeightLabel {
  int mhalf = 0;
  std::vector<int> alpha;
  std::array<int, 3> lambda{};

  std::string str() const {
    std::string s = "(" + std::to_string(mhalf) + "/2)delta";
    for (std::size_t i = 0; i < alpha.size(); ++i)
      if (alpha[i]) s += (alpha[i] > 0 ? "+" : "") + std::to_string(alpha[i]) + "*alpha" + std::to_string(i + 1);
    return s;
  }
  friend auto operator<=>(const WeightLabel&, const WeightLabel&) = default;
};

namespace detail {

// c with y = c x, if it exists.
inline std::optional<GQ> proportionality(const ExtendedElement& y, const ExtendedElement& x) {
  std::optional<GQ> c;
  if (!x.mat.is_zero()) {
    auto& [key, sp] = *x.mat.entries().begin();
    const Poly& px = sp.u().is_zero() ? sp.v() : sp.u();
    const Poly& py = sp.u().is_zero() ? y.mat.at(key.first, key.second).v() : y.mat.at(key.first, key.second).u();
    auto& [mono, cx] = *px.terms().begin();
    c = py.coeff(mono) / cx;
  } else {
    for (int k = 0; k < 3 && !c; ++k)
      if (!x.a[k].is_zero()) c = y.a[k] / x.a[k];
    if (!c && !x.t.is_zero()) c = y.t / x.t;
  }
  if (!c || !(y == *c * x)) return std::nullopt;
  return c;
}

inline std::optional<long> as_integer(const GQ& q) {
  if (!q.is_real() || !q.re().is_integer() || !q.re().num().fits_slong_p()) return std::nullopt;
  return q.re().num().get_si();
}

}  // namespace detail

inline ExtendedElement embed(const CurrentElement& A) { return ExtendedElement(A); }

inline std::optional<WeightLabel> weight_of(const ExtendedElement& x, const SimpleAlgebra& g) {
  if (x.is_zero() || x.size() != g.n) return std::nullopt;
  int l = g.rank();
  std::vector<Rational> lam(l);
  for (int i = 0; i < l; ++i) {
    auto c = detail::proportionality(ghat_bracket(embed(tensor(unit_I(), g.h[i])), x), x);
    if (!c || !c->is_real()) return std::nullopt;
    lam[i] = c->re();
  }
  auto cn = detail::proportionality(ghat_bracket(ExtendedElement::derivation(g.n), x), x);
  if (!cn) return std::nullopt;
  auto m = detail::as_integer(*cn * GQ(2));
  if (!m) return std::nullopt;
  // Solve cartan * k = lam by Gauss-Jordan elimination over ℚ.
  std::vector<std::vector<Rational>> M(l, std::vector<Rational>(l + 1));
  for (int i = 0; i < l; ++i) {
    for (int j = 0; j < l; ++j) M[i][j] = Rational(g.cartan[i][j]);
    M[i][l] = lam[i];
  }
  for (int col = 0; col < l; ++col) {
    int piv = col;
    while (M[piv][col].is_zero()) ++piv;
    std::swap(M[piv], M[col]);
    for (int r = 0; r < l; ++r) {
      if (r == col || M[r][col].is_zero()) continue;
      Rational f = M[r][col] / M[col][col];
      for (int c = col; c <= l; ++c) M[r][c] -= f * M[col][c];
    }
  }
  WeightLabel w;
  w.mhalf = static_cast<int>(*m);
  for (int i = 0; i < l; ++i) {
    Rational k = M[i][l] / M[i][i];
    if (!k.is_integer()) return std::nullopt;
    w.alpha.push_back(static_cast<int>(k.num().get_si()));
  }
  return w;
}

inline std::map<WeightLabel, ExtendedElement> root_decompose(const ExtendedElement& x, const SimpleAlgebra& g) {
  std::map<WeightLabel, ExtendedElement> parts;
  auto slot = [&](WeightLabel w) -> ExtendedElement& { return parts.try_emplace(std::move(w), x.size()).first->second; };
  for (auto& [key, sp] : x.mat.entries())
    for (auto& [N, piece] : homogeneous_parts(sp)) {
      WeightLabel w;
      w.mhalf = N;
      w.alpha = g.root_of(key.first, key.second);
      slot(std::move(w)).mat.add(key.first, key.second, piece);
    }
  if (!x.a[0].is_zero() || !x.a[1].is_zero() || !x.a[2].is_zero() || !x.t.is_zero()) {
    WeightLabel w;
    w.alpha.assign(g.rank(), 0);
    ExtendedElement& z = slot(std::move(w));
    z.a = x.a;
    z.t = x.t;
  }
  return parts;
}

struct ChevalleyGenerators {
  std::vector<ExtendedElement> e, f, h;
  ExtendedElement e_J, f_J, e_kappa, f_kappa, e_lambda, f_lambda, h_theta;
};

inline ChevalleyGenerators chevalley_generators(const SimpleAlgebra& g) {
  auto gen = [](const Spinor& x, const ScalarMatrix& X) { return embed(tensor(x, X)); };
  ChevalleyGenerators c;
  for (int i = 0; i < g.rank(); ++i) {
    c.e.push_back(gen(unit_I(), g.e[i]));
    c.f.push_back(gen(unit_I(), g.f[i]));
    c.h.push_back(gen(unit_I(), g.h[i]));
  }
  c.e_J = gen(-unit_J(), g.e_theta);
  c.f_J = gen(unit_J(), g.f_theta);
  c.e_kappa = gen(kappa_star(), g.e_theta);
  c.f_kappa = gen(kappa(), g.f_theta);
  c.e_lambda = gen(lambda_star(), g.e_theta);
  c.f_lambda = gen(lambda(), g.f_theta);
  c.h_theta = gen(unit_I(), g.h_theta);
  return c;
}

}  // namespace s3c
