#pragma once

#include <array>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "s3c/poly.hpp"

namespace s3c {

enum class Space { ambient, sphere };

inline const char* space_name(Space s) { return s == Space::sphere ? "sphere" : "ambient"; }

// The quaternionic function u + j v.
class Spinor {
 public:
  Spinor() = default;
  Spinor(Poly u, Poly v, Space space = Space::sphere) : u_(std::move(u)), v_(std::move(v)), space_(space) {
    if (space_ == Space::sphere) {
      if (!u_.is_normal()) u_ = normal_form(u_);
      if (!v_.is_normal()) v_ = normal_form(v_);
    }
  }
  static Spinor ambient(Poly u, Poly v) { return {std::move(u), std::move(v), Space::ambient}; }

  const Poly& u() const { return u_; }
  const Poly& v() const { return v_; }
  Space space() const { return space_; }
  bool is_zero() const { return u_.is_zero() && v_.is_zero(); }
  int max_degree() const { return std::max(u_.max_degree(), v_.max_degree()); }

  Spinor restrict_to_sphere() const { return {u_, v_, Space::sphere}; }

  Spinor operator-() const { return {-u_, -v_, space_}; }
  Spinor& operator+=(const Spinor& o) {
    adopt_space(o);
    u_ += o.u_;
    v_ += o.v_;
    return *this;
  }
  Spinor& operator-=(const Spinor& o) {
    adopt_space(o);
    u_ -= o.u_;
    v_ -= o.v_;
    return *this;
  }
  // Complex scalars act componentwise.
  Spinor& operator*=(const GQ& k) {
    u_ *= k;
    v_ *= k;
    return *this;
  }
  friend Spinor operator+(Spinor a, const Spinor& b) { return a += b; }
  friend Spinor operator-(Spinor a, const Spinor& b) { return a -= b; }
  friend Spinor operator*(const GQ& k, Spinor a) { return a *= k; }
  friend Spinor operator*(Spinor a, const GQ& k) { return a *= k; }
  friend bool operator==(const Spinor&, const Spinor&) = default;

  // A zero spinor adapts to the space of the other operand.
  void adopt_space(const Spinor& o) {
    if (space_ == o.space_ || o.is_zero()) return;
    if (!is_zero()) throw Error("mixed spinor spaces");
    space_ = o.space_;
  }

 private:
  Poly u_, v_;
  Space space_ = Space::sphere;
};

inline Space common_space(const Spinor& x, const Spinor& y) {
  if (x.space() != y.space()) throw Error("mixed spinor spaces");
  return x.space();
}

inline Spinor spinor_mul(const Spinor& x, const Spinor& y) {
  Space sp = common_space(x, y);
  return {x.u() * y.u() - conj(x.v()) * y.v(), x.v() * y.u() + conj(x.u()) * y.v(), sp};
}

inline Spinor bracket_commutator(const Spinor& x, const Spinor& y) {
  return spinor_mul(x, y) - spinor_mul(y, x);
}

inline Spinor bracket_closed_form(const Spinor& x, const Spinor& y) {
  Space sp = common_space(x, y);
  return {x.v() * conj(y.v()) - conj(x.v()) * y.v(),
          (y.u() - conj(y.u())) * x.v() - (x.u() - conj(x.u())) * y.v(), sp};
}

inline Spinor spinor_bracket(const Spinor& x, const Spinor& y) {
  Spinor a = bracket_commutator(x, y);
  Spinor b = bracket_closed_form(x, y);
  bool same = a.space() == Space::sphere ? a == b
                                         : ambient_equal(a.u(), b.u()) && ambient_equal(a.v(), b.v());
  if (!same) throw Error("bracket: commutator and closed form disagree");
  return a;
}

enum class Involution { sigma, tau };

inline Spinor involution(Involution which, const Spinor& x) {
  if (which == Involution::sigma) return {x.u(), -x.v(), x.space()};
  return {conj(x.u()), conj(x.v()), x.space()};
}

inline Poly trace(const Spinor& x) {
  Poly t = x.u() + conj(x.u());
  return x.space() == Space::sphere ? normal_form(t) : t;
}

inline FieldOp theta_field(int k) {
  switch (k) {
    case 0: return FieldOp::theta0;
    case 1: return FieldOp::theta1;
    case 2: return FieldOp::theta2;
  }
  throw Error("theta index must be 0, 1 or 2");
}

inline Spinor theta_action(int k, const Spinor& x) {
  if (x.space() != Space::sphere) throw Error("theta_action requires a sphere spinor");
  FieldOp f = theta_field(k);
  GQ half(Rational(1, 2));
  return {apply_field(f, x.u()) * half, apply_field(f, x.v()) * half};
}

enum class DiracOp { D, Ddag, tangential };

inline Spinor dirac(DiracOp which, const Spinor& x) {
  const Poly &u = x.u(), &v = x.v();
  auto dd = [](Var w, const Poly& p) { return derivative(w, p); };
  switch (which) {
    case DiracOp::D:
      if (x.space() != Space::ambient) throw Error("D requires an ambient spinor");
      return Spinor::ambient(dd(Var::z1, u) - dd(Var::z2bar, v), dd(Var::z2, u) + dd(Var::z1bar, v));
    case DiracOp::Ddag:
      if (x.space() != Space::ambient) throw Error("Ddag requires an ambient spinor");
      return Spinor::ambient(dd(Var::z1bar, u) + dd(Var::z2bar, v), dd(Var::z1, v) - dd(Var::z2, u));
    case DiracOp::tangential: {
      if (x.space() != Space::sphere) throw Error("tangential Dirac operator requires a sphere spinor");
      GQ half(Rational(1, 2));
      Poly tu = apply_field(FieldOp::theta, u) * half, tv = apply_field(FieldOp::theta, v) * half;
      return {apply_field(FieldOp::eplus, v) - tu, tv - apply_field(FieldOp::eminus, u)};
    }
  }
  return {};
}

// ---------------------------------------------------------------- basis

enum class Sign { plus, minus };

struct BasisIndex {
  Sign sign = Sign::plus;
  int m = 0, l = 0, k = 0;

  bool valid() const { return m >= 0 && l >= 0 && l <= m && k >= 0 && k <= m + 1; }
  // Homogeneous degree N of the basis element.
  int degree() const { return sign == Sign::plus ? m : -(m + 3); }
  std::string str() const {
    return std::string(sign == Sign::plus ? "+" : "-") + "(" + std::to_string(m) + "," + std::to_string(l) +
           "," + std::to_string(k) + ")";
  }
  friend auto operator<=>(const BasisIndex&, const BasisIndex&) = default;
};

using Expansion = std::map<BasisIndex, GQ>;

// (e_-)^k z1^l z2^j, kept homogeneous (no sphere reduction)
inline Poly basis_v(int k, int l, int j) {
  if (k < 0 || l < 0 || j < 0) throw Error("basis_v: negative index");
  Poly p = Poly::monomial({l, 0, j, 0, 0});
  for (int t = 0; t < k && !p.is_zero(); ++t) p = detail::raw_field(FieldOp::eminus, p);
  return p;
}

// w^k_(a,b) = (-1)^k a!/(a+b-k)! v^{b}_(k, a+b-k)
inline Poly basis_w(int k, int a, int b) {
  int m = a + b;
  if (k > m) return {};
  GQ f(Rational(mpq_class(factorial(a), factorial(m - k))));
  if (k % 2) f = -f;
  return basis_v(b, k, m - k) * f;
}

inline Spinor basis_phi(const BasisIndex& idx) {
  if (!idx.valid()) throw Error("basis index out of range: " + idx.str());
  const auto [sg, m, l, k] = idx;
  if (sg == Sign::plus) {
    Poly u = k == 0 ? Poly() : basis_v(k - 1, l, m - l) * GQ(k);
    return Spinor::ambient(u, -basis_v(k, l, m - l));
  }
  Monomial rad{0, 0, 0, 0, -(m + 2)};
  return Spinor::ambient(shift(basis_w(k, m + 1 - l, l), rad), shift(basis_w(k, m - l, l + 1), rad));
}

// Square of the normalization factor dropped from the basis.
inline Rational normalization_square(const BasisIndex& idx) {
  return Rational(mpq_class(factorial(idx.m + 1 - idx.k), factorial(idx.k) * factorial(idx.l) * factorial(idx.m - idx.l)));
}

inline std::vector<BasisIndex> basis_indices(Sign sg, int m) {
  std::vector<BasisIndex> r;
  for (int l = 0; l <= m; ++l)
    for (int k = 0; k <= m + 1; ++k) r.push_back({sg, m, l, k});
  return r;
}

inline GQ sphere_inner(const Spinor& x, const Spinor& y) {
  return sphere_pairing(x.u(), y.u()) + sphere_pairing(x.v(), y.v());
}

namespace detail {

struct BasisEntry {
  Spinor sphere;
  GQ gram;
  std::optional<std::pair<int, int>> cu, cv;
};

inline std::optional<std::pair<int, int>> single_charge(const Poly& p) {
  if (p.is_zero()) return std::nullopt;
  auto c = p.terms().begin()->first.charge();
  for (auto& [m, x] : p.terms())
    if (m.charge() != c) throw Error("basis component without a definite charge");
  return c;
}

inline const BasisEntry& basis_entry(const BasisIndex& idx) {
  static std::mutex mu;
  static std::map<BasisIndex, BasisEntry> cache;
  {
    std::lock_guard lock(mu);
    auto it = cache.find(idx);
    if (it != cache.end()) return it->second;
  }
  BasisEntry e;
  e.sphere = basis_phi(idx).restrict_to_sphere();
  e.gram = sphere_inner(e.sphere, e.sphere);
  e.cu = single_charge(e.sphere.u());
  e.cv = single_charge(e.sphere.v());
  std::lock_guard lock(mu);
  return cache.try_emplace(idx, std::move(e)).first->second;
}

}  // namespace detail

inline const Spinor& basis_sphere(const BasisIndex& idx) { return detail::basis_entry(idx).sphere; }
inline const GQ& gram_diagonal(const BasisIndex& idx) { return detail::basis_entry(idx).gram; }

inline Spinor reconstruct(const Expansion& e) {
  Spinor r;
  for (auto& [b, c] : e) r += basis_sphere(b) * c;
  return r;
}

inline Expansion expand(const Spinor& x) {
  if (x.space() != Space::sphere) throw Error("expand requires a sphere spinor");
  Expansion e;
  if (x.is_zero()) return e;
  std::set<std::pair<int, int>> cu, cv;
  for (auto& [m, c] : x.u().terms()) cu.insert(m.charge());
  for (auto& [m, c] : x.v().terms()) cv.insert(m.charge());
  int d = x.max_degree();
  for (int attempt = 0; attempt < 3; ++attempt, d += 2) {
    e.clear();
    for (Sign sg : {Sign::plus, Sign::minus})
      for (int m = 0; m <= (sg == Sign::plus ? d : d - 1); ++m)
        for (const BasisIndex& b : basis_indices(sg, m)) {
          const auto& entry = detail::basis_entry(b);
          bool hit = (entry.cu && cu.count(*entry.cu)) || (entry.cv && cv.count(*entry.cv));
          if (!hit) continue;
          GQ c = sphere_inner(x, entry.sphere) / entry.gram;
          if (!c.is_zero()) e.emplace(b, c);
        }
    if ((x - reconstruct(e)).is_zero()) return e;
  }
  throw Error("expansion failed");
}

inline std::map<int, Spinor> homogeneous_parts(const Spinor& x) {
  std::map<int, Spinor> parts;
  for (auto& [b, c] : expand(x)) parts[b.degree()] += basis_sphere(b) * c;
  return parts;
}

inline Spinor radial_n(const Spinor& x) {
  if (x.space() == Space::ambient)
    return Spinor::ambient(apply_field(FieldOp::nrad, x.u()), apply_field(FieldOp::nrad, x.v()));
  Spinor r;
  for (auto& [b, c] : expand(x)) r += basis_sphere(b) * (c * GQ(Rational(b.degree(), 2)));
  return r;
}

inline std::pair<Spinor, Spinor> k_split(const Spinor& x) {
  Spinor k{(x.u() + conj(x.u())) * GQ(Rational(1, 2)), Poly(), x.space()};
  return {k, x - k};
}

struct SubspaceFlags {
  bool Lr0 = false, L0r = false, Li0 = false, L0i = false, K = false, Kbot = false;

  std::vector<std::string> names() const {
    std::vector<std::string> r;
    if (Lr0) r.push_back("Lr0");
    if (L0r) r.push_back("L0r");
    if (Li0) r.push_back("Li0");
    if (L0i) r.push_back("L0i");
    if (K) r.push_back("K");
    if (Kbot) r.push_back("Kbot");
    return r;
  }
  friend bool operator==(const SubspaceFlags&, const SubspaceFlags&) = default;
};

inline SubspaceFlags subspace_class(const Spinor& x) {
  const Poly &u = x.u(), &v = x.v();
  bool u_real = u == conj(u), u_imag = u == -conj(u);
  bool v_real = v == conj(v), v_imag = v == -conj(v);
  SubspaceFlags f;
  f.Lr0 = v.is_zero() && u_real;
  f.L0r = u.is_zero() && v_real;
  f.Li0 = v.is_zero() && u_imag;
  f.L0i = u.is_zero() && v_imag;
  f.K = f.Lr0;
  f.Kbot = u_imag;
  return f;
}

// ---------------------------------------------------------------- named elements

inline Spinor unit_I() { return {Poly(1), Poly()}; }
inline Spinor unit_J() { return {Poly(), Poly(1)}; }
inline Spinor kappa() { return {Poly::z2(), -Poly::z1bar()}; }
inline Spinor mu() { return {Poly::z2(), Poly::z1bar()}; }
inline Spinor lambda() { return mu(); }
inline Spinor kappa_star() { return Spinor{Poly::z2bar(), Poly::z1bar()} * GQ::i(); }
inline Spinor lambda_star() { return Spinor{Poly::z2bar(), -Poly::z1bar()} * GQ::i(); }

// ---------------------------------------------------------------- Clifford

using Mat4 = std::array<std::array<GQ, 4>, 4>;

inline Mat4 mat4_mul(const Mat4& x, const Mat4& y) {
  Mat4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int t = 0; t < 4; ++t) r[i][j] += x[i][t] * y[t][j];
  return r;
}

// gamma_k = [[0, -i sigma_k], [i sigma_k, 0]], gamma_4 = [[0, -1], [-1, 0]].
inline std::array<Mat4, 4> clifford_generators() {
  const GQ i = GQ::i(), one(1);
  using M2 = std::array<std::array<GQ, 2>, 2>;
  std::array<M2, 3> pauli{M2{{{0, one}, {one, 0}}}, M2{{{0, -i}, {i, 0}}}, M2{{{one, 0}, {0, -one}}}};
  std::array<Mat4, 4> g;
  for (int k = 0; k < 3; ++k)
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c) {
        g[k][r][c + 2] = -i * pauli[k][r][c];
        g[k][r + 2][c] = i * pauli[k][r][c];
      }
  for (int r = 0; r < 2; ++r) {
    g[3][r][r + 2] = -one;
    g[3][r + 2][r] = -one;
  }
  return g;
}

}  // namespace s3c
