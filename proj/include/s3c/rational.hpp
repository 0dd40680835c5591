#pragma once

#include <gmpxx.h>

#include <cctype>
#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace s3c {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

// Reduced fraction over GMP integers.
class Rational {
 public:
  Rational() = default;
  Rational(long n) : q_(n) {}
  Rational(long n, long d) {
    if (d == 0) throw DivisionByZero();
    q_ = mpq_class(n, d);
    q_.canonicalize();
  }
  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }
  explicit Rational(const mpz_class& z) : q_(z) {}

  static Rational parse(std::string_view text);

  const mpq_class& raw() const { return q_; }
  mpz_class num() const { return q_.get_num(); }
  mpz_class den() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  int sign() const { return sgn(q_); }
  bool is_integer() const { return q_.get_den() == 1; }
  double to_double() const { return q_.get_d(); }

  std::string str() const { return q_.get_num().get_str() + "/" + q_.get_den().get_str(); }

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw DivisionByZero();
    q_ /= o.q_;
    return *this;
  }
  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class q_;
};

inline mpz_class factorial(unsigned long n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline mpz_class binomial(unsigned long n, unsigned long k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

namespace detail {

inline bool parse_integer(std::string_view s, mpz_class& out) {
  std::size_t i = 0;
  bool neg = false;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) neg = s[i++] == '-';
  if (i == s.size()) return false;
  for (std::size_t j = i; j < s.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(s[j]))) return false;
  out = mpz_class(std::string(s.substr(i)), 10);
  if (neg) out = -out;
  return true;
}

}  // namespace detail

inline Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  mpz_class n, d = 1;
  bool ok = slash == std::string_view::npos
                ? detail::parse_integer(text, n)
                : detail::parse_integer(text.substr(0, slash), n) &&
                      detail::parse_integer(text.substr(slash + 1), d) &&
                      text[slash + 1] != '+' && text[slash + 1] != '-';
  if (!ok) throw Error("malformed rational: '" + std::string(text) + "'");
  if (d == 0) throw DivisionByZero();
  return Rational(mpq_class(n, d));
}

// a + b i with a, b rational.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long re) : re_(re) {}
  GaussianRational(Rational re) : re_(std::move(re)) {}
  GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }
  static GaussianRational parse(std::string_view text);

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }
  GaussianRational conj() const { return {re_, -im_}; }
  Rational norm2() const { return re_ * re_ + im_ * im_; }

  std::string str() const;

  GaussianRational operator-() const { return {-re_, -im_}; }
  GaussianRational& operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    if (o.im_.is_zero()) {
      re_ *= o.re_;
      im_ *= o.re_;
      return *this;
    }
    Rational r = re_ * o.re_ - im_ * o.im_;
    im_ = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    return *this;
  }
  GaussianRational& operator/=(const GaussianRational& o) {
    if (o.is_zero()) throw DivisionByZero();
    Rational n = o.norm2();
    *this *= o.conj();
    re_ /= n;
    im_ /= n;
    return *this;
  }
  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

 private:
  Rational re_, im_;
};

using GQ = GaussianRational;

enum class ArithOp { add, sub, mul, div };

// Division by zero yields nullopt instead of throwing.
inline std::optional<GQ> gq_arith(ArithOp op, const GQ& x, const GQ& y) {
  switch (op) {
    case ArithOp::add: return x + y;
    case ArithOp::sub: return x - y;
    case ArithOp::mul: return x * y;
    case ArithOp::div:
      if (y.is_zero()) return std::nullopt;
      return x / y;
  }
  return std::nullopt;
}

inline GQ gq_conj(const GQ& x) { return x.conj(); }
inline bool gq_is_real(const GQ& x) { return x.is_real(); }

inline std::string GaussianRational::str() const {
  if (im_.is_zero()) return re_.str();
  std::string ims = im_.str() + "*i";
  if (re_.is_zero()) return ims;
  return re_.str() + (im_.sign() > 0 ? "+" : "") + ims;
}

inline GaussianRational GaussianRational::parse(std::string_view text) {
  auto bad = [&] { return Error("malformed Gaussian rational: '" + std::string(text) + "'"); };
  if (text.empty()) throw bad();
  if (text.size() < 2 || text.substr(text.size() - 2) != "*i") return {Rational::parse(text)};
  std::string_view body = text.substr(0, text.size() - 2);
  // The imaginary part starts at the last sign that is not at position 0.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;)
    if (body[k] == '+' || body[k] == '-') {
      split = k;
      break;
    }
  if (split == std::string_view::npos) return {Rational(0), Rational::parse(body)};
  std::string_view re = body.substr(0, split), im = body.substr(split);
  if (im.size() > 1 && im[0] == '+') im.remove_prefix(1);
  if (re.empty() || im.empty() || im == "-") throw bad();
  return {Rational::parse(re), Rational::parse(im)};
}

}  // namespace s3c
