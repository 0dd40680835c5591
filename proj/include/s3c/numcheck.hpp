#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "s3c/spinor.hpp"

namespace s3c {

using cplx = std::complex<double>;

// z1 = x1 + i x2, z2 = x3 + i x4.
struct PointS3 {
  double x1 = 1, x2 = 0, x3 = 0, x4 = 0;

  cplx z1() const { return {x1, x2}; }
  cplx z2() const { return {x3, x4}; }
  double norm2() const { return x1 * x1 + x2 * x2 + x3 * x3 + x4 * x4; }

  static PointS3 from(cplx z1, cplx z2) { return {z1.real(), z1.imag(), z2.real(), z2.imag()}; }
};

// Uniform on S^3 via normalized Gaussian draws.
inline PointS3 random_point(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  for (;;) {
    double x[4] = {g(rng), g(rng), g(rng), g(rng)};
    double r = std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2] + x[3] * x[3]);
    if (r > 1e-9) return {x[0] / r, x[1] / r, x[2] / r, x[3] / r};
  }
}

inline cplx to_complex(const GQ& c) { return {c.re().to_double(), c.im().to_double()}; }

namespace detail {

inline cplx ipow(cplx z, int e) {
  cplx r = 1;
  for (int q = 0; q < e; ++q) r *= z;
  return r;
}

}  // namespace detail

// Value of p at (z1, z2) in C^2 \ {0}, radial powers included.
inline cplx eval_ambient(const Poly& p, cplx z1, cplx z2) {
  double r2 = std::norm(z1) + std::norm(z2);
  cplx sum = 0;
  for (auto& [m, c] : p.terms())
    sum += to_complex(c) * detail::ipow(z1, m.a) * detail::ipow(std::conj(z1), m.b) * detail::ipow(z2, m.c) *
           detail::ipow(std::conj(z2), m.d) * std::pow(r2, m.s);
  return sum;
}

// Value on S^3: radial powers evaluate to 1.
inline cplx eval_poly(const Poly& p, const PointS3& q) {
  cplx sum = 0;
  cplx z1 = q.z1(), z2 = q.z2();
  for (auto& [m, c] : p.terms())
    sum += to_complex(c) * detail::ipow(z1, m.a) * detail::ipow(std::conj(z1), m.b) * detail::ipow(z2, m.c) *
           detail::ipow(std::conj(z2), m.d);
  return sum;
}

inline std::pair<cplx, cplx> eval_at(const Spinor& x, const PointS3& q) {
  return {eval_poly(x.u(), q), eval_poly(x.v(), q)};
}

// Hamilton product on (1, i, j, k) coordinates.
using Quat = std::array<double, 4>;

inline Quat hamilton(const Quat& p, const Quat& q) {
  return {p[0] * q[0] - p[1] * q[1] - p[2] * q[2] - p[3] * q[3],
          p[0] * q[1] + p[1] * q[0] + p[2] * q[3] - p[3] * q[2],
          p[0] * q[2] - p[1] * q[3] + p[2] * q[0] + p[3] * q[1],
          p[0] * q[3] + p[1] * q[2] - p[2] * q[1] + p[3] * q[0]};
}

// u + j v with v = c + d i equals u + c j - d k.
inline Quat to_quat(cplx u, cplx v) { return {u.real(), u.imag(), v.real(), -v.imag()}; }
inline std::pair<cplx, cplx> from_quat(const Quat& q) { return {{q[0], q[1]}, {q[2], -q[3]}}; }

struct McEstimate {
  cplx estimate;
  double stderr_;
};

inline McEstimate mc_integral(const Poly& p, std::size_t samples, std::uint64_t seed) {
  if (samples < 1000) throw Error("mc_integral needs at least 1000 samples");
  std::mt19937_64 rng(seed);
  cplx sum = 0;
  double sq = 0;
  std::vector<cplx> vals(samples);
  for (auto& v : vals) {
    v = eval_poly(p, random_point(rng));
    sum += v;
  }
  cplx mean = sum / static_cast<double>(samples);
  for (auto& v : vals) sq += std::norm(v - mean);
  double n = static_cast<double>(samples);
  return {mean, std::sqrt(sq / (n * (n - 1)))};
}

namespace detail {

using Direction = std::array<cplx, 2> (*)(cplx, cplx);

// Central difference of p along the real vector field X at q.
inline cplx directional(const Poly& p, const PointS3& q, Direction X, double h) {
  cplx z1 = q.z1(), z2 = q.z2();
  auto v = X(z1, z2);
  return (eval_ambient(p, z1 + h * v[0], z2 + h * v[1]) - eval_ambient(p, z1 - h * v[0], z2 - h * v[1])) / (2 * h);
}

inline std::array<cplx, 2> dir_x1(cplx, cplx) { return {cplx(1, 0), 0}; }
inline std::array<cplx, 2> dir_x2(cplx, cplx) { return {cplx(0, 1), 0}; }
inline std::array<cplx, 2> dir_x3(cplx, cplx) { return {0, cplx(1, 0)}; }
inline std::array<cplx, 2> dir_x4(cplx, cplx) { return {0, cplx(0, 1)}; }
inline std::array<cplx, 2> dir_euler(cplx z1, cplx z2) { return {z1, z2}; }
inline std::array<cplx, 2> dir_theta0(cplx z1, cplx z2) { return {cplx(0, 1) * z1, cplx(0, 1) * z2}; }
inline std::array<cplx, 2> dir_theta1(cplx z1, cplx z2) { return {-std::conj(z2), std::conj(z1)}; }
inline std::array<cplx, 2> dir_theta2(cplx z1, cplx z2) {
  return {cplx(0, 1) * std::conj(z2), cplx(0, -1) * std::conj(z1)};
}

}  // namespace detail

// Numeric value of f(p) at q, each field written as a complex combination of
// real directional derivatives (formal z, z~ derivative convention).
inline cplx fd_field(FieldOp f, const Poly& p, const PointS3& q, double h = 1e-5) {
  using namespace detail;
  const cplx i(0, 1);
  auto D = [&](Direction X) { return directional(p, q, X, h); };
  switch (f) {
    case FieldOp::dz1: return 0.5 * (D(dir_x1) - i * D(dir_x2));
    case FieldOp::dz1bar: return 0.5 * (D(dir_x1) + i * D(dir_x2));
    case FieldOp::dz2: return 0.5 * (D(dir_x3) - i * D(dir_x4));
    case FieldOp::dz2bar: return 0.5 * (D(dir_x3) + i * D(dir_x4));
    case FieldOp::theta0: return D(dir_theta0);
    case FieldOp::theta: return -i * D(dir_theta0);
    case FieldOp::theta1: return D(dir_theta1);
    case FieldOp::theta2: return D(dir_theta2);
    case FieldOp::eplus: return 0.5 * (D(dir_theta1) - i * D(dir_theta2));
    case FieldOp::eminus: return 0.5 * (D(dir_theta1) + i * D(dir_theta2));
    case FieldOp::nu: return 0.5 * (D(dir_euler) - i * D(dir_theta0));
    case FieldOp::nubar: return 0.5 * (D(dir_euler) + i * D(dir_theta0));
    case FieldOp::nrad: return 0.5 * D(dir_euler);
  }
  return 0;
}

// Worst |symbolic - numeric| / max(1, |symbolic|) over the points.
inline double fd_check(FieldOp f, const Poly& p, const std::vector<PointS3>& pts) {
  Poly sym = apply_field(f, p);
  double worst = 0;
  for (auto& q : pts) {
    cplx s = eval_ambient(sym, q.z1(), q.z2());
    cplx n = fd_field(f, p, q);
    worst = std::max(worst, std::abs(s - n) / std::max(1.0, std::abs(s)));
  }
  return worst;
}

// |∂̸x - lambda x| at q with ∂̸ taken by finite differences.
inline double dirac_residual(const Spinor& x, const GQ& lambda, const PointS3& q) {
  cplx tu = fd_field(FieldOp::theta, x.u(), q), tv = fd_field(FieldOp::theta, x.v(), q);
  cplx du = -0.5 * tu + fd_field(FieldOp::eplus, x.v(), q);
  cplx dv = -fd_field(FieldOp::eminus, x.u(), q) + 0.5 * tv;
  auto [u, v] = eval_at(x, q);
  cplx l = to_complex(lambda);
  return std::max(std::abs(du - l * u), std::abs(dv - l * v));
}

}  // namespace s3c
