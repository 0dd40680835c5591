#pragma once

#include <cstdint>
#include <functional>
#include <future>
#include <string>
#include <vector>

#include "s3c/chevalley.hpp"
#include "s3c/frontend.hpp"
#include "s3c/numcheck.hpp"
#include "s3c/random.hpp"
#include "s3c/report.hpp"

namespace s3c {

struct SuiteOptions {
  std::uint64_t seed = 0;
  int max_degree = 3;
};

namespace detail {

// Runs a property over `count` draws; records the first counterexample.
class Tally {
 public:
  void check(bool ok, const std::function<std::string()>& describe) {
    ++total_;
    if (ok) return;
    if (failed_++ == 0) first_ = describe();
  }
  void record(Report& r, const std::string& name, const std::string& claimed = "holds on every draw") const {
    std::string computed = std::to_string(total_ - failed_) + "/" + std::to_string(total_) + " hold";
    if (failed_) computed += "; first counterexample: " + first_;
    r.add(name, failed_ == 0 && total_ > 0, computed, claimed);
  }

 private:
  int total_ = 0, failed_ = 0;
  std::string first_;
};

inline std::vector<BasisIndex> all_indices(int max_m) {
  std::vector<BasisIndex> r;
  for (int m = 0; m <= max_m; ++m)
    for (Sign s : {Sign::plus, Sign::minus})
      for (auto& b : basis_indices(s, m)) r.push_back(b);
  return r;
}

inline GQ eigenvalue(const BasisIndex& b) { return GQ(Rational(b.degree(), 2)); }

inline std::string parts_text(const std::map<int, Spinor>& parts) {
  std::string s = "{";
  for (auto& [N, x] : parts) s += (s.size() > 1 ? ", " : "") + std::to_string(N) + ": " + to_text(x);
  return s + "}";
}

inline std::string degrees_text(const std::map<int, Spinor>& parts) {
  std::string s = "degrees {";
  bool first = true;
  for (auto& [N, x] : parts) {
    s += (first ? "" : ", ") + std::to_string(N);
    first = false;
  }
  return s + "}";
}

}  // namespace detail

// ---------------------------------------------------------------- basis

inline Report suite_basis(const SuiteOptions& opt) {
  Report r;
  r.suite = "basis";
  int top = std::max(4, opt.max_degree);
  detail::Tally harmonic, tangential, radial, sizes, theta_closure, gram;
  for (int m = 0; m <= top; ++m)
    for (Sign s : {Sign::plus, Sign::minus}) {
      auto idx = basis_indices(s, m);
      sizes.check(static_cast<int>(idx.size()) == (m + 1) * (m + 2), [&] { return "m=" + std::to_string(m); });
      for (auto& b : idx) {
        Spinor amb = basis_phi(b), sph = basis_sphere(b);
        Spinor d = dirac(DiracOp::D, amb);
        harmonic.check(ambient_canonical(d.u()).is_zero() && ambient_canonical(d.v()).is_zero(),
                       [&] { return b.str(); });
        tangential.check(dirac(DiracOp::tangential, sph) == sph * detail::eigenvalue(b), [&] { return b.str(); });
        radial.check(radial_n(sph) == sph * detail::eigenvalue(b), [&] { return b.str(); });
      }
    }
  harmonic.record(r, "harmonic", "D phi~ = 0 for every index with m <= " + std::to_string(top));
  tangential.record(r, "tangential_spectrum", "m/2 and -(m+3)/2");
  radial.record(r, "radial_spectrum", "m/2 and -(m+3)/2");
  sizes.record(r, "family_sizes", "(m+1)(m+2) per family");

  auto idx3 = detail::all_indices(3);
  for (auto& b : idx3)
    for (auto& c : idx3) {
      GQ g = sphere_inner(basis_sphere(b), basis_sphere(c));
      GQ want;
      if (b == c)
        want = GQ(Rational(mpq_class(factorial(b.k) * factorial(b.l) * factorial(b.m - b.l), factorial(b.m + 1 - b.k))));
      gram.check(g == want, [&] { return "<" + b.str() + "," + c.str() + "> = " + g.str(); });
    }
  gram.record(r, "gram_diagonal", "diagonal with entry k! l! (m-l)! / (m+1-k)!");

  for (auto& b : idx3)
    for (int k = 0; k < 3; ++k) {
      bool ok = true;
      try {
        expand(theta_action(k, basis_sphere(b)));
      } catch (const Error&) {
        ok = false;
      }
      theta_closure.check(ok, [&] { return "Theta" + std::to_string(k) + " " + b.str(); });
    }
  theta_closure.record(r, "theta_closure", "Theta_k phi~ re-expands for m <= 3");

  auto gam = clifford_generators();
  bool cliff = true;
  for (int p = 0; p < 4; ++p)
    for (int q = 0; q < 4; ++q) {
      Mat4 s = mat4_mul(gam[p], gam[q]), t = mat4_mul(gam[q], gam[p]);
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) cliff = cliff && s[i][j] + t[i][j] == GQ(p == q && i == j ? 2 : 0);
    }
  r.add("clifford_anticommutation", cliff, cliff ? "holds" : "violated", "gamma_p gamma_q + gamma_q gamma_p = 2 delta_pq");

  Spinor kj = spinor_mul(kappa(), unit_J());
  r.add("example.kappa_J", kj == basis_sphere({Sign::plus, 1, 1, 1}), to_text(kj), "phi~+(1,1,1) = (z1 | z2~)");
  r.note("claim.phi+(1,1,1)", basis_sphere({Sign::plus, 1, 1, 1}) == -kj, to_text(basis_sphere({Sign::plus, 1, 1, 1})),
         "-kappa*J = " + to_text(-kj));
  Spinor pm = basis_sphere({Sign::minus, 1, 1, 1});
  Spinor claim{Poly::monomial({0, 0, 1, 1, 0}) - Poly::monomial({1, 1, 0, 0, 0}),
               Poly::monomial({0, 1, 0, 1, 0}, GQ(2))};
  r.note("claim.phi-(1,1,1)", pm == claim, to_text(pm), "(|z2|^2 - |z1|^2 | 2 z1~ z2~) = " + to_text(claim));
  r.add("example.phi-(0,0,1)", basis_sphere({Sign::minus, 0, 0, 1}) == Spinor(-Poly::z1(), Poly::z2bar()),
        to_text(basis_sphere({Sign::minus, 0, 0, 1})), "(-z1 | z2~)");
  return r;
}

// ---------------------------------------------------------------- algebra

inline Report suite_algebra(const SuiteOptions& opt) {
  Report r;
  r.suite = "algebra";
  auto rng = gen::stream(opt.seed, "algebra");
  int dm = opt.max_degree;

  detail::Tally closure;
  auto idx5 = detail::all_indices(5);
  for (auto& b : idx5)
    for (auto& c : idx5) {
      if (b.m + c.m > 5) continue;
      Spinor p = spinor_mul(basis_sphere(b), basis_sphere(c));
      bool ok = true;
      try {
        ok = reconstruct(expand(p)) == p;
      } catch (const Error&) {
        ok = false;
      }
      closure.check(ok, [&] { return b.str() + "*" + c.str(); });
    }
  closure.record(r, "closure", "every product with m1+m2 <= 5 re-expands with zero residual");

  detail::Tally assoc, jacobi;
  for (int t = 0; t < 100; ++t) {
    Spinor x = gen::spinor(rng, dm), y = gen::spinor(rng, dm), z = gen::spinor(rng, dm);
    assoc.check(spinor_mul(spinor_mul(x, y), z) == spinor_mul(x, spinor_mul(y, z)), [&] { return to_text(x); });
    bool ok = true;
    try {
      ok = (spinor_bracket(spinor_bracket(x, y), z) + spinor_bracket(spinor_bracket(y, z), x) +
            spinor_bracket(spinor_bracket(z, x), y))
               .is_zero();
    } catch (const Error&) {
      ok = false;
    }
    jacobi.check(ok, [&] { return to_text(x); });
  }
  assoc.record(r, "associativity");
  jacobi.record(r, "jacobi", "Jacobi identity, commutator and closed form agreeing");

  detail::Tally sig, tau, trbr, leib;
  for (int t = 0; t < 50; ++t) {
    Spinor x = gen::spinor(rng, dm), y = gen::spinor(rng, dm);
    Spinor xy = spinor_mul(x, y);
    for (auto [inv, tally] : {std::pair{Involution::sigma, &sig}, std::pair{Involution::tau, &tau}})
      tally->check(involution(inv, xy) == spinor_mul(involution(inv, x), involution(inv, y)),
                   [&] { return to_text(x) + " ; " + to_text(y); });
    trbr.check(trace(spinor_bracket(x, y)).is_zero(), [&] { return to_text(x); });
    for (int k = 0; k < 3; ++k)
      leib.check(theta_action(k, xy) == spinor_mul(theta_action(k, x), y) + spinor_mul(x, theta_action(k, y)),
                 [&] { return "k=" + std::to_string(k) + " " + to_text(x); });
  }
  sig.record(r, "involution_homomorphism.sigma");
  tau.record(r, "involution_homomorphism.tau");
  trbr.record(r, "trace_of_bracket", "tr [phi, psi] = 0");
  leib.record(r, "theta_leibniz");

  detail::Tally mv_theta, mv_n;
  for (int t = 0; t < 50; ++t) {
    Spinor x = gen::spinor(rng, dm);
    for (int k = 0; k < 3; ++k) {
      Spinor th = theta_action(k, x);
      mv_theta.check(integrate_s3(th.u()).is_zero() && integrate_s3(th.v()).is_zero(),
                     [&] { return "k=" + std::to_string(k) + " " + to_text(x); });
    }
    mv_n.check(integrate_s3(trace(radial_n(x))).is_zero(), [&] { return to_text(x); });
  }
  mv_theta.record(r, "mean_value.theta", "integral of Theta_k phi = 0 componentwise");
  mv_n.record(r, "mean_value.trace_n", "integral of tr(n phi) = 0");

  detail::Tally kcomm;
  for (int t = 0; t < 50; ++t) {
    Spinor x = gen::spinor(rng, dm), y = gen::spinor(rng, dm);
    Spinor k = k_split(x).first;
    kcomm.check(spinor_bracket(k, y).is_zero() && subspace_class(k).K && subspace_class(k_split(x).second).Kbot,
                [&] { return to_text(x) + " ; " + to_text(y); });
  }
  kcomm.record(r, "k_commutes", "[K-part, psi] = 0");

  detail::Tally probe;
  std::vector<Spinor> witnesses{unit_I(), Spinor(Poly::z1() + Poly::z1bar(), Poly()),
                                Spinor(Poly::z2() + Poly::z2bar(), Poly())};
  for (auto& b : detail::all_indices(2)) {
    const Spinor& psi = basis_sphere(b);
    if (subspace_class(psi).K) continue;
    bool found = false;
    for (auto& w : witnesses) found = found || !subspace_class(spinor_mul(w, psi)).K;
    probe.check(found, [&] { return b.str(); });
  }
  probe.record(r, "normalizer_probe", "some K witness moves every non-K basis element out of K");
  return r;
}

// ---------------------------------------------------------------- grading

inline Report suite_grading(const SuiteOptions& opt) {
  Report r;
  r.suite = "grading";
  auto rng = gen::stream(opt.seed, "grading");
  detail::Tally additive, resum;
  for (int t = 0; t < 50; ++t) {
    auto [x, N1] = gen::homogeneous(rng, std::min(opt.max_degree, 2));
    auto [y, N2] = gen::homogeneous(rng, std::min(opt.max_degree, 2));
    Spinor p = spinor_mul(x, y);
    auto parts = homogeneous_parts(p);
    Spinor sum;
    for (auto& [N, piece] : parts) sum += piece;
    resum.check(sum == p, [&] { return to_text(p); });
    bool concentrated = p.is_zero() || (parts.size() == 1 && parts.begin()->first == N1 + N2);
    additive.check(concentrated, [&] {
      return "N1=" + std::to_string(N1) + ", N2=" + std::to_string(N2) + ", product has " + detail::degrees_text(parts);
    });
  }
  additive.record(r, "additivity", "product of degrees N1, N2 is homogeneous of degree N1+N2");
  resum.record(r, "parts_resum", "homogeneous parts sum back exactly");

  Spinor ex = spinor_mul(basis_sphere({Sign::plus, 2, 0, 0}), basis_sphere({Sign::minus, 0, 0, 0}));
  auto parts = homogeneous_parts(ex);
  r.add("example.phi+(2,0,0)*phi-(0,0,0)", parts.size() == 1 && parts.begin()->first == -1,
        detail::parts_text(parts), "single part at N = -1");
  Spinor km = spinor_mul(kappa(), mu());
  auto kparts = homogeneous_parts(km);
  r.add("example.kappa*mu", kparts.size() == 1 && kparts.begin()->first == -2, detail::degrees_text(kparts),
        "single part at N = -2");
  return r;
}

// ---------------------------------------------------------------- cocycle

inline Report suite_cocycle(const SuiteOptions& opt) {
  Report r;
  r.suite = "cocycle";
  auto rng = gen::stream(opt.seed, "cocycle");
  int dm = opt.max_degree;

  detail::Tally anti, real;
  for (int t = 0; t < 100; ++t) {
    Spinor x = gen::spinor(rng, dm), y = gen::spinor(rng, dm);
    for (int k = 0; k < 3; ++k) {
      GQ c = cocycle(k, x, y);
      anti.check(c == -cocycle(k, y, x), [&] { return "k=" + std::to_string(k) + " " + to_text(x); });
      real.check(gq_is_real(c), [&] { return c.str(); });
    }
  }
  anti.record(r, "antisymmetry");
  real.record(r, "realness");

  detail::Tally cyc, lcyc;
  for (int t = 0; t < 50; ++t) {
    Spinor x = gen::spinor(rng, dm), y = gen::spinor(rng, dm), z = gen::spinor(rng, dm);
    for (int k = 0; k < 3; ++k) {
      GQ a = cocycle(k, spinor_mul(x, y), z) + cocycle(k, spinor_mul(y, z), x) + cocycle(k, spinor_mul(z, x), y);
      cyc.check(a.is_zero(), [&] { return "k=" + std::to_string(k) + " sum=" + a.str(); });
      GQ l = cocycle(k, spinor_bracket(x, y), z) + cocycle(k, spinor_bracket(y, z), x) +
             cocycle(k, spinor_bracket(z, x), y);
      lcyc.check(l.is_zero(), [&] { return "k=" + std::to_string(k) + " sum=" + l.str(); });
    }
  }
  cyc.record(r, "cycle_associative", "c(xy,z) + c(yz,x) + c(zx,y) = 0");
  lcyc.record(r, "cycle_lie", "c([x,y],z) + cyclic = 0");

  detail::Tally deriv;
  for (int t = 0; t < 50; ++t) {
    Spinor x = gen::spinor(rng, dm), y = gen::spinor(rng, dm);
    Spinor nx = radial_n(x), ny = radial_n(y);
    for (int k = 0; k < 3; ++k) {
      GQ s = cocycle(k, nx, y) + cocycle(k, x, ny);
      deriv.check(s.is_zero(), [&] { return "k=" + std::to_string(k) + " sum=" + s.str(); });
    }
  }
  deriv.record(r, "derivation_compatibility", "c(n x, y) + c(x, n y) = 0");

  GQ c0 = cocycle(0, kappa(), kappa_star()), c1 = cocycle(1, kappa(), kappa_star()),
     c2 = cocycle(2, kappa(), kappa_star());
  r.add("kappa_kappastar", c0 == GQ(-1) && c1.is_zero() && c2.is_zero(),
        "c0=" + c0.str() + " c1=" + c1.str() + " c2=" + c2.str(), "c0=-1 c1=0 c2=0");
  GQ l0 = cocycle(0, lambda(), lambda_star()), l1 = cocycle(1, lambda(), lambda_star()),
     l2 = cocycle(2, lambda(), lambda_star());
  r.add("lambda_lambdastar", l0 == GQ(-1) && l1.is_zero() && l2.is_zero(),
        "c0=" + l0.str() + " c1=" + l1.str() + " c2=" + l2.str(), "c0=-1 c1=0 c2=0");
  Spinor tk = spinor_mul(theta_action(0, kappa()), kappa_star());
  r.add("theta0_kappa_times_kappastar", tk == unit_I() * GQ(Rational(-1, 2)), to_text(tk), "-1/2 I");

  Spinor w1{-Poly::z2bar(), Poly()}, w2{Poly::z2() * GQ::i(), Poly()};
  Spinor wb = spinor_bracket(w1, w2);
  GQ wc = cocycle(0, w1, w2);
  r.add("nontrivial_witness", wb.is_zero() && (wc == GQ(Rational(1, 2)) || wc == GQ(Rational(-1, 2))),
        "bracket=" + to_text(wb) + " c0=" + wc.str(), "bracket 0, |c0| = 1/2");
  GQ wc_plain = cocycle(0, w1, Spinor(Poly::z2(), Poly()));
  r.note("claim.witness_without_i", wc_plain == GQ(Rational(1, 2)), "c0=" + wc_plain.str(), "c0=1/2");

  detail::Tally basis0;
  auto idx2 = detail::all_indices(2);
  for (auto& b : idx2)
    for (auto& c : idx2) {
      GQ v = cocycle(0, basis_sphere(b), basis_sphere(c));
      basis0.check(v.is_zero(), [&] { return "c0(" + b.str() + "," + c.str() + ")=" + v.str(); });
    }
  basis0.record(r, "basis_vanishing", "c0 of basis elements with m <= 2 is 0");

  // Matrix-trace extension on 2x2 current elements.
  detail::Tally manti, mcyc, mlcyc, mderiv;
  for (int t = 0; t < 10; ++t) {
    CurrentElement A = gen::current(rng, 2, 2), B = gen::current(rng, 2, 2), C = gen::current(rng, 2, 2);
    for (int k = 0; k < 3; ++k) {
      manti.check(cocycle_matrix(k, A, B) == -cocycle_matrix(k, B, A), [&] { return std::to_string(k); });
      GQ a = cocycle_matrix(k, matrix_mul(A, B), C) + cocycle_matrix(k, matrix_mul(B, C), A) +
             cocycle_matrix(k, matrix_mul(C, A), B);
      mcyc.check(a.is_zero(), [&] { return a.str(); });
      GQ l = cocycle_matrix(k, current_bracket(A, B), C) + cocycle_matrix(k, current_bracket(B, C), A) +
             cocycle_matrix(k, current_bracket(C, A), B);
      mlcyc.check(l.is_zero(), [&] { return l.str(); });
      GQ d = cocycle_matrix(k, radial_n(A), B) + cocycle_matrix(k, A, radial_n(B));
      mderiv.check(d.is_zero(), [&] { return d.str(); });
    }
  }
  manti.record(r, "matrix.antisymmetry");
  mcyc.record(r, "matrix.cycle_associative");
  mlcyc.record(r, "matrix.cycle_lie");
  mderiv.record(r, "matrix.derivation_compatibility");

  auto g = make_sl(2);
  GQ mh = cocycle_matrix(0, tensor(kappa(), g.h[0]), tensor(kappa_star(), g.h[0]));
  r.add("matrix.example_h", mh == GQ(-2), mh.str(), "(h|h) c0(kappa,kappastar) = -2");
  // Deviation of the trace rule from (X|Y) c(phi,psi) on a complex-scaled tensor.
  ScalarMatrix iE = GQ::i() * g.e[0];
  GQ dev = cocycle_matrix(0, tensor(kappa(), iE), tensor(kappa_star(), g.f[0]));
  GQ naive = trace_form(iE, g.f[0]) * cocycle(0, kappa(), kappa_star());
  r.note("complex_scaled_tensor", dev == naive, "trace rule: " + dev.str(), "(X|Y) c0 = " + naive.str());
  return r;
}

// ---------------------------------------------------------------- current

inline Report suite_current(const SuiteOptions& opt) {
  Report r;
  r.suite = "current";
  auto rng = gen::stream(opt.seed, "current");
  int dm = std::min(opt.max_degree, 2);

  for (int n : {2, 3}) {
    auto g = make_sl(n);
    detail::Tally resum, keys;
    for (int t = 0; t < 20; ++t) {
      ExtendedElement X(gen::current(rng, n, dm));
      if (gen::coin(rng)) X.a[gen::uniform(rng, 0, 2)] = gen::nonzero_scalar(rng);
      if (gen::coin(rng)) X.t = gen::nonzero_scalar(rng);
      auto parts = root_decompose(X, g);
      ExtendedElement sum(n);
      for (auto& [w, piece] : parts) {
        sum += piece;
        auto got = weight_of(piece, g);
        keys.check(got && *got == w, [&] { return w.str() + " -> " + (got ? got->str() : "not a weight vector"); });
      }
      resum.check(sum == X, [&] { return to_text(X); });
    }
    std::string tag = "sl" + std::to_string(n) + ".";
    resum.record(r, tag + "decompose_resum", "components sum back exactly");
    keys.record(r, tag + "component_weights", "weight_of(component) equals its key");

    // Pure tensors in L[m] (x) g_alpha.
    for (int m : {-3, 0, 1}) {
      detail::Tally eig;
      Sign sg = m >= 0 ? Sign::plus : Sign::minus;
      int mm = m >= 0 ? m : -m - 3;
      for (auto& b : basis_indices(sg, mm))
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            ExtendedElement X(tensor(basis_sphere(b), ScalarMatrix::unit(n, i, j)));
            auto alpha = g.root_of(i, j);
            bool ok = ghat_bracket(ExtendedElement::derivation(n), X) == GQ(Rational(m, 2)) * X;
            for (int q = 0; q < g.rank(); ++q) {
              int ah = 0;
              for (int p = 0; p < g.rank(); ++p) ah += g.cartan[q][p] * alpha[p];
              ok = ok && ghat_bracket(embed(tensor(unit_I(), g.h[q])), X) == GQ(ah) * X;
            }
            auto w = weight_of(X, g);
            ok = ok && w && w->mhalf == m && w->alpha == alpha;
            eig.check(ok, [&] { return b.str() + " E" + std::to_string(i + 1) + std::to_string(j + 1); });
          }
      eig.record(r, tag + "eigen.m=" + std::to_string(m), "[h, x] = alpha(h) x and [n, x] = (m/2) x");
    }
  }

  auto g = make_sl(2);
  detail::Tally canti, ganti, cartan, eigrel, central, kbot;
  for (int t = 0; t < 10; ++t) {
    CurrentElement A = gen::current(rng, 2, dm), B = gen::current(rng, 2, dm);
    canti.check(current_bracket(A, B) == -current_bracket(B, A), [&] { return to_text(A); });
    ExtendedElement X = gen::extended(rng, 2, dm, true), Y = gen::extended(rng, 2, dm, true);
    ganti.check(ghat_bracket(X, Y) == -ghat_bracket(Y, X), [&] { return to_text(X); });

    Spinor k = k_split(gen::spinor(rng, dm)).first, psi = gen::spinor(rng, dm);
    cartan.check(current_bracket(tensor(k, g.h[0]), tensor(psi, g.h[0])).is_zero(), [&] { return to_text(k); });
    CurrentElement lhs = current_bracket(tensor(k, g.h[0]), tensor(psi, g.e[0]));
    CurrentElement rhs = tensor(spinor_mul(k, psi), GQ(g.cartan[0][0]) * g.e[0]);
    eigrel.check(lhs == rhs, [&] { return to_text(k) + " ; " + to_text(psi); });

    CurrentElement D1(2), D2(2);
    for (int i = 0; i < 2; ++i) {
      D1.set(i, i, gen::spinor(rng, dm));
      D2.set(i, i, gen::spinor(rng, dm));
    }
    bool kb = true;
    CurrentElement br = current_bracket(D1, D2);
    for (auto& [key, x] : br.entries()) kb = kb && k_split(x).first.is_zero();
    kbot.check(kb, [&] { return to_text(D1); });
  }
  for (auto& b : detail::all_indices(2)) {
    ExtendedElement X(tensor(basis_sphere(b), g.e[0]));
    bool zero = ghat_bracket(ExtendedElement::derivation(2), X).is_zero();
    central.check(zero == (b.degree() == 0), [&] { return b.str(); });
  }
  canti.record(r, "antisymmetry.current");
  ganti.record(r, "antisymmetry.ghat");
  cartan.record(r, "cartan_commute", "[K h, L h] = 0");
  eigrel.record(r, "eigen_relation", "[phi h, psi e] = c (phi psi) e for phi in K");
  central.record(r, "centralizer_probe", "[n, phi x] = 0 iff phi in L[0]");
  kbot.record(r, "diagonal_bracket_kbot", "K-part of every entry of [Lh, Lh] is 0");

  auto gens = chevalley_generators(g);
  auto expect_weight = [&](const std::string& name, const ExtendedElement& X, int m, int a) {
    auto w = weight_of(X, g);
    r.add("weight." + name, w && w->mhalf == m && w->alpha == std::vector<int>{a}, w ? w->str() : "not a weight vector",
          WeightLabel{m, {a}, {}}.str());
  };
  expect_weight("f_kappa", gens.f_kappa, 1, -1);
  expect_weight("f_lambda", gens.f_lambda, -3, -1);
  expect_weight("f_J", gens.f_J, 0, -1);
  auto hk = homogeneous_parts(kappa()), hl = homogeneous_parts(lambda());
  r.add("degree.kappa", hk.size() == 1 && hk.begin()->first == 1, detail::degrees_text(hk), "kappa in L[1]");
  r.add("degree.lambda", hl.size() == 1 && hl.begin()->first == -3, detail::degrees_text(hl), "lambda in L[-3]");
  return r;
}

// ---------------------------------------------------------------- jacobi

inline Report suite_jacobi(const SuiteOptions& opt) {
  Report r;
  r.suite = "jacobi";
  auto rng = gen::stream(opt.seed, "jacobi");
  int dm = std::min(opt.max_degree, 2);
  auto jacobiator = [](const ExtendedElement& x, const ExtendedElement& y, const ExtendedElement& z) {
    return ghat_bracket(ghat_bracket(x, y), z) + ghat_bracket(ghat_bracket(y, z), x) +
           ghat_bracket(ghat_bracket(z, x), y);
  };
  detail::Tally full, central;
  for (int t = 0; t < 25; ++t) {
    ExtendedElement x = gen::extended(rng, 2, dm, true), y = gen::extended(rng, 2, dm, true),
                    z = gen::extended(rng, 2, dm, true);
    ExtendedElement j = jacobiator(x, y, z);
    full.check(j.is_zero(), [&] { return "Jacobiator = " + to_text(j); });
  }
  full.record(r, "ghat_jacobi", "Jacobi identity with nonzero a and n coordinates");
  for (int t = 0; t < 25; ++t) {
    ExtendedElement x = gen::extended(rng, 2, dm, false), y = gen::extended(rng, 2, dm, false),
                    z = gen::extended(rng, 2, dm, false);
    ExtendedElement j = jacobiator(x, y, z);
    central.check(j.is_zero(), [&] { return "Jacobiator = " + to_text(j); });
  }
  central.record(r, "extra.ghat_jacobi_without_n", "Jacobi identity with nonzero a, zero n coordinates");
  return r;
}

// ---------------------------------------------------------------- chevalley

inline Report suite_chevalley(const SuiteOptions&) {
  Report r;
  r.suite = "chevalley";
  for (int n : {2, 3}) r.merge(verify_relations(make_sl(n)), "");
  return r;
}

// ---------------------------------------------------------------- numeric

inline Report suite_numeric(const SuiteOptions& opt) {
  Report r;
  r.suite = "numeric";
  auto rng = gen::stream(opt.seed, "numeric");

  detail::Tally mc;
  for (int t = 0; t < 20; ++t) {
    Monomial m;
    if (t % 2 == 0) {
      m.a = m.b = gen::uniform(rng, 0, 3);
    } else {
      m.a = gen::uniform(rng, 0, 6);
      m.b = gen::uniform(rng, 0, 6 - m.a);
      (gen::coin(rng) ? m.c : m.d) = gen::uniform(rng, 0, 6 - m.a - m.b);
    }
    Poly p = Poly::monomial(m);
    cplx exact = to_complex(integrate_s3(p));
    auto est = mc_integral(p, 100000, opt.seed + static_cast<std::uint64_t>(t));
    double dev = std::abs(est.estimate - exact);
    mc.check(dev <= 5 * est.stderr_, [&] {
      return "monomial (" + std::to_string(m.a) + "," + std::to_string(m.b) + "," + std::to_string(m.c) + "," +
             std::to_string(m.d) + ") deviation " + std::to_string(dev) + " vs 5 sigma " + std::to_string(5 * est.stderr_);
    });
  }
  mc.record(r, "monte_carlo", "within 5 standard errors at 1e5 samples");

  std::vector<PointS3> pts;
  for (int t = 0; t < 10; ++t) pts.push_back(random_point(rng));
  detail::Tally fd;
  const FieldOp all_fields[] = {FieldOp::dz1, FieldOp::dz1bar, FieldOp::dz2, FieldOp::dz2bar, FieldOp::eplus,
                                FieldOp::eminus, FieldOp::theta, FieldOp::theta0, FieldOp::theta1, FieldOp::theta2,
                                FieldOp::nu, FieldOp::nubar, FieldOp::nrad};
  for (int t = 0; t < 5; ++t) {
    Poly p = gen::normal_poly(rng, 4, 3);
    for (FieldOp f : all_fields) {
      double e = fd_check(f, p, pts);
      fd.check(e <= 1e-6, [&] { return "field " + std::to_string(static_cast<int>(f)) + " error " + std::to_string(e); });
    }
  }
  for (auto& b : detail::all_indices(1)) {
    Poly amb = basis_phi(b).u();
    for (FieldOp f : all_fields) {
      double e = fd_check(f, amb, pts);
      fd.check(e <= 1e-6, [&] { return "radial " + b.str() + " error " + std::to_string(e); });
    }
  }
  fd.record(r, "finite_differences", "relative error <= 1e-6");

  std::vector<PointS3> pts20;
  for (int t = 0; t < 20; ++t) pts20.push_back(random_point(rng));
  detail::Tally dir;
  double worst = 0;
  for (auto& b : detail::all_indices(2))
    for (auto& q : pts20) {
      double e = dirac_residual(basis_sphere(b), detail::eigenvalue(b), q);
      worst = std::max(worst, e);
      dir.check(e <= 1e-8, [&] { return b.str() + " residual " + std::to_string(e); });
    }
  dir.record(r, "dirac_residual", "<= 1e-8 at 20 points for m <= 2");

  detail::Tally quat, nf;
  for (int t = 0; t < 20; ++t) {
    Spinor x = gen::spinor(rng, 2), y = gen::spinor(rng, 2);
    Spinor xy = spinor_mul(x, y);
    for (auto& q : pts) {
      auto [u1, v1] = eval_at(x, q);
      auto [u2, v2] = eval_at(y, q);
      auto [u, v] = eval_at(xy, q);
      auto [hu, hv] = from_quat(hamilton(to_quat(u1, v1), to_quat(u2, v2)));
      double e = std::max(std::abs(u - hu), std::abs(v - hv));
      quat.check(e <= 1e-10, [&] { return "error " + std::to_string(e); });
    }
  }
  for (auto& b : detail::all_indices(2)) {
    Spinor amb = basis_phi(b), sph = basis_sphere(b);
    for (auto& q : pts) {
      auto [u1, v1] = eval_at(amb, q);
      auto [u2, v2] = eval_at(sph, q);
      nf.check(std::max(std::abs(u1 - u2), std::abs(v1 - v2)) <= 1e-10, [&] { return b.str(); });
    }
  }
  quat.record(r, "quaternion_product", "pointwise product equals Hamilton product within 1e-10");
  nf.record(r, "normal_form_pointwise", "ambient and normal form agree on S3 within 1e-10");
  return r;
}

// ---------------------------------------------------------------- frontend

inline Report suite_frontend(const SuiteOptions& opt) {
  Report r;
  r.suite = "frontend";
  auto rng = gen::stream(opt.seed, "frontend");
  detail::Tally rt;
  for (int t = 0; t < 100; ++t) {
    Spinor x = gen::spinor(rng, opt.max_degree);
    std::string text = to_text(x);
    bool ok = false;
    try {
      Value v = eval(text);
      ok = std::holds_alternative<Spinor>(v) ? std::get<Spinor>(v) == x : x.is_zero() && std::get<GQ>(v).is_zero();
    } catch (const Error&) {
      ok = false;
    }
    rt.check(ok, [&] { return text; });
  }
  rt.record(r, "roundtrip", "parse(render(x)) evaluates to x");

  static const char* pieces[] = {"kappa", "mu", "I", "J", "phi", "+", "-", "*", "(", ")", "[", "]", ",", ";",
                                 "|", "^", "/", "1", "2", "0", "i", "z1", "z2~", "tensor", "E", "H", "ak", "nder",
                                 "Theta0", "tr", "n", "sigma", "v", " ", "\n", "~"};
  int crashes = 0, parsed = 0;
  for (int t = 0; t < 10000; ++t) {
    std::string s;
    int len = gen::uniform(rng, 0, 24);
    for (int q = 0; q < len; ++q) {
      if (gen::coin(rng))
        s += pieces[gen::uniform(rng, 0, static_cast<int>(std::size(pieces)) - 1)];
      else
        s += static_cast<char>(gen::uniform(rng, 0, 255));
    }
    try {
      ExprPtr e = parse(s);
      ++parsed;
      try {
        eval(*e, 2);
      } catch (const Error&) {
      }
    } catch (const ParseError&) {
    } catch (...) {
      ++crashes;
    }
  }
  r.add("fuzz", crashes == 0,
        std::to_string(crashes) + " crashes in 10000 inputs (" + std::to_string(parsed) + " parsed)", "0 crashes");
  return r;
}

// ---------------------------------------------------------------- dispatch

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"basis", "algebra", "cocycle", "grading", "current",
                                              "jacobi", "chevalley", "numeric", "frontend"};
  return names;
}

inline Report run_suite(const std::string& name, const SuiteOptions& opt) {
  Report r;
  if (name == "basis") r = suite_basis(opt);
  else if (name == "algebra") r = suite_algebra(opt);
  else if (name == "cocycle") r = suite_cocycle(opt);
  else if (name == "grading") r = suite_grading(opt);
  else if (name == "current") r = suite_current(opt);
  else if (name == "jacobi") r = suite_jacobi(opt);
  else if (name == "chevalley") r = suite_chevalley(opt);
  else if (name == "numeric") r = suite_numeric(opt);
  else if (name == "frontend") r = suite_frontend(opt);
  else if (name == "all") {
    r.suite = "all";
    std::vector<std::future<Report>> parts;
    for (auto& s : suite_names())
      parts.push_back(std::async(std::launch::async, [s, opt] { return run_suite(s, opt); }));
    for (std::size_t q = 0; q < parts.size(); ++q) r.merge(parts[q].get(), suite_names()[q] + ".");
  } else {
    throw Error("unknown suite '" + name + "'");
  }
  r.sort();
  return r;
}

}  // namespace s3c
