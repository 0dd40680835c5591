#include <gtest/gtest.h>

#include "helpers.hpp"
#include "s3c/chevalley.hpp"

using namespace s3c;
using namespace s3c::test;

TEST(SimpleAlgebra, Cartan) {
  EXPECT_EQ(make_sl(2).cartan, (std::vector<std::vector<int>>{{2}}));
  EXPECT_EQ(make_sl(3).cartan, (std::vector<std::vector<int>>{{2, -1}, {-1, 2}}));
  auto g = make_sl(2);
  EXPECT_EQ(trace_form(g.e_theta, g.f_theta), Q(1));
  EXPECT_EQ(commutator(g.e_theta, g.f_theta), g.h_theta);
  EXPECT_THROW(make_sl(1), Error);
}

TEST(Current, Tensor) {
  auto g = make_sl(2);
  CurrentElement h = tensor(unit_I(), g.h[0]);
  EXPECT_EQ(h.at(0, 0), unit_I());
  EXPECT_EQ(h.at(1, 1), -unit_I());
  CurrentElement k = tensor(kappa(), g.e[0]);
  EXPECT_EQ(k.entries().size(), 1u);
  EXPECT_EQ(k.at(0, 1), kappa());
  EXPECT_TRUE(tensor(Spinor(), g.e[0]).is_zero());
}

TEST(Current, Brackets) {
  auto g = make_sl(2);
  EXPECT_EQ(current_bracket(tensor(unit_I(), g.e[0]), tensor(unit_I(), g.f[0])), tensor(unit_I(), g.h[0]));
  EXPECT_EQ(current_bracket(tensor(unit_J(), g.e[0]), tensor(unit_J(), g.f[0])), tensor(-unit_I(), g.h[0]));
}

TEST(Current, QuaternionicScalarReadingOfIJ) {
  auto g = make_sl(2);
  ScalarMatrix X = g.e[0] + g.h[0], Y = g.f[0] - g.h[0];
  ScalarMatrix sym = X * Y + Y * X;
  // Componentwise i: i*J = (0 | i).
  EXPECT_EQ(current_bracket(tensor(unit_J(), X), tensor(unit_J() * I(), Y)), tensor(unit_I() * I(-1), sym));
  // Quaternion product (iI)*J = (0 | -i) gives +i I (x) (XY + YX).
  Spinor iJ = spinor_mul(unit_I() * I(), unit_J());
  EXPECT_EQ(iJ, Spinor(Poly(), M(0, 0, 0, 0) * I(-1)));
  EXPECT_EQ(current_bracket(tensor(unit_J(), X), tensor(iJ, Y)), tensor(unit_I() * I(), sym));
}

TEST(Ghat, Brackets) {
  auto g = make_sl(2);
  ExtendedElement ke(tensor(kappa(), g.e[0]));
  EXPECT_EQ(ghat_bracket(ExtendedElement::derivation(2), ke), Q(1, 2) * ke);
  EXPECT_TRUE(ghat_bracket(ExtendedElement::central(2, 0), ke).is_zero());
  ExtendedElement r = ghat_bracket(embed(tensor(kappa(), g.h[0])), embed(tensor(kappa_star(), g.h[0])));
  EXPECT_EQ(r.a[0], Q(-2));
  EXPECT_EQ(r.mat, current_bracket(tensor(kappa(), g.h[0]), tensor(kappa_star(), g.h[0])));
}

TEST(Ghat, JacobiWithoutDerivation) {
  auto r = gen::stream(0, "ghat-test");
  for (int t = 0; t < 5; ++t) {
    auto x = gen::extended(r, 2, 1, false), y = gen::extended(r, 2, 1, false), z = gen::extended(r, 2, 1, false);
    ASSERT_TRUE((ghat_bracket(ghat_bracket(x, y), z) + ghat_bracket(ghat_bracket(y, z), x) +
                 ghat_bracket(ghat_bracket(z, x), y))
                    .is_zero());
  }
}

TEST(Ghat, JacobiBreaksWithDerivation) {
  // n is not a derivation of the product, so the t-part of the Jacobiator survives.
  auto g = make_sl(2);
  ExtendedElement nd = ExtendedElement::derivation(2);
  ExtendedElement x(tensor(basis_sphere({Sign::plus, 2, 0, 0}), g.e[0]));
  ExtendedElement y(tensor(mu(), g.h[0]));
  ExtendedElement j = ghat_bracket(ghat_bracket(nd, x), y) + ghat_bracket(ghat_bracket(x, y), nd) +
                      ghat_bracket(ghat_bracket(y, nd), x);
  EXPECT_FALSE(j.is_zero());
}

TEST(Weights, Examples) {
  auto g = make_sl(2);
  auto w = weight_of(ExtendedElement(tensor(kappa(), g.e[0])), g);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->mhalf, 1);
  EXPECT_EQ(w->alpha, std::vector<int>{1});
  auto w2 = weight_of(ExtendedElement(tensor(mu(), g.f[0])), g);
  ASSERT_TRUE(w2);
  EXPECT_EQ(w2->mhalf, -3);
  EXPECT_EQ(w2->alpha, std::vector<int>{-1});
  EXPECT_FALSE(weight_of(ExtendedElement(tensor(unit_I(), g.h[0]) + tensor(kappa(), g.e[0])), g));
}

TEST(Weights, RootDecompose) {
  auto g = make_sl(2);
  auto parts = root_decompose(ExtendedElement(tensor(kappa(), g.e[0]) + tensor(mu(), g.f[0])), g);
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_TRUE(parts.count(WeightLabel{1, {1}, {}}));
  EXPECT_TRUE(parts.count(WeightLabel{-3, {-1}, {}}));
  ExtendedElement h(tensor(unit_I(), g.h[0]));
  h.a[0] = Q(1);
  h.t = Q(1);
  auto hp = root_decompose(h, g);
  ASSERT_EQ(hp.size(), 1u);
  EXPECT_EQ(hp.begin()->first, (WeightLabel{0, {0}, {}}));
  EXPECT_TRUE(root_decompose(ExtendedElement(2), g).empty());
}

TEST(Weights, TriangularSplit) {
  auto g = make_sl(2);
  CurrentElement k = tensor(kappa(), g.e[0]);
  auto s = triangular_split(k);
  EXPECT_EQ(s[0], k);
  EXPECT_TRUE(s[1].is_zero() && s[2].is_zero());
  CurrentElement h = tensor(unit_I(), g.h[0]);
  EXPECT_EQ(triangular_split(h)[1], h);
}

TEST(Chevalley, GeneratorWeights) {
  auto g = make_sl(3);
  auto c = chevalley_generators(g);
  std::vector<int> minus_theta{-1, -1};
  auto wk = weight_of(c.f_kappa, g), wl = weight_of(c.f_lambda, g), wj = weight_of(c.f_J, g);
  ASSERT_TRUE(wk && wl && wj);
  EXPECT_EQ(wk->mhalf, 1);
  EXPECT_EQ(wl->mhalf, -3);
  EXPECT_EQ(wj->mhalf, 0);
  EXPECT_EQ(wk->alpha, minus_theta);
  EXPECT_EQ(wl->alpha, minus_theta);
  EXPECT_EQ(wj->alpha, minus_theta);
}

TEST(Chevalley, Relations) {
  auto rep = verify_relations(make_sl(2));
  auto status = [&](const std::string& n) {
    for (auto& c : rep.cases)
      if (c.name == n) return c.status;
    throw std::runtime_error("missing case " + n);
  };
  EXPECT_EQ(status("sl2.[e1,f1]"), Status::pass);
  EXPECT_EQ(status("sl2.[eJ,fJ]"), Status::pass);
  EXPECT_EQ(status("sl2.extra.[e_kappa,e1]"), Status::pass);
  EXPECT_EQ(status("sl2.[e_kappa,f_kappa].a"), Status::pass);
  // The literal vanishing relation does not hold: [e_J, f1] = -J (x) h1.
  EXPECT_EQ(status("sl2.eq_i.[e_J,f1]"), Status::fail);
  auto g = make_sl(2);
  auto c = chevalley_generators(g);
  EXPECT_EQ(ghat_bracket(c.e_J, c.f[0]), embed(tensor(-unit_J(), g.h[0])));
}
