#include <gtest/gtest.h>

#include "helpers.hpp"

using namespace s3c;
using namespace s3c::test;

TEST(Cocycle, KappaExamples) {
  EXPECT_EQ(cocycle(0, kappa(), kappa_star()), Q(-1));
  EXPECT_EQ(cocycle(1, kappa(), kappa_star()), GQ());
  EXPECT_EQ(cocycle(2, kappa(), kappa_star()), GQ());
  EXPECT_EQ(spinor_mul(theta_action(0, kappa()), kappa_star()), unit_I() * Q(-1, 2));
  EXPECT_EQ(cocycle(0, lambda(), lambda_star()), Q(-1));
  for (int k = 0; k < 3; ++k) EXPECT_EQ(cocycle(k, unit_I(), kappa()), GQ());
}

TEST(Cocycle, RejectsAmbientInput) {
  EXPECT_THROW(cocycle(0, Spinor::ambient(Poly::z1(), Poly()), kappa()), Error);
}

TEST(Cocycle, NonTrivialWitness) {
  Spinor a(-Poly::z2bar(), Poly()), b(Poly::z2() * I(), Poly());
  EXPECT_TRUE(spinor_bracket(a, b).is_zero());
  GQ c = cocycle(0, a, b);
  EXPECT_TRUE(c == Q(1, 2) || c == Q(-1, 2));
  // Without the factor i the pairing vanishes.
  EXPECT_EQ(cocycle(0, a, Spinor(Poly::z2(), Poly())), GQ());
}

TEST(Cocycle, RandomIdentities) {
  auto r = gen::stream(0, "cocycle-test");
  for (int t = 0; t < 20; ++t) {
    Spinor x = gen::spinor(r, 2), y = gen::spinor(r, 2), z = gen::spinor(r, 2);
    for (int k = 0; k < 3; ++k) {
      GQ c = cocycle(k, x, y);
      ASSERT_TRUE(gq_is_real(c));
      ASSERT_EQ(c, -cocycle(k, y, x));
      ASSERT_TRUE((cocycle(k, spinor_mul(x, y), z) + cocycle(k, spinor_mul(y, z), x) + cocycle(k, spinor_mul(z, x), y))
                      .is_zero());
      ASSERT_TRUE((cocycle(k, spinor_bracket(x, y), z) + cocycle(k, spinor_bracket(y, z), x) +
                   cocycle(k, spinor_bracket(z, x), y))
                      .is_zero());
    }
  }
}

TEST(Cocycle, DerivationCompatibilityFailsForC1) {
  // Both in degree -3, so c(nx,y) + c(x,ny) = -3 c(x,y).
  Spinor x = basis_sphere({Sign::minus, 0, 0, 0}), y = basis_sphere({Sign::minus, 0, 0, 1});
  EXPECT_EQ(cocycle(1, x, y), Q(-1, 2));
  EXPECT_EQ(cocycle(1, radial_n(x), y) + cocycle(1, x, radial_n(y)), Q(3, 2));
}

TEST(Cocycle, C0VanishesOnBasisPairs) {
  std::vector<BasisIndex> idx;
  for (int m = 0; m <= 1; ++m)
    for (Sign s : {Sign::plus, Sign::minus})
      for (auto& b : basis_indices(s, m)) idx.push_back(b);
  for (auto& b : idx)
    for (auto& c : idx) ASSERT_EQ(cocycle(0, basis_sphere(b), basis_sphere(c)), GQ()) << b.str() << c.str();
}

TEST(CurrentElement, StorageAndSize) {
  CurrentElement A(2);
  A.set(0, 1, kappa());
  A.set(1, 0, Spinor());
  EXPECT_EQ(A.entries().size(), 1u);
  EXPECT_THROW(A.set(2, 0, kappa()), Error);
  EXPECT_THROW(A + CurrentElement(3), Error);
  EXPECT_THROW(A.set(0, 0, Spinor::ambient(Poly::z1(), Poly())), Error);
}

TEST(CocycleMatrix, Examples) {
  auto g = make_sl(2);
  EXPECT_EQ(cocycle_matrix(0, tensor(kappa(), g.h[0]), tensor(kappa_star(), g.h[0])), Q(-2));
  EXPECT_EQ(cocycle_matrix(0, tensor(unit_I(), g.e[0]), tensor(unit_I(), g.f[0])), GQ());
  CurrentElement A = tensor(kappa(), g.e[0]) + tensor(mu(), g.h[0]);
  EXPECT_EQ(cocycle_matrix(0, A, A), GQ());
}

TEST(CocycleMatrix, AgreesWithPureTensorRuleForRealMatrices) {
  auto g = make_sl(3);
  ScalarMatrix X = g.e[0] + g.h[1], Y = g.f[0] + Q(2) * g.h[1];
  for (int k = 0; k < 3; ++k)
    EXPECT_EQ(cocycle_matrix(k, tensor(kappa(), X), tensor(kappa_star(), Y)),
              trace_form(X, Y) * cocycle(k, kappa(), kappa_star()));
}
