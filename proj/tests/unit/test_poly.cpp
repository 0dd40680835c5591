#include <gtest/gtest.h>

#include "helpers.hpp"

using namespace s3c;
using namespace s3c::test;

TEST(Poly, MultiplicationExamples) {
  EXPECT_EQ(poly_mul(Poly::z1() + Poly::z2(), Poly::z1() - Poly::z2()), M(2, 0, 0, 0) - M(0, 0, 2, 0));
  EXPECT_EQ(poly_mul(M(1, 0, 0, 0, -1), Poly::z1bar()), M(1, 1, 0, 0, -1));
  Poly p = M(1, 2, 0, 3) * Q(2, 3) + M(0, 0, 1, 0) * I();
  EXPECT_EQ(poly_mul(M(0, 0, 0, 0), p), p);
}

TEST(Poly, CanonicalStorage) {
  Poly p = Poly::z1() + Poly::z1() * Q(-1);
  EXPECT_TRUE(p.is_zero());
  EXPECT_TRUE(p.terms().empty());
}

TEST(Poly, NormalFormExamples) {
  EXPECT_EQ(normal_form(M(0, 0, 1, 1)), M(0, 0, 0, 0) - M(1, 1, 0, 0));
  EXPECT_EQ(normal_form(M(1, 0, 0, 0, -2)), Poly::z1());
  EXPECT_EQ(normal_form(M(0, 0, 2, 1)), Poly::z2() - M(1, 1, 1, 0));
}

TEST(Poly, NormalFormIdempotentAndMultiplicative) {
  auto r = gen::stream(0, "poly-test");
  for (int t = 0; t < 200; ++t) {
    Poly p, q;
    for (int k = 0; k < 3; ++k) {
      p.add_term({gen::uniform(r, 0, 3), gen::uniform(r, 0, 3), gen::uniform(r, 0, 3), gen::uniform(r, 0, 3),
                  gen::uniform(r, -2, 2)},
                 gen::nonzero_scalar(r));
      q.add_term({gen::uniform(r, 0, 3), gen::uniform(r, 0, 3), gen::uniform(r, 0, 3), gen::uniform(r, 0, 3), 0},
                 gen::nonzero_scalar(r));
    }
    Poly np = normal_form(p);
    ASSERT_TRUE(np.is_normal());
    ASSERT_EQ(normal_form(np), np);
    ASSERT_EQ(normal_form(p * q), normal_form(np * normal_form(q)));
    ASSERT_EQ(normal_form(conj(p)), conj(np));
  }
}

TEST(Poly, FieldExamples) {
  EXPECT_EQ(apply_field(FieldOp::eminus, Poly::z1()), -Poly::z2bar());
  EXPECT_TRUE(apply_field(FieldOp::eplus, M(2, 0, 3, 0)).is_zero());
  EXPECT_TRUE(apply_field(FieldOp::theta, M(1, 0, 0, 1)).is_zero());
  EXPECT_EQ(apply_field(FieldOp::theta, M(2, 0, 0, 0)), M(2, 0, 0, 0) * Q(2));
  EXPECT_EQ(apply_field(FieldOp::theta0, Poly::z1()), Poly::z1() * I());
  EXPECT_EQ(apply_field(FieldOp::nrad, M(1, 0, 0, 0, -2)), M(1, 0, 0, 0, -2) * Q(-3, 2));
}

TEST(Poly, TangentialFieldsKillRadius) {
  Poly r2 = M(1, 1, 0, 0) + M(0, 0, 1, 1);
  for (FieldOp f : {FieldOp::eplus, FieldOp::eminus, FieldOp::theta, FieldOp::theta0, FieldOp::theta1,
                    FieldOp::theta2})
    EXPECT_TRUE(detail::raw_field(f, r2).is_zero());
}

TEST(Poly, TangentialFieldsCommuteWithNormalForm) {
  auto r = gen::stream(0, "poly-fields");
  for (int t = 0; t < 100; ++t) {
    Poly p;
    for (int k = 0; k < 3; ++k)
      p.add_term({gen::uniform(r, 0, 3), gen::uniform(r, 0, 3), gen::uniform(r, 0, 3), gen::uniform(r, 0, 3), 0},
                 gen::nonzero_scalar(r));
    for (FieldOp f : {FieldOp::eplus, FieldOp::eminus, FieldOp::theta, FieldOp::theta1, FieldOp::theta2})
      ASSERT_EQ(normal_form(detail::raw_field(f, p)), apply_field(f, normal_form(p)));
  }
}

TEST(Poly, Laplacian) {
  EXPECT_EQ(laplacian(M(1, 1, 0, 0)), M(0, 0, 0, 0));
  EXPECT_TRUE(laplacian(M(4, 0, 0, 0)).is_zero());
  for (int m = 0; m <= 3; ++m)
    for (int l = 0; l <= m; ++l)
      for (int k = 0; k <= m + 1; ++k) EXPECT_TRUE(laplacian(basis_v(k, l, m - l)).is_zero());
  EXPECT_THROW(laplacian(M(1, 0, 0, 0, -1)), Error);
}

TEST(Poly, Integration) {
  EXPECT_EQ(integrate_s3(M(0, 0, 0, 0)), Q(1));
  EXPECT_EQ(integrate_s3(M(1, 1, 0, 0)), Q(1, 2));
  EXPECT_EQ(integrate_s3(M(1, 0, 0, 1)), GQ());
  EXPECT_EQ(integrate_s3(M(2, 2, 0, 0)), Q(1, 3));
  EXPECT_THROW(integrate_s3(M(0, 0, 1, 1)), Error);
  // z2 z2~ = 1 - z1 z1~ on the sphere.
  EXPECT_EQ(integrate_s3(normal_form(M(0, 0, 1, 1))), Q(1, 2));
}

TEST(Poly, IntegralOfConjugateIsConjugate) {
  auto r = gen::stream(0, "poly-int");
  for (int t = 0; t < 100; ++t) {
    Poly p = gen::normal_poly(r, 4, 3);
    ASSERT_EQ(integrate_s3(conj(p)), integrate_s3(p).conj());
  }
}

TEST(Poly, DerivativeOfRadialPower) {
  // d/dz1 |z|^-2 = -z1~ |z|^-4
  EXPECT_EQ(derivative(Var::z1, M(0, 0, 0, 0, -1)), M(0, 1, 0, 0, -2) * Q(-1));
}
