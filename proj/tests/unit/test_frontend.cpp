#include <gtest/gtest.h>

#include "helpers.hpp"
#include "s3c/frontend.hpp"

using namespace s3c;
using namespace s3c::test;

TEST(Parser, ExampleShapes) {
  auto p = parse("kappa*mu");
  EXPECT_EQ(p->kind, Expr::Kind::product);
  ASSERT_EQ(p->kids.size(), 2u);
  EXPECT_EQ(p->kids[0]->name, "kappa");
  auto b = parse("[phi+(1,0,1), phi-(0,0,0)]");
  EXPECT_EQ(b->kind, Expr::Kind::bracket);
  EXPECT_EQ(b->kids[0]->kind, Expr::Kind::basis);
  EXPECT_EQ(b->kids[1]->kind, Expr::Kind::basis);
  auto t = parse("[tensor(kappa,E(1,2)), nder]");
  EXPECT_EQ(t->kind, Expr::Kind::bracket);
  EXPECT_EQ(t->kids[0]->kind, Expr::Kind::tensor);
  EXPECT_EQ(t->kids[1]->kind, Expr::Kind::nder);
}

TEST(Parser, Errors) {
  try {
    parse("kappa *\n  + mu");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
    EXPECT_EQ(e.col(), 3);
    EXPECT_FALSE(e.expected().empty());
  }
  try {
    parse("[kappa, mu");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("unbalanced"), std::string::npos);
  }
  EXPECT_THROW(parse("kappa)"), ParseError);
  EXPECT_THROW(eval("phi+(1,2,0)"), EvalError);
  EXPECT_THROW(parse(std::string(1000, '(') + "I" + std::string(1000, ')')), ParseError);
  EXPECT_THROW(parse("kappa mu"), ParseError);
}

TEST(Eval, Examples) {
  EXPECT_EQ(std::get<Spinor>(eval("Theta0(kappa)")), theta_action(0, kappa()));
  Value z = eval("[kappa, mu] - (kappa*mu - mu*kappa)");
  EXPECT_TRUE(std::holds_alternative<Spinor>(z) && std::get<Spinor>(z).is_zero());
  Value tr = eval("tr(J)");
  EXPECT_TRUE(std::visit([](const auto& v) { return v.is_zero(); }, tr));
  EXPECT_EQ(std::get<Spinor>(eval("phi+(1,0,1)")), kappa());
  EXPECT_EQ(std::get<Spinor>(eval("1/2*i*kappa")), kappa() * I(1, 2));
}

TEST(Eval, KindErrors) {
  EXPECT_THROW(eval("kappa + 1"), EvalError);
  EXPECT_THROW(eval("[1, kappa]"), EvalError);
  try {
    eval("kappa + tensor(kappa, E(1,2))");
    FAIL();
  } catch (const EvalError& e) {
    std::string m = e.what();
    EXPECT_NE(m.find("spinor"), std::string::npos);
    EXPECT_NE(m.find("current"), std::string::npos);
  }
  EXPECT_THROW(eval("tensor(kappa, E(3,1))", 2), Error);
}

TEST(Eval, ExtendedValues) {
  Value v = eval("[nder, tensor(kappa,E(1,2))]");
  auto g = make_sl(2);
  EXPECT_EQ(std::get<ExtendedElement>(v), Q(1, 2) * ExtendedElement(tensor(kappa(), g.e[0])));
  // Current operands bracket inside Lg; an extended operand switches to the ghat bracket.
  Value c = eval("[tensor(kappa,H(1)), tensor(kappastar,H(1))]");
  EXPECT_TRUE(std::holds_alternative<CurrentElement>(c));
  Value w = eval("[tensor(kappa,H(1)) + 0*nder, tensor(kappastar,H(1))]");
  EXPECT_EQ(std::get<ExtendedElement>(w).a[0], Q(-2));
  EXPECT_EQ(std::get<ExtendedElement>(w).mat, std::get<CurrentElement>(c));
}

TEST(Render, Examples) {
  EXPECT_EQ(render_text(Value(kappa())), "(z2 | -z1~)");
  EXPECT_EQ(render_text(Value(Q(-1))), "-1/1");
  EXPECT_EQ(to_json(expand(Spinor(Poly::z2bar(), Poly()))).dump(), R"([[["+",1,1,2],"-1/2"]])");
  json j = render_json(Value(kappa()));
  EXPECT_EQ(spinor_from_json(j), kappa());
}

TEST(Render, RoundTrip) {
  auto r = gen::stream(0, "frontend-test");
  for (int t = 0; t < 100; ++t) {
    Spinor x = gen::nonzero_spinor(r, 3);
    std::string text = render_text(Value(x));
    ASSERT_EQ(std::get<Spinor>(eval(text)), x) << text;
  }
}

TEST(Render, MonomialOrder) {
  Spinor x(Poly::z2() + Poly::z1() * Poly::z1() + Poly::z1bar() + M(0, 0, 0, 0), Poly());
  EXPECT_EQ(render_text(Value(x)), "(1/1 + z2 + z1~ + z1^2 | 0)");
}

TEST(Eval, BasisDegreeLimit) {
  EXPECT_NO_THROW(eval("phi-(3,1,2)"));
  EXPECT_THROW(eval("phi+(999999,0,0)"), EvalError);
}
