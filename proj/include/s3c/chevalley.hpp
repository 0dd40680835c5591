#pragma once

#include <string>

#include "s3c/render.hpp"
#include "s3c/report.hpp"

namespace s3c {

inline Report verify_relations(const SimpleAlgebra& g) {
  Report r;
  r.suite = "chevalley";
  auto gen = chevalley_generators(g);
  std::string tag = "sl" + std::to_string(g.n) + ".";
  auto idx = [](int i) { return std::to_string(i + 1); };
  auto check = [&](const std::string& name, const ExtendedElement& got, const ExtendedElement& want) {
    r.add(tag + name, got == want, to_text(got), to_text(want));
  };
  ExtendedElement zero(g.n);

  for (int i = 0; i < g.rank(); ++i)
    for (int j = 0; j < g.rank(); ++j) {
      check("[e" + idx(i) + ",f" + idx(j) + "]", ghat_bracket(gen.e[i], gen.f[j]), i == j ? gen.h[i] : zero);
      GQ cji(g.cartan[j][i]);
      check("[h" + idx(i) + ",e" + idx(j) + "]", ghat_bracket(gen.h[i], gen.e[j]), cji * gen.e[j]);
      check("[h" + idx(i) + ",f" + idx(j) + "]", ghat_bracket(gen.h[i], gen.f[j]), -(cji * gen.f[j]));
    }
  check("[eJ,fJ]", ghat_bracket(gen.e_J, gen.f_J), gen.h_theta);

  struct Pi {
    const char* name;
    const ExtendedElement *e, *f;
  };
  for (const Pi& p : {Pi{"J", &gen.e_J, &gen.f_J}, Pi{"kappa", &gen.e_kappa, &gen.f_kappa},
                      Pi{"lambda", &gen.e_lambda, &gen.f_lambda}})
    for (int i = 0; i < g.rank(); ++i) {
      // The vanishing relations exactly as stated.
      check(std::string("eq_i.[e_") + p.name + ",f" + idx(i) + "]", ghat_bracket(*p.e, gen.f[i]), zero);
      check(std::string("eq_i.[f_") + p.name + ",e" + idx(i) + "]", ghat_bracket(*p.f, gen.e[i]), zero);
      // Same-direction brackets, which vanish because theta + alpha_i is not a root.
      check(std::string("extra.[e_") + p.name + ",e" + idx(i) + "]", ghat_bracket(*p.e, gen.e[i]), zero);
      check(std::string("extra.[f_") + p.name + ",f" + idx(i) + "]", ghat_bracket(*p.f, gen.f[i]), zero);
    }

  ExtendedElement claim = GQ::i() * gen.h_theta - ExtendedElement::central(g.n, 0);
  for (const Pi& p : {Pi{"kappa", &gen.e_kappa, &gen.f_kappa}, Pi{"lambda", &gen.e_lambda, &gen.f_lambda}}) {
    ExtendedElement got = ghat_bracket(*p.e, *p.f);
    bool unit = got.a[0] == GQ(1) || got.a[0] == GQ(-1);
    r.add(tag + "[e_" + p.name + ",f_" + p.name + "].a", unit && got.a[1].is_zero() && got.a[2].is_zero(),
          "a = (" + got.a[0].str() + ", " + got.a[1].str() + ", " + got.a[2].str() + ")", "a0 = +-1, a1 = a2 = 0");
    r.note(tag + "[e_" + p.name + ",f_" + p.name + "].value", got == claim, to_text(got), "sqrt(-1) h_theta - a0");
  }
  return r;
}

}  // namespace s3c
