#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include <json.hpp>

#include "s3c/current.hpp"

namespace s3c {

using json = nlohmann::json;

// ---------------------------------------------------------------- text

namespace detail {

// Total degree first, then lexicographic on (a, b, c, d, s).
inline bool render_order(const Monomial& x, const Monomial& y) {
  if (x.degree() != y.degree()) return x.degree() < y.degree();
  return x < y;
}

inline std::vector<std::pair<Monomial, GQ>> sorted_terms(const Poly& p) {
  std::vector<std::pair<Monomial, GQ>> t(p.terms().begin(), p.terms().end());
  std::sort(t.begin(), t.end(), [](auto& x, auto& y) { return render_order(x.first, y.first); });
  return t;
}

inline std::string monomial_text(const Monomial& m) {
  std::string s;
  auto put = [&](const char* name, int e) {
    if (e == 0) return;
    if (!s.empty()) s += "*";
    s += name;
    if (e > 1) s += "^" + std::to_string(e);
  };
  put("z1", m.a);
  put("z1~", m.b);
  put("z2", m.c);
  put("z2~", m.d);
  if (m.s) s += std::string(s.empty() ? "" : "*") + "|z|^" + std::to_string(2 * m.s);
  return s;
}

inline std::string term_text(const Monomial& m, const GQ& c) {
  std::string mono = monomial_text(m);
  bool mixed = !c.re().is_zero() && !c.im().is_zero();
  if (mono.empty()) return mixed ? "(" + c.str() + ")" : c.str();
  if (c == GQ(1)) return mono;
  if (c == GQ(-1)) return "-" + mono;
  return (mixed ? "(" + c.str() + ")" : c.str()) + "*" + mono;
}

inline std::string join_terms(const std::vector<std::string>& parts) {
  if (parts.empty()) return "0";
  std::string s = parts.front();
  for (std::size_t q = 1; q < parts.size(); ++q)
    s += parts[q][0] == '-' ? " - " + parts[q].substr(1) : " + " + parts[q];
  return s;
}

}  // namespace detail

inline std::string to_text(const GQ& c) { return c.str(); }

inline std::string to_text(const Poly& p) {
  std::vector<std::string> parts;
  for (auto& [m, c] : detail::sorted_terms(p)) parts.push_back(detail::term_text(m, c));
  return detail::join_terms(parts);
}

inline std::string to_text(const Spinor& x) {
  if (x.is_zero()) return "0";
  return "(" + to_text(x.u()) + " | " + to_text(x.v()) + ")";
}

inline std::string to_text(const CurrentElement& A) {
  std::vector<std::string> parts;
  for (auto& [key, x] : A.entries())
    parts.push_back("tensor(" + to_text(x) + ", E(" + std::to_string(key.first + 1) + "," +
                    std::to_string(key.second + 1) + "))");
  return detail::join_terms(parts);
}

inline std::string to_text(const ExtendedElement& X) {
  std::vector<std::string> parts;
  if (!X.mat.is_zero()) parts.push_back(to_text(X.mat));
  for (int k = 0; k < 3; ++k)
    if (!X.a[k].is_zero()) parts.push_back("(" + X.a[k].str() + ")*ak(" + std::to_string(k) + ")");
  if (!X.t.is_zero()) parts.push_back("(" + X.t.str() + ")*nder");
  return detail::join_terms(parts);
}

inline std::string to_text(const WeightLabel& w) { return w.str(); }

// ---------------------------------------------------------------- JSON

inline json to_json(const Poly& p) {
  json j = json::array();
  for (auto& [m, c] : detail::sorted_terms(p)) j.push_back({c.str(), {m.a, m.b, m.c, m.d, m.s}});
  return j;
}

inline json to_json(const Spinor& x) {
  return {{"space", space_name(x.space())}, {"u", to_json(x.u())}, {"v", to_json(x.v())}};
}

inline json to_json(const Expansion& e) {
  json j = json::array();
  for (auto& [b, c] : e)
    j.push_back({{b.sign == Sign::plus ? "+" : "-", b.m, b.l, b.k}, c.str()});
  return j;
}

inline json to_json(const CurrentElement& A) {
  json entries = json::array();
  for (auto& [key, x] : A.entries()) entries.push_back({key.first + 1, key.second + 1, to_json(x)});
  return {{"n", A.size()}, {"entries", entries}};
}

inline json to_json(const ExtendedElement& X) {
  json j = to_json(X.mat);
  j["a"] = {X.a[0].str(), X.a[1].str(), X.a[2].str()};
  j["t"] = X.t.str();
  return j;
}

inline json to_json(const WeightLabel& w) {
  return {{"mhalf", w.mhalf}, {"alpha", w.alpha}, {"lambda", w.lambda}};
}

inline Poly poly_from_json(const json& j) {
  Poly p;
  for (auto& t : j) {
    auto& e = t.at(1);
    Monomial m{e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<int>(), e.at(3).get<int>(), e.at(4).get<int>()};
    if (m.a < 0 || m.b < 0 || m.c < 0 || m.d < 0) throw Error("negative exponent in polynomial JSON");
    p.add_term(m, GQ::parse(t.at(0).get<std::string>()));
  }
  return p;
}

inline Spinor spinor_from_json(const json& j) {
  std::string sp = j.at("space").get<std::string>();
  if (sp != "sphere" && sp != "ambient") throw Error("unknown spinor space '" + sp + "'");
  return {poly_from_json(j.at("u")), poly_from_json(j.at("v")), sp == "sphere" ? Space::sphere : Space::ambient};
}

}  // namespace s3c
