#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "s3c/frontend.hpp"
#include "s3c/suites.hpp"

namespace {

using namespace s3c;

Spinor spinor_value(const std::string& text) {
  Value v = eval(text);
  if (auto* x = std::get_if<Spinor>(&v)) return *x;
  if (auto* c = std::get_if<GQ>(&v)) return unit_I() * *c;
  throw EvalError(std::string("expected a spinor, got ") + kind_name(v));
}

int cmd_eval(const std::string& expr, int n, const std::string& format) {
  std::cout << render(eval(expr, n), format == "json") << "\n";
  return 0;
}

int cmd_expand(const std::string& expr, bool normalized) {
  Expansion e = expand(spinor_value(expr));
  if (normalized)
    for (auto& [b, c] : e) c *= GQ(normalization_square(b));
  std::cout << to_json(e).dump() << "\n";
  return 0;
}

int cmd_cocycle(int k, const std::string& lhs, const std::string& rhs) {
  std::cout << cocycle(k, spinor_value(lhs), spinor_value(rhs)).str() << "\n";
  return 0;
}

int cmd_bracket(const std::string& lhs, const std::string& rhs, int n) {
  std::cout << render_text(eval("[" + lhs + "," + rhs + "]", n)) << "\n";
  return 0;
}

int cmd_weight(const std::string& expr, int n) {
  Value v = eval(expr, n);
  if (std::holds_alternative<GQ>(v) || std::holds_alternative<Spinor>(v))
    throw EvalError(std::string("weight needs a matrix value, got ") + kind_name(v));
  auto w = weight_of(detail::as_extended(v), make_sl(n));
  if (!w) {
    std::cout << "not a weight vector\n";
    return 1;
  }
  std::cout << w->str() << "\n";
  return 0;
}

int cmd_verify(const std::string& suite, std::uint64_t seed, int max_degree, const std::string& report_path) {
  if (const char* env = std::getenv("S3C_SEED")) seed = std::stoull(env);
  Report r = run_suite(suite, {seed, max_degree});
  for (auto& c : r.cases)
    std::cout << status_name(c.status) << "  " << c.name << (c.status == Status::pass ? "" : "  [" + c.computed + "]")
              << "\n";
  std::cout << r.passed() << " passed, " << r.failed() << " failed, " << r.count(Status::mismatch)
            << " mismatch-vs-paper\n";
  if (!report_path.empty()) {
    std::ofstream out(report_path);
    if (!out) throw Error("cannot write report to '" + report_path + "'");
    out << r.to_json().dump(2) << "\n";
  }
  return r.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact spinor current algebra toolkit on S3"};
  app.require_subcommand(1);

  std::string expr, lhs, rhs, format = "text", suite, report;
  int n = 2, k = 0, max_degree = 3;
  bool normalized = false;
  std::uint64_t seed = 0;

  auto* ev = app.add_subcommand("eval", "Evaluate an expression");
  ev->add_option("--expr", expr)->required();
  ev->add_option("--n", n)->check(CLI::Range(2, 8));
  ev->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* ex = app.add_subcommand("expand", "Expand a spinor in the basis");
  ex->add_option("--expr", expr)->required();
  ex->add_flag("--normalized", normalized, "Multiply coefficients by the exact normalization square c");

  auto* co = app.add_subcommand("cocycle", "Evaluate c_k(lhs, rhs)");
  co->add_option("--k", k)->required()->check(CLI::Range(0, 2));
  co->add_option("--lhs", lhs)->required();
  co->add_option("--rhs", rhs)->required();

  auto* br = app.add_subcommand("bracket", "Bracket two values");
  br->add_option("--lhs", lhs)->required();
  br->add_option("--rhs", rhs)->required();
  br->add_option("--n", n)->check(CLI::Range(2, 8));

  auto* we = app.add_subcommand("weight", "Weight label of a matrix value");
  we->add_option("--expr", expr)->required();
  we->add_option("--n", n)->required()->check(CLI::Range(2, 8));

  auto* ve = app.add_subcommand("verify", "Run a verification suite");
  std::vector<std::string> suites = suite_names();
  suites.push_back("all");
  ve->add_option("--suite", suite)->required()->check(CLI::IsMember(suites));
  ve->add_option("--seed", seed);
  ve->add_option("--max-degree", max_degree)->check(CLI::Range(0, 6));
  ve->add_option("--report", report);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*ev) return cmd_eval(expr, n, format);
    if (*ex) return cmd_expand(expr, normalized);
    if (*co) return cmd_cocycle(k, lhs, rhs);
    if (*br) return cmd_bracket(lhs, rhs, n);
    if (*we) return cmd_weight(expr, n);
    if (*ve) return cmd_verify(suite, seed, max_degree, report);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
