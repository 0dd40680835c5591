// One PASS/FAIL line per acceptance criterion, seed 0.
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "s3c/suites.hpp"

#ifndef S3C_CLI_PATH
#error "S3C_CLI_PATH must point at the s3c executable"
#endif

namespace {

using namespace s3c;
using Clock = std::chrono::steady_clock;

// Wall-clock limits in seconds.
constexpr double kBasisLimit = 20.0;
constexpr double kJacobiLimit = 60.0;
constexpr double kNumericLimit = 60.0;

struct Timed {
  Report report;
  double seconds;
};

Timed timed(const std::string& suite) {
  auto t0 = Clock::now();
  Report r = run_suite(suite, {0, 3});
  return {std::move(r), std::chrono::duration<double>(Clock::now() - t0).count()};
}

int failures = 0;

void line(int id, bool ok, const std::string& detail) {
  std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << id << "  " << detail << "\n";
  if (!ok) ++failures;
}

// Every named case present and passing; failing ones are listed in `why`.
bool require(const Report& r, const std::vector<std::string>& names, std::string& why) {
  bool ok = true;
  for (auto& n : names) {
    const Case* hit = nullptr;
    for (auto& c : r.cases)
      if (c.name == n) hit = &c;
    if (!hit) {
      ok = false;
      why += " [missing " + n + "]";
    } else if (hit->status == Status::fail) {
      ok = false;
      why += " [" + n + ": " + hit->computed + "]";
    }
  }
  return ok;
}

bool require_prefix(const Report& r, const std::string& prefix, std::string& why) {
  bool ok = r.ok_prefix(prefix);
  for (auto& c : r.cases)
    if (c.name.rfind(prefix, 0) == 0 && c.status == Status::fail) why += " [" + c.name + ": " + c.computed + "]";
  if (!ok && why.empty()) why = " [no cases under " + prefix + "]";
  return ok;
}

std::string seconds(double s) { return std::to_string(s).substr(0, 6) + "s"; }

}  // namespace

int main() {
  auto basis = timed("basis");
  auto algebra = timed("algebra");
  auto grading = timed("grading");
  auto cocycle = timed("cocycle");
  auto jacobi = timed("jacobi");
  auto current = timed("current");
  auto chevalley = timed("chevalley");
  auto numeric = timed("numeric");
  auto frontend = timed("frontend");

  {
    std::string why;
    bool ok = require(basis.report, {"harmonic", "tangential_spectrum", "radial_spectrum", "family_sizes"}, why);
    ok = ok && basis.seconds < kBasisLimit;
    line(1, ok, "basis integrity m<=4, " + seconds(basis.seconds) + why);
  }
  {
    std::string why;
    bool ok = require(basis.report, {"gram_diagonal"}, why);
    line(2, ok, "Gram matrix m<=3" + why);
  }
  {
    std::string why;
    bool ok = require(algebra.report, {"closure"}, why);
    line(3, ok, "closure m1+m2<=5" + why);
  }
  {
    std::string why;
    bool ok = require(grading.report, {"additivity", "example.phi+(2,0,0)*phi-(0,0,0)"}, why);
    line(4, ok, "grading" + why);
  }
  {
    std::string why;
    bool ok = require(cocycle.report,
                      {"antisymmetry", "realness", "cycle_associative", "cycle_lie", "kappa_kappastar",
                       "theta0_kappa_times_kappastar", "derivation_compatibility", "nontrivial_witness"},
                      why);
    line(5, ok, "cocycle identities" + why);
  }
  {
    std::string why;
    bool ok = require(algebra.report, {"mean_value.theta", "mean_value.trace_n"}, why);
    line(6, ok, "mean-value identities" + why);
  }
  {
    std::string why;
    bool ok = require(algebra.report, {"k_commutes", "normalizer_probe"}, why);
    line(7, ok, "K-structure" + why);
  }
  {
    std::string why;
    bool ok = require(jacobi.report, {"ghat_jacobi"}, why) && jacobi.seconds < kJacobiLimit;
    line(8, ok, "ghat Jacobi with a, n nonzero, " + seconds(jacobi.seconds) + why);
  }
  {
    std::string why;
    bool ok = true;
    for (std::string n : {"sl2.", "sl3."}) {
      ok = require(current.report, {n + "decompose_resum", n + "component_weights"}, why) && ok;
      ok = require_prefix(current.report, n + "eigen.", why) && ok;
    }
    line(9, ok, "root decomposition sl2, sl3" + why);
  }
  {
    std::string why;
    bool ok = require_prefix(chevalley.report, "sl", why);
    int notes = chevalley.report.count(Status::mismatch);
    line(10, ok, "Chevalley relations, " + std::to_string(notes) + " mismatch-vs-paper notes" + why);
  }
  {
    std::string why;
    bool ok = require(numeric.report, {"monte_carlo", "finite_differences", "dirac_residual"}, why) &&
              numeric.seconds < kNumericLimit;
    line(11, ok, "numeric cross-check, " + seconds(numeric.seconds) + why);
  }
  {
    std::string why;
    bool ok = require(frontend.report, {"roundtrip", "fuzz"}, why);
    std::string cmd = std::string("\"") + S3C_CLI_PATH + "\" verify --suite all --seed 0 > /dev/null";
    int rc = std::system(cmd.c_str());
    bool all_ok = rc == 0;
    if (!all_ok) why += " [verify --suite all --seed 0 exited nonzero]";
    line(12, ok && all_ok, "frontend round-trip, fuzz, full verify" + why);
  }

  std::cout << (12 - failures) << "/12 criteria pass\n";
  return failures == 0 ? 0 : 1;
}
