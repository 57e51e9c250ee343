// Acceptance gate: ten end-to-end checks, one PASS/FAIL line each, exit 0 iff
// every line passes. Each check is independent and catches its own exceptions.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "vinc/avoiders.hpp"
#include "vinc/catalan_series.hpp"
#include "vinc/closed_forms.hpp"
#include "vinc/contfrac.hpp"
#include "vinc/series_expr.hpp"
#include "vinc/statistics.hpp"
#include "vinc/verify.hpp"

using namespace vinc;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

bool suite_passes(const std::string& suite, int n_max, int order) {
  return run_suite(suite, n_max, order, 4).all_pass();
}

// Every check from one shared series-suite run (solvers at the requested order,
// identities, transfer rules with brute-force cross-checks).
const VerificationReport& series_report() {
  static const VerificationReport r = run_suite("series", 9, 30, 4);
  return r;
}

bool series_checks_pass(const std::string& prefix, size_t expected_count) {
  size_t seen = 0;
  for (const auto& c : series_report().checks) {
    if (c.name.rfind(prefix, 0) != 0) continue;
    ++seen;
    if (!c.pass) return false;
  }
  return seen >= expected_count;
}

}  // namespace

int main() {
  int failures = 0;
  int index = 0;
  const auto check = [&](const std::string& what, const std::function<bool()>& body) {
    ++index;
    bool pass = false;
    std::string note;
    try {
      pass = body();
    } catch (const std::exception& e) {
      note = std::string(" (exception: ") + e.what() + ")";
    }
    std::printf("%s check %2d: %s%s\n", pass ? "PASS" : "FAIL", index, what.c_str(),
                note.c_str());
    std::fflush(stdout);
    if (!pass) ++failures;
  };

  check("six classical classes have Catalan sizes for n <= 10 in under 10s", [] {
    const auto t0 = std::chrono::steady_clock::now();
    for (const char* text : {"1-2-3", "1-3-2", "2-1-3", "2-3-1", "3-1-2", "3-2-1"}) {
      const VincularPattern pat = VincularPattern::parse(text);
      for (int n = 0; n <= 10; ++n)
        if (count_avoiders(n, pat) != catalan(n)) return false;
    }
    return seconds_since(t0) < 10.0;
  });

  check("closed-form totals match brute force for n <= 10", [] {
    for (const EnumResult& r : enumeration_results()) {
      if (!r.closed_form) continue;
      for (int n = 0; n <= 10; ++n)
        if (brute_total(r, n) != r.closed_form(n)) return false;
    }
    return true;
  });

  check("series-coefficient totals match brute force for n <= 10, anchors included", [] {
    for (const EnumResult& r : enumeration_results()) {
      const ZSeries s = parse_series_expr(r.gf, 10);
      for (int n = 0; n <= 10; ++n)
        if (brute_total(r, n) != s.coeff(n)) return false;
    }
    return true;
  });

  check("equal totals and equal distributions hold on the stated classes", [] {
    const auto c321 = VincularPattern::parse("3-2-1");
    const auto c231 = VincularPattern::parse("2-3-1");
    for (int n = 0; n <= 10; ++n)
      if (total_occurrences(n, c321, VincularPattern::parse("31-2")) !=
          total_occurrences(n, c321, VincularPattern::parse("23-1")))
        return false;
    for (int n = 0; n <= 9; ++n)
      if (!(distribution(n, c321, StatKind::den) == distribution(n, c231, StatKind::maj)))
        return false;
    const PSeries f = contfrac_series(9);
    for (int n = 0; n <= 9; ++n) {
      Poly expect = f.coeff(n);
      for (const char* pat : {"31-2", "13-2"}) {
        Poly got;
        for (const auto& [k, v] : pattern_distribution(n, c231, VincularPattern::parse(pat)))
          got.set_coeff(k, v);
        if (got != expect) return false;
      }
    }
    return true;
  });

  check("bijections round-trip and transport their statistics for n <= 9",
        [] { return suite_passes("bijections", 9, 9); });

  check("functional-equation residuals vanish and marker derivatives match to order 30", [] {
    return series_checks_pass("solver/", 3) && series_checks_pass("contfrac/", 1);
  });

  check("generating-function identities hold to order 30",
        [] { return series_checks_pass("identity/", 20); });

  check("path, weight-scheme, and polyomino identities hold", [] {
    const ZSeries two = parse_series_expr("z^3*B^2*C^4", 9);
    for (int m = 1; m <= 8; ++m) {
      Int sum = 0;
      for_each_grand_dyck_path(m,
                               [&](const GrandDyckPath& p) { sum += points_at_height(p, 2); });
      if (sum != two.coeff(m + 1)) return false;
    }
    return suite_passes("polyomino", 9, 24);
  });

  check("transfer rules reproduce brute-force totals for n <= 9",
        [] { return series_checks_pass("transfer/", 27); });

  check("the full verification suite passes at n_max 9 in under 5 minutes", [] {
    const auto t0 = std::chrono::steady_clock::now();
    if (!run_suite("all", 9, 24, 4).all_pass()) return false;
    return seconds_since(t0) < 300.0;
  });

  if (failures) std::printf("%d of %d checks failed\n", failures, index);
  else std::printf("all %d checks passed\n", index);
  return failures ? 1 : 0;
}
