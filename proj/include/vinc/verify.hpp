#pragma once

#include <functional>
#include <string>
#include <vector>

#include "vinc/dyck.hpp"
#include "vinc/permutation.hpp"
#include "vinc/polyomino.hpp"
#include "vinc/statistics.hpp"

namespace vinc {

struct CheckResult {
  std::string suite;
  std::string name;
  std::string detail;  // deterministic; names the first offending object on failure
  bool pass = false;
};

struct VerificationReport {
  std::string suite;  // the requested suite ("all" or one of suite_names())
  int n_max = 0;
  int order = 0;
  std::vector<CheckResult> checks;

  bool all_pass() const;
  int failure_count() const;
};

// Replaceable maps exercised by the bijection checks; defaults are the library
// bijections. Corrupting one makes its check fail with the first offender named
// in the detail.
struct BijectionHooks {
  std::function<DyckPath(const Permutation&)> staircase = phi_321;
  std::function<DyckPath(const Permutation&)> first_return = phi_231;
  std::function<Permutation(const Permutation&)> minima_fill = vinc::minima_fill;
  std::function<DyckPath(const DyckPath&)> component_lift = theta;
  std::function<DyckPath(const StaircasePolyomino&)> interleave = xi;
};

// "totals", "series", "bijections", "distributions", "polyomino".
const std::vector<std::string>& suite_names();

// Runs one suite, or all of them in the order of suite_names(). Checks may run
// on jobs threads; results always assemble in registration order, so a report
// for fixed inputs is byte-identical however it was scheduled. An unknown
// suite name throws std::invalid_argument. A check that throws is reported as
// a failure carrying the exception text.
VerificationReport run_suite(const std::string& suite, int n_max, int order, int jobs = 1,
                             const BijectionHooks& hooks = {});

// Renderings carry no timing and no environment data.
std::string render_text(const VerificationReport& r);
std::string render_csv(const VerificationReport& r);
std::string render_json(const VerificationReport& r);

}  // namespace vinc
