#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <stdexcept>
#include <string>

#include "vinc/verify.hpp"

using namespace vinc;

namespace {

const CheckResult* find_check(const VerificationReport& r, const std::string& name) {
  for (const auto& c : r.checks)
    if (c.name == name) return &c;
  return nullptr;
}

}  // namespace

TEST_CASE("every suite passes on a small window") {
  for (const std::string& suite : suite_names()) {
    const VerificationReport r = run_suite(suite, 6, 12, 2);
    CHECK(r.suite == suite);
    CHECK(r.n_max == 6);
    CHECK(r.order == 12);
    CHECK(r.all_pass());
    CHECK(r.failure_count() == 0);
    CHECK(!r.checks.empty());
    for (const auto& c : r.checks) {
      CHECK(c.suite == suite);
      CHECK(!c.name.empty());
      CHECK(!c.detail.empty());
    }
  }
}

TEST_CASE("the combined suite covers every registered check") {
  const VerificationReport all = run_suite("all", 5, 10, 4);
  CHECK(all.all_pass());
  CHECK(all.checks.size() > 100);  // 66 table rows alone, plus identities and transfers
  // registration order groups by suite in suite_names() order
  size_t pos = 0;
  for (const std::string& suite : suite_names()) {
    const VerificationReport part = run_suite(suite, 5, 10, 2);
    for (size_t i = 0; i < part.checks.size(); ++i) {
      REQUIRE(pos + i < all.checks.size());
      CHECK(all.checks[pos + i].suite == suite);
      CHECK(all.checks[pos + i].name == part.checks[i].name);
    }
    pos += part.checks.size();
  }
  CHECK(all.checks.size() == pos);
}

TEST_CASE("unknown suite and bad bounds are rejected") {
  CHECK_THROWS_AS(run_suite("bogus", 4, 8), std::invalid_argument);
  CHECK_THROWS_AS(run_suite("", 4, 8), std::invalid_argument);
  CHECK_THROWS_AS(run_suite("totals", -1, 8), std::invalid_argument);
  CHECK_THROWS_AS(run_suite("totals", 4, -1), std::invalid_argument);
}

TEST_CASE("a corrupted staircase map fails and names the first offender") {
  BijectionHooks hooks;
  hooks.staircase = [](const Permutation& sigma) {
    if (sigma.to_string() == "2 1 3") return phi_321(Permutation::identity(3));
    return phi_321(sigma);
  };
  const VerificationReport r = run_suite("bijections", 5, 10, 2, hooks);
  CHECK(!r.all_pass());
  CHECK(r.failure_count() == 1);
  const CheckResult* c = find_check(r, "staircase-roundtrip");
  REQUIRE(c != nullptr);
  CHECK(!c->pass);
  CHECK(c->detail.find("2 1 3") != std::string::npos);
  // the other bijection checks are untouched
  CHECK(find_check(r, "first-return-roundtrip")->pass);
  CHECK(find_check(r, "minima-fill")->pass);
  CHECK(find_check(r, "component-lift")->pass);
  CHECK(find_check(r, "interleave")->pass);
}

TEST_CASE("a corrupted minima fill fails and names the first offender") {
  BijectionHooks hooks;
  hooks.minima_fill = [](const Permutation& sigma) {
    if (sigma.to_string() == "2 3 1") return sigma;  // contains 2-3-1
    return minima_fill(sigma);
  };
  const VerificationReport r = run_suite("bijections", 4, 8, 1, hooks);
  CHECK(!r.all_pass());
  const CheckResult* c = find_check(r, "minima-fill");
  REQUIRE(c != nullptr);
  CHECK(!c->pass);
  CHECK(c->detail.find("2 3 1") != std::string::npos);
  CHECK(c->detail.find("contains 2-3-1") != std::string::npos);
}

TEST_CASE("a throwing hook is reported with the offender, not propagated") {
  BijectionHooks hooks;
  hooks.component_lift = [](const DyckPath& p) -> DyckPath {
    if (p.semilength() == 3) throw std::runtime_error("boom");
    return theta(p);
  };
  const VerificationReport r = run_suite("bijections", 4, 8, 1, hooks);
  const CheckResult* c = find_check(r, "component-lift");
  REQUIRE(c != nullptr);
  CHECK(!c->pass);
  CHECK(c->detail.find("path = ") != std::string::npos);
  CHECK(c->detail.find("boom") != std::string::npos);
}

TEST_CASE("reports are byte identical across runs and worker counts") {
  const VerificationReport serial = run_suite("all", 5, 10, 1);
  const VerificationReport parallel = run_suite("all", 5, 10, 4);
  const VerificationReport again = run_suite("all", 5, 10, 4);
  CHECK(render_text(serial) == render_text(parallel));
  CHECK(render_text(parallel) == render_text(again));
  CHECK(render_csv(serial) == render_csv(parallel));
  CHECK(render_json(serial) == render_json(parallel));
}

TEST_CASE("renderer shapes") {
  const VerificationReport r = run_suite("polyomino", 5, 10, 1);
  const std::string text = render_text(r);
  CHECK(text.rfind("suite polyomino: n_max 5, order 10\n", 0) == 0);
  CHECK(text.find("PASS polyomino/counts:") != std::string::npos);
  CHECK(text.find(std::to_string(r.checks.size()) + " checks, 0 failed\n") != std::string::npos);

  const std::string csv = render_csv(r);
  CHECK(csv.rfind("suite,name,pass,detail\n", 0) == 0);
  CHECK(csv.find("polyomino,counts,pass,") != std::string::npos);

  const auto j = nlohmann::json::parse(render_json(r));
  CHECK(j["suite"] == "polyomino");
  CHECK(j["n_max"] == 5);
  CHECK(j["order"] == 10);
  CHECK(j["all_pass"] == true);
  CHECK(j["checks"].size() == r.checks.size());
  CHECK(j["checks"][0]["pass"] == true);
}

TEST_CASE("failures surface in every renderer") {
  BijectionHooks hooks;
  hooks.first_return = [](const Permutation& sigma) {
    if (sigma.to_string() == "1 2") return phi_231(Permutation::identity(3));
    return phi_231(sigma);
  };
  const VerificationReport r = run_suite("bijections", 3, 6, 1, hooks);
  CHECK(r.failure_count() == 1);
  CHECK(render_text(r).find("FAIL bijections/first-return-roundtrip:") != std::string::npos);
  CHECK(render_csv(r).find("bijections,first-return-roundtrip,fail,") != std::string::npos);
  const auto j = nlohmann::json::parse(render_json(r));
  CHECK(j["all_pass"] == false);
}
