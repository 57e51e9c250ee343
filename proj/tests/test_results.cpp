#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <string>

#include "vinc/avoiders.hpp"
#include "vinc/catalan_series.hpp"
#include "vinc/closed_forms.hpp"
#include "vinc/series_expr.hpp"
#include "vinc/transfer.hpp"

using namespace vinc;

namespace {

bool is_pattern_item(const std::string& item) {
  return item != "maj" && item != "den" && item != "2-13:low";
}

}  // namespace

TEST_CASE("results table is well formed") {
  const auto& table = enumeration_results();
  CHECK(table.size() == 66);
  std::set<std::string> keys;
  for (const auto& r : table) {
    INFO(r.key());
    CHECK(keys.insert(r.key()).second);
    CHECK((r.host_class == "231" || r.host_class == "321"));
    CHECK_NOTHROW(parse_series_expr(r.gf, 4));
    if (is_pattern_item(r.item)) CHECK_NOTHROW(VincularPattern::parse(r.item));
    CHECK((r.closed_form_text.empty() == !r.closed_form));
  }
  CHECK(find_result("231", "31-2", Anchor::none) != nullptr);
  CHECK(find_result("231", "31-2", Anchor::last) == nullptr);
  CHECK(find_result("321", "maj", Anchor::none) != nullptr);
  CHECK_THROWS_AS(host_class_pattern("123"), std::invalid_argument);
  CHECK(host_class_pattern("3-2-1") == VincularPattern::parse("3-2-1"));
}

TEST_CASE("every table row matches brute-force totals") {
  const int n_max = 7;
  for (const auto& r : enumeration_results()) {
    const ZSeries s = parse_series_expr(r.gf, n_max);
    for (int n = 0; n <= n_max; ++n) {
      INFO(r.key(), " at n=", n);
      CHECK(brute_total(r, n) == s.coeff(n));
    }
  }
}

TEST_CASE("closed forms match series coefficients") {
  const int n_max = 12;
  for (const auto& r : enumeration_results()) {
    if (!r.closed_form) continue;
    const ZSeries s = parse_series_expr(r.gf, n_max);
    for (int n = 0; n <= n_max; ++n) {
      INFO(r.key(), " at n=", n);
      CHECK(r.closed_form(n) == s.coeff(n));
    }
  }
}

TEST_CASE("totals that coincide across patterns") {
  const int order = 12;
  auto gf = [&](const char* item) {
    const EnumResult* r = find_result("231", item, Anchor::none);
    REQUIRE(r != nullptr);
    return parse_series_expr(r->gf, order);
  };

  CHECK(gf("12-3") == gf("21-3"));
  CHECK(gf("12-3") == gf("1-32"));
  CHECK(gf("3-21") == gf("3-12"));
  CHECK(gf("3-21") == gf("32-1"));
  CHECK(gf("3-21") == gf("31-2"));
  CHECK(gf("3-21") == gf("13-2"));
  CHECK(gf("123") == gf("321"));
  CHECK(gf("123") == gf("132"));
  CHECK(gf("213") == gf("312"));

  // The five classical length-3 patterns avoidable alongside 231 cover every
  // position triple: their totals sum to binom(n,3) times the class size.
  const ZSeries five =
      gf("3-2-1") + gf("3-1-2") + gf("1-3-2") + gf("2-1-3") + gf("1-2-3");
  for (int n = 0; n <= order; ++n)
    CHECK(five.coeff(n) == binomial(n, 3) * catalan(n));
}

TEST_CASE("indecomposability predicates") {
  auto pat = [](const char* t) { return VincularPattern::parse(t); };
  CHECK(plus_indecomposable(pat("1")));
  CHECK(vincular_plus_indecomposable(pat("1")));
  CHECK(plus_indecomposable(pat("21")));
  CHECK(plus_indecomposable(pat("2-1")));
  CHECK_FALSE(plus_indecomposable(pat("12")));
  CHECK(vincular_plus_indecomposable(pat("12")));
  CHECK_FALSE(plus_indecomposable(pat("1-2")));
  CHECK_FALSE(vincular_plus_indecomposable(pat("1-2")));
  CHECK_FALSE(plus_indecomposable(pat("12-3")));
  CHECK_FALSE(vincular_plus_indecomposable(pat("12-3")));
  CHECK_FALSE(plus_indecomposable(pat("123")));
  CHECK(vincular_plus_indecomposable(pat("123")));
  CHECK_FALSE(plus_indecomposable(pat("2-13")));
  CHECK(vincular_plus_indecomposable(pat("2-13")));
  CHECK(plus_indecomposable(pat("3-1-2")));
  CHECK_FALSE(vincular_plus_indecomposable(pat("21-3")));
}

TEST_CASE("enlargement rules reproduce every tabulated target") {
  const int order = 12;
  int produced = 0;
  for (const auto& app : transfer_applications()) {
    const VincularPattern rho = VincularPattern::parse(app.source);
    INFO(to_string(app.rule), " on ", app.source);
    CHECK(transfer_target(app.rule, rho).to_string() == app.target);

    const SeriesBundle in = bundle_for_pattern(app.source, order);
    const SeriesBundle out = apply_transfer(app.rule, rho, in, order);
    const SeriesBundle expect = bundle_for_pattern(app.target, order);
    if (out.plain) {
      REQUIRE(expect.plain.has_value());
      CHECK(*out.plain == *expect.plain);
      ++produced;
    }
    if (out.first) {
      REQUIRE(expect.first.has_value());
      CHECK(*out.first == *expect.first);
      ++produced;
    }
    if (out.last) {
      REQUIRE(expect.last.has_value());
      CHECK(*out.last == *expect.last);
      ++produced;
    }
  }
  CHECK(transfer_applications().size() == 27);
  CHECK(produced == 50);
}

TEST_CASE("enlargement rules reject invalid inputs") {
  const int order = 6;
  const SeriesBundle empty;
  const SeriesBundle one = bundle_for_pattern("1", order);
  auto pat = [](const char* t) { return VincularPattern::parse(t); };

  CHECK_THROWS_AS(apply_transfer(TransferRule::prepend_max_free, pat("1"), empty, order),
                  std::invalid_argument);
  CHECK_THROWS_AS(apply_transfer(TransferRule::append_max_glued, pat("1"), empty, order),
                  std::invalid_argument);
  // A pattern splitting at an unglued junction admits no append rule.
  CHECK_THROWS_AS(
      apply_transfer(TransferRule::append_max_free, pat("1-2"), bundle_for_pattern("1-2", order),
                     order),
      std::invalid_argument);
  CHECK_THROWS_AS(
      apply_transfer(TransferRule::append_max_glued, pat("1-2"), bundle_for_pattern("1-2", order),
                     order),
      std::invalid_argument);

  // Decomposable patterns still produce the anchored series, not the plain one.
  const SeriesBundle out =
      apply_transfer(TransferRule::prepend_min_free, pat("1-2"), bundle_for_pattern("1-2", order),
                     order);
  CHECK(out.first.has_value());
  CHECK_FALSE(out.plain.has_value());
  CHECK_FALSE(out.last.has_value());

  // Anchors the table does not list stay empty in the bundle.
  CHECK_FALSE(bundle_for_pattern("2-13", order).first.has_value());
  CHECK(bundle_for_pattern("2-13", order).last.has_value());
  CHECK(one.plain.has_value());
}
