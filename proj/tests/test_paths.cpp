#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "vinc/avoiders.hpp"
#include "vinc/bigint.hpp"
#include "vinc/dyck.hpp"
#include "vinc/pattern.hpp"
#include "vinc/polyomino.hpp"
#include "vinc/statistics.hpp"

using namespace vinc;

TEST_CASE("path construction and heights") {
  CHECK_THROWS_AS(DyckPath::parse("UDD"), std::invalid_argument);
  CHECK_THROWS_AS(DyckPath::parse("UDDU"), std::invalid_argument);
  CHECK_THROWS_AS(DyckPath::parse("UX"), std::invalid_argument);
  CHECK(DyckPath::parse("UUDD").point_heights() == std::vector<int>{0, 1, 2, 1, 0});
  CHECK(DyckPath::parse("UUDD").to_string() == "UUDD");
  CHECK(DyckPath().semilength() == 0);
  CHECK_THROWS_AS(GrandDyckPath::parse("UDD"), std::invalid_argument);
  CHECK(GrandDyckPath::parse("DDUU").point_heights() == std::vector<int>{0, -1, -2, -1, 0});
}

TEST_CASE("factor sites") {
  const auto p = DyckPath::parse("UUDDUD");
  const auto pk = peaks(p);
  REQUIRE(pk.size() == 2);
  CHECK(pk[0].step == 2);
  CHECK(pk[0].height == 2);
  CHECK(pk[1].step == 5);
  CHECK(pk[1].height == 1);
  CHECK(peak_heights(p) == std::vector<int>{2, 1});

  const auto udd = triple_occurrences(DyckPath::parse("UUDD"), "UDD");
  REQUIRE(udd.size() == 1);
  CHECK(udd[0].step == 2);
  CHECK(udd[0].height == 2);
  CHECK_THROWS_AS(triple_occurrences(p, "UD"), std::invalid_argument);

  const auto match = matching_steps(DyckPath::parse("UUDD"));
  CHECK(match[1] == 4);
  CHECK(match[2] == 3);
  CHECK(match[3] == 2);
  CHECK(match[4] == 1);
}

TEST_CASE("step weights, frozen values") {
  CHECK(mass(DyckPath::parse("UUDUDD")) == 1);
  CHECK(t_stat(DyckPath::parse("UUUUDDDD")) == 2);
  CHECK(ceil_weight(DyckPath::parse("UUUUDDDD")) == 4);
  CHECK(peak_weight(DyckPath::parse("UUUUDDDD")) == 3);

  std::map<long, long> hist;
  for_each_dyck_path(3, [&](const DyckPath& p) { ++hist[mass(p)]; });
  CHECK(hist == std::map<long, long>{{0, 4}, {1, 1}});
}

TEST_CASE("descent block statistic") {
  const auto s = dud_block_stats(DyckPath::parse("UUDDUD"));
  CHECK(s.total == 1);
  CHECK(s.excluding_axis == 0);

  const long want_total[] = {0, 0, 0, 1, 6, 28, 120, 495};
  const long want_excl[] = {0, 0, 0, 0, 1, 8, 45, 220};
  for (int n = 3; n <= 7; ++n) {
    long total = 0, excl = 0;
    for_each_dyck_path(n, [&](const DyckPath& p) {
      const auto st = dud_block_stats(p);
      total += st.total;
      excl += st.excluding_axis;
    });
    CHECK(total == want_total[n]);
    CHECK(excl == want_excl[n]);
  }
}

TEST_CASE("component reshuffling carries one weight to the other") {
  CHECK(theta(DyckPath::parse("UUDD")) == DyckPath::parse("UUDD"));
  CHECK(theta(DyckPath::parse("UUDUDD")) == DyckPath::parse("UUUDDD"));
  CHECK(theta(DyckPath::parse("UUUDDD")) == DyckPath::parse("UUDUDD"));
  for (int n = 0; n <= 8; ++n) {
    std::set<DyckPath> image;
    for_each_dyck_path(n, [&](const DyckPath& p) {
      const auto q = theta(p);
      CHECK(mass(q) == t_stat(p));
      image.insert(q);
    });
    CHECK(catalan(n) == static_cast<long>(image.size()));
  }
}

TEST_CASE("staircase bijection from one class") {
  const Permutation fig({4, 5, 1, 7, 2, 3, 9, 12, 6, 8, 10, 11, 15, 13, 14});
  CHECK(peak_heights(phi_321(fig)) == std::vector<int>{4, 4, 4, 3, 5, 3});
  CHECK_THROWS_AS(phi_321(Permutation({3, 2, 1})), std::invalid_argument);

  const auto cls = VincularPattern::parse("3-2-1");
  const auto p21 = VincularPattern::parse("21");
  const auto p312 = VincularPattern::parse("31-2");
  const auto p231 = VincularPattern::parse("23-1");
  for (int n = 0; n <= 7; ++n) {
    std::set<DyckPath> image;
    for_each_avoider(n, cls, [&](const Permutation& p) {
      const auto d = phi_321(p);
      CHECK(phi_321_inverse(d) == p);
      image.insert(d);

      CHECK(inv(p) == peak_weight(d));
      const auto udd = triple_occurrences(d, "UDD");
      CHECK(des(p) == static_cast<long>(udd.size()));
      CHECK(occurrences(p21, p) == udd.size());
      long w312 = 0;
      for (const auto& site : udd) w312 += site.height - 2;
      CHECK(occurrences(p312, p) == static_cast<std::uint64_t>(w312));
      long w231 = 0;
      for (const auto& site : triple_occurrences(d, "UDU")) w231 += site.height - 1;
      CHECK(occurrences(p231, p) == static_cast<std::uint64_t>(w231));
    });
    CHECK(catalan(n) == static_cast<long>(image.size()));
  }
}

TEST_CASE("first return bijection from the other class") {
  const auto cls = VincularPattern::parse("2-3-1");
  const auto p312 = VincularPattern::parse("31-2");
  CHECK_THROWS_AS(phi_231(Permutation({2, 3, 1})), std::invalid_argument);
  for (int n = 0; n <= 7; ++n) {
    std::set<DyckPath> image;
    for_each_avoider(n, cls, [&](const Permutation& p) {
      const auto d = phi_231(p);
      CHECK(phi_231_inverse(d) == p);
      CHECK(mass(d) == static_cast<long>(occurrences(p312, p)));
      image.insert(d);
    });
    CHECK(catalan(n) == static_cast<long>(image.size()));
  }
}

TEST_CASE("path enumeration") {
  CHECK(all_dyck_paths(2) == std::vector<DyckPath>{DyckPath::parse("UUDD"), DyckPath::parse("UDUD")});
  for (int n = 0; n <= 9; ++n)
    CHECK(catalan(n) == static_cast<long>(all_dyck_paths(n).size()));

  long grand = 0;
  for_each_grand_dyck_path(2, [&](const GrandDyckPath&) { ++grand; });
  CHECK(grand == 6);
}

TEST_CASE("unconstrained path points at fixed heights, frozen sums") {
  const long at1[] = {0, 1, 6, 29, 130, 562, 2380};
  const long at2[] = {0, 0, 1, 8, 46, 232, 1093};
  for (int m = 1; m <= 6; ++m) {
    long s1 = 0, s2 = 0;
    for_each_grand_dyck_path(m, [&](const GrandDyckPath& p) {
      s1 += points_at_height(p, 1);
      s2 += points_at_height(p, 2);
    });
    CHECK(s1 == at1[m]);
    CHECK(s2 == at2[m]);
  }
}

TEST_CASE("polyomino validation and area") {
  const auto cell = StaircasePolyomino::parse("NE", "EN");
  CHECK(cell.area() == 1);
  CHECK(cell.semiperimeter() == 2);
  CHECK(cell.to_string() == "NE/EN");
  CHECK(StaircasePolyomino::parse("NNEE", "EENN").area() == 4);
  CHECK_THROWS_AS(StaircasePolyomino::parse("EN", "NE"), std::invalid_argument);
  CHECK_THROWS_AS(StaircasePolyomino::parse("NENE", "ENEN"), std::invalid_argument);
  CHECK_THROWS_AS(StaircasePolyomino::parse("NE", "ENN"), std::invalid_argument);
  CHECK_THROWS_AS(StaircasePolyomino::parse("NN", "EE"), std::invalid_argument);
}

TEST_CASE("polyomino counts and area histograms, frozen values") {
  const long counts[] = {0, 0, 1, 2, 5, 14, 42, 132, 429};
  for (int s = 2; s <= 8; ++s) {
    long c = 0;
    for_each_polyomino_semiperimeter(s, [&](const StaircasePolyomino&) { ++c; });
    CHECK(c == counts[s]);
  }

  std::map<long, long> h4, h5;
  for_each_polyomino_semiperimeter(4, [&](const StaircasePolyomino& g) { ++h4[g.area()]; });
  for_each_polyomino_semiperimeter(5, [&](const StaircasePolyomino& g) { ++h5[g.area()]; });
  CHECK(h4 == std::map<long, long>{{3, 4}, {4, 1}});
  CHECK(h5 == std::map<long, long>{{4, 8}, {5, 4}, {6, 2}});
}

TEST_CASE("polyomino interleaving bijection") {
  CHECK(xi(StaircasePolyomino::parse("NE", "EN")) == DyckPath::parse("UD"));
  CHECK(xi(StaircasePolyomino::parse("NNEE", "EENN")) == DyckPath::parse("UUUDDD"));
  for (int s = 2; s <= 8; ++s) {
    std::set<DyckPath> image;
    for_each_polyomino_semiperimeter(s, [&](const StaircasePolyomino& g) {
      const auto d = xi(g);
      CHECK(d.semilength() == s - 1);
      CHECK(g.area() == t_stat(d) + s - 1);
      image.insert(d);
    });
    CHECK(catalan(s - 1) == static_cast<long>(image.size()));
  }
}
