#include "vinc/verify.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <map>
#include <set>
#include <stdexcept>
#include <thread>
#include <utility>

#include "vinc/avoiders.hpp"
#include "vinc/catalan_series.hpp"
#include "vinc/closed_forms.hpp"
#include "vinc/contfrac.hpp"
#include "vinc/qseries.hpp"
#include "vinc/series_expr.hpp"
#include "vinc/solvers.hpp"
#include "vinc/transfer.hpp"

namespace vinc {
namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

Outcome ok(std::string d) { return {true, std::move(d)}; }
Outcome bad(std::string d) { return {false, std::move(d)}; }

struct Task {
  std::string suite;
  std::string name;
  std::function<Outcome()> run;
};

std::string nstr(long n) { return std::to_string(n); }

Poly poly_of(const std::map<long, Int>& hist) {
  Poly p;
  for (const auto& [k, v] : hist) p.set_coeff(k, v);
  return p;
}

template <class Stat>
Poly dyck_histogram(int n, Stat stat) {
  Poly p;
  for_each_dyck_path(n, [&](const DyckPath& d) { p += Poly::marker_power(stat(d)); });
  return p;
}

// ----- totals -----------------------------------------------------------

void add_totals_tasks(std::vector<Task>& tasks, int n_max, int order) {
  const int ord = std::max(order, n_max);

  for (const char* text :
       {"1-2-3", "1-3-2", "2-1-3", "2-3-1", "3-1-2", "3-2-1"}) {
    tasks.push_back({"totals", std::string("class-size/") + text, [text, n_max]() -> Outcome {
                       const VincularPattern pat = VincularPattern::parse(text);
                       for (int n = 0; n <= n_max; ++n) {
                         const Int got = count_avoiders(n, pat);
                         if (got != catalan(n))
                           return bad("n=" + nstr(n) + ": class size " + to_string(got) +
                                      ", Catalan number " + to_string(catalan(n)));
                       }
                       return ok("class size is the Catalan number for n <= " + nstr(n_max));
                     }});
  }

  for (const EnumResult& r : enumeration_results()) {
    const std::string name = "total/" + r.host_class + "/" + r.item + "/" + to_string(r.anchor);
    tasks.push_back({"totals", name, [&r, n_max, ord]() -> Outcome {
                       const ZSeries s = parse_series_expr(r.gf, ord);
                       for (int n = 0; n <= n_max; ++n) {
                         const Int got = brute_total(r, n);
                         if (got != s.coeff(n))
                           return bad("n=" + nstr(n) + ": brute total " + to_string(got) +
                                      ", series coefficient " + to_string(s.coeff(n)));
                       }
                       if (r.closed_form) {
                         for (int n = 0; n <= ord; ++n)
                           if (r.closed_form(n) != s.coeff(n))
                             return bad("n=" + nstr(n) + ": closed form " +
                                        to_string(r.closed_form(n)) + ", series coefficient " +
                                        to_string(s.coeff(n)));
                       }
                       std::string d = r.gf + " matches brute force for n <= " + nstr(n_max);
                       if (r.closed_form)
                         d += " and " + r.closed_form_text + " through order " + nstr(ord);
                       return ok(d);
                     }});
  }

  const std::vector<std::vector<std::string>> blocks = {
      {"12-3", "21-3", "1-32"},
      {"3-21", "3-12", "32-1", "31-2", "13-2"},
      {"123", "321", "132"},
      {"213", "312"},
  };
  for (const auto& block : blocks) {
    std::string label = block[0];
    for (size_t i = 1; i < block.size(); ++i) label += " " + block[i];
    tasks.push_back({"totals", "equal-totals/" + label, [block, ord]() -> Outcome {
                       const EnumResult* base = find_result("231", block[0], Anchor::none);
                       const ZSeries s0 = parse_series_expr(base->gf, ord);
                       for (size_t i = 1; i < block.size(); ++i) {
                         const EnumResult* r = find_result("231", block[i], Anchor::none);
                         if (!(parse_series_expr(r->gf, ord) == s0))
                           return bad(block[i] + " differs from " + block[0]);
                       }
                       return ok("totals coincide through order " + nstr(ord));
                     }});
  }

  tasks.push_back(
      {"totals", "five-classical-sum", [ord]() -> Outcome {
         ZSeries sum(ord);
         for (const char* item : {"3-2-1", "3-1-2", "1-3-2", "2-1-3", "1-2-3"})
           sum = sum + parse_series_expr(find_result("231", item, Anchor::none)->gf, ord);
         for (int n = 0; n <= ord; ++n)
           if (sum.coeff(n) != binomial(n, 3) * catalan(n))
             return bad("n=" + nstr(n) + ": sum " + to_string(sum.coeff(n)) +
                        ", binom(n,3)*C_n = " + to_string(Int(binomial(n, 3) * catalan(n))));
         return ok("the five classical totals sum to binom(n,3)*C_n through order " + nstr(ord));
       }});
}

// ----- series -----------------------------------------------------------

void add_series_tasks(std::vector<Task>& tasks, int n_max, int order) {
  const auto idents = bc_identity_checks(order);
  for (size_t i = 0; i < idents.size(); ++i) {
    tasks.push_back({"series", "identity/" + idents[i].name, [i, order]() -> Outcome {
                       const auto checks = bc_identity_checks(order);
                       if (!checks[i].pass) return bad("coefficient mismatch");
                       return ok("coefficients agree through order " + nstr(order));
                     }});
  }

  tasks.push_back({"series", "solver/descent", [order]() -> Outcome {
                     const PSeries f = solve_descent_series(order);
                     if (!descent_series_residual(f).is_zero()) return bad("residual is nonzero");
                     if (!(eval_marker_one(f) == make_C(order)))
                       return bad("marker 1 does not give the Catalan series");
                     if (!(derivative_marker_one(f) == parse_series_expr("z^2*B*C^2", order)))
                       return bad("marker derivative is not z^2*B*C^2");
                     return ok("residual zero, F(1,z)=C, dF/dt at 1 is z^2*B*C^2 (order " +
                               nstr(order) + ")");
                   }});

  tasks.push_back({"series", "solver/dud-cubic", [order]() -> Outcome {
                     const PSeries h = solve_dud_block_series(order);
                     if (!dud_block_residual(h).is_zero()) return bad("residual is nonzero");
                     if (!(eval_marker_one(h) == make_C(order)))
                       return bad("marker 1 does not give the Catalan series");
                     if (!(derivative_marker_one(h) == parse_series_expr("z^3*B*C^4", order)))
                       return bad("marker derivative is not z^3*B*C^4");
                     return ok("residual zero, H(1,z)=C, dH/dt at 1 is z^3*B*C^4 (order " +
                               nstr(order) + ")");
                   }});

  tasks.push_back({"series", "solver/off-axis", [order]() -> Outcome {
                     const PSeries j = off_axis_dud_series(solve_dud_block_series(order));
                     if (!(eval_marker_one(j) == make_C(order)))
                       return bad("marker 1 does not give the Catalan series");
                     if (!(derivative_marker_one(j) == parse_series_expr("z^4*B*C^6", order)))
                       return bad("marker derivative is not z^4*B*C^6");
                     return ok("J(1,z)=C and dJ/dt at 1 is z^4*B*C^6 (order " + nstr(order) + ")");
                   }});

  tasks.push_back({"series", "contfrac/routes", [order]() -> Outcome {
                     const PSeries a = contfrac_depth_expansion(order);
                     const PSeries b = contfrac_fixed_point(order);
                     if (!(a == b)) return bad("depth expansion and fixed point disagree");
                     if (!(eval_marker_one(a) == make_C(order)))
                       return bad("marker 1 does not give the Catalan series");
                     if (!(derivative_marker_one(a) == parse_series_expr("z^3*B^2*C^4", order)))
                       return bad("marker derivative is not z^3*B^2*C^4");
                     return ok("both routes agree, F(1,z)=C, dF/dq at 1 is z^3*B^2*C^4 (order " +
                               nstr(order) + ")");
                   }});

  tasks.push_back(
      {"series", "index-total/three-routes", [order]() -> Outcome {
         const ZSeries closed = parse_series_expr("z^2*B^3*C", order);
         if (!(parse_series_expr("z^2*B*C^3 + z^3*B^3*C^3 + z^3*B^2*C^4", order) == closed))
           return bad("pattern-sum route differs from z^2*B^3*C");
         if (!(parse_series_expr("z^2*B^2*C", order) ==
               closed * parse_series_expr("1-2*z*C", order)))
           return bad("linear-equation route differs from z^2*B^3*C");
         return ok("pattern sum and linear equation both give z^2*B^3*C (order " + nstr(order) +
                   ")");
       }});

  for (const TransferApplication& app : transfer_applications()) {
    const std::string name =
        "transfer/" + to_string(app.rule) + "/" + app.source + "->" + app.target;
    tasks.push_back({"series", name, [app, n_max, order]() -> Outcome {
                       const int ord = std::max(order, n_max);
                       const VincularPattern rho = VincularPattern::parse(app.source);
                       if (transfer_target(app.rule, rho).to_string() != app.target)
                         return bad("rule produces pattern " +
                                    transfer_target(app.rule, rho).to_string());
                       const SeriesBundle out =
                           apply_transfer(app.rule, rho, bundle_for_pattern(app.source, ord), ord);
                       const SeriesBundle expect = bundle_for_pattern(app.target, ord);
                       int members = 0;
                       const std::pair<const std::optional<ZSeries>*, Anchor> sides[] = {
                           {&out.plain, Anchor::none},
                           {&out.first, Anchor::first},
                           {&out.last, Anchor::last},
                       };
                       for (const auto& [member, anchor] : sides) {
                         if (!member->has_value()) continue;
                         ++members;
                         const EnumResult* row = find_result("231", app.target, anchor);
                         if (!row) return bad("produced a series with no table row");
                         if (!(**member == parse_series_expr(row->gf, ord)))
                           return bad(to_string(anchor) + " series differs from the table");
                         for (int n = 0; n <= n_max; ++n)
                           if (brute_total(*row, n) != (*member)->coeff(n))
                             return bad(to_string(anchor) + " series differs from brute force at n=" +
                                        nstr(n));
                       }
                       return ok(nstr(members) + " series match the table and brute force n <= " +
                                 nstr(n_max));
                     }});
  }
}

// ----- bijections -------------------------------------------------------

// Runs body(x) for the first offender message; empty string means pass.
template <class T>
std::string guarded(const T& witness, const std::function<std::string()>& body,
                    const std::string& label) {
  try {
    return body();
  } catch (const std::exception& e) {
    return label + " = " + witness.to_string() + ": exception: " + e.what();
  }
}

void add_bijection_tasks(std::vector<Task>& tasks, int n_max, const BijectionHooks& hooks) {
  tasks.push_back({"bijections", "staircase-roundtrip", [n_max, fn = hooks.staircase]() -> Outcome {
    const auto cls = VincularPattern::parse("3-2-1");
    const auto p21 = VincularPattern::parse("21");
    const auto p312 = VincularPattern::parse("31-2");
    const auto p231 = VincularPattern::parse("23-1");
    long total = 0;
    for (int n = 0; n <= n_max; ++n) {
      std::set<DyckPath> image;
      std::string first_bad;
      for_each_avoider(n, cls, [&](const Permutation& sigma) {
        if (!first_bad.empty()) return;
        first_bad = guarded(sigma, [&]() -> std::string {
          const DyckPath d = fn(sigma);
          if (d.semilength() != n) return "sigma = " + sigma.to_string() + ": image semilength is wrong";
          if (!(phi_321_inverse(d) == sigma))
            return "sigma = " + sigma.to_string() + ": inverse roundtrip mismatch";
          if (inv(sigma) != peak_weight(d))
            return "sigma = " + sigma.to_string() + ": inv does not match the peak weight";
          const auto udd = triple_occurrences(d, "UDD");
          if (des(sigma) != static_cast<long>(udd.size()))
            return "sigma = " + sigma.to_string() + ": des does not match the UDD count";
          long w = 0;
          for (const auto& site : udd) w += site.height - 2;
          if (occurrences(p312, sigma) != static_cast<std::uint64_t>(w))
            return "sigma = " + sigma.to_string() + ": 31-2 does not match the UDD heights";
          w = 0;
          for (const auto& site : triple_occurrences(d, "UDU")) w += site.height - 1;
          if (occurrences(p231, sigma) != static_cast<std::uint64_t>(w))
            return "sigma = " + sigma.to_string() + ": 23-1 does not match the UDU heights";
          if (occurrences(p21, sigma) != udd.size())
            return "sigma = " + sigma.to_string() + ": 21 does not match the UDD count";
          image.insert(d);
          return std::string();
        }, "sigma");
      });
      if (!first_bad.empty()) return bad(first_bad);
      if (Int(static_cast<long>(image.size())) != catalan(n))
        return bad("n=" + nstr(n) + ": image has " + nstr(static_cast<long>(image.size())) +
                   " paths, expected the Catalan number");
      total += static_cast<long>(image.size());
    }
    return ok(nstr(total) + " permutations round-trip with inv, des, 31-2, and 23-1 "
              "transported, n <= " + nstr(n_max));
  }});

  tasks.push_back({"bijections", "first-return-roundtrip",
                   [n_max, fn = hooks.first_return]() -> Outcome {
    const auto cls = VincularPattern::parse("2-3-1");
    const auto p312 = VincularPattern::parse("31-2");
    long total = 0;
    for (int n = 0; n <= n_max; ++n) {
      std::set<DyckPath> image;
      std::string first_bad;
      for_each_avoider(n, cls, [&](const Permutation& sigma) {
        if (!first_bad.empty()) return;
        first_bad = guarded(sigma, [&]() -> std::string {
          const DyckPath d = fn(sigma);
          if (d.semilength() != n) return "sigma = " + sigma.to_string() + ": image semilength is wrong";
          if (!(phi_231_inverse(d) == sigma))
            return "sigma = " + sigma.to_string() + ": inverse roundtrip mismatch";
          if (mass(d) != static_cast<long>(occurrences(p312, sigma)))
            return "sigma = " + sigma.to_string() + ": 31-2 does not match the mass";
          image.insert(d);
          return std::string();
        }, "sigma");
      });
      if (!first_bad.empty()) return bad(first_bad);
      if (Int(static_cast<long>(image.size())) != catalan(n))
        return bad("n=" + nstr(n) + ": image has " + nstr(static_cast<long>(image.size())) +
                   " paths, expected the Catalan number");
      total += static_cast<long>(image.size());
    }
    return ok(nstr(total) + " permutations round-trip with 31-2 carried to mass, n <= " +
              nstr(n_max));
  }});

  tasks.push_back({"bijections", "minima-fill", [n_max, fn = hooks.minima_fill]() -> Outcome {
    const auto cls = VincularPattern::parse("3-2-1");
    const auto other = VincularPattern::parse("2-3-1");
    long total = 0;
    for (int n = 0; n <= n_max; ++n) {
      std::set<Permutation> image;
      std::string first_bad;
      for_each_avoider(n, cls, [&](const Permutation& sigma) {
        if (!first_bad.empty()) return;
        first_bad = guarded(sigma, [&]() -> std::string {
          const Permutation tau = fn(sigma);
          if (tau.size() != n) return "sigma = " + sigma.to_string() + ": image size is wrong";
          if (!avoids(tau, other))
            return "sigma = " + sigma.to_string() + ": image contains 2-3-1";
          if (maj(tau) != den(sigma))
            return "sigma = " + sigma.to_string() + ": den does not match maj of the image";
          image.insert(tau);
          return std::string();
        }, "sigma");
      });
      if (!first_bad.empty()) return bad(first_bad);
      if (Int(static_cast<long>(image.size())) != catalan(n))
        return bad("n=" + nstr(n) + ": image has " + nstr(static_cast<long>(image.size())) +
                   " permutations, expected the Catalan number");
      total += static_cast<long>(image.size());
    }
    return ok(nstr(total) + " images avoid 2-3-1 and carry den to maj, n <= " + nstr(n_max));
  }});

  tasks.push_back({"bijections", "component-lift", [n_max, fn = hooks.component_lift]() -> Outcome {
    long total = 0;
    for (int n = 0; n <= n_max; ++n) {
      std::set<DyckPath> image;
      std::string first_bad;
      for_each_dyck_path(n, [&](const DyckPath& p) {
        if (!first_bad.empty()) return;
        first_bad = guarded(p, [&]() -> std::string {
          const DyckPath q = fn(p);
          if (q.semilength() != n) return "path = " + p.to_string() + ": image semilength is wrong";
          if (mass(q) != t_stat(p))
            return "path = " + p.to_string() + ": floor weight does not match the image mass";
          image.insert(q);
          return std::string();
        }, "path");
      });
      if (!first_bad.empty()) return bad(first_bad);
      if (Int(static_cast<long>(image.size())) != catalan(n))
        return bad("n=" + nstr(n) + ": image has " + nstr(static_cast<long>(image.size())) +
                   " paths, expected the Catalan number");
      total += static_cast<long>(image.size());
    }
    return ok(nstr(total) + " paths round-trip with the floor weight carried to mass, n <= " +
              nstr(n_max));
  }});

  tasks.push_back({"bijections", "interleave", [n_max, fn = hooks.interleave]() -> Outcome {
    long total = 0;
    for (int s = 2; s <= n_max; ++s) {
      std::set<DyckPath> image;
      std::string first_bad;
      for_each_polyomino_semiperimeter(s, [&](const StaircasePolyomino& g) {
        if (!first_bad.empty()) return;
        first_bad = guarded(g, [&]() -> std::string {
          const DyckPath d = fn(g);
          if (d.semilength() != s - 1)
            return "polyomino = " + g.to_string() + ": image semilength is wrong";
          if (g.area() != t_stat(d) + s - 1)
            return "polyomino = " + g.to_string() +
                   ": area does not match floor weight plus semiperimeter minus one";
          image.insert(d);
          return std::string();
        }, "polyomino");
      });
      if (!first_bad.empty()) return bad(first_bad);
      if (Int(static_cast<long>(image.size())) != catalan(s - 1))
        return bad("s=" + nstr(s) + ": image has " + nstr(static_cast<long>(image.size())) +
                   " paths, expected the Catalan number");
      total += static_cast<long>(image.size());
    }
    return ok(nstr(total) + " polyominoes map over with area equal to floor weight plus "
              "semiperimeter minus one, s <= " + nstr(n_max));
  }});
}

// ----- distributions ----------------------------------------------------

void add_distribution_tasks(std::vector<Task>& tasks, int n_max, int order) {
  tasks.push_back({"distributions", "31-2-vs-23-1-on-321", [n_max]() -> Outcome {
                     const auto cls = VincularPattern::parse("3-2-1");
                     const auto a = VincularPattern::parse("31-2");
                     const auto b = VincularPattern::parse("23-1");
                     for (int n = 0; n <= n_max; ++n) {
                       const Int ta = total_occurrences(n, cls, a);
                       const Int tb = total_occurrences(n, cls, b);
                       if (ta != tb)
                         return bad("n=" + nstr(n) + ": totals " + to_string(ta) + " and " +
                                    to_string(tb) + " differ");
                     }
                     return ok("31-2 and 23-1 have equal totals for n <= " + nstr(n_max));
                   }});

  tasks.push_back({"distributions", "den-vs-maj", [n_max]() -> Outcome {
                     const auto c321 = VincularPattern::parse("3-2-1");
                     const auto c231 = VincularPattern::parse("2-3-1");
                     const int cap = std::min(n_max, 9);
                     for (int n = 0; n <= cap; ++n)
                       if (!(distribution(n, c321, StatKind::den) ==
                             distribution(n, c231, StatKind::maj)))
                         return bad("n=" + nstr(n) + ": distributions differ");
                     return ok("den on one class matches maj on the other for n <= " + nstr(cap));
                   }});

  tasks.push_back({"distributions", "31-2-contfrac", [n_max]() -> Outcome {
                     const PSeries f = contfrac_series(n_max);
                     const auto cls = VincularPattern::parse("2-3-1");
                     for (int n = 0; n <= n_max; ++n) {
                       if (poly_of(pattern_distribution(n, cls, VincularPattern::parse("31-2"))) !=
                           f.coeff(n))
                         return bad("n=" + nstr(n) + ": 31-2 distribution differs");
                       if (poly_of(pattern_distribution(n, cls, VincularPattern::parse("13-2"))) !=
                           f.coeff(n))
                         return bad("n=" + nstr(n) + ": 13-2 distribution differs");
                     }
                     return ok("31-2 and 13-2 distributions match the continued fraction n <= " +
                               nstr(n_max));
                   }});

  tasks.push_back({"distributions", "mass-contfrac", [n_max]() -> Outcome {
                     const PSeries f = contfrac_series(n_max);
                     for (int n = 0; n <= n_max; ++n)
                       if (dyck_histogram(n, mass) != f.coeff(n))
                         return bad("n=" + nstr(n) + ": mass histogram differs");
                     return ok("mass histograms match the continued fraction for n <= " +
                               nstr(n_max));
                   }});

  tasks.push_back({"distributions", "descents-on-321", [n_max]() -> Outcome {
                     const PSeries f = solve_descent_series(n_max);
                     const auto cls = VincularPattern::parse("3-2-1");
                     const auto p21 = VincularPattern::parse("21");
                     for (int n = 0; n <= n_max; ++n) {
                       if (poly_of(pattern_distribution(n, cls, p21)) != f.coeff(n))
                         return bad("n=" + nstr(n) + ": descent distribution differs");
                       const Poly udd = dyck_histogram(n, [](const DyckPath& d) {
                         return static_cast<long>(triple_occurrences(d, "UDD").size());
                       });
                       if (udd != f.coeff(n))
                         return bad("n=" + nstr(n) + ": UDD histogram differs");
                     }
                     return ok("descents and UDD factors both match the solved series n <= " +
                               nstr(n_max));
                   }});

  tasks.push_back({"distributions", "dud-blocks", [n_max]() -> Outcome {
                     const PSeries h = solve_dud_block_series(n_max);
                     for (int n = 0; n <= n_max; ++n)
                       if (dyck_histogram(n, [](const DyckPath& d) {
                             return dud_block_stats(d).total;
                           }) != h.coeff(n))
                         return bad("n=" + nstr(n) + ": fall-run histogram differs");
                     return ok("fall-run weights match the cubic root for n <= " + nstr(n_max));
                   }});

  tasks.push_back({"distributions", "dud-blocks-off-axis", [n_max]() -> Outcome {
                     const PSeries j = off_axis_dud_series(solve_dud_block_series(n_max));
                     for (int n = 0; n <= n_max; ++n)
                       if (dyck_histogram(n, [](const DyckPath& d) {
                             return dud_block_stats(d).excluding_axis;
                           }) != j.coeff(n))
                         return bad("n=" + nstr(n) + ": off-axis histogram differs");
                     return ok("off-axis fall-run weights match 1/(1-zH) for n <= " + nstr(n_max));
                   }});

  tasks.push_back(
      {"distributions", "grand-dyck-height-sums", [n_max, order]() -> Outcome {
         const int ord = std::max(order, n_max);
         const ZSeries one = parse_series_expr("z^2*B^2*C^2", ord);
         const ZSeries two = parse_series_expr("z^3*B^2*C^4", ord);
         for (int m = 1; m + 1 <= n_max; ++m) {
           Int s1 = 0, s2 = 0;
           for_each_grand_dyck_path(m, [&](const GrandDyckPath& p) {
             s1 += points_at_height(p, 1);
             s2 += points_at_height(p, 2);
           });
           if (s1 != one.coeff(m + 1))
             return bad("m=" + nstr(m) + ": height-1 point sum " + to_string(s1) +
                        ", coefficient " + to_string(one.coeff(m + 1)));
           if (s2 != two.coeff(m + 1))
             return bad("m=" + nstr(m) + ": height-2 point sum " + to_string(s2) +
                        ", coefficient " + to_string(two.coeff(m + 1)));
         }
         return ok("height-1 and height-2 point sums match z^2*B^2*C^2 and z^3*B^2*C^4 for m < " +
                   nstr(n_max));
       }});
}

// ----- polyomino --------------------------------------------------------

void add_polyomino_tasks(std::vector<Task>& tasks, int n_max, int order) {
  (void)order;
  tasks.push_back({"polyomino", "counts", [n_max]() -> Outcome {
                     for (int s = 2; s <= n_max; ++s) {
                       long c = 0;
                       for_each_polyomino_semiperimeter(s, [&](const StaircasePolyomino&) { ++c; });
                       if (Int(c) != catalan(s - 1))
                         return bad("s=" + nstr(s) + ": " + nstr(c) +
                                    " polyominoes, expected the Catalan number");
                     }
                     return ok("semiperimeter-s count is the (s-1)st Catalan number for s <= " +
                               nstr(n_max));
                   }});

  tasks.push_back({"polyomino", "area-vs-contfrac", [n_max]() -> Outcome {
                     const int cap = std::min(n_max, 8);
                     if (!(polyomino_area_gf(cap) == polyomino_area_series(cap)))
                       return bad("area polynomials differ from z(F(q,qz)-1)");
                     return ok("area polynomials match z(F(q,qz)-1) for semiperimeter <= " +
                               nstr(cap));
                   }});

  tasks.push_back({"polyomino", "weighted-schemes", [n_max]() -> Outcome {
                     const int cap = std::min(n_max, 9);
                     const PSeries floor_scheme = weighted_dyck_gf(cap, DyckWeight::floor_half_up);
                     const PSeries peak_scheme =
                         weighted_dyck_gf(cap, DyckWeight::peak_height_minus_one);
                     const PSeries ceil_scheme = weighted_dyck_gf(cap, DyckWeight::ceil_half_up);
                     if (!(peak_scheme == ceil_scheme))
                       return bad("peak and ceiling schemes disagree");
                     const PSeries f = contfrac_series(cap);
                     if (!(floor_scheme == f))
                       return bad("floor scheme differs from the continued fraction");
                     if (!(f * (PSeries::one(cap) - peak_scheme.shifted_up(1)) ==
                           PSeries::one(cap)))
                       return bad("F(1 - zJ) is not 1");
                     return ok("peak = ceiling, floor = F, and F(1-zJ) = 1 through order " +
                               nstr(cap));
                   }});

  tasks.push_back({"polyomino", "area-reciprocity", [n_max]() -> Outcome {
                     const int cap = std::min(n_max, 8);
                     if (!area_reciprocity_identity_holds(cap))
                       return bad("Laurent identity fails");
                     return ok("P(q,z) + P(1/q,z) + 2z matches the Gaussian binomial "
                               "reciprocal through order " +
                               nstr(cap));
                   }});
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) {
    if (ch == '"') q += "\"\"";
    else q += ch;
  }
  q += "\"";
  return q;
}

}  // namespace

bool VerificationReport::all_pass() const { return failure_count() == 0; }

int VerificationReport::failure_count() const {
  int f = 0;
  for (const auto& c : checks)
    if (!c.pass) ++f;
  return f;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"totals", "series", "bijections",
                                                 "distributions", "polyomino"};
  return names;
}

VerificationReport run_suite(const std::string& suite, int n_max, int order, int jobs,
                             const BijectionHooks& hooks) {
  if (n_max < 0) throw std::invalid_argument("run_suite: negative n_max");
  if (order < 0) throw std::invalid_argument("run_suite: negative order");
  const auto& names = suite_names();
  const bool all = suite == "all";
  if (!all && std::find(names.begin(), names.end(), suite) == names.end())
    throw std::invalid_argument("unknown suite: " + suite);

  std::vector<Task> tasks;
  if (all || suite == "totals") add_totals_tasks(tasks, n_max, order);
  if (all || suite == "series") add_series_tasks(tasks, n_max, order);
  if (all || suite == "bijections") add_bijection_tasks(tasks, n_max, hooks);
  if (all || suite == "distributions") add_distribution_tasks(tasks, n_max, order);
  if (all || suite == "polyomino") add_polyomino_tasks(tasks, n_max, order);

  VerificationReport report;
  report.suite = suite;
  report.n_max = n_max;
  report.order = order;
  report.checks.resize(tasks.size());

  std::atomic<size_t> next{0};
  auto worker = [&tasks, &report, &next] {
    for (;;) {
      const size_t i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      Outcome out{false, ""};
      try {
        out = tasks[i].run();
      } catch (const std::exception& e) {
        out = {false, std::string("exception: ") + e.what()};
      }
      report.checks[i] = CheckResult{tasks[i].suite, tasks[i].name, out.detail, out.pass};
    }
  };

  const int workers = std::max(1, std::min<int>(jobs, static_cast<int>(tasks.size())));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(workers));
    for (int i = 0; i < workers; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return report;
}

std::string render_text(const VerificationReport& r) {
  std::string out =
      "suite " + r.suite + ": n_max " + std::to_string(r.n_max) + ", order " +
      std::to_string(r.order) + "\n";
  for (const auto& c : r.checks)
    out += std::string(c.pass ? "PASS " : "FAIL ") + c.suite + "/" + c.name + ": " + c.detail +
           "\n";
  out += std::to_string(r.checks.size()) + " checks, " + std::to_string(r.failure_count()) +
         " failed\n";
  return out;
}

std::string render_csv(const VerificationReport& r) {
  std::string out = "suite,name,pass,detail\n";
  for (const auto& c : r.checks)
    out += csv_field(c.suite) + "," + csv_field(c.name) + "," + (c.pass ? "pass" : "fail") + "," +
           csv_field(c.detail) + "\n";
  return out;
}

std::string render_json(const VerificationReport& r) {
  nlohmann::ordered_json j;
  j["suite"] = r.suite;
  j["n_max"] = r.n_max;
  j["order"] = r.order;
  j["all_pass"] = r.all_pass();
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : r.checks) {
    nlohmann::ordered_json jc;
    jc["suite"] = c.suite;
    jc["name"] = c.name;
    jc["pass"] = c.pass;
    jc["detail"] = c.detail;
    j["checks"].push_back(jc);
  }
  return j.dump(2) + "\n";
}

}  // namespace vinc
