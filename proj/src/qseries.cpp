#include "vinc/qseries.hpp"

#include <stdexcept>

#include "vinc/contfrac.hpp"
#include "vinc/polyomino.hpp"

namespace vinc {
namespace {

Poly one_minus_q_power(long k) {
  Poly p(1);
  p.set_coeff(k, Int(-1));
  return p;
}

}  // namespace

Poly q_binomial(long a, long b) {
  if (a < 0 || b < 0) throw std::invalid_argument("q_binomial: negative argument");
  Poly result(1);
  for (long i = 1; i <= a; ++i)
    result = exact_poly_div(result * one_minus_q_power(b + i), one_minus_q_power(i));
  return result;
}

PSeries polyomino_area_gf(int max_semiperimeter) {
  PSeries s(max_semiperimeter);
  for (int sp = 2; sp <= max_semiperimeter; ++sp) {
    Poly acc(0);
    for_each_polyomino_semiperimeter(
        sp, [&](const StaircasePolyomino& g) { acc += Poly::marker_power(g.area()); });
    s.set_coeff(sp, std::move(acc));
  }
  return s;
}

PSeries polyomino_area_series(int max_semiperimeter) {
  const int order = max_semiperimeter;
  const PSeries f = contfrac_series(order);
  return (substitute_z_marker(f) - PSeries::one(order)).shifted_up(1);
}

std::pair<LSeries, LSeries> area_reciprocity_sides(int z_order) {
  const PSeries p = polyomino_area_series(z_order);
  const LSeries lp = to_laurent(p);
  const LSeries two_z = LSeries::monomial(1, Laurent(2), z_order);
  const LSeries lhs = lp + invert_marker(lp) + two_z;

  LSeries qbin_sum(z_order);
  for (int n = 0; n <= z_order; ++n) {
    Laurent acc(0);
    for (int i = 0; i <= n; ++i) {
      const Laurent direct(q_binomial(i, n - i));
      acc += direct * direct.inverted_marker();
    }
    qbin_sum.set_coeff(n, acc);
  }
  const LSeries rhs = LSeries::one(z_order) - qbin_sum.reciprocal();
  return {lhs, rhs};
}

bool area_reciprocity_identity_holds(int z_order) {
  const auto [lhs, rhs] = area_reciprocity_sides(z_order);
  return lhs == rhs;
}

}  // namespace vinc
