#include "vinc/contfrac.hpp"

#include <stdexcept>

#include "vinc/dyck.hpp"

namespace vinc {
namespace {

PSeries capped(PSeries s, long q_cap) {
  return q_cap < 0 ? s : truncate_marker(s, q_cap);
}

}  // namespace

PSeries contfrac_depth_expansion(int order, long q_cap) {
  const PSeries one = PSeries::one(order);
  PSeries tail = PSeries::zero(order);
  for (int k = 2 * order + 2; k >= 1; --k) {
    const PSeries num = PSeries::monomial(1, Poly::marker_power((k - 1) / 2), order);
    tail = capped(num * (one - tail).reciprocal(), q_cap);
  }
  return capped((one - tail).reciprocal(), q_cap);
}

PSeries contfrac_fixed_point(int order, long q_cap) {
  const PSeries one = PSeries::one(order);
  const PSeries z = PSeries::monomial(1, Poly(1), order);
  auto step = [&](const PSeries& f) {
    const PSeries inner = (one - z * capped(substitute_z_marker(f), q_cap)).reciprocal();
    return capped((one - z * inner).reciprocal(), q_cap);
  };
  PSeries f = one;
  for (int i = 0; i <= order; ++i) f = step(f);
  if (!(step(f) == f)) throw std::logic_error("continued fraction fixed point did not close");
  return f;
}

PSeries contfrac_series(int order, long q_cap) {
  PSeries by_depth = contfrac_depth_expansion(order, q_cap);
  const PSeries by_fixed_point = contfrac_fixed_point(order, q_cap);
  if (!(by_depth == by_fixed_point))
    throw std::logic_error("continued fraction routes disagree");
  return by_depth;
}

std::string to_string(DyckWeight w) {
  switch (w) {
    case DyckWeight::peak_height_minus_one: return "peak-height-minus-one";
    case DyckWeight::ceil_half_up: return "ceil-half-up";
    case DyckWeight::floor_half_up: return "floor-half-up";
  }
  throw std::logic_error("unhandled weight scheme");
}

PSeries weighted_dyck_gf(int n_max, DyckWeight w) {
  PSeries s(n_max);
  for (int n = 0; n <= n_max; ++n) {
    Poly acc(0);
    for_each_dyck_path(n, [&](const DyckPath& p) {
      long weight = 0;
      switch (w) {
        case DyckWeight::peak_height_minus_one: weight = peak_weight(p); break;
        case DyckWeight::ceil_half_up: weight = ceil_weight(p); break;
        case DyckWeight::floor_half_up: weight = t_stat(p); break;
      }
      acc += Poly::marker_power(weight);
    });
    s.set_coeff(n, std::move(acc));
  }
  return s;
}

}  // namespace vinc
