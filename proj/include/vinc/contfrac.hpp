#pragma once

#include <string>

#include "vinc/series.hpp"

namespace vinc {

// F(q,z): the coefficient of z^n is the polynomial summing q^{occ(31-2)} over
// the class avoiding 231 (equally q^{occ(13-2)}).
//
// Route one: finite continued fraction, level k carrying numerator
// z q^floor((k-1)/2), expanded bottom-up from depth 2*order + 2, which fixes
// every coefficient through z^order.
// Route two: fixed point of F(q,z) = 1/(1 - z/(1 - z F(q,qz))).
//
// q_cap >= 0 truncates every coefficient to marker degree q_cap; -1 keeps full
// polynomials.
PSeries contfrac_depth_expansion(int order, long q_cap = -1);
PSeries contfrac_fixed_point(int order, long q_cap = -1);

// Both routes, cross-checked; disagreement throws std::logic_error.
PSeries contfrac_series(int order, long q_cap = -1);

// Weight schemes on Dyck paths.
enum class DyckWeight {
  peak_height_minus_one,  // sum over peaks of (height - 1)
  ceil_half_up,           // sum over U steps of ceil(h/2), h the start height
  floor_half_up,          // sum over U steps of floor(h/2)
};
std::string to_string(DyckWeight w);

// Sum of q^weight over Dyck paths, by semilength through n_max. The floor
// scheme reproduces F(q,z); the peak and ceiling schemes agree with each other
// and satisfy F(q,z) (1 - z J(q,z)) = 1 where J is their common series.
PSeries weighted_dyck_gf(int n_max, DyckWeight w);

}  // namespace vinc
