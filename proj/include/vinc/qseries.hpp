#pragma once

#include <utility>

#include "vinc/polynomial.hpp"
#include "vinc/series.hpp"

namespace vinc {

// Gaussian binomial [a+b choose a]_q via the product formula; every partial
// quotient is an exact polynomial division.
Poly q_binomial(long a, long b);

// Coefficient of z^s: the sum of q^area over staircase polyominoes of
// semiperimeter s, by direct enumeration.
PSeries polyomino_area_gf(int max_semiperimeter);

// The same series as z (F(q,qz) - 1) with F the continued-fraction series.
PSeries polyomino_area_series(int max_semiperimeter);

// Laurent-series identity tying the area series P to Gaussian binomials:
//   P(q,z) + P(1/q,z) + 2z = 1 - 1 / sum_n z^n sum_i [n;i]_q [n;i]_{1/q}
// where [n;i]_q = q_binomial(i, n-i). Returns both sides through z^z_order.
std::pair<LSeries, LSeries> area_reciprocity_sides(int z_order);
bool area_reciprocity_identity_holds(int z_order);

}  // namespace vinc
