#pragma once

#include "vinc/polynomial.hpp"
#include "vinc/series.hpp"

namespace vinc {

// F(t,z), the descent polynomials of the class avoiding 321: the unique power
// series with F(t,0) = 1 solving F = 1 + z(1 + (t-1)z) F^2. The coefficient of
// z^n sums t^des over the class, equally t^{#UDD factors} over Dyck paths of
// semilength n. Computed by fixed-point iteration; a nonzero final residual
// throws std::logic_error.
PSeries solve_descent_series(int order);

// 1 + z(1 + (t-1)z) F^2 - F; zero exactly when F solves the equation above.
PSeries descent_series_residual(const PSeries& f);

// H(t,z), with the coefficient of z^n summing t^w over Dyck paths of
// semilength n, where w is the total fall-run weight of DUD factors
// (dud_block_stats().total). The unique power-series root with constant term 1
// of the cubic
//   t z^2 H^3 - z(1 + t - z + tz) H^2 + (1 + tz + tz^2 - z^2) H - 1 = 0,
// found by Newton iteration from H = 1. Non-convergence throws
// std::runtime_error; a nonzero final residual throws std::logic_error.
PSeries solve_dud_block_series(int order);

// The cubic's left side evaluated at h.
PSeries dud_block_residual(const PSeries& h);

// J(t,z) = 1 / (1 - z H(t,z)): same weight restricted to DUD factors that stay
// off the axis (dud_block_stats().excluding_axis).
PSeries off_axis_dud_series(const PSeries& h);

}  // namespace vinc
