#include "vinc/solvers.hpp"

#include <stdexcept>

namespace vinc {
namespace {

// z(1 + (t-1)z) as a series.
PSeries descent_multiplier(int order) {
  PSeries m(order);
  if (order >= 1) m.set_coeff(1, Poly(1));
  if (order >= 2) m.set_coeff(2, Poly::marker() - Poly(1));
  return m;
}

// Cubic coefficients: p(H) = a3 H^3 + a2 H^2 + a1 H - 1.
struct DudCubic {
  PSeries a3, a2, a1;

  explicit DudCubic(int order) : a3(order), a2(order), a1(order) {
    const Poly t = Poly::marker();
    if (order >= 2) a3.set_coeff(2, t);
    // -z(1 + t - z + tz) = -(1+t) z + (1-t) z^2
    if (order >= 1) a2.set_coeff(1, Poly(-1) - t);
    if (order >= 2) a2.set_coeff(2, Poly(1) - t);
    a1.set_coeff(0, Poly(1));
    if (order >= 1) a1.set_coeff(1, t);
    if (order >= 2) a1.set_coeff(2, t - Poly(1));
  }

  PSeries value(const PSeries& h) const {
    return ((a3 * h + a2) * h + a1) * h - PSeries::one(h.order());
  }

  PSeries slope(const PSeries& h) const {
    const PSeries three = PSeries::monomial(0, Poly(3), h.order());
    const PSeries two = PSeries::monomial(0, Poly(2), h.order());
    return (three * a3 * h + two * a2) * h + a1;
  }
};

}  // namespace

PSeries descent_series_residual(const PSeries& f) {
  return PSeries::one(f.order()) + descent_multiplier(f.order()) * f * f - f;
}

PSeries solve_descent_series(int order) {
  const PSeries one = PSeries::one(order);
  const PSeries mult = descent_multiplier(order);
  PSeries f = one;
  for (int i = 0; i <= order; ++i) f = one + mult * f * f;
  if (!descent_series_residual(f).is_zero())
    throw std::logic_error("descent series fixed point did not close");
  return f;
}

PSeries dud_block_residual(const PSeries& h) { return DudCubic(h.order()).value(h); }

PSeries solve_dud_block_series(int order) {
  const DudCubic cubic(order);
  PSeries h = PSeries::one(order);
  bool converged = false;
  for (int i = 0; i <= order + 2; ++i) {
    const PSeries residual = cubic.value(h);
    if (residual.is_zero()) {
      converged = true;
      break;
    }
    // The slope has constant coefficient 1, so it is invertible.
    h = h - residual * cubic.slope(h).reciprocal();
  }
  if (!converged) throw std::runtime_error("cubic root iteration did not converge");
  if (!cubic.value(h).is_zero()) throw std::logic_error("cubic root residual is nonzero");
  return h;
}

PSeries off_axis_dud_series(const PSeries& h) {
  return (PSeries::one(h.order()) - h.shifted_up(1)).reciprocal();
}

}  // namespace vinc
