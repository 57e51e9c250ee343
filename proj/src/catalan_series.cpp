#include "vinc/catalan_series.hpp"

#include <stdexcept>

namespace vinc {

ZSeries make_C(int order) {
  ZSeries c(order);
  for (int n = 0; n <= order; ++n) c.set_coeff(n, catalan(n));

  ZSeries fix = ZSeries::one(order);
  const ZSeries z = ZSeries::monomial(1, Int(1), order);
  for (int i = 0; i <= order; ++i) fix = ZSeries::one(order) + z * fix * fix;
  if (fix != c) throw std::logic_error("make_C: fixed point of C = 1 + zC^2 disagrees with binomials");
  return c;
}

ZSeries make_B(int order) {
  ZSeries b(order);
  for (int n = 0; n <= order; ++n) b.set_coeff(n, binomial(2L * n, n));

  const ZSeries z = ZSeries::monomial(1, Int(1), order);
  const ZSeries alt = (ZSeries::one(order) - ZSeries::monomial(1, Int(2), order) * make_C(order)).reciprocal();
  if (alt != b) throw std::logic_error("make_B: 1/(1-2zC) disagrees with central binomials");
  return b;
}

ZSeries bc_monomial(unsigned b, unsigned c, int shift, int order) {
  return (make_B(order).pow(b) * make_C(order).pow(c)).shifted_up(shift);
}

std::vector<IdentityCheck> bc_identity_checks(int order) {
  std::vector<IdentityCheck> out;
  const ZSeries B = make_B(order);
  const ZSeries C = make_C(order);
  const ZSeries one = ZSeries::one(order);
  const ZSeries z = ZSeries::monomial(1, Int(1), order);
  const ZSeries two = ZSeries::monomial(0, Int(2), order);

  auto check = [&](const std::string& name, bool pass) { out.push_back({name, pass}); };

  for (unsigned k = 1; k <= 6; ++k) {
    const ZSeries ck = C.pow(k);
    bool ok = true;
    for (int n = 0; n <= order; ++n) {
      const Int num = Int(static_cast<long>(k)) * binomial(2L * n + k, n);
      if (ck.coeff(n) != exact_div(num, Int(2L * n + k))) ok = false;
    }
    check("[z^n] C^" + std::to_string(k) + " = k/(2n+k) * binom(2n+k, n)", ok);

    const ZSeries bck = B * ck;
    ok = true;
    for (int n = 0; n <= order; ++n)
      if (bck.coeff(n) != binomial(2L * n + k, n)) ok = false;
    check("[z^n] B*C^" + std::to_string(k) + " = binom(2n+k, n)", ok);
  }

  {
    const ZSeries s = bc_monomial(2, 2, 2, order);
    bool ok = s.coeff(0) == 0;
    for (int n = 1; n <= order; ++n)
      if (s.coeff(n) != pow4(static_cast<unsigned long>(n) - 1) - binomial(2L * n - 1, n)) ok = false;
    check("[z^n] z^2*B^2*C^2 = 4^(n-1) - binom(2n-1, n)", ok);
  }

  check("B = 1 + 2zBC", B == one + two.shifted_up(1) * B * C);
  check("B*(1 - 2zC) = 1", B * (one - two.shifted_up(1) * C) == one);
  check("(B+1)*C = 2B", (B + one) * C == two * B);
  check("(B+1)/2 = 1 + zBC", exact_halve(B + one) == one + (z * B * C));
  check("(B+1)*(1 - zC^2) = 2", (B + one) * (one - z * C * C) == two);
  check("C = 1 + zC^2", C == one + z * C * C);
  check("C*(1 - zC) = 1", C * (one - z * C) == one);
  check("C' = B*C^2", C.derivative_z().agrees_with(B * C * C));
  check("B' = 2*B^3", B.derivative_z().agrees_with(two * B.pow(3)));
  check("(zC)' = B", C.shifted_up(1).derivative_z().agrees_with(B));
  check("B^2*(1 - 4z) = 1", B * B * (one - ZSeries::monomial(1, Int(4), order)) == one);

  return out;
}

bool all_bc_identities_hold(int order) {
  for (const auto& c : bc_identity_checks(order))
    if (!c.pass) return false;
  return true;
}

}  // namespace vinc
