#pragma once

#include <string>
#include <vector>

#include "vinc/series.hpp"

namespace vinc {

// C(z) = sum of Catalan numbers; built from binomials and cross-checked
// against the fixed point of C = 1 + zC^2. A disagreement throws
// std::logic_error (it would mean the engine itself is broken).
ZSeries make_C(int order);

// B(z) = sum of central binomials C(2n,n); cross-checked against 1/(1-2zC).
ZSeries make_B(int order);

// z^shift * B^b * C^c.
ZSeries bc_monomial(unsigned b, unsigned c, int shift, int order);

struct IdentityCheck {
  std::string name;
  bool pass;
};

// Every displayed B/C identity, verified coefficient-wise to the given order:
// the C^k and BC^k coefficient formulas, z^2B^2C^2 vs 4^{n-1}-C(2n-1,n),
// B = 1 + 2zBC = 1/(1-2zC), (B+1)/2 = B/C = 1 + zBC = 1/(1-zC^2),
// C = 1 + zC^2 = 1/(1-zC) = 2B/(B+1), C' = BC^2, B' = 2B^3, (zC)' = B.
// Divisions are checked cross-multiplied; the halving is checked exactly.
std::vector<IdentityCheck> bc_identity_checks(int order);

bool all_bc_identities_hold(int order);

}  // namespace vinc
