#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace vinc {

using Int = mpz_class;

// binom(n, k); zero outside 0 <= k <= n so shifted closed forms evaluate cleanly.
Int binomial(long n, long k);

Int catalan(long n);

Int pow2(unsigned long e);
Int pow4(unsigned long e);

// Exact quotient a / b; throws std::domain_error if b does not divide a.
Int exact_div(const Int& a, const Int& b);

std::string to_string(const Int& v);

}  // namespace vinc
