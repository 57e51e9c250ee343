#include "vinc/bigint.hpp"

namespace vinc {

Int binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Int catalan(long n) {
  if (n < 0) return 0;
  return exact_div(binomial(2 * n, n), Int(n + 1));
}

Int pow2(unsigned long e) {
  Int r = 1;
  mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), e);
  return r;
}

Int pow4(unsigned long e) { return pow2(2 * e); }

Int exact_div(const Int& a, const Int& b) {
  if (b == 0) throw std::domain_error("exact_div: division by zero");
  Int q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (r != 0)
    throw std::domain_error("exact_div: " + a.get_str() + " not divisible by " + b.get_str());
  return q;
}

std::string to_string(const Int& v) { return v.get_str(); }

}  // namespace vinc
