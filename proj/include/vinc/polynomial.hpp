#pragma once

#include <string>
#include <vector>

#include "vinc/bigint.hpp"

namespace vinc {

// Dense polynomial in one formal marker (q, t, ...) with Int coefficients.
// Trailing zero coefficients are trimmed, so degree() is exact.
class Poly {
 public:
  Poly() = default;
  Poly(long constant);  // implicit: generic series code writes R(1), R(0)
  Poly(const Int& constant);

  static Poly marker();
  static Poly marker_power(long k);

  bool is_zero() const { return c_.empty(); }
  long degree() const { return static_cast<long>(c_.size()) - 1; }  // -1 when zero
  const Int& coeff(long k) const;                                   // 0 outside range
  void set_coeff(long k, Int v);

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  Poly operator-() const;
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Int eval_one() const;             // sum of coefficients
  Int derivative_eval_one() const;  // sum of k * coeff(k)
  Poly truncated(long max_degree) const;

  std::string to_string(char var = 'q') const;

 private:
  std::vector<Int> c_;  // c_[k] = coefficient of marker^k
  void trim();
};

// Exact quotient; throws std::domain_error when the division leaves a remainder
// or the divisor is zero.
Poly exact_poly_div(const Poly& num, const Poly& den);

// Laurent polynomial: finitely many terms, exponents may be negative. The
// minimum exponent is stored explicitly.
class Laurent {
 public:
  Laurent() = default;
  Laurent(long constant);  // implicit
  Laurent(const Poly& p);
  Laurent(long lo, std::vector<Int> coeffs);

  bool is_zero() const { return c_.empty(); }
  long min_exp() const { return lo_; }                                  // 0 when zero
  long max_exp() const { return lo_ + static_cast<long>(c_.size()) - 1; }
  Int coeff(long k) const;

  Laurent inverted_marker() const;  // substitute marker -> 1/marker

  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  Laurent operator-() const;
  friend Laurent operator*(const Laurent& a, const Laurent& b);
  friend bool operator==(const Laurent& a, const Laurent& b) {
    return a.lo_ == b.lo_ && a.c_ == b.c_;
  }
  friend bool operator!=(const Laurent& a, const Laurent& b) { return !(a == b); }

  Int eval_one() const;
  std::string to_string(char var = 'q') const;

 private:
  long lo_ = 0;
  std::vector<Int> c_;  // c_[i] = coefficient of marker^(lo_ + i)
  void trim();
};

}  // namespace vinc
