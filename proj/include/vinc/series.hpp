#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "vinc/bigint.hpp"
#include "vinc/polynomial.hpp"

namespace vinc {

// Truncated power series in z with coefficients in a ring R (Int, Poly, or
// Laurent). Arithmetic never reads beyond the truncation order; operations on
// mismatched orders truncate to the smaller one.
template <class R>
class Series {
 public:
  explicit Series(int order) : c_(static_cast<size_t>(check_order(order)) + 1) {}

  static Series zero(int order) { return Series(order); }

  static Series one(int order) {
    Series s(order);
    s.c_[0] = R(1);
    return s;
  }

  static Series monomial(int k, R coeff, int order) {
    Series s(order);
    if (k <= order) s.c_[static_cast<size_t>(k)] = std::move(coeff);
    return s;
  }

  int order() const { return static_cast<int>(c_.size()) - 1; }

  const R& coeff(int n) const {
    if (n < 0 || n > order())
      throw std::out_of_range("Series::coeff: index " + std::to_string(n) +
                              " outside truncation order " + std::to_string(order()));
    return c_[static_cast<size_t>(n)];
  }

  void set_coeff(int n, R v) {
    if (n < 0 || n > order())
      throw std::out_of_range("Series::set_coeff: index outside truncation order");
    c_[static_cast<size_t>(n)] = std::move(v);
  }

  Series truncated(int new_order) const {
    if (new_order > order()) throw std::out_of_range("Series::truncated: order can only shrink");
    Series s(new_order);
    for (int n = 0; n <= new_order; ++n) s.c_[static_cast<size_t>(n)] = c_[static_cast<size_t>(n)];
    return s;
  }

  friend Series operator+(const Series& a, const Series& b) {
    Series s(std::min(a.order(), b.order()));
    for (int n = 0; n <= s.order(); ++n)
      s.c_[static_cast<size_t>(n)] = a.c_[static_cast<size_t>(n)] + b.c_[static_cast<size_t>(n)];
    return s;
  }

  friend Series operator-(const Series& a, const Series& b) {
    Series s(std::min(a.order(), b.order()));
    for (int n = 0; n <= s.order(); ++n)
      s.c_[static_cast<size_t>(n)] = a.c_[static_cast<size_t>(n)] - b.c_[static_cast<size_t>(n)];
    return s;
  }

  Series operator-() const {
    Series s(order());
    for (int n = 0; n <= order(); ++n) s.c_[static_cast<size_t>(n)] = R(0) - c_[static_cast<size_t>(n)];
    return s;
  }

  friend Series operator*(const Series& a, const Series& b) {
    Series s(std::min(a.order(), b.order()));
    for (int n = 0; n <= s.order(); ++n) {
      R acc = R(0);
      for (int k = 0; k <= n; ++k)
        acc += a.c_[static_cast<size_t>(k)] * b.c_[static_cast<size_t>(n - k)];
      s.c_[static_cast<size_t>(n)] = std::move(acc);
    }
    return s;
  }

  Series pow(unsigned e) const {
    Series r = one(order());
    Series base = *this;
    while (e > 0) {
      if (e & 1u) r = r * base;
      base = base * base;
      e >>= 1u;
    }
    return r;
  }

  // Multiplicative inverse; the constant coefficient must be 1.
  Series reciprocal() const {
    if (!(c_[0] == R(1)))
      throw std::domain_error("Series::reciprocal: constant coefficient is not 1");
    Series s(order());
    s.c_[0] = R(1);
    for (int n = 1; n <= order(); ++n) {
      R acc = R(0);
      for (int k = 1; k <= n; ++k)
        acc += c_[static_cast<size_t>(k)] * s.c_[static_cast<size_t>(n - k)];
      s.c_[static_cast<size_t>(n)] = R(0) - acc;
    }
    return s;
  }

  Series derivative_z() const {
    if (order() == 0) return Series(0);
    Series s(order() - 1);
    for (int n = 0; n < order(); ++n)
      s.c_[static_cast<size_t>(n)] = R(n + 1) * c_[static_cast<size_t>(n) + 1];
    return s;
  }

  // Multiply by z^k, keeping the order (top coefficients fall off).
  Series shifted_up(int k) const {
    if (k < 0) throw std::out_of_range("Series::shifted_up: negative shift");
    Series s(order());
    for (int n = k; n <= order(); ++n)
      s.c_[static_cast<size_t>(n)] = c_[static_cast<size_t>(n - k)];
    return s;
  }

  // Equal as truncated objects: same order and identical coefficients.
  friend bool operator==(const Series& a, const Series& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Series& a, const Series& b) { return !(a == b); }

  // Coefficient agreement up to the smaller of the two orders.
  bool agrees_with(const Series& o) const {
    const int m = std::min(order(), o.order());
    for (int n = 0; n <= m; ++n)
      if (!(c_[static_cast<size_t>(n)] == o.c_[static_cast<size_t>(n)])) return false;
    return true;
  }

  bool is_zero() const {
    for (const auto& x : c_)
      if (!(x == R(0))) return false;
    return true;
  }

  template <class F>
  auto map(F fn) const -> Series<decltype(fn(std::declval<const R&>()))> {
    Series<decltype(fn(std::declval<const R&>()))> s(order());
    for (int n = 0; n <= order(); ++n) s.set_coeff(n, fn(c_[static_cast<size_t>(n)]));
    return s;
  }

 private:
  static int check_order(int order) {
    if (order < 0) throw std::out_of_range("Series: negative truncation order");
    return order;
  }

  std::vector<R> c_;
};

using ZSeries = Series<Int>;
using PSeries = Series<Poly>;
using LSeries = Series<Laurent>;

// Divide every coefficient by 2; a non-exact division throws std::domain_error.
inline ZSeries exact_halve(const ZSeries& s) {
  return s.map([](const Int& x) { return exact_div(x, Int(2)); });
}

// Substitute z -> z * marker: the nth coefficient gains a factor marker^n.
inline PSeries substitute_z_marker(const PSeries& s) {
  PSeries r(s.order());
  for (int n = 0; n <= s.order(); ++n) r.set_coeff(n, s.coeff(n) * Poly::marker_power(n));
  return r;
}

inline ZSeries eval_marker_one(const PSeries& s) {
  return s.map([](const Poly& p) { return p.eval_one(); });
}

// Derivative with respect to the marker, evaluated at marker = 1.
inline ZSeries derivative_marker_one(const PSeries& s) {
  return s.map([](const Poly& p) { return p.derivative_eval_one(); });
}

inline LSeries to_laurent(const PSeries& s) {
  return s.map([](const Poly& p) { return Laurent(p); });
}

// Substitute marker -> 1/marker in every coefficient.
inline LSeries invert_marker(const LSeries& s) {
  return s.map([](const Laurent& l) { return l.inverted_marker(); });
}

inline PSeries truncate_marker(const PSeries& s, long max_degree) {
  return s.map([max_degree](const Poly& p) { return p.truncated(max_degree); });
}

}  // namespace vinc
