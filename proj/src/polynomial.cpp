#include "vinc/polynomial.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace vinc {

namespace {
const Int kZero = 0;

std::string term_text(const Int& c, long k, char var) {
  std::string s;
  if (c == 1 && k != 0)
    ;
  else if (c == -1 && k != 0)
    s += '-';
  else
    s += to_string(c);
  if (k != 0) {
    if (!s.empty() && s != "-") s += '*';
    s += var;
    if (k != 1) s += '^' + std::to_string(k);
  }
  return s;
}

std::string poly_text(const std::vector<Int>& c, long lo, char var) {
  std::string s;
  for (size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    const long k = lo + static_cast<long>(i);
    if (s.empty()) {
      s = term_text(c[i], k, var);
    } else if (c[i] < 0) {
      s += " - " + term_text(-c[i], k, var);
    } else {
      s += " + " + term_text(c[i], k, var);
    }
  }
  return s.empty() ? "0" : s;
}

}  // namespace

Poly::Poly(long constant) {
  if (constant != 0) c_.push_back(Int(constant));
}

Poly::Poly(const Int& constant) {
  if (constant != 0) c_.push_back(constant);
}

Poly Poly::marker() { return marker_power(1); }

Poly Poly::marker_power(long k) {
  Poly p;
  p.c_.assign(static_cast<size_t>(k) + 1, kZero);
  p.c_.back() = 1;
  return p;
}

const Int& Poly::coeff(long k) const {
  if (k < 0 || k >= static_cast<long>(c_.size())) return kZero;
  return c_[static_cast<size_t>(k)];
}

void Poly::set_coeff(long k, Int v) {
  if (k < 0) throw std::out_of_range("Poly::set_coeff: negative exponent");
  if (k >= static_cast<long>(c_.size())) {
    if (v == 0) return;
    c_.resize(static_cast<size_t>(k) + 1, kZero);
  }
  c_[static_cast<size_t>(k)] = std::move(v);
  trim();
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), kZero);
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), kZero);
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly r;
  if (a.is_zero() || b.is_zero()) return r;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, kZero);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
  }
  r.trim();
  return r;
}

Int Poly::eval_one() const {
  Int s = 0;
  for (const auto& x : c_) s += x;
  return s;
}

Int Poly::derivative_eval_one() const {
  Int s = 0;
  for (size_t k = 1; k < c_.size(); ++k) s += Int(static_cast<long>(k)) * c_[k];
  return s;
}

Poly Poly::truncated(long max_degree) const {
  Poly r = *this;
  if (max_degree < 0) return Poly();
  if (static_cast<long>(r.c_.size()) > max_degree + 1) {
    r.c_.resize(static_cast<size_t>(max_degree) + 1);
    r.trim();
  }
  return r;
}

std::string Poly::to_string(char var) const { return poly_text(c_, 0, var); }

Poly exact_poly_div(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw std::domain_error("exact_poly_div: division by zero polynomial");
  Poly rem = num;
  Poly quot;
  const long dd = den.degree();
  const Int& lead = den.coeff(dd);
  while (!rem.is_zero() && rem.degree() >= dd) {
    const long k = rem.degree() - dd;
    Int q = exact_div(rem.coeff(rem.degree()), lead);
    Poly t = Poly::marker_power(k);
    t.set_coeff(k, q);
    quot += t;
    rem -= t * den;
  }
  if (!rem.is_zero()) throw std::domain_error("exact_poly_div: nonzero remainder");
  return quot;
}

Laurent::Laurent(long constant) {
  if (constant != 0) c_.push_back(Int(constant));
}

Laurent::Laurent(const Poly& p) {
  for (long k = 0; k <= p.degree(); ++k) c_.push_back(p.coeff(k));
  trim();
}

Laurent::Laurent(long lo, std::vector<Int> coeffs) : lo_(lo), c_(std::move(coeffs)) { trim(); }

void Laurent::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
  size_t drop = 0;
  while (drop < c_.size() && c_[drop] == 0) ++drop;
  if (drop > 0) {
    c_.erase(c_.begin(), c_.begin() + static_cast<long>(drop));
    lo_ += static_cast<long>(drop);
  }
  if (c_.empty()) lo_ = 0;
}

Int Laurent::coeff(long k) const {
  const long i = k - lo_;
  if (i < 0 || i >= static_cast<long>(c_.size())) return kZero;
  return c_[static_cast<size_t>(i)];
}

Laurent Laurent::inverted_marker() const {
  if (is_zero()) return Laurent();
  Laurent r;
  r.c_.assign(c_.rbegin(), c_.rend());
  r.lo_ = -max_exp();
  return r;
}

Laurent& Laurent::operator+=(const Laurent& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  const long lo = std::min(lo_, o.lo_);
  const long hi = std::max(max_exp(), o.max_exp());
  std::vector<Int> c(static_cast<size_t>(hi - lo + 1), kZero);
  for (size_t i = 0; i < c_.size(); ++i) c[static_cast<size_t>(lo_ - lo) + i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) c[static_cast<size_t>(o.lo_ - lo) + i] += o.c_[i];
  lo_ = lo;
  c_ = std::move(c);
  trim();
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) { return *this += -o; }

Laurent Laurent::operator-() const {
  Laurent r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
  Laurent r;
  if (a.is_zero() || b.is_zero()) return r;
  r.lo_ = a.lo_ + b.lo_;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, kZero);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
  }
  r.trim();
  return r;
}

Int Laurent::eval_one() const {
  Int s = 0;
  for (const auto& x : c_) s += x;
  return s;
}

std::string Laurent::to_string(char var) const { return poly_text(c_, lo_, var); }

}  // namespace vinc
