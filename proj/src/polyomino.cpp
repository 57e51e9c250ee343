#include "vinc/polyomino.hpp"

#include <stdexcept>

namespace vinc {

namespace {

std::vector<bool> parse_ne_word(std::string_view word) {
  std::vector<bool> steps;
  steps.reserve(word.size());
  for (char ch : word) {
    if (ch == 'N' || ch == 'n')
      steps.push_back(true);
    else if (ch == 'E' || ch == 'e')
      steps.push_back(false);
    else
      throw std::invalid_argument("path word must consist of N and E, got '" + std::string(word) + "'");
  }
  return steps;
}

std::string ne_word_of(const std::vector<bool>& steps) {
  std::string s;
  s.reserve(steps.size());
  for (bool b : steps) s += b ? 'N' : 'E';
  return s;
}

}  // namespace

StaircasePolyomino::StaircasePolyomino(std::vector<bool> upper, std::vector<bool> lower)
    : upper_(std::move(upper)), lower_(std::move(lower)) {
  if (upper_.size() != lower_.size())
    throw std::invalid_argument("bounding paths differ in length");
  const int n = static_cast<int>(upper_.size());
  int uy = 0, ly = 0;
  // Each step raises x+y by 1, so step index = antidiagonal level; the paths
  // share a lattice point iff their y coordinates agree at some level.
  for (int l = 0; l < n; ++l) {
    uy += upper_[static_cast<size_t>(l)] ? 1 : 0;
    ly += lower_[static_cast<size_t>(l)] ? 1 : 0;
    const bool interior = l + 1 < n;
    if (interior && uy <= ly)
      throw std::invalid_argument("upper path fails to stay strictly above lower path");
  }
  if (uy != ly)
    throw std::invalid_argument("bounding paths end at different corners");
  b_ = uy;
  a_ = n - b_;
  if (a_ < 1 || b_ < 1) throw std::invalid_argument("degenerate polyomino");
}

StaircasePolyomino StaircasePolyomino::parse(std::string_view upper_word,
                                             std::string_view lower_word) {
  return StaircasePolyomino(parse_ne_word(upper_word), parse_ne_word(lower_word));
}

long StaircasePolyomino::area() const {
  long total = 0;
  int uy = 0, ly = 0;
  for (size_t i = 0; i < upper_.size(); ++i) {
    if (upper_[i])
      ++uy;
    else
      total += uy;
    if (lower_[i])
      ++ly;
    else
      total -= ly;
  }
  return total;
}

std::string StaircasePolyomino::to_string() const {
  return ne_word_of(upper_) + "/" + ne_word_of(lower_);
}

namespace {

struct PolyState {
  int a, b;
  std::vector<bool> upper, lower;
  int un = 0, ue = 0, ln = 0, le = 0;  // N/E counts used so far per path
  const std::function<void(const StaircasePolyomino&)>* fn;
};

void poly_rec(PolyState& st) {
  const int n = st.a + st.b;
  const int level = static_cast<int>(st.upper.size());
  if (level == n) {
    (*st.fn)(StaircasePolyomino(st.upper, st.lower));
    return;
  }
  const bool interior = level + 1 < n;
  for (int us = 1; us >= 0; --us) {
    if (us ? st.un >= st.b : st.ue >= st.a) continue;
    for (int ls = 1; ls >= 0; --ls) {
      if (ls ? st.ln >= st.b : st.le >= st.a) continue;
      const int uy = st.un + us;
      const int ly = st.ln + ls;
      if (interior ? uy <= ly : uy != ly) continue;
      st.upper.push_back(us != 0);
      st.lower.push_back(ls != 0);
      st.un += us;
      st.ue += 1 - us;
      st.ln += ls;
      st.le += 1 - ls;
      poly_rec(st);
      st.un -= us;
      st.ue -= 1 - us;
      st.ln -= ls;
      st.le -= 1 - ls;
      st.upper.pop_back();
      st.lower.pop_back();
    }
  }
}

}  // namespace

void for_each_polyomino(int a, int b,
                        const std::function<void(const StaircasePolyomino&)>& fn) {
  if (a < 1 || b < 1) return;
  PolyState st;
  st.a = a;
  st.b = b;
  st.fn = &fn;
  st.upper.reserve(static_cast<size_t>(a + b));
  st.lower.reserve(static_cast<size_t>(a + b));
  poly_rec(st);
}

void for_each_polyomino_semiperimeter(
    int s, const std::function<void(const StaircasePolyomino&)>& fn) {
  for (int a = 1; a < s; ++a) for_each_polyomino(a, s - a, fn);
}

DyckPath xi(const StaircasePolyomino& g) {
  const int n = g.semiperimeter();
  std::vector<bool> steps;
  steps.reserve(static_cast<size_t>(2 * (n - 1)));
  steps.push_back(true);
  for (int i = 1; i + 1 < n; ++i) {
    steps.push_back(g.upper()[static_cast<size_t>(i)]);
    steps.push_back(!g.lower()[static_cast<size_t>(i)]);
  }
  steps.push_back(false);
  return DyckPath(std::move(steps));
}

}  // namespace vinc
