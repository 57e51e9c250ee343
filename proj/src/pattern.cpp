#include "vinc/pattern.hpp"

#include <algorithm>
#include <stdexcept>

namespace vinc {

std::string to_string(Anchor a) {
  switch (a) {
    case Anchor::none: return "none";
    case Anchor::first: return "first";
    case Anchor::last: return "last";
  }
  return "none";
}

Anchor parse_anchor(std::string_view text) {
  if (text == "none") return Anchor::none;
  if (text == "first") return Anchor::first;
  if (text == "last") return Anchor::last;
  throw std::invalid_argument("anchor must be one of none|first|last, got '" + std::string(text) + "'");
}

VincularPattern::VincularPattern(std::vector<int> letters, std::vector<bool> glue, Anchor anchor)
    : letters_(std::move(letters)), glue_(std::move(glue)), anchor_(anchor) {
  const int m = static_cast<int>(letters_.size());
  if (m == 0) throw std::invalid_argument("pattern must be nonempty");
  if (m > 9) throw std::invalid_argument("pattern length exceeds 9");
  if (static_cast<int>(glue_.size()) != m - 1)
    throw std::invalid_argument("pattern glue vector must have length m-1");
  std::vector<char> seen(static_cast<size_t>(m) + 1, 0);
  for (int x : letters_) {
    if (x < 1 || x > m || seen[static_cast<size_t>(x)])
      throw std::invalid_argument("pattern letters must form a permutation of 1..m");
    seen[static_cast<size_t>(x)] = 1;
  }
}

VincularPattern VincularPattern::parse(std::string_view text, Anchor anchor) {
  const auto fail = [&] {
    throw std::invalid_argument("malformed pattern '" + std::string(text) + "'");
  };
  std::vector<int> letters;
  std::vector<bool> glue;
  bool dash_pending = false;
  for (char ch : text) {
    if (ch >= '1' && ch <= '9') {
      if (!letters.empty()) glue.push_back(!dash_pending);
      letters.push_back(ch - '0');
      dash_pending = false;
    } else if (ch == '-') {
      if (letters.empty() || dash_pending) fail();
      dash_pending = true;
    } else {
      fail();
    }
  }
  if (letters.empty() || dash_pending) fail();
  return VincularPattern(std::move(letters), std::move(glue), anchor);
}

VincularPattern VincularPattern::with_anchor(Anchor a) const {
  return VincularPattern(letters_, glue_, a);
}

bool VincularPattern::classical() const {
  return std::none_of(glue_.begin(), glue_.end(), [](bool g) { return g; });
}

std::string VincularPattern::to_string() const {
  std::string s;
  for (int i = 1; i <= length(); ++i) {
    if (i > 1 && !glue(i - 1)) s += '-';
    s += static_cast<char>('0' + letter(i));
  }
  return s;
}

namespace {

// Backtracking over pattern slots; only consistent partial assignments recurse.
struct OccurrenceSearch {
  const VincularPattern& pat;
  const Permutation& host;
  int m, n;
  std::vector<int> pos;  // chosen 1-based host positions per slot
  std::uint64_t count = 0;
  bool stop_at_first = false;
  bool done = false;

  OccurrenceSearch(const VincularPattern& p, const Permutation& h)
      : pat(p), host(h), m(p.length()), n(h.size()) {
    pos.assign(static_cast<size_t>(m), 0);
  }

  bool consistent(int k) const {
    // Letter order between slot k and each earlier slot must match the pattern.
    const int vk = host.at(pos[static_cast<size_t>(k) - 1]);
    for (int a = 1; a < k; ++a) {
      const int va = host.at(pos[static_cast<size_t>(a) - 1]);
      if ((va < vk) != (pat.letter(a) < pat.letter(k))) return false;
    }
    return true;
  }

  void search(int k) {
    if (done) return;
    if (k > m) {
      ++count;
      if (stop_at_first) done = true;
      return;
    }
    int lo, hi;
    if (k == 1) {
      lo = 1;
      hi = n - m + 1;
      if (pat.anchor() == Anchor::first) hi = std::min(hi, 1);
    } else if (pat.glue(k - 1)) {
      lo = hi = pos[static_cast<size_t>(k) - 2] + 1;
    } else {
      lo = pos[static_cast<size_t>(k) - 2] + 1;
      hi = n - (m - k);
    }
    if (k == m && pat.anchor() == Anchor::last) lo = std::max(lo, n);
    for (int i = lo; i <= hi && !done; ++i) {
      pos[static_cast<size_t>(k) - 1] = i;
      if (consistent(k)) search(k + 1);
    }
  }
};

}  // namespace

std::uint64_t occurrences(const VincularPattern& pat, const Permutation& host) {
  if (pat.length() > host.size()) return 0;
  OccurrenceSearch s(pat, host);
  s.search(1);
  return s.count;
}

bool contains(const Permutation& host, const VincularPattern& pat) {
  if (pat.length() > host.size()) return false;
  OccurrenceSearch s(pat, host);
  s.stop_at_first = true;
  s.search(1);
  return s.count > 0;
}

bool avoids(const Permutation& host, const VincularPattern& pat) { return !contains(host, pat); }

HighLowSplit classify_high_low(const Permutation& p) {
  static const VincularPattern k321 = VincularPattern::parse("3-2-1");
  if (contains(p, k321))
    throw std::invalid_argument("classify_high_low: input contains 3-2-1: " + p.to_string());
  HighLowSplit out;
  for (int i = 1; i <= p.size(); ++i) (p.at(i) >= i ? out.high : out.low).push_back(i);
  return out;
}

std::uint64_t occurrences_2_13_low(const Permutation& p) {
  static const VincularPattern k321 = VincularPattern::parse("3-2-1");
  if (contains(p, k321))
    throw std::invalid_argument("occurrences_2_13_low: input contains 3-2-1: " + p.to_string());
  const int n = p.size();
  std::uint64_t c = 0;
  for (int j = 1; j + 1 <= n; ++j) {
    if (p.at(j + 1) >= j + 1) continue;  // largest letter must sit at a low position
    for (int i = 1; i < j; ++i)
      if (p.at(j) < p.at(i) && p.at(i) < p.at(j + 1)) ++c;
  }
  return c;
}

}  // namespace vinc
