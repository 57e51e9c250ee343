#include "vinc/dyck.hpp"

#include <algorithm>
#include <stdexcept>

#include "vinc/pattern.hpp"

namespace vinc {

namespace {

std::vector<bool> parse_word(std::string_view word) {
  std::vector<bool> steps;
  steps.reserve(word.size());
  for (char ch : word) {
    if (ch == 'U' || ch == 'u')
      steps.push_back(true);
    else if (ch == 'D' || ch == 'd')
      steps.push_back(false);
    else
      throw std::invalid_argument("path word must consist of U and D, got '" + std::string(word) + "'");
  }
  return steps;
}

std::string word_of(const std::vector<bool>& steps) {
  std::string s;
  s.reserve(steps.size());
  for (bool b : steps) s += b ? 'U' : 'D';
  return s;
}

std::vector<int> heights_of(const std::vector<bool>& steps) {
  std::vector<int> h(steps.size() + 1, 0);
  for (size_t i = 0; i < steps.size(); ++i) h[i + 1] = h[i] + (steps[i] ? 1 : -1);
  return h;
}

}  // namespace

DyckPath::DyckPath(std::vector<bool> steps) : steps_(std::move(steps)) {
  int h = 0;
  for (bool b : steps_) {
    h += b ? 1 : -1;
    if (h < 0) throw std::invalid_argument("Dyck path dips below the axis: " + word_of(steps_));
  }
  if (h != 0) throw std::invalid_argument("Dyck path is unbalanced: " + word_of(steps_));
}

DyckPath DyckPath::parse(std::string_view word) { return DyckPath(parse_word(word)); }

std::vector<int> DyckPath::point_heights() const { return heights_of(steps_); }

std::string DyckPath::to_string() const { return word_of(steps_); }

GrandDyckPath::GrandDyckPath(std::vector<bool> steps) : steps_(std::move(steps)) {
  int h = 0;
  for (bool b : steps_) h += b ? 1 : -1;
  if (h != 0) throw std::invalid_argument("Grand Dyck path is unbalanced: " + word_of(steps_));
}

GrandDyckPath GrandDyckPath::parse(std::string_view word) { return GrandDyckPath(parse_word(word)); }

std::vector<int> GrandDyckPath::point_heights() const { return heights_of(steps_); }

std::string GrandDyckPath::to_string() const { return word_of(steps_); }

std::vector<FactorSite> peaks(const DyckPath& p) {
  std::vector<FactorSite> out;
  const auto h = p.point_heights();
  for (int i = 1; i < p.step_count(); ++i)
    if (p.up(i) && !p.up(i + 1)) out.push_back({i, h[static_cast<size_t>(i)]});
  return out;
}

std::vector<int> peak_heights(const DyckPath& p) {
  std::vector<int> out;
  for (const auto& pk : peaks(p)) out.push_back(pk.height);
  return out;
}

std::vector<FactorSite> triple_occurrences(const DyckPath& p, std::string_view factor) {
  if (factor.size() != 3) throw std::invalid_argument("triple_occurrences: factor must have 3 steps");
  bool f[3];
  for (int k = 0; k < 3; ++k) {
    const char ch = factor[static_cast<size_t>(k)];
    if (ch != 'U' && ch != 'D') throw std::invalid_argument("triple_occurrences: factor must be U/D");
    f[k] = (ch == 'U');
  }
  std::vector<FactorSite> out;
  const auto h = p.point_heights();
  for (int i = 1; i + 2 <= p.step_count(); ++i)
    if (p.up(i) == f[0] && p.up(i + 1) == f[1] && p.up(i + 2) == f[2])
      out.push_back({i, h[static_cast<size_t>(i)]});
  return out;
}

std::vector<int> matching_steps(const DyckPath& p) {
  std::vector<int> match(static_cast<size_t>(p.step_count()) + 1, 0);
  std::vector<int> stack;
  for (int i = 1; i <= p.step_count(); ++i) {
    if (p.up(i)) {
      stack.push_back(i);
    } else {
      const int j = stack.back();
      stack.pop_back();
      match[static_cast<size_t>(j)] = i;
      match[static_cast<size_t>(i)] = j;
    }
  }
  return match;
}

long mass(const DyckPath& p) {
  const auto match = matching_steps(p);
  long total = 0;
  for (int i = 1; i < p.step_count(); ++i) {
    if (!(p.up(i) && p.up(i + 1))) continue;
    const int between = match[static_cast<size_t>(i)] - match[static_cast<size_t>(i + 1)] - 1;
    if (between % 2 != 0) throw std::logic_error("mass: odd step count between matched D steps");
    total += between / 2;
  }
  return total;
}

long t_stat(const DyckPath& p) {
  long total = 0;
  const auto h = p.point_heights();
  for (int i = 1; i <= p.step_count(); ++i)
    if (p.up(i)) total += h[static_cast<size_t>(i) - 1] / 2;
  return total;
}

long ceil_weight(const DyckPath& p) {
  long total = 0;
  const auto h = p.point_heights();
  for (int i = 1; i <= p.step_count(); ++i)
    if (p.up(i)) total += (h[static_cast<size_t>(i) - 1] + 1) / 2;
  return total;
}

long peak_weight(const DyckPath& p) {
  long total = 0;
  for (const auto& pk : peaks(p)) total += pk.height - 1;
  return total;
}

DudBlockStats dud_block_stats(const DyckPath& p) {
  DudBlockStats s;
  const auto h = p.point_heights();
  for (int j = 1; j + 2 <= p.step_count(); ++j) {
    if (p.up(j) || !p.up(j + 1) || p.up(j + 2)) continue;  // factor DUD at j
    int run = 0;
    for (int i = j - 1; i >= 1 && !p.up(i); --i) ++run;
    s.total += run;
    if (h[static_cast<size_t>(j + 2)] != 0) s.excluding_axis += run;
  }
  return s;
}

namespace {

// Split into factors that return to the axis; each factor is elevated.
std::vector<std::vector<bool>> axis_factors(const std::vector<bool>& steps) {
  std::vector<std::vector<bool>> out;
  int h = 0;
  size_t start = 0;
  for (size_t i = 0; i < steps.size(); ++i) {
    h += steps[i] ? 1 : -1;
    if (h == 0) {
      out.emplace_back(steps.begin() + static_cast<long>(start), steps.begin() + static_cast<long>(i) + 1);
      start = i + 1;
    }
  }
  return out;
}

std::vector<bool> theta_word(const std::vector<bool>& steps);

// theta of one elevated factor U Q D.
std::vector<bool> theta_elevated(const std::vector<bool>& steps) {
  if (steps.size() == 2) return steps;  // UD is fixed
  const std::vector<bool> inner(steps.begin() + 1, steps.end() - 1);
  const auto comps = axis_factors(inner);  // each U C_i D
  std::vector<bool> out;
  out.reserve(steps.size());
  const size_t s = comps.size();
  out.insert(out.end(), s + 1, true);
  out.push_back(false);
  for (const auto& comp : comps) {
    const std::vector<bool> core(comp.begin() + 1, comp.end() - 1);
    const auto tc = theta_word(core);
    out.insert(out.end(), tc.begin(), tc.end());
    out.push_back(false);
  }
  return out;
}

std::vector<bool> theta_word(const std::vector<bool>& steps) {
  std::vector<bool> out;
  out.reserve(steps.size());
  for (const auto& comp : axis_factors(steps)) {
    const auto tc = theta_elevated(comp);
    out.insert(out.end(), tc.begin(), tc.end());
  }
  return out;
}

}  // namespace

DyckPath theta(const DyckPath& p) {
  std::vector<bool> steps;
  steps.reserve(static_cast<size_t>(p.step_count()));
  for (int i = 1; i <= p.step_count(); ++i) steps.push_back(p.up(i));
  return DyckPath(theta_word(steps));
}

DyckPath phi_321(const Permutation& p) {
  static const VincularPattern k321 = VincularPattern::parse("3-2-1");
  if (contains(p, k321))
    throw std::invalid_argument("phi_321: input contains 3-2-1: " + p.to_string());
  const int n = p.size();
  std::vector<int> pos, val;
  for (int i = 1; i <= n; ++i)
    if (p.at(i) >= i) {
      pos.push_back(i);
      val.push_back(p.at(i));
    }
  std::vector<bool> steps;
  steps.reserve(static_cast<size_t>(2 * n));
  for (size_t j = 0; j < pos.size(); ++j) {
    const int rise = val[j] - (j > 0 ? val[j - 1] : 0);
    const int next = (j + 1 < pos.size()) ? pos[j + 1] : n + 1;
    steps.insert(steps.end(), static_cast<size_t>(rise), true);
    steps.insert(steps.end(), static_cast<size_t>(next - pos[j]), false);
  }
  return DyckPath(std::move(steps));
}

Permutation phi_321_inverse(const DyckPath& p) {
  const int n = p.semilength();
  std::vector<int> v(static_cast<size_t>(n), 0);
  std::vector<char> used(static_cast<size_t>(n) + 1, 0);
  // Each maximal U run followed by its D run pins one cross (position, value).
  int i = 1, value = 0, position = 1;
  while (i <= 2 * n) {
    int rise = 0, fall = 0;
    while (i <= 2 * n && p.up(i)) {
      ++rise;
      ++i;
    }
    while (i <= 2 * n && !p.up(i)) {
      ++fall;
      ++i;
    }
    value += rise;
    v[static_cast<size_t>(position) - 1] = value;
    used[static_cast<size_t>(value)] = 1;
    position += fall;
  }
  int next = 1;
  for (int k = 0; k < n; ++k) {
    if (v[static_cast<size_t>(k)] != 0) continue;
    while (used[static_cast<size_t>(next)]) ++next;
    v[static_cast<size_t>(k)] = next;
    used[static_cast<size_t>(next)] = 1;
  }
  return Permutation(std::move(v));
}

namespace {

void phi_231_rec(const std::vector<int>& vals, std::vector<bool>& out) {
  if (vals.empty()) return;
  const int k = vals[0];
  std::vector<int> s1, s2;
  for (size_t i = 1; i < vals.size(); ++i) (vals[i] < k ? s1 : s2).push_back(vals[i]);
  out.push_back(true);
  phi_231_rec(s1, out);
  out.push_back(false);
  phi_231_rec(s2, out);
}

// Rebuild the one-line word from a Dyck word segment [lo, hi).
std::vector<int> phi_231_inv_rec(const std::vector<bool>& steps, size_t lo, size_t hi) {
  if (lo >= hi) return {};
  int h = 0;
  size_t ret = lo;
  for (size_t i = lo; i < hi; ++i) {
    h += steps[i] ? 1 : -1;
    if (h == 0) {
      ret = i;
      break;
    }
  }
  auto s1 = phi_231_inv_rec(steps, lo + 1, ret);
  auto s2 = phi_231_inv_rec(steps, ret + 1, hi);
  const int k = static_cast<int>(s1.size()) + 1;
  std::vector<int> out;
  out.reserve(1 + s1.size() + s2.size());
  out.push_back(k);
  out.insert(out.end(), s1.begin(), s1.end());
  for (int x : s2) out.push_back(x + k);
  return out;
}

}  // namespace

DyckPath phi_231(const Permutation& p) {
  static const VincularPattern k231 = VincularPattern::parse("2-3-1");
  if (contains(p, k231))
    throw std::invalid_argument("phi_231: input contains 2-3-1: " + p.to_string());
  std::vector<bool> out;
  out.reserve(static_cast<size_t>(2 * p.size()));
  phi_231_rec(p.one_line(), out);
  return DyckPath(std::move(out));
}

Permutation phi_231_inverse(const DyckPath& p) {
  std::vector<bool> steps;
  for (int i = 1; i <= p.step_count(); ++i) steps.push_back(p.up(i));
  return Permutation(phi_231_inv_rec(steps, 0, steps.size()));
}

namespace {

void dyck_rec(std::vector<bool>& word, int ups, int downs, int n,
              const std::function<void(const DyckPath&)>& fn) {
  if (static_cast<int>(word.size()) == 2 * n) {
    fn(DyckPath(word));
    return;
  }
  if (ups < n) {
    word.push_back(true);
    dyck_rec(word, ups + 1, downs, n, fn);
    word.pop_back();
  }
  if (downs < ups) {
    word.push_back(false);
    dyck_rec(word, ups, downs + 1, n, fn);
    word.pop_back();
  }
}

void grand_rec(std::vector<bool>& word, int ups, int downs, int n,
               const std::function<void(const GrandDyckPath&)>& fn) {
  if (static_cast<int>(word.size()) == 2 * n) {
    fn(GrandDyckPath(word));
    return;
  }
  if (ups < n) {
    word.push_back(true);
    grand_rec(word, ups + 1, downs, n, fn);
    word.pop_back();
  }
  if (downs < n) {
    word.push_back(false);
    grand_rec(word, ups, downs + 1, n, fn);
    word.pop_back();
  }
}

}  // namespace

void for_each_dyck_path(int n, const std::function<void(const DyckPath&)>& fn) {
  if (n < 0) throw std::invalid_argument("for_each_dyck_path: n must be >= 0");
  std::vector<bool> word;
  word.reserve(static_cast<size_t>(2 * n));
  dyck_rec(word, 0, 0, n, fn);
}

std::vector<DyckPath> all_dyck_paths(int n) {
  std::vector<DyckPath> out;
  for_each_dyck_path(n, [&](const DyckPath& p) { out.push_back(p); });
  return out;
}

void for_each_grand_dyck_path(int n, const std::function<void(const GrandDyckPath&)>& fn) {
  if (n < 0) throw std::invalid_argument("for_each_grand_dyck_path: n must be >= 0");
  std::vector<bool> word;
  word.reserve(static_cast<size_t>(2 * n));
  grand_rec(word, 0, 0, n, fn);
}

long points_at_height(const GrandDyckPath& p, int h) {
  long c = 0;
  for (int y : p.point_heights())
    if (y == h) ++c;
  return c;
}

}  // namespace vinc
