#include "vinc/statistics.hpp"

#include <algorithm>
#include <stdexcept>

#include "vinc/avoiders.hpp"

namespace vinc {

long inv(const Permutation& p) {
  long c = 0;
  for (int i = 1; i <= p.size(); ++i)
    for (int j = i + 1; j <= p.size(); ++j)
      if (p.at(i) > p.at(j)) ++c;
  return c;
}

long des(const Permutation& p) {
  long c = 0;
  for (int i = 1; i < p.size(); ++i)
    if (p.at(i) > p.at(i + 1)) ++c;
  return c;
}

long maj(const Permutation& p) {
  long c = 0;
  for (int i = 1; i < p.size(); ++i)
    if (p.at(i) > p.at(i + 1)) c += i;
  return c;
}

namespace {
long inv_of(const std::vector<int>& w) {
  long c = 0;
  for (size_t i = 0; i < w.size(); ++i)
    for (size_t j = i + 1; j < w.size(); ++j)
      if (w[i] > w[j]) ++c;
  return c;
}
}  // namespace

long den(const Permutation& p) {
  std::vector<int> exc, rest;
  long possum = 0;
  for (int i = 1; i <= p.size(); ++i) {
    if (p.at(i) > i) {
      exc.push_back(p.at(i));
      possum += i;
    } else {
      rest.push_back(p.at(i));
    }
  }
  return inv_of(exc) + inv_of(rest) + possum;
}

StatKind parse_stat(const std::string& name) {
  if (name == "inv") return StatKind::inv;
  if (name == "des") return StatKind::des;
  if (name == "maj") return StatKind::maj;
  if (name == "den") return StatKind::den;
  throw std::invalid_argument("unknown statistic '" + name + "' (expected inv|des|maj|den)");
}

std::string to_string(StatKind s) {
  switch (s) {
    case StatKind::inv: return "inv";
    case StatKind::des: return "des";
    case StatKind::maj: return "maj";
    case StatKind::den: return "den";
  }
  return "inv";
}

long statistic(StatKind s, const Permutation& p) {
  switch (s) {
    case StatKind::inv: return inv(p);
    case StatKind::des: return des(p);
    case StatKind::maj: return maj(p);
    case StatKind::den: return den(p);
  }
  return 0;
}

Permutation minima_fill(const Permutation& p) {
  static const VincularPattern k321 = VincularPattern::parse("3-2-1");
  if (contains(p, k321))
    throw std::invalid_argument("minima_fill: input contains 3-2-1: " + p.to_string());
  const int n = p.size();
  std::vector<int> out(static_cast<size_t>(n), 0);
  std::vector<char> placed(static_cast<size_t>(n) + 1, 0);
  for (int pos : p.right_to_left_minima()) {
    out[static_cast<size_t>(pos) - 1] = p.at(pos);
    placed[static_cast<size_t>(p.at(pos))] = 1;
  }
  for (int v = 1; v <= n; ++v) {
    if (placed[static_cast<size_t>(v)]) continue;
    // Later slots receive only larger values, so v stays a right-to-left
    // minimum unless some already-placed entry to its right is smaller.
    int slot = 0;
    for (int pos = n; pos >= 1 && slot == 0; --pos) {
      if (out[static_cast<size_t>(pos) - 1] != 0) continue;
      for (int q = pos + 1; q <= n; ++q) {
        const int w = out[static_cast<size_t>(q) - 1];
        if (w != 0 && w < v) {
          slot = pos;
          break;
        }
      }
    }
    if (slot == 0)
      throw std::logic_error("minima_fill: no admissible slot for value " + std::to_string(v));
    out[static_cast<size_t>(slot) - 1] = v;
  }
  return Permutation(std::move(out));
}

Int StatDistribution::total_weight() const {
  Int t = 0;
  for (const auto& [value, count] : counts) t += Int(value) * count;
  return t;
}

StatDistribution distribution(int n, const VincularPattern& avoided, StatKind stat) {
  StatDistribution d;
  d.n = n;
  d.stat = stat;
  for_each_avoider(n, avoided, [&](const Permutation& p) { d.counts[statistic(stat, p)] += 1; });
  return d;
}

std::map<long, Int> pattern_distribution(int n, const VincularPattern& avoided,
                                         const VincularPattern& pattern) {
  std::map<long, Int> out;
  for_each_avoider(n, avoided,
                   [&](const Permutation& p) { out[static_cast<long>(occurrences(pattern, p))] += 1; });
  return out;
}

}  // namespace vinc
