#pragma once

#include <map>
#include <string>

#include "vinc/bigint.hpp"
#include "vinc/pattern.hpp"
#include "vinc/permutation.hpp"

namespace vinc {

long inv(const Permutation& p);  // pairs i < j with v[i] > v[j]
long des(const Permutation& p);  // positions i with v[i] > v[i+1]
long maj(const Permutation& p);  // sum of descent positions

// Denert statistic: inversions within the excedance subword (v[i] > i, in
// position order) plus inversions within the rest plus the sum of excedance
// positions.
long den(const Permutation& p);

enum class StatKind { inv, des, maj, den };
StatKind parse_stat(const std::string& name);
std::string to_string(StatKind s);
long statistic(StatKind s, const Permutation& p);

// Bijection from 3-2-1 avoiders onto 2-3-1 avoiders that fixes the right-to-left
// minima and fills the remaining slots with the remaining values in increasing
// order, each placed at the rightmost free slot where it exceeds some later
// entry already placed. Pre: p avoids 3-2-1 (checked).
Permutation minima_fill(const Permutation& p);

struct StatDistribution {
  int n = 0;
  StatKind stat = StatKind::inv;
  std::map<long, Int> counts;  // statistic value -> number of class members

  Int total_weight() const;  // sum over the class of the statistic
  bool operator==(const StatDistribution& o) const { return counts == o.counts; }
};

StatDistribution distribution(int n, const VincularPattern& avoided, StatKind stat);

// Histogram of occurrences(pattern, .) over the avoidance class.
std::map<long, Int> pattern_distribution(int n, const VincularPattern& avoided,
                                         const VincularPattern& pattern);

}  // namespace vinc
