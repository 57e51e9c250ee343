#pragma once

#include <functional>
#include <vector>

#include "vinc/bigint.hpp"
#include "vinc/pattern.hpp"
#include "vinc/permutation.hpp"

namespace vinc {

// Streams every permutation of {1..n} avoiding the given classical length-3
// pattern, in lexicographic one-line order. The 2-3-1 class is generated by
// its first-entry block decomposition; the other five classes by backtracking
// that rejects a candidate value as soon as it would complete an occurrence.
void for_each_avoider(int n, const VincularPattern& avoided,
                      const std::function<void(const Permutation&)>& fn);

std::vector<Permutation> enumerate_avoiders(int n, const VincularPattern& avoided);

Int count_avoiders(int n, const VincularPattern& avoided);

// Sum of occurrences(pattern, p) over the avoidance class on n letters.
Int total_occurrences(int n, const VincularPattern& avoided, const VincularPattern& pattern);

}  // namespace vinc
