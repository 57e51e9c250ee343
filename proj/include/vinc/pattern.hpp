#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "vinc/permutation.hpp"

namespace vinc {

// Which end of the host permutation an occurrence must include.
enum class Anchor { none, first, last };

std::string to_string(Anchor a);
Anchor parse_anchor(std::string_view text);  // "none" | "first" | "last"

// Vincular pattern: a permutation of 1..m plus adjacency constraints. glue(i)
// (1-based, i < m) means the occurrence's positions i and i+1 must be adjacent
// in the host. Text form: digits with '-' between independent letters and
// nothing between glued ones, e.g. "31-2" glues letters 1,2. Length <= 9,
// since letters are single digits.
class VincularPattern {
 public:
  VincularPattern(std::vector<int> letters, std::vector<bool> glue, Anchor anchor = Anchor::none);

  static VincularPattern parse(std::string_view text, Anchor anchor = Anchor::none);

  VincularPattern with_anchor(Anchor a) const;

  int length() const { return static_cast<int>(letters_.size()); }
  int letter(int i) const { return letters_[static_cast<size_t>(i) - 1]; }  // 1-based
  bool glue(int i) const { return glue_[static_cast<size_t>(i) - 1]; }      // 1-based, i < length
  Anchor anchor() const { return anchor_; }
  bool classical() const;  // no adjacency constraints

  std::string to_string() const;  // dashed text form; anchor not part of the text

  friend bool operator==(const VincularPattern& a, const VincularPattern& b) {
    return a.letters_ == b.letters_ && a.glue_ == b.glue_ && a.anchor_ == b.anchor_;
  }

 private:
  std::vector<int> letters_;
  std::vector<bool> glue_;
  Anchor anchor_;
};

// Number of occurrences of the pattern in the host, honoring glue and anchor.
// Zero when the pattern is longer than the host.
std::uint64_t occurrences(const VincularPattern& pat, const Permutation& host);

bool contains(const Permutation& host, const VincularPattern& pat);
bool avoids(const Permutation& host, const VincularPattern& pat);

// Positions of a 321-avoiding permutation split by v[i] >= i (the left-to-right
// maxima) vs v[i] < i. Throws std::invalid_argument when the input contains 3-2-1.
struct HighLowSplit {
  std::vector<int> high;  // 1-based positions, increasing
  std::vector<int> low;
};
HighLowSplit classify_high_low(const Permutation& p);

// Occurrences of 2-13 whose largest letter sits at a low position (v[j+1] < j+1).
// Pre: p avoids 3-2-1 (checked).
std::uint64_t occurrences_2_13_low(const Permutation& p);

}  // namespace vinc
