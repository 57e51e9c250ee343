#pragma once

#include <string>
#include <vector>

namespace vinc {

// Permutation of {1..n} in one-line notation. Positions and values are 1-based
// throughout the public API; n = 0 (the empty permutation) is valid.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> one_line);  // validates; throws std::invalid_argument

  static Permutation identity(int n);

  int size() const { return static_cast<int>(v_.size()); }
  bool empty() const { return v_.empty(); }

  // Value at 1-based position i.
  int at(int i) const { return v_[static_cast<size_t>(i) - 1]; }

  const std::vector<int>& one_line() const { return v_; }

  Permutation reverse_complement() const;
  Permutation inverse() const;

  // 1-based positions i such that v[i] is strictly greater than everything before it.
  std::vector<int> left_to_right_maxima() const;
  // 1-based positions i such that v[i] is strictly smaller than everything after it.
  std::vector<int> right_to_left_minima() const;

  std::string to_string() const;  // values separated by single spaces

  friend bool operator==(const Permutation& a, const Permutation& b) { return a.v_ == b.v_; }
  friend bool operator<(const Permutation& a, const Permutation& b) { return a.v_ < b.v_; }

 private:
  std::vector<int> v_;
};

}  // namespace vinc
