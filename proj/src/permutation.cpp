#include "vinc/permutation.hpp"

#include <algorithm>
#include <stdexcept>

namespace vinc {

Permutation::Permutation(std::vector<int> one_line) : v_(std::move(one_line)) {
  const int n = static_cast<int>(v_.size());
  std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
  for (int x : v_) {
    if (x < 1 || x > n || seen[static_cast<size_t>(x)])
      throw std::invalid_argument("Permutation: not a permutation of 1.." + std::to_string(n));
    seen[static_cast<size_t>(x)] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = i + 1;
  return Permutation(std::move(v));
}

Permutation Permutation::reverse_complement() const {
  const int n = size();
  std::vector<int> w(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) w[static_cast<size_t>(i)] = n + 1 - v_[static_cast<size_t>(n - 1 - i)];
  return Permutation(std::move(w));
}

Permutation Permutation::inverse() const {
  const int n = size();
  std::vector<int> w(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) w[static_cast<size_t>(v_[static_cast<size_t>(i)] - 1)] = i + 1;
  return Permutation(std::move(w));
}

std::vector<int> Permutation::left_to_right_maxima() const {
  std::vector<int> out;
  int best = 0;
  for (int i = 1; i <= size(); ++i)
    if (at(i) > best) {
      best = at(i);
      out.push_back(i);
    }
  return out;
}

std::vector<int> Permutation::right_to_left_minima() const {
  std::vector<int> out;
  int best = size() + 1;
  for (int i = size(); i >= 1; --i)
    if (at(i) < best) {
      best = at(i);
      out.push_back(i);
    }
  std::reverse(out.begin(), out.end());
  return out;
}

std::string Permutation::to_string() const {
  std::string s;
  for (int i = 1; i <= size(); ++i) {
    if (i > 1) s += ' ';
    s += std::to_string(at(i));
  }
  return s;
}

}  // namespace vinc
