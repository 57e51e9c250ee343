#ifndef VINC_POLYOMINO_HPP
#define VINC_POLYOMINO_HPP

#include <functional>
#include <string>
#include <vector>

#include "vinc/dyck.hpp"

namespace vinc {

// A staircase region bounded by two monotone lattice paths from (0,0) to
// (a,b) using N and E steps, with the upper path strictly above the lower
// one at every interior lattice point. The word encoding uses N/E letters.
class StaircasePolyomino {
 public:
  // upper/lower: step sequences, true = N, false = E. Both must run from
  // (0,0) to the same corner and be strictly separated in between.
  StaircasePolyomino(std::vector<bool> upper, std::vector<bool> lower);

  static StaircasePolyomino parse(std::string_view upper_word, std::string_view lower_word);

  int width() const { return a_; }    // count of E steps in each path
  int height() const { return b_; }   // count of N steps in each path
  int semiperimeter() const { return a_ + b_; }

  const std::vector<bool>& upper() const { return upper_; }
  const std::vector<bool>& lower() const { return lower_; }

  // Number of unit cells between the two paths.
  long area() const;

  std::string to_string() const;

  bool operator==(const StaircasePolyomino& o) const {
    return upper_ == o.upper_ && lower_ == o.lower_;
  }
  bool operator<(const StaircasePolyomino& o) const {
    return upper_ != o.upper_ ? upper_ < o.upper_ : lower_ < o.lower_;
  }

 private:
  std::vector<bool> upper_, lower_;
  int a_ = 0, b_ = 0;
};

// All staircase polyominoes whose bounding paths go from (0,0) to (a,b).
void for_each_polyomino(int a, int b,
                        const std::function<void(const StaircasePolyomino&)>& fn);

// All staircase polyominoes of a given semiperimeter a+b.
void for_each_polyomino_semiperimeter(
    int s, const std::function<void(const StaircasePolyomino&)>& fn);

// Interleave the interiors of the two bounding paths into a Dyck path of
// semilength (semiperimeter - 1): after the forced initial steps, upper-path
// steps map N to U and E to D while lower-path steps map E to U and N to D.
DyckPath xi(const StaircasePolyomino& g);

}  // namespace vinc

#endif  // VINC_POLYOMINO_HPP
