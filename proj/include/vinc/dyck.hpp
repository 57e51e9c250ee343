#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "vinc/permutation.hpp"

namespace vinc {

// Balanced U/D word that never goes below the axis. Steps are stored as bits
// (U = 1, D = 0) and indexed 1-based; semilength n means 2n steps.
class DyckPath {
 public:
  DyckPath() = default;
  explicit DyckPath(std::vector<bool> steps);  // validates; throws std::invalid_argument
  static DyckPath parse(std::string_view word);  // e.g. "UUDUDD"

  int semilength() const { return static_cast<int>(steps_.size()) / 2; }
  int step_count() const { return static_cast<int>(steps_.size()); }
  bool up(int i) const { return steps_[static_cast<size_t>(i) - 1]; }  // 1-based

  // Heights of the 2n+1 lattice points; entry i is the height after step i.
  std::vector<int> point_heights() const;

  std::string to_string() const;

  friend bool operator==(const DyckPath& a, const DyckPath& b) { return a.steps_ == b.steps_; }
  friend bool operator<(const DyckPath& a, const DyckPath& b) { return a.steps_ < b.steps_; }

 private:
  std::vector<bool> steps_;
};

// Balanced U/D word with no sign constraint.
class GrandDyckPath {
 public:
  GrandDyckPath() = default;
  explicit GrandDyckPath(std::vector<bool> steps);  // validates balance only
  static GrandDyckPath parse(std::string_view word);

  int semilength() const { return static_cast<int>(steps_.size()) / 2; }
  bool up(int i) const { return steps_[static_cast<size_t>(i) - 1]; }
  std::vector<int> point_heights() const;
  std::string to_string() const;

 private:
  std::vector<bool> steps_;
};

// Site of a step factor: j is the 1-based index of the factor's first step and
// height the lattice point height reached after that step.
struct FactorSite {
  int step;
  int height;
};

// Peaks are UD factors; height is the peak top.
std::vector<FactorSite> peaks(const DyckPath& p);
std::vector<int> peak_heights(const DyckPath& p);

// Occurrence sites of a three-step factor over {U, D}, e.g. "UDD".
std::vector<FactorSite> triple_occurrences(const DyckPath& p, std::string_view factor);

// For each step index, the index of the matching opposite step (U's first
// return partner and vice versa).
std::vector<int> matching_steps(const DyckPath& p);

// Sum over UU factors of half the step count strictly between the two matching
// D steps. Halving is exact; a parity failure throws std::logic_error.
long mass(const DyckPath& p);

// Sum over U steps of floor(h/2) with h the height where the step starts.
long t_stat(const DyckPath& p);
// Sum over U steps of ceil(h/2).
long ceil_weight(const DyckPath& p);
// Sum over peaks of (height - 1).
long peak_weight(const DyckPath& p);

// D steps lying in maximal D runs immediately before a DUD factor;
// excluding_axis drops runs whose DUD factor returns to the axis.
struct DudBlockStats {
  long total = 0;
  long excluding_axis = 0;
};
DudBlockStats dud_block_stats(const DyckPath& p);

// Semilength-preserving bijection on Dyck paths carrying t_stat to mass:
// elevated components U C1 D ... U Cs D inside an elevated factor map to
// U^{s+1} D theta(C1) D ... theta(Cs) D, recursively.
DyckPath theta(const DyckPath& p);

// Bijection from 3-2-1 avoiders: the staircase through the crosses (i, v[i])
// with v[i] >= i, read as U runs (north) and D runs (east). Pre: avoids 3-2-1.
DyckPath phi_321(const Permutation& p);
Permutation phi_321_inverse(const DyckPath& p);

// Bijection from 2-3-1 avoiders: sigma = k sigma1 sigma2 maps to
// U phi(sigma1) D phi(sigma2). Pre: avoids 2-3-1.
DyckPath phi_231(const Permutation& p);
Permutation phi_231_inverse(const DyckPath& p);

void for_each_dyck_path(int n, const std::function<void(const DyckPath&)>& fn);
std::vector<DyckPath> all_dyck_paths(int n);

void for_each_grand_dyck_path(int n, const std::function<void(const GrandDyckPath&)>& fn);

// Lattice points of the path (endpoints included) at height h.
long points_at_height(const GrandDyckPath& p, int h);

}  // namespace vinc
