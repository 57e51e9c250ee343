#include "vinc/avoiders.hpp"

#include <algorithm>
#include <stdexcept>

namespace vinc {

namespace {

enum class Classical { p123, p132, p213, p231, p312, p321 };

Classical classify(const VincularPattern& avoided) {
  if (avoided.length() != 3 || !avoided.classical())
    throw std::invalid_argument("enumerate_avoiders: avoided pattern must be a classical length-3 pattern, got '" +
                                avoided.to_string() + "'");
  const int code = avoided.letter(1) * 100 + avoided.letter(2) * 10 + avoided.letter(3);
  switch (code) {
    case 123: return Classical::p123;
    case 132: return Classical::p132;
    case 213: return Classical::p213;
    case 231: return Classical::p231;
    case 312: return Classical::p312;
    case 321: return Classical::p321;
  }
  throw std::invalid_argument("enumerate_avoiders: unreachable");
}

// 2-3-1 avoiders via the first-entry decomposition sigma = k sigma1 sigma2 with
// sigma1 on the values below k and sigma2 on the values above. Generating the
// first entry in increasing order and recursing left-to-right yields lex order.
struct BlockGen231 {
  std::vector<int> buf;
  const std::function<void(const Permutation&)>& fn;

  explicit BlockGen231(int n, const std::function<void(const Permutation&)>& f)
      : buf(static_cast<size_t>(n)), fn(f) {}

  // Fill positions [pos, pos + (hi-lo+1)) with an avoider on values lo..hi,
  // then run cont.
  void gen(int pos, int lo, int hi, const std::function<void()>& cont) {
    if (lo > hi) {
      cont();
      return;
    }
    for (int k = lo; k <= hi; ++k) {
      buf[static_cast<size_t>(pos)] = k;
      const int left = k - lo;  // size of the low block
      gen(pos + 1, lo, k - 1,
          [&] { gen(pos + 1 + left, k + 1, hi, cont); });
    }
  }

  void run() {
    const int n = static_cast<int>(buf.size());
    gen(0, 1, n, [&] { fn(Permutation(buf)); });
  }
};

// Generic pruned backtracking. A new value v at the end of the prefix can only
// complete an occurrence in which it plays the pattern's final letter; each
// class below states that condition on v against the prefix.
struct Backtracker {
  Classical cls;
  int n;
  const std::function<void(const Permutation&)>& fn;
  std::vector<int> prefix;
  std::vector<char> used;

  // Aggregates over the current prefix, recomputed per node:
  //  minAscTop  = min value with a smaller value before it   (completes 1-2-3)
  //  maxDescBot = max value with a larger value before it    (completes 3-2-1)
  //  minInvTop  = min value with a smaller value after it    (completes 2-1-3)
  //  maxAscBot  = max value with a larger value after it     (completes 2-3-1)
  // For 1-3-2 / 3-1-2 the test needs v on both sides, so those scan the prefix.
  int minAscTop = 0, maxDescBot = 0, minInvTop = 0, maxAscBot = 0;

  Backtracker(Classical c, int n_, const std::function<void(const Permutation&)>& f)
      : cls(c), n(n_), fn(f) {
    prefix.reserve(static_cast<size_t>(n));
    used.assign(static_cast<size_t>(n) + 1, 0);
  }

  void recompute() {
    const int k = static_cast<int>(prefix.size());
    const int inf = n + 1;
    minAscTop = inf;
    maxDescBot = 0;
    minInvTop = inf;
    maxAscBot = 0;
    int runMin = inf, runMax = 0;
    for (int j = 0; j < k; ++j) {
      const int x = prefix[static_cast<size_t>(j)];
      if (x > runMin) minAscTop = std::min(minAscTop, x);
      if (x < runMax) maxDescBot = std::max(maxDescBot, x);
      runMin = std::min(runMin, x);
      runMax = std::max(runMax, x);
    }
    int sufMin = inf, sufMax = 0;
    for (int j = k - 1; j >= 0; --j) {
      const int x = prefix[static_cast<size_t>(j)];
      if (x > sufMin) minInvTop = std::min(minInvTop, x);
      if (x < sufMax) maxAscBot = std::max(maxAscBot, x);
      sufMin = std::min(sufMin, x);
      sufMax = std::max(sufMax, x);
    }
  }

  bool completes_occurrence(int v) const {
    switch (cls) {
      case Classical::p123: return v > minAscTop;
      case Classical::p321: return v < maxDescBot;
      case Classical::p213: return v > minInvTop;
      case Classical::p231: return v < maxAscBot;
      case Classical::p132: {
        int runMin = n + 1;
        for (int x : prefix) {
          if (runMin < v && v < x) return true;
          runMin = std::min(runMin, x);
        }
        return false;
      }
      case Classical::p312: {
        int runMax = 0;
        for (int x : prefix) {
          if (x < v && v < runMax) return true;
          runMax = std::max(runMax, x);
        }
        return false;
      }
    }
    return false;
  }

  void rec() {
    if (static_cast<int>(prefix.size()) == n) {
      fn(Permutation(prefix));
      return;
    }
    recompute();
    const int saveAsc = minAscTop, saveDesc = maxDescBot, saveInv = minInvTop, saveBot = maxAscBot;
    for (int v = 1; v <= n; ++v) {
      if (used[static_cast<size_t>(v)]) continue;
      if (completes_occurrence(v)) continue;
      used[static_cast<size_t>(v)] = 1;
      prefix.push_back(v);
      rec();
      prefix.pop_back();
      used[static_cast<size_t>(v)] = 0;
      minAscTop = saveAsc;
      maxDescBot = saveDesc;
      minInvTop = saveInv;
      maxAscBot = saveBot;
    }
  }
};

}  // namespace

void for_each_avoider(int n, const VincularPattern& avoided,
                      const std::function<void(const Permutation&)>& fn) {
  if (n < 0) throw std::invalid_argument("for_each_avoider: n must be >= 0");
  const Classical cls = classify(avoided);
  if (n == 0) {
    fn(Permutation());
    return;
  }
  if (cls == Classical::p231) {
    BlockGen231 gen(n, fn);
    gen.run();
    return;
  }
  Backtracker bt(cls, n, fn);
  bt.rec();
}

std::vector<Permutation> enumerate_avoiders(int n, const VincularPattern& avoided) {
  std::vector<Permutation> out;
  for_each_avoider(n, avoided, [&](const Permutation& p) { out.push_back(p); });
  return out;
}

Int count_avoiders(int n, const VincularPattern& avoided) {
  long c = 0;
  for_each_avoider(n, avoided, [&](const Permutation&) { ++c; });
  return Int(c);
}

Int total_occurrences(int n, const VincularPattern& avoided, const VincularPattern& pattern) {
  Int total = 0;
  unsigned long acc = 0;
  for_each_avoider(n, avoided, [&](const Permutation& p) {
    acc += occurrences(pattern, p);
    if (acc >= (1ul << 62)) {
      total += Int(acc);
      acc = 0;
    }
  });
  total += Int(acc);
  return total;
}

}  // namespace vinc
