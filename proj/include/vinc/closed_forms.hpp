#pragma once

#include <functional>
#include <string>
#include <vector>

#include "vinc/bigint.hpp"
#include "vinc/pattern.hpp"

namespace vinc {

// One enumeration result: the total of an item (vincular pattern occurrences,
// a permutation statistic, or the low-occurrence variant of 2-13) over an
// avoidance class, stated as a generating function in the expression
// mini-language and, where one is known, a binomial closed form.
struct EnumResult {
  std::string host_class;  // the avoided classical pattern: "321" or "231"
  std::string item;        // pattern text, or "maj" / "den" / "2-13:low"
  Anchor anchor = Anchor::none;
  std::string gf;                        // expression for sum_n total(n) z^n
  std::function<Int(long)> closed_form;  // empty when no closed form is tabulated
  std::string closed_form_text;

  std::string key() const;  // "class item anchor"
};

// The full table of enumeration results the library certifies.
const std::vector<EnumResult>& enumeration_results();

// Null when the triple has no table entry.
const EnumResult* find_result(const std::string& host_class, const std::string& item,
                              Anchor anchor);

// The avoided pattern named by a host-class string ("321"/"3-2-1"/"231"/"2-3-1").
VincularPattern host_class_pattern(const std::string& host_class);

// Brute-force total of the entry's item over its class on n letters.
Int brute_total(const EnumResult& r, int n);

}  // namespace vinc
