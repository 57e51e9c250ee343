#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vinc/pattern.hpp"
#include "vinc/series.hpp"

namespace vinc {

// Total-occurrence generating functions of one pattern over the class avoiding
// 231, one per anchor variant. A bundle may carry any subset; each enlargement
// rule consumes specific members and produces specific members.
struct SeriesBundle {
  std::optional<ZSeries> plain;
  std::optional<ZSeries> first;
  std::optional<ZSeries> last;
};

// Enlargement of a pattern by one letter. "max"/"min" is the value of the new
// letter, prepend/append its position, free/glued whether it is joined to its
// neighbor by a dash or an adjacency requirement.
enum class TransferRule {
  prepend_max_free,
  prepend_max_glued,
  prepend_min_free,
  prepend_min_glued,
  append_max_free,
  append_max_glued,
};

std::string to_string(TransferRule r);

// No proper prefix of the letters is {1..k}.
bool plus_indecomposable(const VincularPattern& p);

// No proper prefix {1..k} whose junction is unglued. Weaker than
// plus_indecomposable: a glued junction does not split a vincular pattern.
bool vincular_plus_indecomposable(const VincularPattern& p);

// The enlarged pattern the rule produces.
VincularPattern transfer_target(TransferRule rule, const VincularPattern& rho);

// Applies one enlargement rule over the class avoiding 231.
//   prepend_max_free:  plain <- zBC * plain,  first <- zC * plain
//   prepend_max_glued: plain <- zBC * first,  first <- zC * first
//   prepend_min_free:  first <- zC * plain;   plain <- zB^2 * plain
//                      (plain only when rho is plus-indecomposable)
//   prepend_min_glued: first <- z * first;    plain <- zBC * first
//                      (plain only when rho is plus-indecomposable)
//   append_max_free:   plain <- zB^2 * plain, last <- zC^2 * plain
//   append_max_glued:  plain <- zBC * last,   last <- zC * last
// Append rules require rho vincular-plus-indecomposable; a missing input
// member or a violated precondition throws std::invalid_argument.
SeriesBundle apply_transfer(TransferRule rule, const VincularPattern& rho,
                            const SeriesBundle& in, int order);

struct TransferApplication {
  TransferRule rule;
  std::string source;  // pattern text
  std::string target;  // expected transfer_target text
};

// Every enlargement step the library certifies: from the single-letter pattern
// up, these reproduce all length-2 and length-3 rows of the results table for
// the class avoiding 231.
const std::vector<TransferApplication>& transfer_applications();

// The tabulated bundle of a pattern over the class avoiding 231, expanded to
// the given order. Members are set for exactly the anchors the table lists.
SeriesBundle bundle_for_pattern(const std::string& item, int order);

}  // namespace vinc
