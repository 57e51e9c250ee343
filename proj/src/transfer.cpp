#include "vinc/transfer.hpp"

#include <stdexcept>

#include "vinc/catalan_series.hpp"
#include "vinc/closed_forms.hpp"
#include "vinc/series_expr.hpp"

namespace vinc {
namespace {

bool indecomposable(const VincularPattern& p, bool glued_junction_splits) {
  int seen_max = 0;
  for (int k = 1; k < p.length(); ++k) {
    if (p.letter(k) > seen_max) seen_max = p.letter(k);
    if (seen_max != k) continue;  // prefix is {1..k} iff its max is k
    if (glued_junction_splits || !p.glue(k)) return false;
  }
  return true;
}

const ZSeries& require(const std::optional<ZSeries>& s, TransferRule rule, const char* member,
                       const VincularPattern& rho) {
  if (!s)
    throw std::invalid_argument(to_string(rule) + " needs the " + member + " series of " +
                                rho.to_string());
  return *s;
}

}  // namespace

std::string to_string(TransferRule r) {
  switch (r) {
    case TransferRule::prepend_max_free: return "prepend-max-free";
    case TransferRule::prepend_max_glued: return "prepend-max-glued";
    case TransferRule::prepend_min_free: return "prepend-min-free";
    case TransferRule::prepend_min_glued: return "prepend-min-glued";
    case TransferRule::append_max_free: return "append-max-free";
    case TransferRule::append_max_glued: return "append-max-glued";
  }
  throw std::logic_error("unhandled transfer rule");
}

bool plus_indecomposable(const VincularPattern& p) { return indecomposable(p, true); }

bool vincular_plus_indecomposable(const VincularPattern& p) { return indecomposable(p, false); }

VincularPattern transfer_target(TransferRule rule, const VincularPattern& rho) {
  const int m = rho.length() + 1;
  const bool glued = rule == TransferRule::prepend_max_glued ||
                     rule == TransferRule::prepend_min_glued ||
                     rule == TransferRule::append_max_glued;
  const bool prepend = rule != TransferRule::append_max_free &&
                       rule != TransferRule::append_max_glued;
  const bool new_is_min = rule == TransferRule::prepend_min_free ||
                          rule == TransferRule::prepend_min_glued;
  std::vector<int> letters;
  std::vector<bool> glue;
  if (prepend) {
    letters.push_back(new_is_min ? 1 : m);
    glue.push_back(glued);
  }
  for (int i = 1; i <= rho.length(); ++i) {
    letters.push_back(rho.letter(i) + (new_is_min ? 1 : 0));
    if (i < rho.length()) glue.push_back(rho.glue(i));
  }
  if (!prepend) {
    letters.push_back(m);
    glue.push_back(glued);
  }
  return VincularPattern(std::move(letters), std::move(glue));
}

SeriesBundle apply_transfer(TransferRule rule, const VincularPattern& rho,
                            const SeriesBundle& in, int order) {
  const ZSeries zBC = bc_monomial(1, 1, 1, order);
  const ZSeries zC = bc_monomial(0, 1, 1, order);
  const ZSeries zBB = bc_monomial(2, 0, 1, order);
  const ZSeries zCC = bc_monomial(0, 2, 1, order);
  SeriesBundle out;
  switch (rule) {
    case TransferRule::prepend_max_free: {
      const ZSeries& f = require(in.plain, rule, "plain", rho);
      out.plain = zBC * f;
      out.first = zC * f;
      return out;
    }
    case TransferRule::prepend_max_glued: {
      const ZSeries& f = require(in.first, rule, "first-anchored", rho);
      out.plain = zBC * f;
      out.first = zC * f;
      return out;
    }
    case TransferRule::prepend_min_free: {
      const ZSeries& f = require(in.plain, rule, "plain", rho);
      out.first = zC * f;
      if (plus_indecomposable(rho)) out.plain = zBB * f;
      return out;
    }
    case TransferRule::prepend_min_glued: {
      const ZSeries& f = require(in.first, rule, "first-anchored", rho);
      out.first = f.shifted_up(1);
      if (plus_indecomposable(rho)) out.plain = zBC * f;
      return out;
    }
    case TransferRule::append_max_free: {
      if (!vincular_plus_indecomposable(rho))
        throw std::invalid_argument(to_string(rule) + " needs " + rho.to_string() +
                                    " vincular-plus-indecomposable");
      const ZSeries& f = require(in.plain, rule, "plain", rho);
      out.plain = zBB * f;
      out.last = zCC * f;
      return out;
    }
    case TransferRule::append_max_glued: {
      if (!vincular_plus_indecomposable(rho))
        throw std::invalid_argument(to_string(rule) + " needs " + rho.to_string() +
                                    " vincular-plus-indecomposable");
      const ZSeries& f = require(in.last, rule, "last-anchored", rho);
      out.plain = zBC * f;
      out.last = zC * f;
      return out;
    }
  }
  throw std::logic_error("unhandled transfer rule");
}

const std::vector<TransferApplication>& transfer_applications() {
  using R = TransferRule;
  static const std::vector<TransferApplication> apps = {
      {R::prepend_max_free, "1", "2-1"},
      {R::prepend_max_glued, "1", "21"},
      {R::prepend_min_free, "1", "1-2"},
      {R::prepend_min_glued, "1", "12"},
      {R::append_max_free, "1", "1-2"},
      {R::append_max_glued, "1", "12"},
      {R::prepend_max_free, "2-1", "3-2-1"},
      {R::prepend_max_glued, "2-1", "32-1"},
      {R::prepend_min_free, "2-1", "1-3-2"},
      {R::prepend_min_glued, "2-1", "13-2"},
      {R::append_max_free, "2-1", "2-1-3"},
      {R::append_max_glued, "2-1", "2-13"},
      {R::prepend_max_free, "21", "3-21"},
      {R::prepend_max_glued, "21", "321"},
      {R::prepend_min_free, "21", "1-32"},
      {R::append_max_free, "21", "21-3"},
      {R::append_max_glued, "21", "213"},
      {R::prepend_max_free, "1-2", "3-1-2"},
      {R::prepend_max_glued, "1-2", "31-2"},
      {R::prepend_min_free, "1-2", "1-2-3"},
      {R::prepend_min_glued, "1-2", "12-3"},
      {R::prepend_max_free, "12", "3-12"},
      {R::prepend_max_glued, "12", "312"},
      {R::prepend_min_free, "12", "1-23"},
      {R::prepend_min_glued, "12", "123"},
      {R::append_max_free, "12", "12-3"},
      {R::append_max_glued, "12", "123"},
  };
  return apps;
}

SeriesBundle bundle_for_pattern(const std::string& item, int order) {
  SeriesBundle b;
  for (Anchor a : {Anchor::none, Anchor::first, Anchor::last}) {
    const EnumResult* r = find_result("231", item, a);
    if (!r) continue;
    ZSeries s = parse_series_expr(r->gf, order);
    if (a == Anchor::none)
      b.plain = std::move(s);
    else if (a == Anchor::first)
      b.first = std::move(s);
    else
      b.last = std::move(s);
  }
  return b;
}

}  // namespace vinc
