// The term order on ground fully flat terms, the length-lexicographic order
// on words, and the (D, S, W) complexity measure used as a termination
// witness for the combined rewrite relation.
#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include "groundcc/term.hpp"
#include "groundcc/theory_config.hpp"

namespace groundcc {

enum class Cmp { Less, Equal, Greater, Incomparable };

inline Cmp flip(Cmp c) {
  if (c == Cmp::Less) return Cmp::Greater;
  if (c == Cmp::Greater) return Cmp::Less;
  return c;
}

// Total precedence on constants. Original constants carry an explicit rank
// (larger rank = greater); fresh constants sit above all originals and are
// ordered among themselves by allocation index, earlier index greater.
struct OrderingConfig {
  std::unordered_map<SymbolId, std::uint32_t> original_rank;
};

// Ranks from a precedence list given greatest-first. Unit constants must
// already sit below every non-unit in the list.
inline OrderingConfig make_ordering(std::span<const SymbolId> descending) {
  OrderingConfig ord;
  std::uint32_t rank = static_cast<std::uint32_t>(descending.size());
  for (SymbolId c : descending) ord.original_rank.emplace(c, rank--);
  return ord;
}

inline int compare_const(const Context& ctx, const OrderingConfig& ord,
                         SymbolId a, SymbolId b) {
  if (a == b) return 0;
  const Symbol& sa = ctx.sym(a);
  const Symbol& sb = ctx.sym(b);
  if (!is_constant_kind(sa.kind) || !is_constant_kind(sb.kind))
    throw std::logic_error("compare_const on a non-constant symbol");
  bool fa = sa.kind == SymbolKind::FreshConst;
  bool fb = sb.kind == SymbolKind::FreshConst;
  if (fa && fb) return sa.fresh_index < sb.fresh_index ? 1 : -1;
  if (fa != fb) return fa ? 1 : -1;
  auto ita = ord.original_rank.find(a);
  auto itb = ord.original_rank.find(b);
  if (ita == ord.original_rank.end() || itb == ord.original_rank.end())
    throw std::logic_error("constant missing from the precedence: registry bug");
  return ita->second > itb->second ? 1 : -1;
}

// Length-lexicographic order: longer word greater, equal lengths compared
// letterwise by the constant precedence. Total on words.
inline Cmp llex_compare(const Context& ctx, const OrderingConfig& ord,
                        std::span<const SymbolId> u,
                        std::span<const SymbolId> v) {
  if (u.size() != v.size())
    return u.size() > v.size() ? Cmp::Greater : Cmp::Less;
  for (std::size_t i = 0; i < u.size(); ++i) {
    int c = compare_const(ctx, ord, u[i], v[i]);
    if (c != 0) return c > 0 ? Cmp::Greater : Cmp::Less;
  }
  return Cmp::Equal;
}

// The order on ground fully flat terms:
//   - constants totally ordered by the precedence,
//   - any function-headed term above any constant,
//   - flat terms with the same associative head by llex on argument strings,
//   - anything else is incomparable.
inline Cmp term_compare(const Context& ctx, const OrderingConfig& ord,
                        TermId s, TermId t) {
  if (s == t) return Cmp::Equal;
  bool cs = ctx.is_const(s);
  bool ct = ctx.is_const(t);
  if (cs && ct) {
    int c = compare_const(ctx, ord, ctx.head(s), ctx.head(t));
    return c > 0 ? Cmp::Greater : Cmp::Less;
  }
  if (ct) return Cmp::Greater;
  if (cs) return Cmp::Less;
  SymbolId hs = ctx.head(s);
  SymbolId ht = ctx.head(t);
  if (hs == ht && ctx.sym(hs).kind == SymbolKind::AssocFun &&
      is_constant_word(ctx, s) && is_constant_word(ctx, t)) {
    Word ws = word_of(ctx, s);
    Word wt = word_of(ctx, t);
    return llex_compare(ctx, ord, ws, wt);
  }
  return Cmp::Incomparable;
}

// ---------------------------------------------------------------------------
// Complexity measure (D, S, W).

using WeightMap = std::unordered_map<SymbolId, std::uint64_t>;

// Rank position in the total constant precedence, minimum weight 1: the
// smallest weight function strictly monotone with the precedence.
inline WeightMap make_weights(const Context& ctx, const OrderingConfig& ord,
                              std::span<const SymbolId> constants) {
  std::vector<SymbolId> sorted(constants.begin(), constants.end());
  std::sort(sorted.begin(), sorted.end(), [&](SymbolId a, SymbolId b) {
    return compare_const(ctx, ord, a, b) < 0;
  });
  WeightMap w;
  std::uint64_t k = 1;
  for (SymbolId c : sorted) w.emplace(c, k++);
  return w;
}

struct Measure {
  // (depth of inverse-headed subterm, arity of the theory's associative
  // symbol directly below it, else 0); kept sorted descending.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> d;
  std::uint64_t s = 0;
  std::uint64_t w = 0;
};

namespace detail {
inline std::uint32_t measure_walk(const Context& ctx, TermId t,
                                  const TheoryConfig& theories,
                                  const WeightMap& weights, Measure& out) {
  const TermData& td = ctx.term(t);
  out.s += 1;
  if (td.args.empty()) {
    auto it = weights.find(td.head);
    if (it != weights.end()) out.w += it->second;
    return 0;
  }
  std::uint32_t depth = 0;
  for (TermId a : td.args)
    depth = std::max(depth, 1 + measure_walk(ctx, a, theories, weights, out));
  const GroupSig* sig = theories.sig_for_inverse(td.head);
  if (sig != nullptr) {
    TermId below = td.args[0];
    std::uint32_t n = 0;
    if (!ctx.is_const(below) && ctx.head(below) == sig->assoc)
      n = static_cast<std::uint32_t>(ctx.term(below).args.size());
    out.d.emplace_back(depth, n);
  }
  return depth;
}
}  // namespace detail

inline Measure measure(const Context& ctx, TermId t,
                       const TheoryConfig& theories, const WeightMap& weights) {
  Measure m;
  detail::measure_walk(ctx, t, theories, weights, m);
  std::sort(m.d.rbegin(), m.d.rend());
  return m;
}

// Multiset extension of the lexicographic pair order; -1/0/+1.
inline int multiset_compare(
    std::vector<std::pair<std::uint32_t, std::uint32_t>> a,
    std::vector<std::pair<std::uint32_t, std::uint32_t>> b) {
  // Cancel common elements (both sorted descending).
  std::vector<std::pair<std::uint32_t, std::uint32_t>> ra, rb;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) {
      ++i, ++j;
    } else if (a[i] > b[j]) {
      ra.push_back(a[i++]);
    } else {
      rb.push_back(b[j++]);
    }
  }
  for (; i < a.size(); ++i) ra.push_back(a[i]);
  for (; j < b.size(); ++j) rb.push_back(b[j]);
  if (ra.empty() && rb.empty()) return 0;
  if (ra.empty()) return -1;
  if (rb.empty()) return 1;
  // Both sorted descending: the larger maximum dominates.
  return ra.front() > rb.front() ? 1 : -1;
}

inline int measure_compare(const Measure& a, const Measure& b) {
  int d = multiset_compare(a.d, b.d);
  if (d != 0) return d;
  if (a.s != b.s) return a.s > b.s ? 1 : -1;
  if (a.w != b.w) return a.w > b.w ? 1 : -1;
  return 0;
}

}  // namespace groundcc
