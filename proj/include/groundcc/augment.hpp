// Phase II: add the theory-entailed ground flat equations. For each group
// block this names an inverse for every constant that lacks one, then adds
// the inverse table I(E') and the unit table U(C).
#pragma once

#include <algorithm>
#include <unordered_set>
#include <vector>

#include "groundcc/equation.hpp"
#include "groundcc/flatten.hpp"
#include "groundcc/ordering.hpp"
#include "groundcc/theory.hpp"

namespace groundcc {

struct AugmentedProblem {
  std::vector<FlatEquation> s_e;           // E' plus all tables, deduplicated
  std::vector<FlatEquation> eprime;        // E' after the inverse-naming step
  std::vector<FlatEquation> inverse_table; // I(E') across all blocks
  std::vector<FlatEquation> unit_table;    // U(C) across all blocks
};

namespace detail {

// Original constants in precedence-descending order, then fresh constants in
// allocation order; the order the inverse-naming loop walks.
inline std::vector<SymbolId> phase2_order(const Context& ctx,
                                          const ConstRegistry& reg,
                                          const OrderingConfig& ord) {
  std::vector<SymbolId> order = reg.originals();
  std::sort(order.begin(), order.end(), [&](SymbolId a, SymbolId b) {
    return compare_const(ctx, ord, a, b) > 0;
  });
  for (SymbolId c : reg.fresh()) order.push_back(c);
  return order;
}

inline void dedup_into(std::vector<FlatEquation>& out,
                       std::unordered_set<std::uint64_t>& seen,
                       const std::vector<FlatEquation>& eqs) {
  for (const FlatEquation& e : eqs)
    if (e.lhs != e.rhs && seen.insert(eq_key(e)).second) out.push_back(e);
}

}  // namespace detail

inline AugmentedProblem phase2_semigroup(Context&,
                                         std::vector<FlatEquation> eprime,
                                         ConstRegistry& reg) {
  reg.freeze();
  AugmentedProblem p;
  p.s_e = eprime;
  p.eprime = std::move(eprime);
  return p;
}

// Shared by the monoid, group, and multi-group variants. Monoid signatures
// have no inverse symbol, so only their unit table is produced.
inline AugmentedProblem phase2_multigroup(Context& ctx,
                                          std::vector<FlatEquation> eprime,
                                          ConstRegistry& reg,
                                          const std::vector<GroupSig>& sigs,
                                          const OrderingConfig& ord) {
  AugmentedProblem p;
  // C and E' are copied once; constants named below are not themselves given
  // inverses (their facts come from I(E')).
  std::vector<SymbolId> cprime = detail::phase2_order(ctx, reg, ord);
  std::vector<FlatEquation> esnapshot = eprime;

  for (const GroupSig& sig : sigs) {
    if (!sig.has_inverse()) continue;
    for (SymbolId c : cprime) {
      if (c == sig.unit) continue;
      TermId cterm = ctx.terms.make(c);
      bool has_fact = false;
      for (const FlatEquation& e : esnapshot) {
        if (ctx.is_const(e.lhs) || ctx.head(e.lhs) != sig.inverse) continue;
        if (ctx.term(e.lhs).args[0] == cterm || e.rhs == cterm) {
          has_fact = true;
          break;
        }
      }
      if (has_fact) continue;
      TermId inv = ctx.terms.make(sig.inverse, {cterm});
      SymbolId fresh = reg.name_for(ctx, inv);
      eprime.push_back(FlatEquation{inv, ctx.terms.make(fresh)});
    }
  }
  reg.freeze();

  for (const GroupSig& sig : sigs) {
    if (!sig.has_inverse()) continue;
    TermId unit = ctx.terms.make(sig.unit);
    p.inverse_table.push_back(
        FlatEquation{ctx.terms.make(sig.inverse, {unit}), unit});
    for (const FlatEquation& e : eprime) {
      if (ctx.is_const(e.lhs) || ctx.head(e.lhs) != sig.inverse) continue;
      TermId m = ctx.term(e.lhs).args[0];
      TermId n = e.rhs;
      p.inverse_table.push_back(
          FlatEquation{ctx.terms.make(sig.inverse, {n}), m});
      p.inverse_table.push_back(
          FlatEquation{ctx.terms.make(sig.assoc, {m, n}), unit});
      p.inverse_table.push_back(
          FlatEquation{ctx.terms.make(sig.assoc, {n, m}), unit});
    }
  }

  for (const GroupSig& sig : sigs) {
    TermId unit = ctx.terms.make(sig.unit);
    std::unordered_set<std::uint64_t> useen;
    for (SymbolId c : reg.all_constants()) {
      TermId ct = ctx.terms.make(c);
      FlatEquation right{ctx.terms.make(sig.assoc, {ct, unit}), ct};
      FlatEquation left{ctx.terms.make(sig.assoc, {unit, ct}), ct};
      if (useen.insert(eq_key(right)).second) p.unit_table.push_back(right);
      if (useen.insert(eq_key(left)).second) p.unit_table.push_back(left);
    }
  }

  std::unordered_set<std::uint64_t> seen;
  detail::dedup_into(p.s_e, seen, eprime);
  detail::dedup_into(p.s_e, seen, p.inverse_table);
  detail::dedup_into(p.s_e, seen, p.unit_table);
  p.eprime = std::move(eprime);
  return p;
}

inline AugmentedProblem phase2_group(Context& ctx,
                                     std::vector<FlatEquation> eprime,
                                     ConstRegistry& reg, const GroupSig& sig,
                                     const OrderingConfig& ord) {
  return phase2_multigroup(ctx, std::move(eprime), reg, {sig}, ord);
}

inline AugmentedProblem phase2_monoid(Context& ctx,
                                      std::vector<FlatEquation> eprime,
                                      ConstRegistry& reg,
                                      const GroupSig& sig,
                                      const OrderingConfig& ord) {
  return phase2_multigroup(ctx, std::move(eprime), reg, {sig}, ord);
}

inline AugmentedProblem augment(Context& ctx, std::vector<FlatEquation> eprime,
                                ConstRegistry& reg, const TheoryConfig& cfg,
                                const OrderingConfig& ord) {
  switch (cfg.mode) {
    case TheoryMode::Semigroup:
      return phase2_semigroup(ctx, std::move(eprime), reg);
    case TheoryMode::Monoid:
      return phase2_monoid(ctx, std::move(eprime), reg, cfg.sigs.at(0), ord);
    case TheoryMode::Group:
      return phase2_group(ctx, std::move(eprime), reg, cfg.sigs.at(0), ord);
    case TheoryMode::MultiGroup:
      return phase2_multigroup(ctx, std::move(eprime), reg, cfg.sigs, ord);
  }
  throw std::logic_error("unreachable");
}

}  // namespace groundcc
