// Normalization of ground flat terms by the fixed convergent systems for
// groups, monoids, and their disjoint unions, modulo associativity.
//
// The binary unit rules act as deletion of unit occurrences inside argument
// strings, the inverse-cancellation rules as removal of adjacent t, i(t)
// pairs, and the inverse of an associative term is distributed in one step:
// i(f(t1,...,tn)) -> f(i(tn),...,i(t1)).
#pragma once

#include <optional>
#include <vector>

#include "groundcc/term.hpp"
#include "groundcc/theory_config.hpp"

namespace groundcc {

enum class TheoryRule {
  InvUnit,     // i(1) -> 1
  UnitRight,   // f(x,1) -> x
  UnitLeft,    // f(1,x) -> x
  InvInv,      // i(i(x)) -> x
  CancelRight, // f(x,i(x)) -> 1
  CancelLeft,  // f(i(x),x) -> 1
  InvDistrib,  // i(f(x,y)) -> f(i(y),i(x)), variadic form
};

inline const char* theory_rule_name(TheoryRule r) {
  switch (r) {
    case TheoryRule::InvUnit: return "i(1)->1";
    case TheoryRule::UnitRight: return "f(x,1)->x";
    case TheoryRule::UnitLeft: return "f(1,x)->x";
    case TheoryRule::InvInv: return "i(i(x))->x";
    case TheoryRule::CancelRight: return "f(x,i(x))->1";
    case TheoryRule::CancelLeft: return "f(i(x),x)->1";
    case TheoryRule::InvDistrib: return "i(f(x,y))->f(i(y),i(x))";
  }
  return "?";
}

namespace detail {

inline TermId rebuild_assoc(Context& ctx, SymbolId f,
                            std::vector<TermId> args, SymbolId unit) {
  if (args.empty()) return ctx.terms.make(unit);
  if (args.size() == 1) return args[0];
  // A rewritten argument may have become f-headed; splice it back in.
  std::vector<TermId> flat;
  flat.reserve(args.size());
  for (TermId a : args) {
    if (ctx.head(a) == f)
      for (TermId inner : ctx.term(a).args) flat.push_back(inner);
    else
      flat.push_back(a);
  }
  if (flat.size() == 1) return flat[0];
  return ctx.terms.make(f, std::move(flat));
}

}  // namespace detail

// Unique R/A-normal form of a ground flattened term under the active
// theory's fixed system. Total; the identity in semigroup mode.
inline TermId theory_normalize(Context& ctx, TermId t,
                               const TheoryConfig& cfg) {
  const TermData& d = ctx.term(t);
  if (d.args.empty()) return t;
  const Symbol& hs = ctx.sym(d.head);

  if (hs.kind == SymbolKind::AssocFun) {
    std::vector<TermId> args;
    args.reserve(d.args.size());
    for (TermId a : d.args) {
      TermId na = theory_normalize(ctx, a, cfg);
      if (ctx.head(na) == d.head)
        for (TermId inner : ctx.term(na).args) args.push_back(inner);
      else
        args.push_back(na);
    }
    const GroupSig* sig = cfg.sig_for_assoc(d.head);
    if (sig != nullptr) {
      TermId unit_term = ctx.terms.make(sig->unit);
      bool changed = true;
      while (changed) {
        changed = false;
        for (std::size_t i = 0; i < args.size(); ++i) {
          if (args[i] == unit_term) {
            args.erase(args.begin() + static_cast<std::ptrdiff_t>(i));
            changed = true;
            break;
          }
          if (sig->has_inverse() && i + 1 < args.size()) {
            TermId a = args[i], b = args[i + 1];
            bool cancel =
                (ctx.head(b) == sig->inverse && ctx.term(b).args[0] == a) ||
                (ctx.head(a) == sig->inverse && ctx.term(a).args[0] == b);
            if (cancel) {
              args.erase(args.begin() + static_cast<std::ptrdiff_t>(i),
                         args.begin() + static_cast<std::ptrdiff_t>(i + 2));
              changed = true;
              break;
            }
          }
        }
      }
      if (args.empty()) return unit_term;
    }
    if (args.size() == 1) return args[0];
    return ctx.terms.make(d.head, std::move(args));
  }

  const GroupSig* isig = cfg.sig_for_inverse(d.head);
  if (isig != nullptr) {
    TermId v = theory_normalize(ctx, d.args[0], cfg);
    if (v == ctx.terms.make(isig->unit)) return v;
    if (ctx.head(v) == d.head) return ctx.term(v).args[0];
    if (ctx.head(v) == isig->assoc) {
      const std::vector<TermId>& va = ctx.term(v).args;
      std::vector<TermId> rev;
      rev.reserve(va.size());
      for (auto it = va.rbegin(); it != va.rend(); ++it)
        rev.push_back(ctx.terms.make(d.head, {*it}));
      return theory_normalize(ctx, ctx.terms.make(isig->assoc, std::move(rev)),
                              cfg);
    }
    return ctx.terms.make(d.head, {v});
  }

  std::vector<TermId> args;
  args.reserve(d.args.size());
  for (TermId a : d.args) args.push_back(theory_normalize(ctx, a, cfg));
  return ctx.terms.make(d.head, std::move(args));
}

struct TheoryStep {
  TermId result;
  TheoryRule rule;
};

// One R/A step, scanning redexes in print order (a position is tried before
// the subterms it dominates); among redexes anchored at the same position the
// R(G) table order decides. Returns nothing iff t is in theory normal form.
inline std::optional<TheoryStep> theory_step(Context& ctx, TermId t,
                                             const TheoryConfig& cfg) {
  const TermData& d = ctx.term(t);
  if (d.args.empty()) return std::nullopt;
  const Symbol& hs = ctx.sym(d.head);

  const GroupSig* isig = cfg.sig_for_inverse(d.head);
  if (isig != nullptr) {
    TermId v = d.args[0];
    if (v == ctx.terms.make(isig->unit))
      return TheoryStep{v, TheoryRule::InvUnit};
    if (ctx.head(v) == d.head)
      return TheoryStep{ctx.term(v).args[0], TheoryRule::InvInv};
    if (ctx.head(v) == isig->assoc) {
      const std::vector<TermId>& va = ctx.term(v).args;
      std::vector<TermId> rev;
      rev.reserve(va.size());
      for (auto it = va.rbegin(); it != va.rend(); ++it)
        rev.push_back(ctx.terms.make(d.head, {*it}));
      return TheoryStep{ctx.terms.make(isig->assoc, std::move(rev)),
                        TheoryRule::InvDistrib};
    }
    auto inner = theory_step(ctx, v, cfg);
    if (inner)
      return TheoryStep{ctx.terms.make(d.head, {inner->result}), inner->rule};
    return std::nullopt;
  }

  if (hs.kind == SymbolKind::AssocFun) {
    const GroupSig* sig = cfg.sig_for_assoc(d.head);
    TermId unit_term = sig ? ctx.terms.make(sig->unit) : kNoTerm;
    for (std::size_t i = 0; i < d.args.size(); ++i) {
      if (sig != nullptr) {
        if (d.args[i] == unit_term) {
          std::vector<TermId> args = d.args;
          args.erase(args.begin() + static_cast<std::ptrdiff_t>(i));
          return TheoryStep{
              detail::rebuild_assoc(ctx, d.head, std::move(args), sig->unit),
              i > 0 ? TheoryRule::UnitRight : TheoryRule::UnitLeft};
        }
        if (sig->has_inverse() && i + 1 < d.args.size()) {
          TermId a = d.args[i], b = d.args[i + 1];
          std::optional<TheoryRule> rule;
          if (ctx.head(b) == sig->inverse && ctx.term(b).args[0] == a)
            rule = TheoryRule::CancelRight;
          else if (ctx.head(a) == sig->inverse && ctx.term(a).args[0] == b)
            rule = TheoryRule::CancelLeft;
          if (rule) {
            std::vector<TermId> args = d.args;
            args.erase(args.begin() + static_cast<std::ptrdiff_t>(i),
                       args.begin() + static_cast<std::ptrdiff_t>(i + 2));
            return TheoryStep{
                detail::rebuild_assoc(ctx, d.head, std::move(args), sig->unit),
                *rule};
          }
        }
      }
      auto inner = theory_step(ctx, d.args[i], cfg);
      if (inner) {
        std::vector<TermId> args = d.args;
        args[i] = inner->result;
        SymbolId unit = sig ? sig->unit : kNoSymbol;
        // Splice if the rewritten argument became f-headed; without a unit
        // the list cannot empty out (cancellation needs an inverse).
        TermId res = detail::rebuild_assoc(ctx, d.head, std::move(args),
                                           unit == kNoSymbol ? 0 : unit);
        return TheoryStep{res, inner->rule};
      }
    }
    return std::nullopt;
  }

  for (std::size_t i = 0; i < d.args.size(); ++i) {
    auto inner = theory_step(ctx, d.args[i], cfg);
    if (inner) {
      std::vector<TermId> args = d.args;
      args[i] = inner->result;
      return TheoryStep{ctx.terms.make(d.head, std::move(args)), inner->rule};
    }
  }
  return std::nullopt;
}

}  // namespace groundcc
