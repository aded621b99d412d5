// Normal forms under the completed rules combined with the theory's fixed
// system, word-problem decisions, monoid-presentation extraction, and
// bounded normal-form enumeration.
#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "groundcc/completion.hpp"
#include "groundcc/flatten.hpp"
#include "groundcc/theory.hpp"

namespace groundcc {

struct CompletedSystem {
  RuleSet rules;
  TheoryConfig theory;
  OrderingConfig ordering;
  CompletionStatus status = CompletionStatus::Diverged;

  static CompletedSystem from(const Context& ctx, const CompletionResult& res,
                              TheoryConfig theory, OrderingConfig ordering) {
    CompletedSystem cs;
    cs.rules.bind(ctx.terms);
    for (const Rule& r : res.rules) cs.rules.insert(r);
    cs.theory = std::move(theory);
    cs.ordering = std::move(ordering);
    cs.status = res.status;
    return cs;
  }
};

// One rewrite step of the combined system on an arbitrary ground term.
struct CombinedRedex {
  TermId result;
  std::string tag;  // rule id or theory rule name, for traces
};

namespace detail {

// Completed-rule redexes in print order: a node before its arguments,
// argument positions left to right, the longest rule word at a position
// first, ties by lowest rule id.
inline std::optional<CombinedRedex> find_rule_redex(Context& ctx,
                                                    const CompletedSystem& cs,
                                                    TermId t) {
  const TermData& d = ctx.term(t);
  if (d.args.empty()) {
    if (const Rule* cr = cs.rules.const_rule(d.head))
      return CombinedRedex{cr->rhs, "r" + std::to_string(cr->id)};
    return std::nullopt;
  }

  const Symbol& hs = ctx.sym(d.head);
  if (hs.kind != SymbolKind::AssocFun) {
    if (const Rule* r = cs.rules.find_by_lhs(t))
      return CombinedRedex{r->rhs, "r" + std::to_string(r->id)};
    for (std::size_t i = 0; i < d.args.size(); ++i) {
      if (auto inner = find_rule_redex(ctx, cs, d.args[i])) {
        std::vector<TermId> args = d.args;
        args[i] = inner->result;
        return CombinedRedex{ctx.terms.make(d.head, std::move(args)),
                             inner->tag};
      }
    }
    return std::nullopt;
  }

  for (std::size_t p = 0; p < d.args.size(); ++p) {
    const Rule* best = nullptr;
    std::size_t best_len = 0;
    for (std::uint32_t id : cs.rules.assoc_ids(d.head)) {
      const Rule* r = cs.rules.get(id);
      Word u = word_of(ctx, r->lhs);
      if (u.size() <= best_len) continue;
      if (groundcc::detail::word_matches_at(ctx, d.args, p, u)) {
        best = r;
        best_len = u.size();
      }
    }
    if (best == nullptr && ctx.is_const(d.args[p])) {
      if (const Rule* cr = cs.rules.const_rule(ctx.head(d.args[p]))) {
        best = cr;
        best_len = 1;
      }
    }
    if (best != nullptr) {
      std::vector<TermId> args(d.args.begin(),
                               d.args.begin() + static_cast<std::ptrdiff_t>(p));
      if (best_len == 1 && ctx.is_const(best->lhs)) {
        args.push_back(best->rhs);
      } else {
        for (SymbolId c : groundcc::detail::rhs_letters(ctx, *best))
          args.push_back(ctx.terms.make(c));
      }
      args.insert(args.end(),
                  d.args.begin() + static_cast<std::ptrdiff_t>(p + best_len),
                  d.args.end());
      TermId res = args.size() == 1 ? args[0]
                                    : ctx.terms.make(d.head, std::move(args));
      return CombinedRedex{res, "r" + std::to_string(best->id)};
    }
    if (auto inner = find_rule_redex(ctx, cs, d.args[p])) {
      std::vector<TermId> args = d.args;
      args[p] = inner->result;
      // The rewritten argument may have become f-headed; splice.
      std::vector<TermId> flat;
      flat.reserve(args.size());
      for (TermId a : args) {
        if (ctx.head(a) == d.head)
          for (TermId x : ctx.term(a).args) flat.push_back(x);
        else
          flat.push_back(a);
      }
      TermId res =
          flat.size() == 1 ? flat[0] : ctx.terms.make(d.head, std::move(flat));
      return CombinedRedex{res, inner->tag};
    }
  }
  return std::nullopt;
}

// Theory step first, completed rules second: the trace then mirrors the
// paper's combined-rewriting runs on terms the reduced rule set no longer
// covers (unit occurrences next to reducible constants, nested inverses).
inline std::optional<CombinedRedex> find_redex(Context& ctx,
                                               const CompletedSystem& cs,
                                               TermId t) {
  if (auto ts = theory_step(ctx, t, cs.theory))
    return CombinedRedex{ts->result, theory_rule_name(ts->rule)};
  return find_rule_redex(ctx, cs, t);
}

// Every combined redex of t, for the randomized-strategy tests.
inline void enumerate_redexes(Context& ctx, const CompletedSystem& cs, TermId t,
                              std::vector<CombinedRedex>& out);

inline void enumerate_at_node(Context& ctx, const CompletedSystem& cs,
                              TermId t,
                              const std::function<TermId(TermId)>& wrap,
                              std::vector<CombinedRedex>& out) {
  const TermData& d = ctx.term(t);
  if (d.args.empty()) {
    if (const Rule* cr = cs.rules.const_rule(d.head))
      out.push_back(CombinedRedex{wrap(cr->rhs), "r" + std::to_string(cr->id)});
    return;
  }
  const Symbol& hs = ctx.sym(d.head);
  if (hs.kind != SymbolKind::AssocFun) {
    if (const Rule* r = cs.rules.find_by_lhs(t))
      out.push_back(CombinedRedex{wrap(r->rhs), "r" + std::to_string(r->id)});
    if (const GroupSig* isig = cs.theory.sig_for_inverse(d.head)) {
      TermId v = d.args[0];
      if (v == ctx.terms.make(isig->unit))
        out.push_back(CombinedRedex{wrap(v), "i(1)"});
      if (ctx.head(v) == d.head)
        out.push_back(CombinedRedex{wrap(ctx.term(v).args[0]), "i(i)"});
      if (ctx.head(v) == isig->assoc) {
        const std::vector<TermId>& va = ctx.term(v).args;
        std::vector<TermId> rev;
        for (auto it = va.rbegin(); it != va.rend(); ++it)
          rev.push_back(ctx.terms.make(d.head, {*it}));
        out.push_back(CombinedRedex{
            wrap(ctx.terms.make(isig->assoc, std::move(rev))), "i(f)"});
      }
    }
    for (std::size_t i = 0; i < d.args.size(); ++i) {
      auto wrap_i = [&, i](TermId sub) {
        std::vector<TermId> args = ctx.term(t).args;
        args[i] = sub;
        return wrap(ctx.terms.make(d.head, std::move(args)));
      };
      enumerate_at_node(ctx, cs, d.args[i], wrap_i, out);
    }
    return;
  }

  const GroupSig* sig = cs.theory.sig_for_assoc(d.head);
  TermId unit_term = sig ? ctx.terms.make(sig->unit) : kNoTerm;
  auto rebuild = [&](std::vector<TermId> args) {
    std::vector<TermId> flat;
    for (TermId a : args) {
      if (ctx.head(a) == d.head)
        for (TermId x : ctx.term(a).args) flat.push_back(x);
      else
        flat.push_back(a);
    }
    if (flat.empty()) return unit_term;
    if (flat.size() == 1) return flat[0];
    return ctx.terms.make(d.head, std::move(flat));
  };
  for (std::size_t p = 0; p < d.args.size(); ++p) {
    for (std::uint32_t id : cs.rules.assoc_ids(d.head)) {
      const Rule* r = cs.rules.get(id);
      Word u = word_of(ctx, r->lhs);
      if (!groundcc::detail::word_matches_at(ctx, d.args, p, u)) continue;
      std::vector<TermId> args(d.args.begin(),
                               d.args.begin() + static_cast<std::ptrdiff_t>(p));
      for (SymbolId c : groundcc::detail::rhs_letters(ctx, *r))
        args.push_back(ctx.terms.make(c));
      args.insert(args.end(),
                  d.args.begin() + static_cast<std::ptrdiff_t>(p + u.size()),
                  d.args.end());
      out.push_back(CombinedRedex{
          wrap(args.size() == 1 ? args[0]
                                : ctx.terms.make(d.head, std::move(args))),
          "r" + std::to_string(id)});
    }
    if (sig != nullptr) {
      if (d.args[p] == unit_term) {
        std::vector<TermId> args = d.args;
        args.erase(args.begin() + static_cast<std::ptrdiff_t>(p));
        out.push_back(CombinedRedex{wrap(rebuild(std::move(args))), "unit"});
      }
      if (sig->has_inverse() && p + 1 < d.args.size()) {
        TermId a = d.args[p], b = d.args[p + 1];
        if ((ctx.head(b) == sig->inverse && ctx.term(b).args[0] == a) ||
            (ctx.head(a) == sig->inverse && ctx.term(a).args[0] == b)) {
          std::vector<TermId> args = d.args;
          args.erase(args.begin() + static_cast<std::ptrdiff_t>(p),
                     args.begin() + static_cast<std::ptrdiff_t>(p + 2));
          out.push_back(CombinedRedex{wrap(rebuild(std::move(args))), "cancel"});
        }
      }
    }
    auto wrap_p = [&, p](TermId sub) {
      std::vector<TermId> args = ctx.term(t).args;
      args[p] = sub;
      return wrap(rebuild(std::move(args)));
    };
    enumerate_at_node(ctx, cs, d.args[p], wrap_p, out);
  }
}

inline void enumerate_redexes(Context& ctx, const CompletedSystem& cs, TermId t,
                              std::vector<CombinedRedex>& out) {
  enumerate_at_node(ctx, cs, t, [](TermId x) { return x; }, out);
}

}  // namespace detail

// Unique normal form of assoc_flatten(t) under the completed rules
// interleaved with the theory's fixed system; strategy-independent by
// convergence. The trace, when requested, records every intermediate term.
inline TermId normalize(Context& ctx, const CompletedSystem& cs, TermId t,
                        std::vector<TermId>* trace = nullptr) {
  t = assoc_flatten(ctx, t);
  if (trace) trace->push_back(t);
  while (auto hit = detail::find_redex(ctx, cs, t)) {
    t = hit->result;
    if (trace) trace->push_back(t);
  }
  return t;
}

// Normal form reached by applying uniformly random redexes; used to test
// strategy independence.
inline TermId normalize_random(Context& ctx, const CompletedSystem& cs,
                               TermId t, std::mt19937& rng) {
  t = assoc_flatten(ctx, t);
  for (;;) {
    std::vector<CombinedRedex> redexes;
    detail::enumerate_redexes(ctx, cs, t, redexes);
    if (redexes.empty()) return t;
    std::uniform_int_distribution<std::size_t> pick(0, redexes.size() - 1);
    t = redexes[pick(rng)].result;
  }
}

inline bool decide_eq(Context& ctx, const CompletedSystem& cs, TermId s,
                      TermId t) {
  if (cs.status != CompletionStatus::Completed)
    throw std::logic_error("undecided: completion diverged");
  return normalize(ctx, cs, s) == normalize(ctx, cs, t);
}

// ---------------------------------------------------------------------------
// Monoid presentation for S(E) and bounded normal-form enumeration.

struct MonoidPresentation {
  std::vector<SymbolId> generators;               // constants except the unit
  std::vector<std::pair<Word, Word>> relations;   // unit rendered as the
                                                  // empty word
};

inline MonoidPresentation extract_presentation(const Context& ctx,
                                               const AugmentedProblem& p,
                                               const TheoryConfig& cfg) {
  if (cfg.mode != TheoryMode::Group)
    throw std::logic_error("monoid presentation extraction needs group mode");
  const GroupSig& sig = cfg.sigs.at(0);

  auto as_word = [&](TermId t) -> Word {
    if (ctx.is_const(t)) {
      if (ctx.head(t) == sig.unit) return Word{};
      return Word{ctx.head(t)};
    }
    return word_of(ctx, t);
  };

  MonoidPresentation out;
  std::unordered_set<SymbolId> gens;
  std::unordered_set<std::uint64_t> seen;
  auto scan = [&](const std::vector<FlatEquation>& eqs) {
    for (const FlatEquation& e : eqs) {
      bool has_f = (!ctx.is_const(e.lhs) && ctx.head(e.lhs) == sig.assoc) ||
                   (!ctx.is_const(e.rhs) && ctx.head(e.rhs) == sig.assoc);
      if (!has_f) continue;
      if (!seen.insert(eq_key(e)).second) continue;
      Word l = as_word(e.lhs);
      Word r = as_word(e.rhs);
      for (SymbolId c : l)
        if (gens.insert(c).second) out.generators.push_back(c);
      for (SymbolId c : r)
        if (gens.insert(c).second) out.generators.push_back(c);
      out.relations.emplace_back(std::move(l), std::move(r));
    }
  };
  // S(E) - U(C): the flat input equations plus the inverse table.
  scan(p.eprime);
  scan(p.inverse_table);
  return out;
}

struct NormalFormEnumeration {
  std::vector<Word> words;     // irreducible words up to the length bound
  bool new_at_max_len = false; // whether the last length added any word
};

// All rule-irreducible words over the generators up to max_len, the empty
// word included. A saturation hint, not a finiteness proof.
inline NormalFormEnumeration enumerate_normal_forms(
    Context& ctx, const CompletedSystem& cs, const GroupSig& sig,
    std::span<const SymbolId> generators, std::size_t max_len) {
  NormalFormEnumeration out;
  auto irreducible = [&](const Word& w) {
    TermId t;
    if (w.empty())
      t = ctx.terms.make(sig.unit);
    else
      t = term_of_word_or_const(ctx, sig.assoc, w);
    return normalize(ctx, cs, t) == t;
  };

  std::vector<Word> frontier{Word{}};
  if (irreducible(Word{})) out.words.push_back(Word{});
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<Word> next;
    bool added = false;
    for (const Word& w : frontier) {
      for (SymbolId g : generators) {
        Word ext = w;
        ext.push_back(g);
        if (!irreducible(ext)) continue;  // extensions stay reducible
        next.push_back(ext);
        out.words.push_back(ext);
        added = true;
      }
    }
    frontier = std::move(next);
    if (len == max_len) out.new_at_max_len = added;
  }
  return out;
}

}  // namespace groundcc
