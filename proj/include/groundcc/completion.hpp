// Phase III: fair ground completion on flat equations with the string-based
// inference rules (DEDUCE, SIMPLIFY, COLLAPSE, COMPOSE, DELETE).
//
// A given-clause loop: the smallest passive equation is contracted against
// the active rules, oriented, and added; the active set is kept inter-reduced
// and all critical pairs with the new rule are enqueued. Runs under a fuel
// budget because the word problem is undecidable in general.
#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "groundcc/augment.hpp"
#include "groundcc/equation.hpp"
#include "groundcc/ordering.hpp"
#include "groundcc/term.hpp"

namespace groundcc {

enum class StepKind { Deduce, Simplify, Collapse, Compose, Delete };

inline const char* step_name(StepKind k) {
  switch (k) {
    case StepKind::Deduce: return "DEDUCE";
    case StepKind::Simplify: return "SIMPLIFY";
    case StepKind::Collapse: return "COLLAPSE";
    case StepKind::Compose: return "COMPOSE";
    case StepKind::Delete: return "DELETE";
  }
  return "?";
}

struct Rule {
  TermId lhs = kNoTerm;
  TermId rhs = kNoTerm;
  std::uint32_t id = 0;
};

inline std::string render_rule(const Context& ctx, const Rule& r) {
  return render_term(ctx, r.lhs) + " -> " + render_term(ctx, r.rhs);
}

// Active rule set indexed by exact left-hand side, by constant left-hand
// sides, and by associative head for subword lookup.
class RuleSet {
 public:
  void insert(const Rule& r) {
    if (lhs_idx_.count(r.lhs))
      throw std::logic_error("two active rules with one lhs");
    by_id_.emplace(r.id, r);
    lhs_idx_.emplace(r.lhs, r.id);
    index_lhs(r);
  }

  void erase(std::uint32_t id) {
    auto it = by_id_.find(id);
    if (it == by_id_.end()) return;
    const Rule& r = it->second;
    lhs_idx_.erase(r.lhs);
    unindex_lhs(r);
    by_id_.erase(it);
  }

  void update_rhs(std::uint32_t id, TermId rhs) { by_id_.at(id).rhs = rhs; }

  const Rule* get(std::uint32_t id) const {
    auto it = by_id_.find(id);
    return it == by_id_.end() ? nullptr : &it->second;
  }

  const Rule* find_by_lhs(TermId lhs) const {
    auto it = lhs_idx_.find(lhs);
    return it == lhs_idx_.end() ? nullptr : get(it->second);
  }

  const Rule* const_rule(SymbolId c) const {
    auto it = const_idx_.find(c);
    return it == const_idx_.end() ? nullptr : get(it->second);
  }

  const std::vector<std::uint32_t>& assoc_ids(SymbolId head) const {
    static const std::vector<std::uint32_t> empty;
    auto it = head_idx_.find(head);
    return it == head_idx_.end() ? empty : it->second;
  }

  std::vector<std::uint32_t> ids() const {
    std::vector<std::uint32_t> out;
    out.reserve(by_id_.size());
    for (const auto& [id, r] : by_id_) out.push_back(id);
    return out;
  }

  std::vector<Rule> rules() const {
    std::vector<Rule> out;
    out.reserve(by_id_.size());
    for (const auto& [id, r] : by_id_) out.push_back(r);
    return out;
  }

  std::size_t size() const { return by_id_.size(); }

 private:
  void index_lhs(const Rule& r) {
    const TermData& d = term_data_ref(r.lhs);
    if (d.args.empty()) {
      const_idx_.emplace(d.head, r.id);
    } else {
      auto& v = head_idx_[d.head];
      v.insert(std::lower_bound(v.begin(), v.end(), r.id), r.id);
    }
  }
  void unindex_lhs(const Rule& r) {
    const TermData& d = term_data_ref(r.lhs);
    if (d.args.empty()) {
      const_idx_.erase(d.head);
    } else {
      auto& v = head_idx_[d.head];
      auto it = std::find(v.begin(), v.end(), r.id);
      if (it != v.end()) v.erase(it);
    }
  }
  const TermData& term_data_ref(TermId t) const {
    if (arena_ == nullptr) throw std::logic_error("RuleSet without arena");
    return (*arena_)[t];
  }

 public:
  void bind(const TermArena& arena) { arena_ = &arena; }

 private:
  const TermArena* arena_ = nullptr;
  std::map<std::uint32_t, Rule> by_id_;
  std::unordered_map<TermId, std::uint32_t> lhs_idx_;
  std::unordered_map<SymbolId, std::uint32_t> const_idx_;
  std::unordered_map<SymbolId, std::vector<std::uint32_t>> head_idx_;
};

namespace detail {

inline Word rhs_letters(const Context& ctx, const Rule& r) {
  if (ctx.is_const(r.rhs)) return Word{ctx.head(r.rhs)};
  return word_of(ctx, r.rhs);
}

inline bool word_matches_at(const Context& ctx,
                            const std::vector<TermId>& args, std::size_t p,
                            const Word& u) {
  if (p + u.size() > args.size()) return false;
  for (std::size_t i = 0; i < u.size(); ++i) {
    const TermData& a = ctx.term(args[p + i]);
    if (!a.args.empty() || a.head != u[i]) return false;
  }
  return true;
}

}  // namespace detail

struct RewriteHit {
  TermId result;
  StepKind kind;
  std::uint32_t rule_id;
};

// One rewrite at a proper position of a flat term: a constant occurrence or
// a proper subword of an argument string. Positions are scanned left to
// right; at a position the longest rule word wins, ties by lowest rule id.
inline std::optional<RewriteHit> rewrite_inner_once(const Context& ctx,
                                                    TermId t,
                                                    const RuleSet& rules,
                                                    TermArena& arena) {
  const TermData& d = ctx.term(t);
  if (d.args.empty()) return std::nullopt;
  bool assoc = ctx.sym(d.head).kind == SymbolKind::AssocFun;

  for (std::size_t p = 0; p < d.args.size(); ++p) {
    const Rule* best = nullptr;
    std::size_t best_len = 0;
    if (assoc) {
      for (std::uint32_t id : rules.assoc_ids(d.head)) {
        const Rule* r = rules.get(id);
        Word u = word_of(ctx, r->lhs);
        if (u.size() == d.args.size() && p == 0) continue;  // whole word
        if (u.size() <= best_len) continue;
        if (detail::word_matches_at(ctx, d.args, p, u)) {
          best = r;
          best_len = u.size();
        }
      }
    }
    if (best == nullptr && ctx.is_const(d.args[p])) {
      if (const Rule* cr = rules.const_rule(ctx.head(d.args[p]))) {
        best = cr;
        best_len = 1;
      }
    }
    if (best == nullptr) continue;
    std::vector<TermId> args(d.args.begin(),
                             d.args.begin() + static_cast<std::ptrdiff_t>(p));
    if (best_len == 1 && ctx.is_const(best->lhs)) {
      args.push_back(best->rhs);
    } else {
      for (SymbolId c : detail::rhs_letters(ctx, *best))
        args.push_back(arena.make(c));
    }
    args.insert(args.end(),
                d.args.begin() + static_cast<std::ptrdiff_t>(p + best_len),
                d.args.end());
    StepKind kind = (best_len == 1 && ctx.is_const(best->lhs))
                        ? StepKind::Collapse
                        : StepKind::Simplify;
    return RewriteHit{arena.make(d.head, std::move(args)), kind, best->id};
  }
  return std::nullopt;
}

// Rewrite a whole side: chase a constant, replace an exact left-hand-side
// match. Replacing a full argument string is SIMPLIFY's whole-word case and
// is gated on the other side being greater when `other` is supplied.
inline std::optional<RewriteHit> rewrite_whole_once(
    const Context& ctx, TermId t, const RuleSet& rules,
    const OrderingConfig* ord_for_condition, TermId other) {
  const TermData& d = ctx.term(t);
  if (d.args.empty()) {
    if (const Rule* cr = rules.const_rule(d.head))
      return RewriteHit{cr->rhs, StepKind::Compose, cr->id};
    return std::nullopt;
  }
  const Rule* r = rules.find_by_lhs(t);
  if (r == nullptr) return std::nullopt;
  if (ctx.sym(d.head).kind == SymbolKind::AssocFun) {
    if (ord_for_condition != nullptr &&
        term_compare(ctx, *ord_for_condition, other, r->rhs) != Cmp::Greater)
      return std::nullopt;
    return RewriteHit{r->rhs, StepKind::Simplify, r->id};
  }
  return RewriteHit{r->rhs, StepKind::Collapse, r->id};
}

using StepFn =
    std::function<void(StepKind, std::uint32_t rule_id, TermId l, TermId r)>;

// Full rule-only normal form of a flat term; no orientation side conditions
// (rewriting a rule's right-hand side or checking joinability).
inline TermId normalize_flat_by_rules(Context& ctx, TermId t,
                                      const RuleSet& rules,
                                      const StepFn& on_step = {}) {
  for (;;) {
    if (auto hit = rewrite_inner_once(ctx, t, rules, ctx.terms)) {
      t = hit->result;
      if (on_step) on_step(hit->kind, hit->rule_id, t, kNoTerm);
      continue;
    }
    if (auto hit = rewrite_whole_once(ctx, t, rules, nullptr, kNoTerm)) {
      t = hit->result;
      if (on_step) on_step(hit->kind, hit->rule_id, t, kNoTerm);
      continue;
    }
    return t;
  }
}

struct ContractResult {
  bool deleted = false;
  TermId lhs = kNoTerm;
  TermId rhs = kNoTerm;
};

// Contract an equation to fixpoint against the active rules: SIMPLIFY on
// argument strings (with the whole-word side condition), COLLAPSE on
// constants inside either side, COMPOSE on constant sides, DELETE when the
// sides coincide.
inline ContractResult contract(Context& ctx, TermId l, TermId r,
                               const RuleSet& rules, const OrderingConfig& ord,
                               const StepFn& on_step = {}) {
  for (;;) {
    if (l == r) {
      if (on_step) on_step(StepKind::Delete, 0xffffffffu, l, r);
      return ContractResult{true, l, r};
    }
    bool changed = false;
    for (TermId* side : {&l, &r}) {
      while (auto hit = rewrite_inner_once(ctx, *side, rules, ctx.terms)) {
        *side = hit->result;
        changed = true;
        if (on_step) on_step(hit->kind, hit->rule_id, l, r);
      }
    }
    if (auto hit = rewrite_whole_once(ctx, l, rules, &ord, r)) {
      l = hit->result;
      changed = true;
      if (on_step) on_step(hit->kind, hit->rule_id, l, r);
    } else if (auto hit2 = rewrite_whole_once(ctx, r, rules, &ord, l)) {
      r = hit2->result;
      changed = true;
      if (on_step) on_step(hit2->kind, hit2->rule_id, l, r);
    }
    if (l == r) {
      if (on_step) on_step(StepKind::Delete, 0xffffffffu, l, r);
      return ContractResult{true, l, r};
    }
    if (!changed) return ContractResult{false, l, r};
  }
}

// Critical pairs modulo associativity between two rules with the same
// associative head: proper prefix/suffix overlaps in both orders plus strict
// subword containment. Trivial conclusions are dropped.
inline std::vector<FlatEquation> deduce(Context& ctx, const Rule& r1,
                                        const Rule& r2) {
  std::vector<FlatEquation> out;
  if (ctx.is_const(r1.lhs) || ctx.is_const(r2.lhs)) return out;
  SymbolId h = ctx.head(r1.lhs);
  if (h != ctx.head(r2.lhs) || ctx.sym(h).kind != SymbolKind::AssocFun)
    return out;

  std::unordered_set<std::uint64_t> seen;
  auto emit = [&](TermId a, TermId b) {
    if (a == b) return;
    FlatEquation e{a, b};
    if (seen.insert(eq_key(e)).second) out.push_back(e);
  };

  auto overlap = [&](const Rule& a, const Rule& b) {
    Word wa = word_of(ctx, a.lhs);
    Word wb = word_of(ctx, b.lhs);
    std::size_t kmax = std::min(wa.size(), wb.size()) - 1;
    for (std::size_t k = 1; k <= kmax; ++k) {
      if (!std::equal(wa.end() - static_cast<std::ptrdiff_t>(k), wa.end(),
                      wb.begin()))
        continue;
      Word left(wa.begin(), wa.end() - static_cast<std::ptrdiff_t>(k));
      for (SymbolId c : detail::rhs_letters(ctx, b)) left.push_back(c);
      Word right = detail::rhs_letters(ctx, a);
      right.insert(right.end(), wb.begin() + static_cast<std::ptrdiff_t>(k),
                   wb.end());
      emit(term_of_word_or_const(ctx, h, left),
           term_of_word_or_const(ctx, h, right));
    }
  };
  auto contain = [&](const Rule& a, const Rule& b) {
    Word wa = word_of(ctx, a.lhs);
    Word wb = word_of(ctx, b.lhs);
    if (wb.size() >= wa.size()) return;
    for (std::size_t p = 0; p + wb.size() <= wa.size(); ++p) {
      if (!std::equal(wb.begin(), wb.end(),
                      wa.begin() + static_cast<std::ptrdiff_t>(p)))
        continue;
      Word nw(wa.begin(), wa.begin() + static_cast<std::ptrdiff_t>(p));
      for (SymbolId c : detail::rhs_letters(ctx, b)) nw.push_back(c);
      nw.insert(nw.end(), wa.begin() + static_cast<std::ptrdiff_t>(p + wb.size()),
                wa.end());
      emit(term_of_word_or_const(ctx, h, nw), a.rhs);
    }
  };

  overlap(r1, r2);
  if (r1.id != r2.id) overlap(r2, r1);
  contain(r1, r2);
  if (r1.id != r2.id) contain(r2, r1);
  return out;
}

// Would `by` rewrite a constant occurrence or proper subword of lhs?
inline bool lhs_proper_reducible(const Context& ctx, TermId lhs,
                                 const Rule& by) {
  const TermData& d = ctx.term(lhs);
  if (d.args.empty()) return false;
  if (ctx.is_const(by.lhs)) {
    for (TermId a : d.args)
      if (ctx.is_const(a) && ctx.head(a) == ctx.head(by.lhs)) return true;
    return false;
  }
  if (ctx.head(by.lhs) != d.head ||
      ctx.sym(d.head).kind != SymbolKind::AssocFun)
    return false;
  Word u = word_of(ctx, by.lhs);
  if (u.size() >= d.args.size()) return false;
  for (std::size_t p = 0; p + u.size() <= d.args.size(); ++p)
    if (detail::word_matches_at(ctx, d.args, p, u)) return true;
  return false;
}

inline bool is_unit_shaped(const Context& ctx, const TheoryConfig& cfg,
                           const Rule& r) {
  if (ctx.is_const(r.lhs) || !ctx.is_const(r.rhs)) return false;
  const GroupSig* sig = cfg.sig_for_assoc(ctx.head(r.lhs));
  if (sig == nullptr) return false;
  const std::vector<TermId>& args = ctx.term(r.lhs).args;
  if (args.size() != 2) return false;
  if (!ctx.is_const(args[0]) || !ctx.is_const(args[1])) return false;
  bool right = ctx.head(args[1]) == sig->unit && args[0] == r.rhs;
  bool left = ctx.head(args[0]) == sig->unit && args[1] == r.rhs;
  return right || left;
}

// ---------------------------------------------------------------------------

enum class CompletionStatus { Completed, Diverged };

struct CompletionStats {
  std::uint64_t deduce = 0;
  std::uint64_t simplify = 0;
  std::uint64_t collapse = 0;
  std::uint64_t compose = 0;
  std::uint64_t deleted = 0;
  std::uint64_t oriented = 0;
};

struct TraceEntry {
  std::uint64_t step;
  StepKind kind;
  std::vector<std::uint32_t> premises;
  std::string conclusion;
};

inline std::string render_trace_entry(const TraceEntry& e) {
  std::string s = "#" + std::to_string(e.step) + " " + step_name(e.kind) + " ";
  for (std::size_t i = 0; i < e.premises.size(); ++i) {
    if (i) s += ",";
    s += "r" + std::to_string(e.premises[i]);
  }
  s += " => " + e.conclusion;
  return s;
}

struct CompletionOptions {
  std::uint64_t fuel = 100000;
  bool unit_deduce = true;  // DEDUCE against unit-table rules
  bool collect_trace = false;
};

struct CompletionResult {
  CompletionStatus status = CompletionStatus::Diverged;
  std::vector<Rule> rules;
  std::uint64_t steps_used = 0;
  CompletionStats stats;
  std::vector<TraceEntry> trace;
};

class OrientationError : public std::logic_error {
 public:
  explicit OrientationError(const std::string& what) : std::logic_error(what) {}
};

namespace detail {

class Completer {
 public:
  Completer(Context& ctx, const OrderingConfig& ord, const TheoryConfig& cfg,
            CompletionOptions opts)
      : ctx_(ctx), ord_(ord), cfg_(cfg), opts_(opts) {
    active_.bind(ctx_.terms);
  }

  CompletionResult run(const AugmentedProblem& p) {
    for (const FlatEquation& e : p.s_e) enqueue(e.lhs, e.rhs);
    while (!passive_.empty()) {
      if (steps_ >= opts_.fuel) return finish(CompletionStatus::Diverged);
      Passive cur = *passive_.begin();
      passive_.erase(passive_.begin());
      queued_.erase(eq_key(FlatEquation{cur.l, cur.r}));
      process(cur.l, cur.r);
    }
    return finish(CompletionStatus::Completed);
  }

 private:
  struct Passive {
    std::uint32_t size;
    std::uint64_t age;
    TermId l, r;
    bool operator<(const Passive& o) const {
      if (size != o.size) return size < o.size;
      return age < o.age;
    }
  };

  CompletionResult finish(CompletionStatus st) {
    CompletionResult res;
    res.status = st;
    res.rules = active_.rules();
    res.steps_used = steps_;
    res.stats = stats_;
    res.trace = std::move(trace_);
    return res;
  }

  void enqueue(TermId l, TermId r) {
    if (l == r) return;
    std::uint64_t key = eq_key(FlatEquation{l, r});
    if (!queued_.insert(key).second) return;
    passive_.insert(
        Passive{term_size(ctx_, l) + term_size(ctx_, r), next_age_++, l, r});
  }

  void record(StepKind kind, std::vector<std::uint32_t> premises,
              const std::string& conclusion) {
    ++steps_;
    switch (kind) {
      case StepKind::Deduce: ++stats_.deduce; break;
      case StepKind::Simplify: ++stats_.simplify; break;
      case StepKind::Collapse: ++stats_.collapse; break;
      case StepKind::Compose: ++stats_.compose; break;
      case StepKind::Delete: ++stats_.deleted; break;
    }
    if (opts_.collect_trace)
      trace_.push_back(TraceEntry{steps_, kind, std::move(premises), conclusion});
  }

  void process(TermId l, TermId r) {
    ContractResult c = contract(
        ctx_, l, r, active_, ord_,
        [&](StepKind k, std::uint32_t rid, TermId nl, TermId nr) {
          std::vector<std::uint32_t> prem;
          if (rid != 0xffffffffu) prem.push_back(rid);
          record(k, std::move(prem),
                 render_term(ctx_, nl) + " = " + render_term(ctx_, nr));
        });
    if (c.deleted) return;

    Cmp cmp = term_compare(ctx_, ord_, c.lhs, c.rhs);
    TermId lhs, rhs;
    if (cmp == Cmp::Greater) {
      lhs = c.lhs;
      rhs = c.rhs;
    } else if (cmp == Cmp::Less) {
      lhs = c.rhs;
      rhs = c.lhs;
    } else {
      throw OrientationError("cannot orient equation " +
                             render_term(ctx_, c.lhs) + " = " +
                             render_term(ctx_, c.rhs));
    }
    insert_rule(lhs, rhs);
  }

  void insert_rule(TermId lhs, TermId rhs) {
    if (const Rule* ex = active_.find_by_lhs(lhs)) {
      if (ex->rhs == rhs) return;
      Rule old = *ex;
      active_.erase(old.id);
      enqueue(old.lhs, old.rhs);
    }
    Rule nr{lhs, rhs, next_id_++};
    active_.insert(nr);
    ++stats_.oriented;

    // Inter-reduction: demote rules whose lhs became reducible, rewrite
    // right-hand sides in place.
    for (std::uint32_t id : active_.ids()) {
      if (id == nr.id) continue;
      const Rule* other = active_.get(id);
      if (other == nullptr) continue;
      if (lhs_proper_reducible(ctx_, other->lhs, nr)) {
        Rule demoted = *other;
        active_.erase(id);
        enqueue(demoted.lhs, demoted.rhs);
        continue;
      }
      TermId nrhs = normalize_flat_by_rules(
          ctx_, other->rhs, active_,
          [&](StepKind, std::uint32_t rid, TermId cur, TermId) {
            record(StepKind::Compose, {rid},
                   render_term(ctx_, other->lhs) + " -> " +
                       render_term(ctx_, cur));
          });
      if (nrhs != other->rhs) active_.update_rhs(id, nrhs);
    }

    // Critical pairs with the new rule (including self-overlaps).
    if (!ctx_.is_const(nr.lhs) &&
        ctx_.sym(ctx_.head(nr.lhs)).kind == SymbolKind::AssocFun) {
      const Rule* self = active_.get(nr.id);
      if (self == nullptr) return;  // demoted against itself: impossible
      std::vector<std::uint32_t> partner_ids =
          active_.assoc_ids(ctx_.head(nr.lhs));
      for (std::uint32_t pid : partner_ids) {
        const Rule* partner = active_.get(pid);
        if (partner == nullptr) continue;
        if (!opts_.unit_deduce && (is_unit_shaped(ctx_, cfg_, *self) ||
                                   is_unit_shaped(ctx_, cfg_, *partner)))
          continue;
        for (const FlatEquation& e : deduce(ctx_, *self, *partner)) {
          record(StepKind::Deduce, {self->id, partner->id},
                 render_equation(ctx_, e));
          enqueue(e.lhs, e.rhs);
        }
      }
    }
  }

  Context& ctx_;
  const OrderingConfig& ord_;
  const TheoryConfig& cfg_;
  CompletionOptions opts_;
  RuleSet active_;
  std::set<Passive> passive_;
  std::unordered_set<std::uint64_t> queued_;
  std::uint64_t steps_ = 0;
  std::uint64_t next_age_ = 0;
  std::uint32_t next_id_ = 0;
  CompletionStats stats_;
  std::vector<TraceEntry> trace_;
};

}  // namespace detail

inline CompletionResult complete(Context& ctx, const AugmentedProblem& p,
                                 const OrderingConfig& ord,
                                 const TheoryConfig& cfg,
                                 CompletionOptions opts = {}) {
  if (opts.fuel == 0) throw std::invalid_argument("fuel must be positive");
  detail::Completer c(ctx, ord, cfg, opts);
  return c.run(p);
}

// ---------------------------------------------------------------------------
// Post-completion checks.

inline RuleSet make_rule_set(const Context& ctx, const std::vector<Rule>& rules) {
  RuleSet rs;
  rs.bind(ctx.terms);
  for (const Rule& r : rules) rs.insert(r);
  return rs;
}

// Every rule's right-hand side, and every proper subterm (including proper
// subwords) of its left-hand side, is irreducible by the whole system.
inline bool is_reduced(Context& ctx, const std::vector<Rule>& rules) {
  RuleSet rs = make_rule_set(ctx, rules);
  for (const Rule& r : rules) {
    if (normalize_flat_by_rules(ctx, r.rhs, rs) != r.rhs) return false;
    for (const Rule& by : rules)
      if (lhs_proper_reducible(ctx, r.lhs, by)) return false;
  }
  return true;
}

// All critical pairs of the system: word overlaps and containments between
// associative rules, and constant rules rewriting single occurrences inside
// other left-hand sides.
inline std::vector<FlatEquation> all_critical_pairs(
    Context& ctx, const std::vector<Rule>& rules) {
  std::vector<FlatEquation> out;
  for (std::size_t i = 0; i < rules.size(); ++i)
    for (std::size_t j = i; j < rules.size(); ++j)
      for (const FlatEquation& e : deduce(ctx, rules[i], rules[j]))
        out.push_back(e);
  for (const Rule& cd : rules) {
    if (!ctx.is_const(cd.lhs)) continue;
    for (const Rule& r : rules) {
      if (ctx.is_const(r.lhs)) continue;
      const TermData& d = ctx.term(r.lhs);
      for (std::size_t k = 0; k < d.args.size(); ++k) {
        if (d.args[k] != cd.lhs) continue;
        std::vector<TermId> args = d.args;
        args[k] = cd.rhs;
        out.push_back(
            FlatEquation{ctx.terms.make(d.head, std::move(args)), r.rhs});
      }
    }
  }
  return out;
}

inline bool locally_confluent(Context& ctx, const std::vector<Rule>& rules) {
  RuleSet rs = make_rule_set(ctx, rules);
  for (const FlatEquation& e : all_critical_pairs(ctx, rules)) {
    TermId a = normalize_flat_by_rules(ctx, e.lhs, rs);
    TermId b = normalize_flat_by_rules(ctx, e.rhs, rs);
    if (a != b) return false;
  }
  return true;
}

}  // namespace groundcc
