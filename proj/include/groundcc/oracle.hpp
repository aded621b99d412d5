// Independent ground truth: bounded congruence closure of E modulo the
// active axioms, by exhaustive enumeration of flat ground terms up to a size
// bound and fixpoint closure under replacement of equivalent segments.
//
// Deliberately shares only the term core with the pipeline: no completion,
// no theory normalization. Associativity is built in by representing every
// term in flat form and closing under replacement of contiguous argument
// segments; the unit and inverse axioms are instantiated over the universe.
#pragma once

#include <cstdint>
#include <deque>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "groundcc/term.hpp"
#include "groundcc/theory_config.hpp"

namespace groundcc {

enum class OracleVerdict { Equal, NotDerivedAtBound };

struct OracleOptions {
  std::uint32_t size_bound = 6;
  std::uint64_t max_terms = 400000;
};

class BoundedUniverse {
 public:
  BoundedUniverse(Context& ctx, std::vector<SymbolId> funs,
                  std::vector<SymbolId> consts, OracleOptions opts)
      : ctx_(ctx), opts_(opts) {
    build(funs, consts);
  }

  bool contains(TermId t) const { return index_.count(t) != 0; }

  // Equal iff merged at this bound; NotDerivedAtBound is not a disproof.
  OracleVerdict decide(TermId s, TermId t) {
    int a = index_of(assoc_flatten(ctx_, s));
    int b = index_of(assoc_flatten(ctx_, t));
    return find(a) == find(b) ? OracleVerdict::Equal
                              : OracleVerdict::NotDerivedAtBound;
  }

  // Stable identifier of t's class at the current fixpoint.
  int class_of(TermId t) { return find(index_of(assoc_flatten(ctx_, t))); }

  void merge_terms(TermId s, TermId t) {
    merge(index_of(assoc_flatten(ctx_, s)), index_of(assoc_flatten(ctx_, t)));
    drain();
  }

  std::size_t term_count() const { return terms_.size(); }

  std::size_t class_count() {
    std::size_t n = 0;
    for (std::size_t i = 0; i < terms_.size(); ++i)
      if (find(static_cast<int>(i)) == static_cast<int>(i)) ++n;
    return n;
  }

  const std::vector<TermId>& terms() const { return terms_; }

 private:
  struct Occurrence {
    int term;          // index of the containing term
    std::uint16_t lo;  // segment [lo, hi] of its argument list
    std::uint16_t hi;
  };

  void build(const std::vector<SymbolId>& funs,
             const std::vector<SymbolId>& consts) {
    std::vector<std::vector<TermId>> by_size(opts_.size_bound + 1);
    for (SymbolId c : consts) add_term(ctx_.terms.make(c), by_size, 1);
    for (std::uint32_t s = 2; s <= opts_.size_bound; ++s) {
      for (SymbolId f : funs) {
        const Symbol& sym = ctx_.sym(f);
        if (sym.kind == SymbolKind::AssocFun) {
          std::vector<TermId> args;
          enum_assoc(f, s - 1, by_size, args, s);
        } else {
          std::vector<TermId> args;
          enum_fixed(f, sym.arity, s - 1, by_size, args, s);
        }
      }
    }
    // Segment occurrences, used to propagate merges.
    occ_.resize(terms_.size());
    parent_.resize(terms_.size());
    std::iota(parent_.begin(), parent_.end(), 0);
    members_.resize(terms_.size());
    by_size_bucket_.resize(terms_.size());
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      members_[i] = {static_cast<int>(i)};
      by_size_bucket_[i].assign(opts_.size_bound + 1, {});
      by_size_bucket_[i][size_of_[i]].push_back(static_cast<int>(i));
    }
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      const TermData& d = ctx_.term(terms_[i]);
      if (d.args.empty()) continue;
      bool assoc = ctx_.sym(d.head).kind == SymbolKind::AssocFun;
      std::size_t n = d.args.size();
      for (std::size_t lo = 0; lo < n; ++lo) {
        std::size_t hi_max = assoc ? n - 1 : lo;
        for (std::size_t hi = lo; hi <= hi_max; ++hi) {
          if (assoc && lo == 0 && hi == n - 1) continue;  // full segment
          TermId seg = segment_term(static_cast<int>(i), lo, hi);
          int segidx = index_of(seg);
          occ_[static_cast<std::size_t>(find(segidx))].push_back(
              Occurrence{static_cast<int>(i), static_cast<std::uint16_t>(lo),
                         static_cast<std::uint16_t>(hi)});
        }
      }
    }
  }

  void add_term(TermId t, std::vector<std::vector<TermId>>& by_size,
                std::uint32_t size) {
    if (index_.count(t)) return;
    if (terms_.size() >= opts_.max_terms)
      throw std::runtime_error(
          "oracle universe exceeds " + std::to_string(opts_.max_terms) +
          " terms; lower the size bound");
    index_.emplace(t, static_cast<int>(terms_.size()));
    terms_.push_back(t);
    size_of_.push_back(size);
    by_size[size].push_back(t);
  }

  void enum_assoc(SymbolId f, std::uint32_t budget,
                  std::vector<std::vector<TermId>>& by_size,
                  std::vector<TermId>& args, std::uint32_t total) {
    if (budget == 0) {
      if (args.size() >= 2)
        add_term(ctx_.terms.make(f, args), by_size, total);
      return;
    }
    std::uint32_t reserve = args.empty() ? 1 : 0;  // at least two arguments
    for (std::uint32_t s = 1; s + reserve <= budget; ++s) {
      for (TermId a : by_size[s]) {
        if (ctx_.head(a) == f) continue;  // flat form
        args.push_back(a);
        enum_assoc(f, budget - s, by_size, args, total);
        args.pop_back();
      }
    }
  }

  void enum_fixed(SymbolId f, std::uint32_t remaining_arity,
                  std::uint32_t budget,
                  std::vector<std::vector<TermId>>& by_size,
                  std::vector<TermId>& args, std::uint32_t total) {
    if (remaining_arity == 0) {
      if (budget == 0) add_term(ctx_.terms.make(f, args), by_size, total);
      return;
    }
    for (std::uint32_t s = 1; s + (remaining_arity - 1) <= budget; ++s) {
      for (TermId a : by_size[s]) {
        args.push_back(a);
        enum_fixed(f, remaining_arity - 1, budget - s, by_size, args, total);
        args.pop_back();
      }
    }
  }

  TermId segment_term(int term, std::size_t lo, std::size_t hi) {
    const TermData& d = ctx_.term(terms_[static_cast<std::size_t>(term)]);
    if (lo == hi) return d.args[lo];
    std::vector<TermId> args(d.args.begin() + static_cast<std::ptrdiff_t>(lo),
                             d.args.begin() + static_cast<std::ptrdiff_t>(hi) +
                                 1);
    return ctx_.terms.make(d.head, std::move(args));
  }

  // Replace segment [lo,hi] of term by x, flattening if x shares the head.
  TermId splice(int term, std::size_t lo, std::size_t hi, TermId x) {
    const TermData& d = ctx_.term(terms_[static_cast<std::size_t>(term)]);
    std::vector<TermId> args(d.args.begin(),
                             d.args.begin() + static_cast<std::ptrdiff_t>(lo));
    bool assoc = ctx_.sym(d.head).kind == SymbolKind::AssocFun;
    if (assoc && ctx_.head(x) == d.head)
      for (TermId inner : ctx_.term(x).args) args.push_back(inner);
    else
      args.push_back(x);
    args.insert(args.end(),
                d.args.begin() + static_cast<std::ptrdiff_t>(hi) + 1,
                d.args.end());
    return ctx_.terms.make(d.head, std::move(args));
  }

  int index_of(TermId t) const {
    auto it = index_.find(t);
    if (it == index_.end())
      throw std::out_of_range("term outside the oracle universe: " +
                              render_term(ctx_, t));
    return it->second;
  }

  int find(int a) {
    while (parent_[static_cast<std::size_t>(a)] != a) {
      parent_[static_cast<std::size_t>(a)] =
          parent_[static_cast<std::size_t>(
              parent_[static_cast<std::size_t>(a)])];
      a = parent_[static_cast<std::size_t>(a)];
    }
    return a;
  }

  void merge(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (members_[static_cast<std::size_t>(a)].size() <
        members_[static_cast<std::size_t>(b)].size())
      std::swap(a, b);
    // b is the smaller class; its occurrences are reprocessed.
    parent_[static_cast<std::size_t>(b)] = a;
    auto& ma = members_[static_cast<std::size_t>(a)];
    auto& mb = members_[static_cast<std::size_t>(b)];
    ma.insert(ma.end(), mb.begin(), mb.end());
    for (std::uint32_t s = 0; s <= opts_.size_bound; ++s) {
      auto& ba = by_size_bucket_[static_cast<std::size_t>(a)][s];
      auto& bb = by_size_bucket_[static_cast<std::size_t>(b)][s];
      ba.insert(ba.end(), bb.begin(), bb.end());
      bb.clear();
      bb.shrink_to_fit();
    }
    auto& oa = occ_[static_cast<std::size_t>(a)];
    auto& ob = occ_[static_cast<std::size_t>(b)];
    for (const Occurrence& o : ob) pending_.push_back(o);
    oa.insert(oa.end(), ob.begin(), ob.end());
    ob.clear();
    ob.shrink_to_fit();
    mb.clear();
    mb.shrink_to_fit();
  }

  void process(const Occurrence& o) {
    int t = o.term;
    std::uint32_t tsize = size_of_[static_cast<std::size_t>(t)];
    TermId seg = segment_term(t, o.lo, o.hi);
    std::uint32_t segsize = term_size(ctx_, seg);
    int segroot = find(index_of(seg));
    // Any replacement must keep the spliced term within the bound; with a
    // same-head candidate one application symbol is absorbed.
    std::uint32_t cap = opts_.size_bound - tsize + segsize + 1;
    if (cap > opts_.size_bound) cap = opts_.size_bound;
    // Snapshot: merges below reshape the buckets. Members joining the class
    // afterwards reach this pair through their own occurrence lists.
    std::vector<int> candidates;
    for (std::uint32_t s = 1; s <= cap; ++s)
      for (int xi : by_size_bucket_[static_cast<std::size_t>(segroot)][s])
        candidates.push_back(xi);
    for (int xi : candidates) {
      TermId x = terms_[static_cast<std::size_t>(xi)];
      if (x == seg) continue;
      TermId spliced = splice(t, o.lo, o.hi, x);
      auto it = index_.find(spliced);
      if (it == index_.end()) continue;
      merge(t, it->second);
    }
  }

  void drain() {
    while (!pending_.empty()) {
      Occurrence o = pending_.front();
      pending_.pop_front();
      process(o);
    }
  }

  Context& ctx_;
  OracleOptions opts_;
  std::vector<TermId> terms_;
  std::vector<std::uint32_t> size_of_;
  std::unordered_map<TermId, int> index_;
  std::vector<int> parent_;
  std::vector<std::vector<int>> members_;
  std::vector<std::vector<Occurrence>> occ_;
  std::vector<std::vector<std::vector<int>>> by_size_bucket_;
  std::deque<Occurrence> pending_;
};

// Fixpoint of: the input equations, every unit/inverse axiom instance whose
// terms fit the universe, and congruence (segment replacement) within it.
inline BoundedUniverse oracle_closure(
    Context& ctx, const std::vector<std::pair<TermId, TermId>>& eqs,
    const TheoryConfig& cfg, std::vector<SymbolId> funs,
    std::vector<SymbolId> consts, OracleOptions opts = {}) {
  BoundedUniverse u(ctx, std::move(funs), std::move(consts), opts);

  for (const GroupSig& sig : cfg.sigs) {
    TermId unit = ctx.terms.make(sig.unit);
    std::vector<TermId> snapshot = u.terms();
    for (TermId t : snapshot) {
      auto app = [&](TermId a, TermId b) {
        std::vector<TermId> args;
        for (TermId x : {a, b}) {
          if (ctx.head(x) == sig.assoc)
            for (TermId inner : ctx.term(x).args) args.push_back(inner);
          else
            args.push_back(x);
        }
        return ctx.terms.make(sig.assoc, std::move(args));
      };
      TermId tu = app(t, unit);
      if (u.contains(tu)) u.merge_terms(tu, t);
      TermId ut = app(unit, t);
      if (u.contains(ut)) u.merge_terms(ut, t);
      if (sig.has_inverse()) {
        TermId it = ctx.terms.make(sig.inverse, {t});
        if (u.contains(it)) {
          TermId ti = app(t, it);
          if (u.contains(ti)) u.merge_terms(ti, unit);
          TermId itt = app(it, t);
          if (u.contains(itt)) u.merge_terms(itt, unit);
        }
      }
    }
  }
  for (const auto& [l, r] : eqs) u.merge_terms(l, r);
  return u;
}

inline OracleVerdict oracle_decide(BoundedUniverse& u, TermId s, TermId t) {
  return u.decide(s, t);
}

}  // namespace groundcc
