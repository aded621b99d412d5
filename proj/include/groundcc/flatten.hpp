// Phase I: turn a set of ground equations into constant, D-flat, and A-flat
// equations over the original constants plus fresh names for subterms.
#pragma once

#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "groundcc/equation.hpp"
#include "groundcc/term.hpp"
#include "groundcc/theory.hpp"

namespace groundcc {

// Names flattened ground subterms with fresh constants. Injective: a subterm
// is named once and the name reused everywhere; allocation indices strictly
// increase. Frozen after Phase II: no constant may be added later.
class ConstRegistry {
 public:
  void add_original(SymbolId c) { originals_.push_back(c); }

  SymbolId name_for(Context& ctx, TermId flat_subterm) {
    auto it = naming_.find(flat_subterm);
    if (it != naming_.end()) return it->second;
    if (frozen_)
      throw std::logic_error("no new constant may be added after Phase II");
    std::string name = "c" + std::to_string(next_index_);
    SymbolId c = ctx.symbols.add(
        Symbol{name, SymbolKind::FreshConst, 0, -1, next_index_});
    ++next_index_;
    naming_.emplace(flat_subterm, c);
    fresh_.push_back(c);
    return c;
  }

  const std::vector<SymbolId>& originals() const { return originals_; }
  const std::vector<SymbolId>& fresh() const { return fresh_; }

  std::vector<SymbolId> all_constants() const {
    std::vector<SymbolId> all = originals_;
    all.insert(all.end(), fresh_.begin(), fresh_.end());
    return all;
  }

  // Flattened subterm a fresh constant stands for, if any.
  TermId preimage(SymbolId fresh_const) const {
    for (const auto& [t, c] : naming_)
      if (c == fresh_const) return t;
    return kNoTerm;
  }

  void freeze() { frozen_ = true; }

 private:
  std::unordered_map<TermId, SymbolId> naming_;
  std::vector<SymbolId> originals_;
  std::vector<SymbolId> fresh_;
  std::uint32_t next_index_ = 1;
  bool frozen_ = false;
};

namespace detail {

class FlatBuilder {
 public:
  FlatBuilder(Context& ctx, ConstRegistry& reg) : ctx_(ctx), reg_(reg) {}

  void emit(FlatEquation e) {
    if (e.lhs == e.rhs) return;
    if (seen_.insert(eq_key(e)).second) out_.push_back(e);
  }

  // Replace every non-constant argument of t by its name, emitting the
  // defining D-flat equations bottom-up, left to right.
  TermId flatten_args(TermId t) {
    const TermData& d = ctx_.term(t);
    std::vector<TermId> args;
    args.reserve(d.args.size());
    for (TermId a : d.args) args.push_back(ctx_.terms.make(name_of(a)));
    return ctx_.terms.make(d.head, std::move(args));
  }

  // Constant naming t; emits t' = c for a newly named t'.
  SymbolId name_of(TermId t) {
    if (ctx_.is_const(t)) return ctx_.head(t);
    TermId depth1 = flatten_args(t);
    SymbolId c = reg_.name_for(ctx_, depth1);
    emit(FlatEquation{depth1, ctx_.terms.make(c)});
    return c;
  }

  void add_equation(TermId l, TermId r) {
    bool cl = ctx_.is_const(l);
    bool cr = ctx_.is_const(r);
    if (cl && cr) {
      emit(FlatEquation{l, r});
      return;
    }
    if (cl || cr) {
      TermId fun = cl ? r : l;
      TermId cst = cl ? l : r;
      emit(FlatEquation{flatten_args(fun), cst});
      return;
    }
    if (ctx_.head(l) == ctx_.head(r) &&
        ctx_.sym(ctx_.head(l)).kind == SymbolKind::AssocFun) {
      // A-flat equations are kept whole, never decomposed.
      emit(FlatEquation{flatten_args(l), flatten_args(r)});
      return;
    }
    SymbolId cl2 = name_of(l);
    SymbolId cr2 = name_of(r);
    if (cl2 != cr2)
      emit(FlatEquation{ctx_.terms.make(cl2), ctx_.terms.make(cr2)});
  }

  std::vector<FlatEquation> take() { return std::move(out_); }

 private:
  Context& ctx_;
  ConstRegistry& reg_;
  std::vector<FlatEquation> out_;
  std::unordered_set<std::uint64_t> seen_;
};

}  // namespace detail

// Phase I. Flatten associatively, normalize by the theory's fixed system,
// drop trivial equations, then name nonflat subterms.
inline std::vector<FlatEquation> phase1(
    Context& ctx, const std::vector<std::pair<TermId, TermId>>& input,
    const TheoryConfig& cfg, ConstRegistry& reg) {
  detail::FlatBuilder builder(ctx, reg);
  for (const auto& [l0, r0] : input) {
    TermId l = theory_normalize(ctx, assoc_flatten(ctx, l0), cfg);
    TermId r = theory_normalize(ctx, assoc_flatten(ctx, r0), cfg);
    if (l == r) continue;
    builder.add_equation(l, r);
  }
  return builder.take();
}

}  // namespace groundcc
