// Ground terms, hash-consed in an arena, plus associative flattening.
//
// Terms are immutable and interned: two structurally equal terms always get
// the same TermId, so equality is an integer comparison and terms can be used
// as hash keys throughout the pipeline.
#pragma once

#include <cassert>
#include <cstdint>
#include <deque>
#include <functional>
#include <string>
#include <unordered_map>
#include <vector>

#include "groundcc/symbol.hpp"

namespace groundcc {

using TermId = std::uint32_t;
inline constexpr TermId kNoTerm = 0xffffffffu;

struct TermData {
  SymbolId head;
  std::vector<TermId> args;  // empty iff head is a constant
};

class TermArena {
 public:
  explicit TermArena(const SymbolTable& symbols) : symbols_(&symbols) {}

  TermId make(SymbolId head, std::vector<TermId> args = {}) {
    const Symbol& sym = (*symbols_)[head];
    switch (sym.kind) {
      case SymbolKind::UninterpretedFun:
      case SymbolKind::InverseFun:
        if (args.size() != sym.arity)
          throw std::invalid_argument("arity mismatch for " + sym.name);
        break;
      case SymbolKind::AssocFun:
        if (args.size() < 2)
          throw std::invalid_argument("associative symbol " + sym.name +
                                      " needs at least 2 arguments");
        break;
      default:
        if (!args.empty())
          throw std::invalid_argument("constant " + sym.name +
                                      " applied to arguments");
        break;
    }
    Key key{head, args};
    auto it = index_.find(key);
    if (it != index_.end()) return it->second;
    TermId id = static_cast<TermId>(terms_.size());
    terms_.push_back(TermData{head, std::move(key.args)});
    index_.emplace(Key{head, terms_.back().args}, id);
    return id;
  }

  const TermData& operator[](TermId id) const { return terms_.at(id); }
  std::size_t size() const { return terms_.size(); }

  // The owning Context re-points the arena at its own symbol table when it
  // is copied or moved.
  void rebind(const SymbolTable& symbols) { symbols_ = &symbols; }

 private:
  struct Key {
    SymbolId head;
    std::vector<TermId> args;
    bool operator==(const Key& o) const {
      return head == o.head && args == o.args;
    }
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const {
      std::size_t h = std::hash<SymbolId>()(k.head);
      for (TermId a : k.args) h = h * 1000003u + a;
      return h;
    }
  };

  const SymbolTable* symbols_;
  std::deque<TermData> terms_;  // deque: stable references across make()
  std::unordered_map<Key, TermId, KeyHash> index_;
};

// One bundle for the symbol table and the arena; every module takes this.
struct Context {
  SymbolTable symbols;
  TermArena terms{symbols};

  Context() = default;
  Context(const Context& o) : symbols(o.symbols), terms(o.terms) {
    terms.rebind(symbols);
  }
  Context(Context&& o) noexcept
      : symbols(std::move(o.symbols)), terms(std::move(o.terms)) {
    terms.rebind(symbols);
  }
  Context& operator=(const Context& o) {
    symbols = o.symbols;
    terms = o.terms;
    terms.rebind(symbols);
    return *this;
  }
  Context& operator=(Context&& o) noexcept {
    symbols = std::move(o.symbols);
    terms = std::move(o.terms);
    terms.rebind(symbols);
    return *this;
  }

  const Symbol& sym(SymbolId id) const { return symbols[id]; }
  const TermData& term(TermId id) const { return terms[id]; }
  bool is_const(TermId id) const { return terms[id].args.empty(); }
  SymbolId head(TermId id) const { return terms[id].head; }
};

inline bool is_assoc_headed(const Context& ctx, TermId t) {
  return ctx.sym(ctx.head(t)).kind == SymbolKind::AssocFun;
}

// Normal form modulo the associativity axioms: no argument of an associative
// symbol is headed by that same symbol. Idempotent.
inline TermId assoc_flatten(Context& ctx, TermId t) {
  const TermData& d = ctx.term(t);
  if (d.args.empty()) return t;
  std::vector<TermId> args;
  args.reserve(d.args.size());
  bool assoc = ctx.sym(d.head).kind == SymbolKind::AssocFun;
  bool changed = false;
  for (TermId a : d.args) {
    TermId fa = assoc_flatten(ctx, a);
    if (fa != a) changed = true;
    if (assoc && ctx.head(fa) == d.head) {
      changed = true;
      for (TermId inner : ctx.term(fa).args) args.push_back(inner);
    } else {
      args.push_back(fa);
    }
  }
  if (!changed) return t;
  return ctx.terms.make(d.head, std::move(args));
}

inline std::uint32_t term_size(const Context& ctx, TermId t) {
  const TermData& d = ctx.term(t);
  std::uint32_t n = 1;
  for (TermId a : d.args) n += term_size(ctx, a);
  return n;
}

inline std::uint32_t term_depth(const Context& ctx, TermId t) {
  const TermData& d = ctx.term(t);
  std::uint32_t n = 0;
  for (TermId a : d.args) n = std::max(n, 1 + term_depth(ctx, a));
  return n;
}

inline void render_term(const Context& ctx, TermId t, std::string& out) {
  const TermData& d = ctx.term(t);
  out += ctx.sym(d.head).name;
  if (d.args.empty()) return;
  out += '(';
  for (std::size_t i = 0; i < d.args.size(); ++i) {
    if (i) out += ',';
    render_term(ctx, d.args[i], out);
  }
  out += ')';
}

inline std::string render_term(const Context& ctx, TermId t) {
  std::string s;
  render_term(ctx, t, s);
  return s;
}

// A word over the constant alphabet; the argument string of a flat
// associative term.
using Word = std::vector<SymbolId>;

inline bool is_constant_word(const Context& ctx, TermId t) {
  for (TermId a : ctx.term(t).args)
    if (!ctx.is_const(a)) return false;
  return true;
}

// Argument string of a fully flat associative term (all arguments constants).
inline Word word_of(const Context& ctx, TermId t) {
  Word w;
  w.reserve(ctx.term(t).args.size());
  for (TermId a : ctx.term(t).args) {
    assert(ctx.is_const(a));
    w.push_back(ctx.head(a));
  }
  return w;
}

inline TermId term_of_word(Context& ctx, SymbolId assoc_head, const Word& w) {
  assert(w.size() >= 2);
  std::vector<TermId> args;
  args.reserve(w.size());
  for (SymbolId c : w) args.push_back(ctx.terms.make(c));
  return ctx.terms.make(assoc_head, std::move(args));
}

// f-bar: a one-letter word stands for that constant, longer words for f(w).
inline TermId term_of_word_or_const(Context& ctx, SymbolId assoc_head,
                                    const Word& w) {
  assert(!w.empty());
  if (w.size() == 1) return ctx.terms.make(w[0]);
  return term_of_word(ctx, assoc_head, w);
}

}  // namespace groundcc
