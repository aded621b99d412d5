// Ground flat equations: the three shapes the completion works on.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "groundcc/term.hpp"

namespace groundcc {

enum class FlatKind { CConst, DFlat, AFlat };

// Unordered pair of ground fully flat terms. D-flat equations keep the
// function-headed side on the left.
struct FlatEquation {
  TermId lhs = kNoTerm;
  TermId rhs = kNoTerm;
  bool operator==(const FlatEquation& o) const {
    return (lhs == o.lhs && rhs == o.rhs) || (lhs == o.rhs && rhs == o.lhs);
  }
};

// Key identifying the equation as an unordered pair.
inline std::uint64_t eq_key(const FlatEquation& e) {
  TermId a = e.lhs < e.rhs ? e.lhs : e.rhs;
  TermId b = e.lhs < e.rhs ? e.rhs : e.lhs;
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

// Constant, or a depth-1 application of constants (argument string length
// >= 2 under an associative head).
inline bool is_fully_flat_term(const Context& ctx, TermId t) {
  if (ctx.is_const(t)) return true;
  for (TermId a : ctx.term(t).args)
    if (!ctx.is_const(a)) return false;
  return true;
}

inline FlatKind flat_kind(const Context& ctx, const FlatEquation& e) {
  bool cl = ctx.is_const(e.lhs);
  bool cr = ctx.is_const(e.rhs);
  if (!is_fully_flat_term(ctx, e.lhs) || !is_fully_flat_term(ctx, e.rhs))
    throw std::logic_error("equation sides are not fully flat");
  if (cl && cr) return FlatKind::CConst;
  if (cl || cr) return FlatKind::DFlat;
  if (ctx.head(e.lhs) != ctx.head(e.rhs) ||
      ctx.sym(ctx.head(e.lhs)).kind != SymbolKind::AssocFun)
    throw std::logic_error("ill-formed flat equation: " +
                           render_term(ctx, e.lhs) + " ~ " +
                           render_term(ctx, e.rhs));
  return FlatKind::AFlat;
}

inline std::string render_equation(const Context& ctx, const FlatEquation& e) {
  return render_term(ctx, e.lhs) + " = " + render_term(ctx, e.rhs);
}

}  // namespace groundcc
