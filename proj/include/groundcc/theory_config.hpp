// Which axiom set is active and which symbols it interprets.
#pragma once

#include <stdexcept>
#include <vector>

#include "groundcc/symbol.hpp"

namespace groundcc {

enum class TheoryMode { Semigroup, Monoid, Group, MultiGroup };

// Interpreted symbols of one monoid/group block. A monoid signature has no
// inverse symbol.
struct GroupSig {
  SymbolId assoc = kNoSymbol;
  SymbolId unit = kNoSymbol;
  SymbolId inverse = kNoSymbol;
  bool has_inverse() const { return inverse != kNoSymbol; }
};

struct TheoryConfig {
  TheoryMode mode = TheoryMode::Semigroup;
  std::vector<GroupSig> sigs;  // empty for Semigroup; one per group block

  const GroupSig* sig_for_assoc(SymbolId f) const {
    for (const GroupSig& s : sigs)
      if (s.assoc == f) return &s;
    return nullptr;
  }
  const GroupSig* sig_for_inverse(SymbolId i) const {
    for (const GroupSig& s : sigs)
      if (s.has_inverse() && s.inverse == i) return &s;
    return nullptr;
  }
  bool is_unit_const(SymbolId c) const {
    for (const GroupSig& s : sigs)
      if (s.unit == c) return true;
    return false;
  }
};

// Signatures of distinct blocks must be pairwise disjoint.
inline void validate_theory(const TheoryConfig& cfg) {
  for (std::size_t i = 0; i < cfg.sigs.size(); ++i)
    for (std::size_t j = i + 1; j < cfg.sigs.size(); ++j) {
      const GroupSig& a = cfg.sigs[i];
      const GroupSig& b = cfg.sigs[j];
      for (SymbolId x : {a.assoc, a.unit, a.inverse})
        for (SymbolId y : {b.assoc, b.unit, b.inverse})
          if (x != kNoSymbol && x == y)
            throw std::invalid_argument(
                "theory signatures share a function symbol");
    }
}

}  // namespace groundcc
