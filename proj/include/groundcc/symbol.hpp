// Symbols: uninterpreted functions, associative functions, theory symbols,
// and the three flavours of constants.
#pragma once

#include <cstdint>
#include <deque>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace groundcc {

using SymbolId = std::uint32_t;
inline constexpr SymbolId kNoSymbol = 0xffffffffu;

enum class SymbolKind : std::uint8_t {
  UninterpretedFun,  // fixed arity >= 1
  AssocFun,          // variadic once flattened (arity >= 2)
  InverseFun,        // unary, bound to a theory
  UnitConst,         // bound to a theory
  OriginalConst,
  FreshConst,        // introduced by flattening; carries its allocation index
};

inline bool is_constant_kind(SymbolKind k) {
  return k == SymbolKind::UnitConst || k == SymbolKind::OriginalConst ||
         k == SymbolKind::FreshConst;
}

struct Symbol {
  std::string name;
  SymbolKind kind = SymbolKind::OriginalConst;
  std::uint32_t arity = 0;        // UninterpretedFun/InverseFun only; 0 for constants
  int theory = -1;                // binding for AssocFun/InverseFun/UnitConst
  std::uint32_t fresh_index = 0;  // FreshConst only, 1-based, strictly increasing
};

class SymbolTable {
 public:
  SymbolId add(Symbol s) {
    if (by_name_.count(s.name) != 0)
      throw std::invalid_argument("duplicate symbol name: " + s.name);
    SymbolId id = static_cast<SymbolId>(symbols_.size());
    by_name_.emplace(s.name, id);
    symbols_.push_back(std::move(s));
    return id;
  }

  const Symbol& operator[](SymbolId id) const { return symbols_.at(id); }

  std::optional<SymbolId> find(std::string_view name) const {
    auto it = by_name_.find(std::string(name));
    if (it == by_name_.end()) return std::nullopt;
    return it->second;
  }

  bool is_constant(SymbolId id) const {
    return is_constant_kind(symbols_.at(id).kind);
  }

  std::size_t size() const { return symbols_.size(); }

 private:
  std::deque<Symbol> symbols_;  // stable references across add()
  std::unordered_map<std::string, SymbolId> by_name_;
};

}  // namespace groundcc
