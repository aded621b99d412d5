// Problem-file parsing: theory blocks, symbol declarations, equations, and
// decide queries.
//
// Grammar (one directive per line, '#' starts a comment):
//   theory group <f> <i> <unit>
//   theory monoid <f> <unit>
//   assoc <f>            free associative symbol
//   fun <g> <arity>
//   const <c> [<c> ...]
//   precedence <c> [<c> ...]   descending; units may be omitted
//   eq <term> = <term>
//   decide <term> = <term>
// Terms are prefix applications f(t1,...,tn); identifiers match
// [A-Za-z0-9][A-Za-z0-9_]* (digit-leading names cover units like 1 or 1_f);
// names c1, c2, ... are reserved for fresh constants.
#pragma once

#include <cctype>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "groundcc/term.hpp"
#include "groundcc/theory_config.hpp"

namespace groundcc {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int col, const std::string& msg)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(col) +
                           ": " + msg),
        line(line),
        col(col) {}
  int line;
  int col;
};

struct ProblemFile {
  TheoryConfig theory;
  std::vector<SymbolId> constants;      // declaration order, units included
  std::vector<SymbolId> units;          // theory declaration order
  std::vector<SymbolId> functions;      // non-constant symbols, decl order
  std::optional<std::vector<SymbolId>> precedence;  // descending, full
  std::vector<std::pair<TermId, TermId>> equations;
  std::vector<std::pair<TermId, TermId>> queries;
};

namespace detail {

struct LineScanner {
  std::string_view text;
  int line;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= text.size();
  }
  int col() const { return static_cast<int>(pos) + 1; }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(line, static_cast<int>(pos) + 1, msg);
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos;
  }
  std::string ident() {
    skip_ws();
    std::size_t start = pos;
    if (pos >= text.size() ||
        !std::isalnum(static_cast<unsigned char>(text[pos])))
      fail("expected identifier");
    ++pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) ||
            text[pos] == '_'))
      ++pos;
    return std::string(text.substr(start, pos - start));
  }
  std::uint32_t number() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (pos == start) fail("expected number");
    return static_cast<std::uint32_t>(
        std::stoul(std::string(text.substr(start, pos - start))));
  }
};

inline bool reserved_name(const std::string& name) {
  if (name.size() < 2 || name[0] != 'c') return false;
  for (std::size_t i = 1; i < name.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(name[i]))) return false;
  return true;
}

class ProblemParser {
 public:
  ProblemParser(Context& ctx) : ctx_(ctx) {}

  ProblemFile parse(std::string_view text) {
    std::vector<std::pair<int, std::string>> lines;
    {
      std::string cur;
      int lineno = 1;
      for (std::size_t i = 0; i <= text.size(); ++i) {
        if (i == text.size() || text[i] == '\n') {
          auto hash = cur.find('#');
          if (hash != std::string::npos) cur.erase(hash);
          lines.emplace_back(lineno, cur);
          cur.clear();
          ++lineno;
        } else {
          cur += text[i];
        }
      }
    }
    for (auto& [lineno, content] : lines) {
      LineScanner sc{content, lineno};
      if (sc.eof()) continue;
      directive(sc);
    }
    finish();
    return std::move(problem_);
  }

 private:
  void directive(LineScanner& sc) {
    std::string kw = sc.ident();
    if (kw == "theory")
      theory_block(sc);
    else if (kw == "assoc")
      declare_assoc(sc);
    else if (kw == "fun")
      declare_fun(sc);
    else if (kw == "const")
      declare_consts(sc);
    else if (kw == "precedence")
      precedence_line(sc);
    else if (kw == "eq")
      equation_line(sc, problem_.equations);
    else if (kw == "decide")
      equation_line(sc, problem_.queries);
    else
      sc.fail("unknown directive '" + kw + "'");
    if (!sc.eof()) sc.fail("trailing input");
  }

  SymbolId declare(LineScanner& sc, Symbol sym) {
    if (reserved_name(sym.name))
      sc.fail("identifier '" + sym.name + "' is reserved for fresh constants");
    if (ctx_.symbols.find(sym.name))
      sc.fail("symbol '" + sym.name + "' declared twice");
    return ctx_.symbols.add(std::move(sym));
  }

  void theory_block(LineScanner& sc) {
    std::string kind = sc.ident();
    int theory_id = static_cast<int>(problem_.theory.sigs.size());
    if (kind == "group") {
      std::string f = sc.ident(), i = sc.ident(), u = sc.ident();
      GroupSig sig;
      sig.assoc = declare(sc, Symbol{f, SymbolKind::AssocFun, 0, theory_id});
      sig.inverse =
          declare(sc, Symbol{i, SymbolKind::InverseFun, 1, theory_id});
      sig.unit = declare(sc, Symbol{u, SymbolKind::UnitConst, 0, theory_id});
      problem_.theory.sigs.push_back(sig);
      problem_.constants.push_back(sig.unit);
      problem_.units.push_back(sig.unit);
      problem_.functions.push_back(sig.assoc);
      problem_.functions.push_back(sig.inverse);
      ++groups_;
    } else if (kind == "monoid") {
      std::string f = sc.ident(), u = sc.ident();
      GroupSig sig;
      sig.assoc = declare(sc, Symbol{f, SymbolKind::AssocFun, 0, theory_id});
      sig.unit = declare(sc, Symbol{u, SymbolKind::UnitConst, 0, theory_id});
      problem_.theory.sigs.push_back(sig);
      problem_.constants.push_back(sig.unit);
      problem_.units.push_back(sig.unit);
      problem_.functions.push_back(sig.assoc);
      ++monoids_;
    } else {
      sc.fail("theory kind must be 'group' or 'monoid'");
    }
  }

  void declare_assoc(LineScanner& sc) {
    do {
      std::string name = sc.ident();
      problem_.functions.push_back(
          declare(sc, Symbol{name, SymbolKind::AssocFun, 0, -1}));
    } while (!sc.eof());
  }

  void declare_fun(LineScanner& sc) {
    std::string name = sc.ident();
    std::uint32_t arity = sc.number();
    if (arity == 0) sc.fail("use 'const' for nullary symbols");
    problem_.functions.push_back(
        declare(sc, Symbol{name, SymbolKind::UninterpretedFun, arity, -1}));
  }

  void declare_consts(LineScanner& sc) {
    do {
      std::string name = sc.ident();
      problem_.constants.push_back(
          declare(sc, Symbol{name, SymbolKind::OriginalConst, 0, -1}));
    } while (!sc.eof());
  }

  void precedence_line(LineScanner& sc) {
    if (problem_.precedence) sc.fail("precedence given twice");
    std::vector<SymbolId> order;
    do {
      std::string name = sc.ident();
      auto id = ctx_.symbols.find(name);
      if (!id || !ctx_.symbols.is_constant(*id))
        sc.fail("precedence lists unknown constant '" + name + "'");
      order.push_back(*id);
    } while (!sc.eof());
    problem_.precedence = std::move(order);
  }

  void equation_line(LineScanner& sc,
                     std::vector<std::pair<TermId, TermId>>& out) {
    TermId l = term(sc);
    sc.expect('=');
    TermId r = term(sc);
    out.emplace_back(l, r);
  }

  TermId term(LineScanner& sc) {
    std::string name = sc.ident();
    auto id = ctx_.symbols.find(name);
    if (!id) sc.fail("unknown symbol '" + name + "'");
    const Symbol& sym = ctx_.symbols[*id];
    if (sc.peek() != '(') {
      if (!is_constant_kind(sym.kind))
        sc.fail("function symbol '" + name + "' needs arguments");
      return ctx_.terms.make(*id);
    }
    sc.expect('(');
    std::vector<TermId> args;
    for (;;) {
      args.push_back(term(sc));
      if (sc.peek() == ',') {
        sc.expect(',');
        continue;
      }
      break;
    }
    sc.expect(')');
    if (is_constant_kind(sym.kind))
      sc.fail("constant '" + name + "' applied to arguments");
    if (sym.kind == SymbolKind::AssocFun && args.size() < 2)
      sc.fail("associative symbol '" + name + "' needs at least 2 arguments");
    if (sym.kind != SymbolKind::AssocFun && args.size() != sym.arity)
      sc.fail("arity mismatch for '" + name + "': expected " +
              std::to_string(sym.arity) + ", got " +
              std::to_string(args.size()));
    return ctx_.terms.make(*id, std::move(args));
  }

  void finish() {
    if (monoids_ > 1 || (monoids_ > 0 && groups_ > 0))
      throw ParseError(0, 0,
                       "unsupported theory combination: at most one monoid "
                       "block, not mixed with group blocks");
    if (groups_ >= 2)
      problem_.theory.mode = TheoryMode::MultiGroup;
    else if (groups_ == 1)
      problem_.theory.mode = TheoryMode::Group;
    else if (monoids_ == 1)
      problem_.theory.mode = TheoryMode::Monoid;
    else
      problem_.theory.mode = TheoryMode::Semigroup;
    validate_theory(problem_.theory);
    validate_precedence();
  }

  void validate_precedence() {
    if (!problem_.precedence) return;
    std::vector<SymbolId>& order = *problem_.precedence;
    std::unordered_set<SymbolId> listed(order.begin(), order.end());
    if (listed.size() != order.size())
      throw ParseError(0, 0, "precedence lists a constant twice");
    // Units are forced below every non-unit; missing units are appended in
    // theory declaration order.
    bool seen_unit = false;
    for (SymbolId c : order) {
      bool is_unit = problem_.theory.is_unit_const(c);
      if (is_unit) seen_unit = true;
      if (!is_unit && seen_unit)
        throw ParseError(0, 0, "unit constants must come last in precedence");
    }
    for (SymbolId c : problem_.constants) {
      if (listed.count(c)) continue;
      if (!problem_.theory.is_unit_const(c))
        throw ParseError(0, 0, "precedence misses constant '" +
                                   ctx_.symbols[c].name + "'");
      order.push_back(c);
    }
  }

  Context& ctx_;
  ProblemFile problem_;
  int groups_ = 0;
  int monoids_ = 0;
};

}  // namespace detail

inline ProblemFile parse_problem(Context& ctx, std::string_view text) {
  detail::ProblemParser parser(ctx);
  return parser.parse(text);
}

}  // namespace groundcc
