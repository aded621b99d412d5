// Pipeline orchestration: flatten, augment, complete, decide, and report.
#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "groundcc/augment.hpp"
#include "groundcc/completion.hpp"
#include "groundcc/decide.hpp"
#include "groundcc/flatten.hpp"
#include "groundcc/problem.hpp"

namespace groundcc {

struct RunFlags {
  std::uint64_t fuel = 100000;
  bool trace = false;
  bool json = false;
  bool show_presentation = false;
  int enumerate_nf = -1;  // max word length, negative = off
  bool skip_unit_deduce = false;
};

struct QueryReport {
  std::string lhs;
  std::string rhs;
  std::string verdict;  // "equal" | "not-equal" | "undecided"
};

struct Report {
  std::string status;  // "completed" | "diverged"
  std::uint64_t steps = 0;
  std::vector<std::string> rules;
  std::vector<QueryReport> queries;
  std::vector<std::string> trace;
  std::optional<std::vector<std::string>> presentation;
  std::optional<std::vector<std::string>> normal_forms;
  int exit_code = 0;

  // Intermediate products, for callers that inspect the phases.
  std::vector<FlatEquation> eprime_phase1;
  AugmentedProblem augmented;
  CompletionResult completion;
  ConstRegistry registry;
};

// Default precedence: declaration order, earlier greater; unit constants
// below every non-unit, ordered among themselves by theory declaration.
inline std::vector<SymbolId> default_precedence(const ProblemFile& pf) {
  std::vector<SymbolId> desc;
  for (SymbolId c : pf.constants)
    if (std::find(pf.units.begin(), pf.units.end(), c) == pf.units.end())
      desc.push_back(c);
  for (SymbolId u : pf.units) desc.push_back(u);
  return desc;
}

inline OrderingConfig ordering_for(const ProblemFile& pf) {
  std::vector<SymbolId> desc =
      pf.precedence ? *pf.precedence : default_precedence(pf);
  return make_ordering(desc);
}

inline std::string render_word(const Context& ctx, const Word& w) {
  if (w.empty()) return "<empty>";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ' ';
    s += ctx.sym(w[i]).name;
  }
  return s;
}

inline Report run(Context& ctx, const ProblemFile& pf, RunFlags flags = {}) {
  Report rep;
  OrderingConfig ord = ordering_for(pf);

  ConstRegistry reg;
  for (SymbolId c : pf.constants) reg.add_original(c);

  rep.eprime_phase1 = phase1(ctx, pf.equations, pf.theory, reg);
  rep.augmented = augment(ctx, rep.eprime_phase1, reg, pf.theory, ord);
  rep.registry = reg;

  CompletionOptions copts;
  copts.fuel = flags.fuel;
  copts.unit_deduce = !flags.skip_unit_deduce;
  copts.collect_trace = flags.trace;
  rep.completion = complete(ctx, rep.augmented, ord, pf.theory, copts);

  rep.steps = rep.completion.steps_used;
  rep.status = rep.completion.status == CompletionStatus::Completed
                   ? "completed"
                   : "diverged";
  for (const Rule& r : rep.completion.rules)
    rep.rules.push_back(render_rule(ctx, r));
  if (flags.trace)
    for (const TraceEntry& e : rep.completion.trace)
      rep.trace.push_back(render_trace_entry(e));

  CompletedSystem cs =
      CompletedSystem::from(ctx, rep.completion, pf.theory, ord);
  for (const auto& [l, r] : pf.queries) {
    QueryReport q;
    q.lhs = render_term(ctx, l);
    q.rhs = render_term(ctx, r);
    if (cs.status != CompletionStatus::Completed)
      q.verdict = "undecided";
    else
      q.verdict = decide_eq(ctx, cs, l, r) ? "equal" : "not-equal";
    rep.queries.push_back(std::move(q));
  }

  if (flags.show_presentation) {
    MonoidPresentation p = extract_presentation(ctx, rep.augmented, pf.theory);
    std::vector<std::string> lines;
    std::string gens = "generators:";
    for (SymbolId g : p.generators) gens += " " + ctx.sym(g).name;
    lines.push_back(gens);
    for (const auto& [l, r] : p.relations)
      lines.push_back(render_word(ctx, l) + " = " + render_word(ctx, r));
    rep.presentation = std::move(lines);
  }

  if (flags.enumerate_nf >= 0) {
    if (pf.theory.mode != TheoryMode::Group)
      throw std::logic_error("normal-form enumeration needs group mode");
    if (cs.status != CompletionStatus::Completed)
      throw std::logic_error("undecided: completion diverged");
    MonoidPresentation p = extract_presentation(ctx, rep.augmented, pf.theory);
    NormalFormEnumeration nf = enumerate_normal_forms(
        ctx, cs, pf.theory.sigs.at(0), p.generators,
        static_cast<std::size_t>(flags.enumerate_nf));
    std::vector<std::string> lines;
    for (const Word& w : nf.words) lines.push_back(render_word(ctx, w));
    lines.push_back(nf.new_at_max_len ? "max length added new words"
                                      : "saturated below max length");
    rep.normal_forms = std::move(lines);
  }

  rep.exit_code = rep.completion.status == CompletionStatus::Completed ? 0 : 2;
  return rep;
}

inline std::string render_report_text(const Report& rep) {
  std::ostringstream os;
  os << "status: " << rep.status << "\n";
  os << "steps: " << rep.steps << "\n";
  os << "rules (" << rep.rules.size() << "):\n";
  for (const std::string& r : rep.rules) os << "  " << r << "\n";
  for (const QueryReport& q : rep.queries)
    os << "decide " << q.lhs << " = " << q.rhs << ": " << q.verdict << "\n";
  if (rep.presentation) {
    os << "presentation:\n";
    for (const std::string& line : *rep.presentation) os << "  " << line << "\n";
  }
  if (rep.normal_forms) {
    os << "normal forms:\n";
    for (const std::string& line : *rep.normal_forms)
      os << "  " << line << "\n";
  }
  if (!rep.trace.empty()) {
    os << "trace:\n";
    for (const std::string& line : rep.trace) os << "  " << line << "\n";
  }
  return os.str();
}

inline nlohmann::ordered_json report_json(const Report& rep) {
  nlohmann::ordered_json j;
  j["status"] = rep.status;
  j["steps"] = rep.steps;
  j["rules"] = rep.rules;
  nlohmann::ordered_json queries = nlohmann::ordered_json::array();
  for (const QueryReport& q : rep.queries)
    queries.push_back({{"lhs", q.lhs}, {"rhs", q.rhs}, {"verdict", q.verdict}});
  j["queries"] = queries;
  if (rep.presentation) j["presentation"] = *rep.presentation;
  if (rep.normal_forms) j["normal_forms"] = *rep.normal_forms;
  if (!rep.trace.empty()) j["trace"] = rep.trace;
  return j;
}

}  // namespace groundcc
