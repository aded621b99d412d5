#include <doctest.h>

#include <random>

#include "golden.hpp"
#include "groundcc/decide.hpp"
#include "groundcc/oracle.hpp"
#include "groundcc/pipeline.hpp"

using namespace groundcc;

namespace {

CompletedSystem system_of(golden::Run& r) {
  return CompletedSystem::from(r.ctx, r.rep.completion, r.pf.theory,
                               ordering_for(r.pf));
}

TermId parse_query_side(golden::Run& r, std::size_t idx, bool lhs) {
  const auto& q = r.pf.queries.at(idx);
  return lhs ? q.first : q.second;
}

}  // namespace

TEST_CASE("normalize decides the group word-problem query") {
  golden::Run r = golden::run_problem(golden::kRunning);
  CompletedSystem cs = system_of(r);
  TermId query = parse_query_side(r, 0, true);
  TermId one = parse_query_side(r, 0, false);
  CHECK(normalize(r.ctx, cs, query) == normalize(r.ctx, cs, one));
  CHECK(decide_eq(r.ctx, cs, query, one));
}

TEST_CASE("normalize leaves irreducible constants alone") {
  golden::Run r = golden::run_problem(golden::kSemigroup);
  CompletedSystem cs = system_of(r);
  SymbolId a = *r.ctx.symbols.find("a");
  CHECK(normalize(r.ctx, cs, r.ctx.terms.make(a)) == r.ctx.terms.make(a));
}

TEST_CASE("normalize on the two-group query") {
  golden::Run r = golden::run_problem(golden::kMultiGroup);
  CompletedSystem cs = system_of(r);
  TermId lhs = parse_query_side(r, 0, true);
  CHECK(render_term(r.ctx, normalize(r.ctx, cs, lhs)) == "g(1_f,1_f)");
  CHECK(r.rep.queries[0].verdict == "equal");
}

TEST_CASE("monoid decide trace passes through the paper's terms") {
  golden::Run r = golden::run_problem(golden::kMonoid);
  CompletedSystem cs = system_of(r);
  TermId query = parse_query_side(r, 0, true);
  std::vector<TermId> trace;
  TermId nf = normalize(r.ctx, cs, query, &trace);
  CHECK(render_term(r.ctx, nf) == "a");
  std::vector<std::string> rendered;
  for (TermId t : trace) rendered.push_back(render_term(r.ctx, t));
  std::vector<std::string> expect{"f(a,c,d)", "f(a,d,d)", "f(a,d)", "a"};
  std::size_t at = 0;
  for (const std::string& s : rendered)
    if (at < expect.size() && s == expect[at]) ++at;
  CHECK(at == expect.size());
}

TEST_CASE("decide_eq simple facts") {
  golden::Run sg = golden::run_problem(golden::kSemigroup);
  CompletedSystem cs = system_of(sg);
  TermId l = parse_query_side(sg, 0, true);
  TermId rM = parse_query_side(sg, 0, false);
  CHECK(decide_eq(sg.ctx, cs, l, rM));
  CHECK(decide_eq(sg.ctx, cs, l, l));  // reflexivity
  SymbolId a = *sg.ctx.symbols.find("a");
  SymbolId b = *sg.ctx.symbols.find("b");
  CHECK_FALSE(
      decide_eq(sg.ctx, cs, sg.ctx.terms.make(a), sg.ctx.terms.make(b)));
}

TEST_CASE("decide_eq refuses diverged systems") {
  groundcc::RunFlags flags;
  flags.fuel = 500;
  golden::Run r = golden::run_problem(golden::kDivergent, flags);
  CompletedSystem cs = system_of(r);
  SymbolId a = *r.ctx.symbols.find("a");
  CHECK_THROWS_WITH_AS(
      decide_eq(r.ctx, cs, r.ctx.terms.make(a), r.ctx.terms.make(a)),
      "undecided: completion diverged", std::logic_error);
}

TEST_CASE("decide_eq is an equivalence on sampled terms") {
  golden::Run r = golden::run_problem(golden::kIntro);
  CompletedSystem cs = system_of(r);
  SymbolId f = *r.ctx.symbols.find("f");
  SymbolId i = *r.ctx.symbols.find("i");
  SymbolId h = *r.ctx.symbols.find("h");
  SymbolId a = *r.ctx.symbols.find("a");
  SymbolId b = *r.ctx.symbols.find("b");
  SymbolId unit = *r.ctx.symbols.find("1");
  auto T = [&](SymbolId s) { return r.ctx.terms.make(s); };
  std::vector<TermId> sample{
      T(a),
      T(b),
      T(unit),
      r.ctx.terms.make(h, {T(a)}),
      r.ctx.terms.make(i, {r.ctx.terms.make(i, {T(b)})}),
      r.ctx.terms.make(f, {T(a), T(b)}),
      r.ctx.terms.make(f, {r.ctx.terms.make(h, {T(a)}),
                           r.ctx.terms.make(h, {T(a)})}),
  };
  for (TermId s : sample) CHECK(decide_eq(r.ctx, cs, s, s));
  for (TermId s : sample)
    for (TermId t : sample) {
      bool st = decide_eq(r.ctx, cs, s, t);
      CHECK(st == decide_eq(r.ctx, cs, t, s));
      for (TermId u : sample)
        if (st && decide_eq(r.ctx, cs, t, u)) CHECK(decide_eq(r.ctx, cs, s, u));
    }
  // The headline fact: h(a) equals i(i(b)).
  CHECK(decide_eq(r.ctx, cs, r.ctx.terms.make(h, {T(a)}),
                  r.ctx.terms.make(i, {r.ctx.terms.make(i, {T(b)})})));
}

TEST_CASE("randomized strategies reach the deterministic normal form") {
  std::mt19937 rng(2024);
  for (const char* text : {golden::kIntro, golden::kRunning,
                           golden::kSemigroup, golden::kMonoid}) {
    golden::Run r = golden::run_problem(text);
    CompletedSystem cs = system_of(r);
    std::vector<SymbolId> consts;
    for (SymbolId c : r.pf.constants) consts.push_back(c);
    auto random_term = [&](auto&& self, int depth) -> TermId {
      std::uniform_int_distribution<int> kind(
          0, depth <= 0 || r.pf.functions.empty() ? 0 : 2);
      switch (kind(rng)) {
        case 0: {
          std::uniform_int_distribution<std::size_t> pick(0,
                                                          consts.size() - 1);
          return r.ctx.terms.make(consts[pick(rng)]);
        }
        default: {
          std::uniform_int_distribution<std::size_t> pick(
              0, r.pf.functions.size() - 1);
          SymbolId fn = r.pf.functions[pick(rng)];
          const Symbol& sym = r.ctx.sym(fn);
          std::size_t n = sym.kind == SymbolKind::AssocFun ? 2 : sym.arity;
          std::vector<TermId> args;
          for (std::size_t k = 0; k < n; ++k)
            args.push_back(self(self, depth - 1));
          return assoc_flatten(r.ctx, r.ctx.terms.make(fn, std::move(args)));
        }
      }
    };
    for (int k = 0; k < 200; ++k) {
      TermId t = random_term(random_term, 3);
      TermId nf = normalize(r.ctx, cs, t);
      CHECK(normalize_random(r.ctx, cs, t, rng) == nf);
      CHECK(normalize(r.ctx, cs, nf) == nf);
    }
  }
}

TEST_CASE("every combined rewrite step strictly decreases (D,S,W)") {
  std::mt19937 rng(77);
  for (const char* text : {golden::kIntro, golden::kRunning, golden::kDihedral,
                           golden::kMonoid, golden::kMultiGroup}) {
    golden::Run r = golden::run_problem(text);
    CompletedSystem cs = system_of(r);
    ConstRegistry reg;  // weights over the final constants
    for (SymbolId c : r.pf.constants) reg.add_original(c);
    std::vector<SymbolId> all = reg.originals();
    for (std::size_t s = 0; s < r.ctx.symbols.size(); ++s)
      if (r.ctx.symbols[static_cast<SymbolId>(s)].kind ==
          SymbolKind::FreshConst)
        all.push_back(static_cast<SymbolId>(s));
    OrderingConfig ord = ordering_for(r.pf);
    WeightMap w = make_weights(r.ctx, ord, all);
    std::vector<SymbolId> consts = all;
    auto random_term = [&](auto&& self, int depth) -> TermId {
      std::uniform_int_distribution<int> kind(0, depth <= 0 ? 0 : 2);
      if (kind(rng) == 0 || r.pf.functions.empty()) {
        std::uniform_int_distribution<std::size_t> pick(0, consts.size() - 1);
        return r.ctx.terms.make(consts[pick(rng)]);
      }
      std::uniform_int_distribution<std::size_t> pick(
          0, r.pf.functions.size() - 1);
      SymbolId fn = r.pf.functions[pick(rng)];
      const Symbol& sym = r.ctx.sym(fn);
      std::size_t n = sym.kind == SymbolKind::AssocFun ? 2 : sym.arity;
      std::vector<TermId> args;
      for (std::size_t k = 0; k < n; ++k)
        args.push_back(self(self, depth - 1));
      return assoc_flatten(r.ctx, r.ctx.terms.make(fn, std::move(args)));
    };
    for (int k = 0; k < 200; ++k) {
      TermId t = random_term(random_term, 3);
      std::vector<TermId> trace;
      normalize(r.ctx, cs, t, &trace);
      for (std::size_t s = 1; s < trace.size(); ++s) {
        Measure before = measure(r.ctx, trace[s - 1], r.pf.theory, w);
        Measure after = measure(r.ctx, trace[s], r.pf.theory, w);
        CHECK(measure_compare(before, after) > 0);
      }
    }
  }
}

TEST_CASE("extract_presentation on the dihedral example") {
  golden::Run r = golden::run_problem(golden::kDihedral);
  MonoidPresentation p =
      extract_presentation(r.ctx, r.rep.augmented, r.pf.theory);
  std::multiset<std::string> gens;
  for (SymbolId g : p.generators) gens.insert(r.ctx.sym(g).name);
  CHECK(gens == std::multiset<std::string>{"a", "c1", "c2", "c3"});
  REQUIRE(p.relations.size() == 7);
  std::multiset<std::string> rels;
  for (const auto& [l, rw] : p.relations)
    rels.insert(render_word(r.ctx, l) + " = " + render_word(r.ctx, rw));
  std::multiset<std::string> expect{
      "a a a = <empty>",      "c1 c1 = <empty>", "a c1 a c1 = <empty>",
      "a c2 = <empty>",       "c2 a = <empty>",  "c1 c3 = <empty>",
      "c3 c1 = <empty>"};
  CHECK(rels == expect);
}

TEST_CASE("extract_presentation on the intro example") {
  golden::Run r = golden::run_problem(golden::kIntro);
  MonoidPresentation p =
      extract_presentation(r.ctx, r.rep.augmented, r.pf.theory);
  std::multiset<std::string> gens;
  for (SymbolId g : p.generators) gens.insert(r.ctx.sym(g).name);
  // Recomputed by hand: R(E) = {f(c1c1)=1, f(ac2)=1, f(c2a)=1, f(c1b)=1,
  // f(bc1)=1}, so the generators are a, b, c1, c2.
  CHECK(gens == std::multiset<std::string>{"a", "b", "c1", "c2"});
  CHECK(p.relations.size() == 5);
}

TEST_CASE("extract_presentation edge cases") {
  golden::Run r = golden::run_problem(
      "theory group f i 1\n"
      "fun h 1\n"
      "const a\n"
      "eq h(a) = a\n");
  MonoidPresentation p =
      extract_presentation(r.ctx, r.rep.augmented, r.pf.theory);
  // Only the inverse products mention f.
  for (const auto& [l, rw] : p.relations) CHECK(rw.empty());

  golden::Run sg = golden::run_problem(golden::kSemigroup);
  CHECK_THROWS_AS(extract_presentation(sg.ctx, sg.rep.augmented, sg.pf.theory),
                  std::logic_error);
}

TEST_CASE("enumerate_normal_forms counts the dihedral group") {
  golden::Run r = golden::run_problem(golden::kDihedral);
  CompletedSystem cs = system_of(r);
  MonoidPresentation p =
      extract_presentation(r.ctx, r.rep.augmented, r.pf.theory);
  NormalFormEnumeration nf = enumerate_normal_forms(
      r.ctx, cs, r.pf.theory.sigs[0], p.generators, 6);
  CHECK(nf.words.size() == 6);
  CHECK_FALSE(nf.new_at_max_len);

  NormalFormEnumeration nf0 = enumerate_normal_forms(
      r.ctx, cs, r.pf.theory.sigs[0], p.generators, 0);
  REQUIRE(nf0.words.size() == 1);
  CHECK(nf0.words[0].empty());
}

TEST_CASE("enumerate_normal_forms on the trivial group") {
  golden::Run r = golden::run_problem("theory group f i 1\n");
  CompletedSystem cs = system_of(r);
  std::vector<SymbolId> no_gens;
  NormalFormEnumeration nf =
      enumerate_normal_forms(r.ctx, cs, r.pf.theory.sigs[0], no_gens, 4);
  REQUIRE(nf.words.size() == 1);
  CHECK(nf.words[0].empty());
}
