#include "doctest.h"
#include "gen.hpp"
#include "oracle.hpp"
#include "rtc/errors.hpp"
#include "rtc/parser.hpp"

using namespace rtc;

namespace {

FiniteModel chain_model() {
  FiniteModel m;
  m.size = 3;
  m.constants = {{"c0", 0}, {"c1", 1}, {"c2", 2}};
  PredicateTable e{2, std::vector<char>(9, 0)};
  e.holds[m.index({0, 1})] = 1;
  e.holds[m.index({1, 2})] = 1;
  m.predicates["E"] = e;
  return m;
}

Signature chain_sig() {
  Signature sig;
  sig.constants = {"c0", "c1", "c2"};
  sig.predicates = {{"E", 2}};
  return sig;
}

}  // namespace

TEST_CASE("rtc with equal endpoints always holds") {
  auto m = chain_model();
  auto f = parse_formula("(rtc x y. E(x,y) /\\ ~E(x,y))(c1, c1)", chain_sig());
  CHECK(evaluate(m, {}, f));
  CHECK(degree(m, {}, f) == 0);
}

TEST_CASE("rtc reachability along a chain") {
  auto m = chain_model();
  auto sig = chain_sig();
  auto fwd = parse_formula("(rtc x y. E(x,y))(c0, c2)", sig);
  auto back = parse_formula("(rtc x y. E(x,y))(c2, c0)", sig);
  CHECK(evaluate(m, {}, fwd));
  CHECK_FALSE(evaluate(m, {}, back));
  CHECK(oracle::rtc_by_warshall(m, {}, fwd));
  CHECK_FALSE(oracle::rtc_by_warshall(m, {}, back));
  CHECK(degree(m, {}, fwd) == 2);
  CHECK(oracle::degree_by_powers(m, {}, fwd) == 2);
  CHECK_FALSE(degree(m, {}, back).has_value());
  auto chain = minimal_chain(m, {}, fwd);
  REQUIRE(chain);
  CHECK(*chain == std::vector<int>{0, 1, 2});
}

TEST_CASE("evaluation errors") {
  auto m = chain_model();
  auto sig = chain_sig();
  CHECK_THROWS_AS(evaluate(m, {}, parse_formula("E(c0, z)", sig)), UnboundVariable);
  Signature other;
  ParseOptions opts{true, false};
  CHECK_THROWS_AS(evaluate(m, {{"x", 0}}, parse_formula("q(x)", other, opts)), SignatureMismatch);
  CHECK_THROWS_AS(degree(m, {}, parse_formula("E(c0, c1)", sig)), NotApplicable);
}

TEST_CASE("quantifiers range over the domain") {
  auto m = chain_model();
  auto sig = chain_sig();
  CHECK(evaluate(m, {}, parse_formula("exists x. E(x, c2)", sig)));
  CHECK_FALSE(evaluate(m, {}, parse_formula("forall x. exists y. E(x, y)", sig)));
  CHECK(evaluate(m, {}, parse_formula("forall x. (rtc u v. E(u,v))(c0, x)", sig)));
  CHECK(evaluate(m, {{"n", 2}}, parse_formula("(rtc u v. E(u,v))(c1, n)", sig)));
}

TEST_CASE("counter-model search examples") {
  Signature sig;
  sig.constants = {"a", "b"};
  sig.predicates = {{"p", 1}, {"E", 2}};
  ModelSearchOptions opts;
  opts.max_size = 1;
  auto cm = find_counter_model(parse_sequent("|- p(a)", sig), {}, opts);
  REQUIRE(cm);
  CHECK(cm->model.size == 1);
  CHECK(cm->model.predicates.at("p").holds == std::vector<char>{0});

  for (int k = 1; k <= 4; ++k) {
    opts.max_size = k;
    CHECK_FALSE(find_counter_model(parse_sequent("p(a) |- p(a)", sig), {}, opts));
  }

  opts.max_size = 3;
  auto s = parse_sequent("(rtc x y. E(x,y))(a,b) |- (rtc x y. E(x,y))(b,a)", sig);
  auto asym = find_counter_model(s, {}, opts);
  REQUIRE(asym);
  CHECK(asym->model.size == 2);
  CHECK(invalidates(asym->model, asym->valuation, s));
}

TEST_CASE("counter-model search enumerates exhaustively at the first size") {
  // Brute-force check: every size-2 model is scanned before size 3.
  Signature sig;
  sig.predicates = {{"E", 2}};
  auto s = parse_sequent("(rtc x y. E(x,y))(a,b) |- (rtc x y. E(x,y))(b,a)", sig);
  std::size_t hits = 0;
  oracle::for_each_model(2, {}, {{"E", 2}}, {}, [&](const FiniteModel& m) {
    oracle::for_each_valuation(2, {"a", "b"}, [&](const Valuation& v) { hits += invalidates(m, v, s); });
  });
  CHECK(hits > 0);
  ModelSearchOptions opts;
  opts.max_size = 2;
  auto cm = find_counter_model(s, {}, opts);
  REQUIRE(cm);
  CHECK(cm->model.size == 2);
}

TEST_CASE("theory restricts the admissible models") {
  Signature sig;
  ParseOptions po{true, false};
  auto goal = parse_sequent("|- p(a)", sig, po);
  auto ax = parse_sequent("|- p(x)", sig, po);
  ModelSearchOptions opts;
  opts.max_size = 3;
  CHECK_FALSE(find_counter_model(goal, {ax}, opts));
  opts.budget = 3;
  CHECK_THROWS_AS(find_counter_model(parse_sequent("p(x), p(y) |- p(z)", sig, po), {ax}, opts), BudgetExceeded);
}

TEST_CASE("model dump round trip") {
  FiniteModel m = chain_model();
  m.functions["s"] = FunctionTable{1, {1, 2, 0}};
  m.predicates["Q"] = PredicateTable{1, {0, 0, 0}};
  std::string text = dump_model(m);
  CHECK(text ==
        "model { size = 3; const c0 = 0; const c1 = 1; const c2 = 2; fn s = [1,2,0]; pred E/2 = {(0,1),(1,2)}; "
        "pred Q/1 = {}; }");
  FiniteModel back = parse_model(text);
  CHECK(dump_model(back) == text);
  auto short_form = parse_model("model { size = 3; const a = 0; fn s = [1,2,0]; pred E = {(0,1)}; }");
  CHECK(short_form.functions.at("s").arity == 1);
  CHECK(short_form.predicates.at("E").arity == 2);
  CHECK_THROWS_AS(parse_model("model { size = 2; fn s = [1,2,0]; }"), SignatureMismatch);
}

TEST_CASE("property: BFS evaluation and degree agree with the Warshall oracle") {
  testgen::FormulaGen gen(77);
  gen.vars = {"x", "y", "z"};
  std::mt19937 rng(5);
  for (int i = 0; i < 60; ++i) {
    auto body = gen.formula(2);
    auto f = Formula::rtc("x", "y", body, gen.term(1), gen.term(1));
    for (int n = 1; n <= 4; ++n) {
      for (int r = 0; r < 12; ++r) {
        auto m = oracle::random_model(rng, n, {"a", "b"}, {{"p", 1}, {"E", 2}}, {{"f", 1}});
        oracle::for_each_valuation(n, {"x", "y", "z", "u"}, [&](const Valuation& v) {
          bool bfs = evaluate(m, v, f);
          REQUIRE(bfs == oracle::rtc_by_warshall(m, v, f));
          auto d = degree(m, v, f);
          REQUIRE(d.has_value() == bfs);
          REQUIRE(d == oracle::degree_by_powers(m, v, f));
        });
      }
    }
  }
}
