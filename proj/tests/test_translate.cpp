#include "doctest.h"
#include "rtc/errors.hpp"
#include "rtc/parser.hpp"
#include "rtc/theory.hpp"
#include "rtc/tracecheck.hpp"
#include "rtc/translate.hpp"

using namespace rtc;

namespace {

std::string repo(const std::string& rel) { return std::string(RTC_SOURCE_DIR) + "/" + rel; }

const ParseOptions kInfer{true, true};

FormulaPtr f(const std::string& text, Signature sig = {}) { return parse_formula(text, sig, kInfer); }

Signature arith_sig() {
  Signature sig;
  sig.constants = {"0"};
  sig.functions = {{"s", 1}, {"plus", 2}};
  return sig;
}

void check_accepted(const ProofGraph& g) {
  auto errs = validate_structure(g, g.theory);
  for (const auto& e : errs) MESSAGE(describe(e));
  CHECK(errs.empty());
  CHECK(check_global_trace_condition(g).accepted());
}

}  // namespace

TEST_CASE("induction fragment closed by a theory axiom") {
  Signature sig;
  sig.constants = {"a", "b"};
  sig.predicates = {{"p", 1}, {"E", 2}};
  auto frag = derive_induction({}, {}, f("(rtc x y. E(x,y))(a, b)", sig), f("p(x)", sig), "x", "x", "y");
  auto& g = frag.graph;
  CHECK(print(g.node(g.root).sequent) == print(parse_sequent("p(a), (rtc x y. E(x,y))(a, b) |- p(b)", sig, kInfer)));
  CHECK(print(g.node(frag.open).sequent) == "E(x, y), p(x) |- p(y)");
  CHECK(validate_structure(g, true).empty());

  g.theory.sig = sig;
  g.theory.axioms = {parse_sequent("p(x), E(x,y) |- p(y)", sig, kInfer)};
  auto leaf = g.node(frag.open).sequent;
  g.nodes.erase(frag.open);
  g.add_internal(frag.open, RuleInstance{RuleId::TheoryAxiom, leaf, {}, {}}, {});
  check_accepted(g);

  auto cycles = enumerate_basic_cycles(g);
  REQUIRE(cycles.size() == 1);
  CHECK(cycles[0].nodes.front() == frag.companion);
  // The case split at the companion, the cut, and the substitution back.
  CHECK(cycles[0].nodes.size() == 3);
  CHECK(is_non_overlapping(g));
}

TEST_CASE("induction fragment freshness") {
  auto R = f("(rtc x y. E(x,y))(a, b)");
  CHECK_THROWS_AS(derive_induction({}, {}, R, f("p(x, v)"), "x", "x", "y", {"v", "", ""}), FreshnessViolation);
  CHECK_THROWS_AS(derive_induction({}, {}, R, f("p(x)"), "x", "x", "x"), FreshnessViolation);
  CHECK_THROWS_AS(derive_induction(FormulaSet({f("q(x)")}), {}, R, f("p(x)"), "x", "x", "y"), FreshnessViolation);
  CHECK_THROWS_AS(derive_induction({}, {}, f("p(a)"), f("p(x)"), "x", "x", "y"), NotAnRtcFormula);
  // Generated names step around whatever is already taken.
  auto frag = derive_induction(FormulaSet({f("q(v, w, z)")}), {}, R, f("p(x)"), "x", "x", "y");
  CHECK(validate_structure(frag.graph, true).empty());
}

TEST_CASE("explicit proofs become normal cyclic proofs") {
  struct Case {
    const char* file;
    std::size_t inductions;
  };
  for (auto c : {Case{"ind_step.tcp", 1}, Case{"ind_trans.tcp", 1}, Case{"ind_nested.tcp", 2}}) {
    INFO(c.file);
    auto p = load_proof(repo(std::string("corpus/") + c.file));
    REQUIRE(validate_structure(p, p.theory).empty());
    auto q = explicit_to_cyclic(p);
    check_accepted(q);
    for (const auto& [id, n] : q.nodes) CHECK((!n.internal() || n.rule.rule != RuleId::RtcInd));
    CHECK(q.node(q.root).sequent == p.node(p.root).sequent);
    CHECK(enumerate_basic_cycles(q).size() == c.inductions);
    CHECK(is_non_overlapping(q));
    CHECK(check_by_path_enumeration(q, static_cast<int>(q.nodes.size()) + 1).accepted());
  }
}

TEST_CASE("induction-free proofs pass through unchanged") {
  auto p = load_proof(repo("corpus/transitivity.tcp"));
  // Buds are rejected; strip to the finite base case instead.
  CHECK_THROWS_AS(explicit_to_cyclic(p), NotApplicable);
  ProofGraph finite;
  finite.add_internal(0, p.node(2).rule, {});
  auto q = explicit_to_cyclic(finite);
  CHECK(write_proof(q) == write_proof(finite));
}

TEST_CASE("beta translation") {
  auto cfg = BetaConfig::standard();
  Signature sig = arith_sig();
  SUBCASE("atoms are fixed") {
    auto a = f("p(s(x))", sig);
    CHECK(print(beta_translate(a, cfg)) == print(a));
  }
  SUBCASE("the ordering") {
    auto le = leq(Term::var("m"), Term::var("n"));
    CHECK(print(le) == "(rtc w u. s(w) = u)(m, n)");
    auto out = beta_translate(le, cfg);
    CHECK(print(out) ==
          "m = n \\/ (exists z. exists c. beta(c, 0, m) /\\ beta(c, s(z), n) /\\ (forall u. u = z \\/ lt(u, z) -> "
          "(exists v. exists w. beta(c, u, v) /\\ beta(c, s(u), w) /\\ s(v) = w)))");
    std::set<std::string> fv(out->free_vars().begin(), out->free_vars().end());
    CHECK(fv == std::set<std::string>{"m", "n"});
  }
  SUBCASE("nested closures leave no closure behind") {
    auto nested = f("(rtc x y. (rtc u v. s(u) = v)(x, y) /\\ ~(x = y))(0, n)", sig);
    auto out = beta_translate(nested, cfg);
    CHECK(out->key().find("rtc") == std::string::npos);
    CHECK(print(out).find("rtc") == std::string::npos);
    std::set<std::string> fv(out->free_vars().begin(), out->free_vars().end());
    CHECK(fv == std::set<std::string>{"n"});
  }
  SUBCASE("names avoid the formula's free variables") {
    auto out = beta_translate(f("(rtc x y. plus(x, z) = y)(c, u)", sig), cfg);
    std::set<std::string> fv(out->free_vars().begin(), out->free_vars().end());
    CHECK(fv == std::set<std::string>{"c", "u", "z"});
  }
  SUBCASE("tc mode spells out the strict order") {
    auto out = beta_translate(leq(Term::var("m"), Term::var("n")), BetaConfig::standard(BetaMode::Tc));
    CHECK(print(out).find("u = z \\/ ~u = z /\\ (rtc w1 u1. s(w1) = u1)(u, z) ->") != std::string::npos);
  }
  SUBCASE("signature checks") {
    CHECK_THROWS_AS(beta_translate(f("(rtc x y. g(x) = y)(0, n)"), cfg), SignatureMismatch);
    CHECK_THROWS_AS(beta_translate(f("p(k)", Signature{{"k"}, {}, {}}), cfg), SignatureMismatch);
    BetaConfig bad = cfg;
    bad.B = f("beta(c, i, k, j)");
    CHECK_THROWS_AS(beta_translate(f("p(x)"), bad), SignatureMismatch);
  }
}

TEST_CASE("binary closures through pairs") {
  Signature sig;
  sig.functions = {{"pair", 2}};
  auto phi = f("E(x1, y1) /\\ x2 = y2");
  auto V = [](const char* n) { return Term::var(n); };
  auto out = encode_rtc2("x1", "x2", "y1", "y2", phi, V("a1"), V("a2"), V("b1"), V("b2"), sig);
  auto expect = f("(rtc x y. exists x1. exists x2. exists y1. exists y2. x = <x1, x2> /\\ y = <y1, y2> /\\ "
                  "(E(x1, y1) /\\ x2 = y2))(<a1, a2>, <b1, b2>)");
  CHECK(alpha_eq(out, expect));
  // A body that ignores the components is still fine.
  CHECK_NOTHROW(encode_rtc2("x1", "x2", "y1", "y2", f("q"), V("a"), V("a"), V("b"), V("b"), sig));
  CHECK_THROWS_AS(encode_rtc2("x1", "x2", "x1", "y2", phi, V("a"), V("a"), V("b"), V("b"), sig), VariableClash);
  CHECK_THROWS_AS(encode_rtc2("x1", "x2", "y1", "y2", phi, V("a"), V("a"), V("b"), V("b"), Signature{}),
                  MissingPairSymbol);
  // Fresh binders step around the body's free variables.
  auto busy = encode_rtc2("x1", "x2", "y1", "y2", f("E(x, y)"), V("a"), V("a"), V("b"), V("b"), sig);
  CHECK(busy->name != "x");
  CHECK(busy->var2 != "y");
}

TEST_CASE("bundled arithmetic theory") {
  auto t = load_theory(repo("theories/arith.tc"));
  CHECK(t.name == "arith");
  REQUIRE(t.axioms.size() == 5);
  CHECK(print(t.axioms[0]) == "s(x) = 0 |-");
  CHECK(print(t.axioms[4]) == "|- (rtc w u. s(w) = u)(0, x)");
  CHECK(t.sig.functions.at("plus") == 2);
}
