// Acceptance run: one PASS/FAIL line per criterion, with its wall time
// against the allowed budget. Exit status is nonzero when any line fails.

#include <chrono>
#include <filesystem>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "gen.hpp"
#include "instance_gen.hpp"
#include "oracle.hpp"
#include "rtc/errors.hpp"
#include "rtc/parser.hpp"
#include "rtc/prover.hpp"
#include "rtc/theory.hpp"
#include "rtc/tracecheck.hpp"
#include "rtc/translate.hpp"
#include "rule_cases.hpp"

using namespace rtc;

namespace {

std::string repo(const std::string& rel) { return std::string(RTC_SOURCE_DIR) + "/" + rel; }

struct Verdict {
  bool ok = true;
  std::ostringstream note;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) note << "failed: " << what << "; ";
    ok = ok && cond;
  }
};

int failures = 0;

void criterion(int n, const std::string& title, double limit, const std::function<void(Verdict&)>& body) {
  Verdict v;
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(v);
  } catch (const std::exception& e) {
    v.require(false, std::string("exception: ") + e.what());
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  v.require(secs < limit, "over time");
  if (!v.ok) ++failures;
  std::cout << (v.ok ? "PASS" : "FAIL") << " " << n << " " << title << " (" << std::fixed;
  std::cout.precision(2);
  std::cout << secs << "s of " << limit << "s) " << v.note.str() << std::endl;
}

struct CorpusEntry {
  std::string name;
  ProofGraph graph;
};

std::vector<CorpusEntry> load_corpus() {
  std::vector<CorpusEntry> out;
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(repo("corpus")))
    if (e.path().extension() == ".tcp") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  for (const auto& p : files) out.push_back({p.stem().string(), load_proof(p.string())});
  return out;
}

bool checker_accepts(const ProofGraph& g) {
  return validate_structure(g, g.theory).empty() && check_global_trace_condition(g).accepted();
}

std::size_t count_rule(const ProofGraph& g, RuleId r) {
  std::size_t n = 0;
  for (const auto& [id, node] : g.nodes) n += node.internal() && node.rule.rule == r;
  return n;
}

void kernel_coverage(Verdict& v) {
  testcases::Builder b;
  auto cases = testcases::rule_cases(b);
  std::set<RuleId> pos, neg;
  for (const auto& c : cases) {
    bool ok = rule_instance_ok(c.inst, b.theory(), nullptr);
    v.require(ok == c.accept, c.label);
    (c.accept ? pos : neg).insert(c.inst.rule);
  }
  for (RuleId r : all_rules()) v.require(pos.count(r) && neg.count(r), std::string(rule_name(r)) + " uncovered");
  v.note << cases.size() << " cases over " << all_rules().size() << " rules; ";
}

void descent(Verdict& v) {
  testgen::DescentTally tally;
  unsigned seed = 101;
  for (const auto& prof : testgen::descent_profiles()) {
    testgen::InstanceGen gen(seed++, prof);
    for (RuleId rule : testgen::descent_rules()) {
      int got = 0;
      for (int attempt = 0; attempt < 400 && got < 4; ++attempt) {
        auto r = gen.make(rule);
        if (!r) continue;
        ++got;
        testgen::run_descent(*r, prof, 3, tally);
      }
    }
  }
  v.require(tally.instances >= 200, "fewer than 200 instances");
  v.require(tally.failures.empty(), tally.failures.empty() ? "" : tally.failures.front());
  v.require(tally.descents == tally.refutations, "missing descent");
  v.require(tally.degree_ok == tally.trace_checks, "degree");
  v.require(tally.refutations > 0, "nothing refuted");
  v.note << tally.instances << " instances, " << tally.refutations << " refuting pairs, " << tally.trace_checks
         << " trace pairs; ";
}

void soundness(Verdict& v, const std::vector<CorpusEntry>& corpus) {
  std::size_t n = 0;
  std::set<std::string> names;
  for (const auto& e : corpus) {
    if (!e.graph.theory.axioms.empty() || !checker_accepts(e.graph)) continue;
    ++n;
    names.insert(e.name);
    ModelSearchOptions opts;
    opts.max_size = 4;
    auto cm = find_counter_model(e.graph.node(e.graph.root).sequent, {}, opts);
    v.require(!cm, e.name + " has a counter-model");
  }
  v.require(n >= 10, "fewer than 10 accepted theory-free proofs");
  for (const char* must : {"transitivity", "step_right", "step_left", "refl"})
    v.require(names.count(must), std::string("missing ") + must);
  v.note << n << " proofs, no counter-model up to size 4; ";
}

void cross_validation(Verdict& v, const std::vector<CorpusEntry>& corpus) {
  std::size_t rejected = 0, confirmed = 0;
  for (const auto& e : corpus) {
    auto a = check_global_trace_condition(e.graph);
    auto b = check_by_path_enumeration(e.graph, static_cast<int>(e.graph.nodes.size()) + 1);
    v.require(a.verdict == b.verdict, e.name + " disagrees");
    if (a.verdict == CycleReport::Verdict::Rejected) {
      ++rejected;
      confirmed += witness_confirms(e.graph, a) && witness_confirms(e.graph, b);
    }
  }
  v.require(corpus.size() >= 15, "fewer than 15 graphs");
  v.require(rejected >= 3, "fewer than 3 rejections");
  v.require(confirmed == rejected, "unconfirmed witness");
  v.note << corpus.size() << " graphs, " << rejected << " rejected with confirmed witnesses; ";
}

void normality(Verdict& v, const std::vector<CorpusEntry>& corpus) {
  std::size_t files = 0, inductions = 0;
  for (const auto& e : corpus) {
    std::size_t k = count_rule(e.graph, RuleId::RtcInd);
    if (k == 0 || !validate_structure(e.graph, e.graph.theory).empty()) continue;
    ++files;
    inductions += k;
    auto q = explicit_to_cyclic(e.graph);
    v.require(validate_structure(q, q.theory).empty(), e.name + " does not validate");
    v.require(check_global_trace_condition(q).accepted(), e.name + " fails the trace condition");
    auto cycles = enumerate_basic_cycles(q);
    v.require(is_non_overlapping(cycles), e.name + " overlaps");
    v.require(cycles.size() == k, e.name + " cycle count");
  }
  v.require(files >= 3, "fewer than 3 proofs with induction");
  v.note << files << " proofs, " << inductions << " inductions; ";
}

void reproduce(Verdict& v, const std::string& label, const Sequent& goal, const SearchConfig& cfg) {
  auto out = prove(goal, cfg);
  v.require(out.kind == SearchOutcome::Kind::Proved, label + " not proved");
  if (!out.proof) return;
  auto back = parse_proof(write_proof(*out.proof));
  v.require(write_proof(back) == write_proof(*out.proof), label + " round trip");
  v.require(back.node(back.root).sequent == goal, label + " end-sequent");
  v.require(checker_accepts(back), label + " re-check");
  v.note << label << " in " << out.nodes_explored << " nodes; ";
}

void prover(Verdict& v) {
  SearchConfig cfg;
  cfg.max_depth = 12;
  cfg.max_nodes = 100000;
  Signature sig;
  ParseOptions infer{true, true};
  reproduce(v, "transitivity",
            parse_sequent("(rtc x y. p(x,y))(a,b), (rtc x y. p(x,y))(b,c) |- (rtc x y. p(x,y))(a,c)", sig, infer), cfg);
}

void prover_theory(Verdict& v) {
  SearchConfig cfg;
  cfg.theory = load_theory(repo("theories/step.tc"));
  Signature sig = cfg.theory.sig;
  reproduce(v, "step", parse_sequent("p(0), (rtc x y. s(x)=y)(0,n) |- p(n)", sig, ParseOptions{true, true}), cfg);
}

// Exhaustive over {E/2, p/1} up to size 4, sampled with a function and
// constants up to size 5. Bodies mention only u and v, so one Warshall
// closure per model serves every valuation of the endpoints.
void oracle_equivalence(Verdict& v) {
  Signature sig;
  ParseOptions infer{true, true};
  auto rtc_of = [&](const std::string& body) { return parse_formula("(rtc u v. " + body + ")(x, y)", sig, infer); };
  std::vector<FormulaPtr> both{rtc_of("E(u, v) /\\ p(v)"), rtc_of("E(v, u) \\/ p(u) /\\ ~p(v)")};
  std::vector<FormulaPtr> edge_only{rtc_of("E(u, v)"), rtc_of("E(v, u)"), rtc_of("~E(u, v)"),
                                    rtc_of("(rtc a b. E(a, b))(v, u) /\\ ~(u = v)")};
  std::vector<FormulaPtr> rich = both;
  for (const auto& f : edge_only) rich.push_back(f);
  for (const char* body : {"p(u) -> E(u, v)", "(rtc a b. E(a, b) /\\ p(b))(u, v)", "exists w. E(u, w) /\\ E(w, v)"})
    rich.push_back(rtc_of(body));

  bool agree = true;
  std::size_t checks = 0, models = 0;
  auto run = [&](const FiniteModel& m, const std::vector<FormulaPtr>& fs) {
    ++models;
    for (const auto& f : fs) {
      auto reach = oracle::warshall_closure(m, {}, *f);
      oracle::for_each_valuation(m.size, {"x", "y"}, [&](const Valuation& val) {
        ++checks;
        if (evaluate(m, val, f) != (reach[val.at("x")][val.at("y")] != 0)) agree = false;
      });
    }
  };
  for (int n = 1; n <= 4; ++n) {
    const auto& fs = n <= 3 ? rich : both;
    oracle::for_each_model(n, {}, {{"E", 2}, {"p", 1}}, {}, [&](const FiniteModel& m) { run(m, fs); });
  }
  oracle::for_each_model(4, {}, {{"E", 2}}, {}, [&](const FiniteModel& m) { run(m, edge_only); });
  v.require(agree, "exhaustive disagreement");
  v.note << models << " models exhaustively, ";

  testgen::FormulaGen gen(2024);
  gen.vars = {"x", "y", "z"};
  std::mt19937 rng(99);
  std::size_t sampled = 0;
  for (int i = 0; i < 150; ++i) {
    auto f = Formula::rtc("x", "y", gen.formula(2), gen.term(1), gen.term(1));
    for (int n = 1; n <= 5; ++n) {
      auto m = oracle::random_model(rng, n, {"a", "b"}, {{"p", 1}, {"E", 2}}, {{"f", 1}});
      oracle::for_each_valuation(n, {"x", "y", "z", "u"}, [&](const Valuation& val) {
        ++sampled;
        if (evaluate(m, val, f) != oracle::rtc_by_warshall(m, val, f)) agree = false;
      });
    }
  }
  v.require(agree, "sampled disagreement");
  v.note << checks + sampled << " evaluations; ";
}

void beta_structure(Verdict& v) {
  auto cfg = BetaConfig::standard();
  Signature sig;
  sig.constants = {"0"};
  sig.functions = {{"s", 1}, {"plus", 2}};
  ParseOptions infer{true, true};
  auto golden = beta_translate(leq(Term::var("m"), Term::var("n")), cfg);
  v.require(print(golden) ==
                "m = n \\/ (exists z. exists c. beta(c, 0, m) /\\ beta(c, s(z), n) /\\ (forall u. u = z \\/ lt(u, z) -> "
                "(exists v. exists w. beta(c, u, v) /\\ beta(c, s(u), w) /\\ s(v) = w)))",
            "golden expansion of m <= n");
  std::size_t n = 0;
  for (const char* text :
       {"(rtc w u. s(w) = u)(m, n)", "(rtc x y. plus(x, s(0)) = y)(0, k)", "(rtc x y. (rtc u v. s(u) = v)(x, y))(a, b)",
        "forall k. (rtc x y. s(x) = y /\\ ~(x = k))(0, k) -> p(k)", "p(z) /\\ (rtc x y. plus(x, z) = y)(c, u)",
        "(rtc x y. exists t. plus(x, t) = y /\\ q(t))(m, s(m))"}) {
    Signature local = sig;
    auto f = parse_formula(text, local, infer);
    auto out = beta_translate(f, cfg);
    ++n;
    v.require(out->key().find("rtc") == std::string::npos && print(out).find("rtc") == std::string::npos,
              std::string("closure left in ") + text);
    std::set<std::string> a(f->free_vars().begin(), f->free_vars().end());
    std::set<std::string> b(out->free_vars().begin(), out->free_vars().end());
    v.require(a == b, std::string("free variables of ") + text);
  }
  v.note << n << " formulas plus the golden string; ";
}

}  // namespace

int main() {
  std::vector<CorpusEntry> corpus;
  try {
    corpus = load_corpus();
  } catch (const std::exception& e) {
    std::cout << "corpus failed to load: " << e.what() << "\n";
    return 1;
  }
  criterion(1, "kernel rule coverage", 1, kernel_coverage);
  criterion(2, "descending counter-models", 60, descent);
  criterion(3, "soundness on the corpus", 120, [&](Verdict& v) { soundness(v, corpus); });
  criterion(4, "trace checker cross-validation", 60, [&](Verdict& v) { cross_validation(v, corpus); });
  criterion(5, "induction to normal cycles", 10, [&](Verdict& v) { normality(v, corpus); });
  criterion(6, "prover: transitivity", 30, prover);
  criterion(6, "prover: step axiom", 30, prover_theory);
  criterion(7, "closure evaluation vs Warshall", 60, oracle_equivalence);
  criterion(8, "beta translation structure", 1, beta_structure);
  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria fail") << std::endl;
  return failures == 0 ? 0 : 1;
}
