#pragma once

// Random kernel-valid rule instances over tiny signatures, for the
// counter-model descent harness.

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "rtc/descent.hpp"
#include "rtc/errors.hpp"
#include "rtc/kernel.hpp"
#include "rtc/proofgraph.hpp"

namespace rtc::testgen {

// Symbols interpreted by the harness: at most two predicates and one function.
struct Profile {
  std::vector<std::string> consts;
  std::vector<std::pair<std::string, int>> preds;
  std::vector<std::pair<std::string, int>> fns;
};

inline std::vector<Profile> descent_profiles() {
  return {
      {{"a"}, {{"E", 2}}, {}},
      {{"a"}, {{"p", 1}}, {{"f", 1}}},
      {{}, {{"p", 1}, {"E", 2}}, {}},
  };
}

class InstanceGen {
 public:
  InstanceGen(unsigned seed, Profile prof) : rng_(seed), prof_(std::move(prof)) {}

  const Profile& profile() const { return prof_; }

  std::optional<RuleInstance> make(RuleId rule) {
    RuleInstance r{rule, {}, {}, {}};
    std::vector<FormulaPtr> ante, succ;
    if (pick(2)) ante.push_back(atom({"x", "y"}));
    if (pick(3) == 0) succ.push_back(formula({"x", "y"}));
    auto& p = r.params;
    std::vector<std::string> xy{"x", "y"};
    switch (rule) {
      case RuleId::WL:
        p.principal = formula(xy);
        ante.push_back(p.principal);
        break;
      case RuleId::WR:
        p.principal = formula(xy);
        succ.push_back(p.principal);
        break;
      case RuleId::AndL:
      case RuleId::AndR:
      case RuleId::OrL:
      case RuleId::OrR:
      case RuleId::ImpL:
      case RuleId::ImpR: {
        auto a = formula(xy), b = formula(xy);
        bool left = rule == RuleId::AndL || rule == RuleId::OrL || rule == RuleId::ImpL;
        p.principal = rule == RuleId::AndL || rule == RuleId::AndR  ? Formula::conj(a, b)
                      : rule == RuleId::OrL || rule == RuleId::OrR ? Formula::disj(a, b)
                                                                    : Formula::implies(a, b);
        (left ? ante : succ).push_back(p.principal);
        break;
      }
      case RuleId::NotL:
      case RuleId::NotR:
        p.principal = Formula::neg(formula(xy));
        (rule == RuleId::NotL ? ante : succ).push_back(p.principal);
        break;
      case RuleId::ExL:
      case RuleId::AllR:
      case RuleId::ExR:
      case RuleId::AllL: {
        auto body = formula({"x", "y", "w"});
        bool ex = rule == RuleId::ExL || rule == RuleId::ExR;
        p.principal = ex ? Formula::exists("w", body) : Formula::forall("w", body);
        if (rule == RuleId::ExL || rule == RuleId::AllR) p.eigen = "e";
        else p.witness = term(xy);
        (rule == RuleId::ExL || rule == RuleId::AllL ? ante : succ).push_back(p.principal);
        break;
      }
      case RuleId::EqL1:
      case RuleId::EqL2: {
        auto s = term(xy), t = term(xy);
        p.principal = Formula::eq(s, t);
        p.tmpl = formula({"x", "m"});
        p.tvar = "m";
        ante.push_back(p.principal);
        succ.push_back(canonicalize(substitute(p.tmpl, "m", rule == RuleId::EqL1 ? t : s)));
        break;
      }
      case RuleId::Cut:
        p.cut = formula(xy);
        break;
      case RuleId::Subst: {
        std::vector<FormulaPtr> pa{atom(xy)}, ps;
        if (pick(2)) pa.push_back(rtc(xy));
        ps.push_back(formula(xy));
        Sequent prem{FormulaSet(pa), FormulaSet(ps)};
        Substitution th{{"x", term({"y"})}};
        p.subst = th;
        r.premises.push_back(prem);
        r.conclusion = prem.substitute(th);
        return checked(std::move(r));
      }
      case RuleId::RtcStep:
        p.principal = rtc(xy);
        p.witness = term(xy);
        succ.push_back(p.principal);
        break;
      case RuleId::RtcCase:
        p.principal = rtc(xy);
        p.eigen = "e";
        ante.push_back(p.principal);
        break;
      case RuleId::RtcInd: {
        p.principal = rtc(xy);
        p.tmpl = formula({"x", "m"});
        p.tvar = "m";
        p.eigen = "e";
        p.eigen2 = "g";
        ante.push_back(p.principal);
        ante.push_back(canonicalize(substitute(p.tmpl, "m", p.principal->src())));
        succ.push_back(canonicalize(substitute(p.tmpl, "m", p.principal->dst())));
        break;
      }
      default:
        return std::nullopt;
    }
    for (auto& f : ante) f = canonicalize(f);
    for (auto& f : succ) f = canonicalize(f);
    r.conclusion = Sequent(FormulaSet(ante), FormulaSet(succ));
    try {
      r.premises = expected_premises(rule, r.conclusion, r.params);
    } catch (const Error&) {
      return std::nullopt;
    }
    return checked(std::move(r));
  }

 private:
  std::mt19937 rng_;
  Profile prof_;

  int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }

  std::optional<RuleInstance> checked(RuleInstance r) {
    return rule_instance_ok(r, Theory{}, nullptr) ? std::optional<RuleInstance>(std::move(r)) : std::nullopt;
  }

  TermPtr term(const std::vector<std::string>& vars) {
    int opts = static_cast<int>(vars.size() + prof_.consts.size());
    int k = pick(opts + (prof_.fns.empty() ? 0 : 1));
    if (k < static_cast<int>(vars.size())) return Term::var(vars[k]);
    if (k < opts) return Term::constant(prof_.consts[k - vars.size()]);
    return Term::app(prof_.fns[0].first, {Term::var(vars[pick(static_cast<int>(vars.size()))])});
  }

  FormulaPtr atom(const std::vector<std::string>& vars) {
    int k = pick(static_cast<int>(prof_.preds.size()) + 1);
    if (k == static_cast<int>(prof_.preds.size())) return Formula::eq(term(vars), term(vars));
    const auto& [name, arity] = prof_.preds[k];
    std::vector<TermPtr> args;
    for (int i = 0; i < arity; ++i) args.push_back(term(vars));
    return Formula::pred(name, args);
  }

  FormulaPtr rtc(const std::vector<std::string>& vars) {
    FormulaPtr body = atom({"u", "v"});
    if (pick(3) == 0) body = Formula::conj(body, atom({"u", "v"}));
    else if (pick(4) == 0) body = Formula::neg(body);
    return canonicalize(Formula::rtc("u", "v", body, term(vars), term(vars)));
  }

  FormulaPtr formula(const std::vector<std::string>& vars) {
    switch (pick(5)) {
      case 0:
        return rtc(vars);
      case 1:
        return Formula::neg(atom(vars));
      case 2:
        return Formula::conj(atom(vars), atom(vars));
      default:
        return atom(vars);
    }
  }
};

inline const std::vector<RuleId>& descent_rules() {
  static const std::vector<RuleId> rules{
      RuleId::WL,  RuleId::WR,   RuleId::AndL, RuleId::AndR,   RuleId::OrL,     RuleId::OrR,     RuleId::ImpL,
      RuleId::ImpR, RuleId::NotL, RuleId::NotR, RuleId::ExL,    RuleId::ExR,     RuleId::AllL,    RuleId::AllR,
      RuleId::EqL1, RuleId::EqL2, RuleId::Cut,  RuleId::Subst,  RuleId::RtcStep, RuleId::RtcCase, RuleId::RtcInd};
  return rules;
}

struct DescentTally {
  std::size_t instances = 0;
  std::size_t refutations = 0;   // (model, valuation) pairs refuting a conclusion
  std::size_t descents = 0;      // of which a refuted premise was returned
  std::size_t trace_checks = 0;  // trace steps checked for degree
  std::size_t degree_ok = 0;
  std::vector<std::string> failures;
};

// Exhaustive over models of size 1..max_size interpreting the profile.
inline void run_descent(const RuleInstance& r, const Profile& prof, int max_size, DescentTally& tally) {
  ++tally.instances;
  auto cv = r.conclusion.free_vars();
  std::vector<std::string> vars(cv.begin(), cv.end());
  auto fail = [&](const std::string& why) {
    if (tally.failures.size() < 20) tally.failures.push_back(std::string(rule_name(r.rule)) + ": " + why);
  };
  for (int n = 1; n <= max_size; ++n) {
    oracle::for_each_model(n, prof.consts, prof.preds, prof.fns, [&](const FiniteModel& m) {
      oracle::for_each_valuation(n, vars, [&](const Valuation& v) {
        if (!invalidates(m, v, r.conclusion)) return;
        ++tally.refutations;
        DescentStep st;
        try {
          st = descent_witness(r, m, v);
        } catch (const Error& e) {
          fail(print(r.conclusion) + " in " + dump_model(m) + ": " + e.what());
          return;
        }
        if (!invalidates(st.model, st.valuation, r.premises.at(st.premise))) {
          fail("premise not refuted");
          return;
        }
        ++tally.descents;
        for (const auto& ts : rule_trace_steps(r, st.premise)) {
          ++tally.trace_checks;
          auto before = oracle::degree_by_powers(m, v, ts.from);
          auto after = oracle::degree_by_powers(st.model, st.valuation, ts.to);
          bool ok = before && after && (ts.progressing ? *after < *before : *after <= *before);
          if (ok) ++tally.degree_ok;
          else fail("degree increases on " + print(ts.from) + " -> " + print(ts.to));
        }
      });
    });
  }
}

}  // namespace rtc::testgen
