#pragma once

// Local checking of single inference steps.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rtc/syntax.hpp"

namespace rtc {

enum class RuleId {
  Axiom, WL, WR, AndL, AndR, OrL, OrR, ImpL, ImpR, NotL, NotR,
  ExL, ExR, AllL, AllR, EqL1, EqL2, EqR, Cut, Subst,
  RtcRefl, RtcStep, RtcInd, RtcCase, PairInj, PairConstAx, TheoryAxiom,
};

std::string_view rule_name(RuleId r);
std::optional<RuleId> rule_from_name(std::string_view name);
int premise_count(RuleId r);
std::vector<RuleId> all_rules();

struct RuleParams {
  FormulaPtr principal;
  TermPtr witness;       // AllL, ExR; the intermediate r of RtcStep
  std::string eigen;     // ExL, AllR; z of RtcCase; x of RtcInd
  std::string eigen2;    // y of RtcInd
  FormulaPtr tmpl;       // EqL1/EqL2 template, or the invariant of RtcInd
  std::string tvar;      // template variable; RtcInd defaults it to eigen
  std::optional<Substitution> subst;
  FormulaPtr cut;
};

struct RuleInstance {
  RuleId rule = RuleId::Axiom;
  Sequent conclusion;
  std::vector<Sequent> premises;
  RuleParams params;
};

struct Theory {
  std::string name;
  Signature sig;
  std::vector<Sequent> axioms;
};

// Throws SchemaMismatch, FreshnessViolation or UnknownTheoryAxiom.
//
// Principal formulas may reappear in a premise (sequents are sets, so
// "Gamma, phi" allows phi in Gamma); eigenvariables must then also be fresh
// for the retained copies. Cut accepts both the shared- and split-context
// forms. Axiom is exactly "phi |- phi" and EqR exactly "|- t = t".
void check_rule_instance(const RuleInstance& r, const Theory& theory);
bool rule_instance_ok(const RuleInstance& r, const Theory& theory, std::string* why = nullptr);

// Premises in rule order, principal formulas dropped, Cut with shared
// contexts. Throws NotApplicable when params are insufficient, for Subst
// (the premise is not determined by the conclusion) and when the principal
// is not in the conclusion.
std::vector<Sequent> expected_premises(RuleId rule, const Sequent& conclusion, const RuleParams& params);

// Fills in a missing principal for the leaf rules (Axiom, EqR, RtcRefl,
// PairConstAx) when it is unambiguous.
RuleParams infer_params(RuleId rule, const Sequent& conclusion, const RuleParams& params, const Theory& theory);

// One-way matching: extends theta so that substitute(pattern, theta) is
// alpha-equal to target. Free variables of the pattern are the unknowns.
bool match_formula(const FormulaPtr& pattern, const FormulaPtr& target, Substitution& theta);
bool match_sequent(const Sequent& pattern, const Sequent& target, Substitution& theta);
// Index of the first axiom that target instantiates, with its substitution.
std::optional<std::pair<std::size_t, Substitution>> find_theory_instance(const Sequent& target, const Theory& theory);

// Weakening steps from `big` down to `small` (small must be a subsequent of
// big): WL steps first, then WR, in canonical order. Empty when equal.
std::vector<RuleInstance> weakening_chain(const Sequent& big, const Sequent& small);

// The generalised axiom "Gamma, phi |- phi, Delta" as weakenings ending in
// an Axiom leaf. The last element is the Axiom instance.
std::vector<RuleInstance> axiom_macro(const Sequent& s, const FormulaPtr& phi);

}  // namespace rtc
