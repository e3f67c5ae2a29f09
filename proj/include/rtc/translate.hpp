#pragma once

// Syntactic translations: explicit induction into a cycle, whole proofs from
// the explicit to the cyclic system, the beta translation into arithmetic,
// and binary closures encoded through pairs.

#include <string>

#include "rtc/proofgraph.hpp"

namespace rtc {

// Generated names for the cycle; empty means "pick a fresh one".
struct InductionNames {
  std::string v;
  std::string w;
  std::string z;
};

struct InductionFragment {
  ProofGraph graph;  // graph.root is the fragment's conclusion
  int companion = -1;
  int open = -1;  // the step premise, an open leaf
};

// Cyclic derivation of
//   gamma, psi[s], (rtc x y. phi)(s,t) |- delta, psi[t]
// from the open step premise
//   gamma, psi[x'], phi(x',y') |- delta, psi[y']
// where psi is a template in `tvar` and x', y' are the induction's
// eigenvariables. Node ids start at first_id. Throws FreshnessViolation when
// the eigenvariables or the supplied names are not fresh.
InductionFragment derive_induction(const FormulaSet& gamma, const FormulaSet& delta, const FormulaPtr& rtc,
                                   const FormulaPtr& psi, const std::string& tvar, const std::string& x,
                                   const std::string& y, InductionNames names = {}, int first_id = 0);

// Replaces each RtcInd node of a finite proof by the fragment above, with
// the node's subproof in place of the open premise. Throws Error carrying
// the first structural error when the input does not validate.
ProofGraph explicit_to_cyclic(const ProofGraph& p);

enum class BetaMode {
  Pa,  // u < z stays a primitive predicate lt(u, z)
  Tc,  // u < z becomes ~(u = z) /\ (rtc w u'. s(w) = u')(u, z)
};

struct BetaConfig {
  // A formula whose free variables are exactly c, i and k.
  FormulaPtr B;
  std::string c = "c";
  std::string i = "i";
  std::string k = "k";
  BetaMode mode = BetaMode::Pa;

  // B = beta(c, i, k) over an uninterpreted predicate.
  static BetaConfig standard(BetaMode mode = BetaMode::Pa);
  // Throws SignatureMismatch unless fv(B) = {c, i, k}.
  void validate() const;
};

// B(c, i, k) for the given terms.
FormulaPtr beta(const BetaConfig& cfg, const TermPtr& c, const TermPtr& i, const TermPtr& k);
// u < z in the configured mode.
FormulaPtr lt(const BetaConfig& cfg, const TermPtr& u, const TermPtr& z);

// Function symbols must be among 0, s/1 and plus/2 (SignatureMismatch
// otherwise). Homomorphic except at RTC formulas.
FormulaPtr beta_translate(const FormulaPtr& f, const BetaConfig& cfg);

// (rtc x y. exists x1 x2 y1 y2. x = <x1,x2> /\ y = <y1,y2> /\ phi)(<s1,s2>, <t1,t2>)
// with x, y fresh. Throws MissingPairSymbol when sig has no binary pair and
// VariableClash when the four variables are not distinct.
FormulaPtr encode_rtc2(const std::string& x1, const std::string& x2, const std::string& y1, const std::string& y2,
                       const FormulaPtr& phi, const TermPtr& s1, const TermPtr& s2, const TermPtr& t1,
                       const TermPtr& t2, const Signature& sig);

// The ordering s <= t as a closure of the successor.
FormulaPtr leq(const TermPtr& s, const TermPtr& t);

}  // namespace rtc
