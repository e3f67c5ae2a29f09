#include "rtc/descent.hpp"

#include "rtc/errors.hpp"

namespace rtc {

namespace {

// First extension of `base` over `fresh` (lexicographic) refuting s.
std::optional<Valuation> refute_extending(const FiniteModel& m, Valuation base, const std::vector<std::string>& fresh,
                                          const Sequent& s) {
  for (const auto& x : fresh) base[x] = 0;
  while (true) {
    if (invalidates(m, base, s)) return base;
    std::size_t i = fresh.size();
    for (; i > 0; --i) {
      if (++base[fresh[i - 1]] < m.size) break;
      base[fresh[i - 1]] = 0;
    }
    if (i == 0) return std::nullopt;
  }
}

}  // namespace

DescentStep descent_witness(const RuleInstance& r, const FiniteModel& m, const Valuation& v) {
  if (r.rule == RuleId::RtcRefl) throw NotApplicable("RtcRefl conclusions hold in every model");
  if (!invalidates(m, v, r.conclusion)) throw NoCounterexample("the valuation does not refute " + print(r.conclusion));
  if (r.premises.empty()) throw NoCounterexample(std::string(rule_name(r.rule)) + " has no premise to descend to");

  if (r.rule == RuleId::RtcCase && r.params.principal && r.params.principal->is_rtc()) {
    const auto& f = r.params.principal;
    auto chain = minimal_chain(m, v, f);
    if (!chain) throw NoCounterexample("principal formula is false");
    if (chain->size() == 1) return {0, m, v};
    Valuation w = v;
    w[r.params.eigen] = (*chain)[chain->size() - 2];
    if (!invalidates(m, w, r.premises[1])) throw NoCounterexample("second premise holds under the chain witness");
    return {1, m, w};
  }

  std::set<std::string> concl_vars = r.conclusion.free_vars();
  Valuation base;
  for (const auto& x : concl_vars) base[x] = v.at(x);
  std::set<std::string> known = concl_vars;
  if (r.rule == RuleId::Subst && r.params.subst) {
    for (const auto& [x, t] : *r.params.subst) {
      // Only the premise's variables matter; others may be unbound in v.
      if (!r.premises[0].free_vars().count(x)) continue;
      base[x] = evaluate(m, v, t);
      known.insert(x);
    }
  }
  for (std::size_t i = 0; i < r.premises.size(); ++i) {
    const auto& p = r.premises[i];
    std::vector<std::string> fresh;
    Valuation b = base;
    for (const auto& x : p.free_vars()) {
      if (r.rule == RuleId::Subst ? !known.count(x) : !concl_vars.count(x)) fresh.push_back(x);
    }
    if (auto w = refute_extending(m, b, fresh, p)) return {static_cast<int>(i), m, *w};
  }
  throw NoCounterexample("no premise of " + std::string(rule_name(r.rule)) + " is refuted");
}

}  // namespace rtc
