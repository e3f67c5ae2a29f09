#include "rtc/kernel.hpp"

#include <algorithm>
#include <array>

#include "rtc/errors.hpp"

namespace rtc {

namespace {

struct RuleInfo {
  RuleId id;
  std::string_view name;
  int premises;
};

constexpr std::array<RuleInfo, 27> kRules{{
    {RuleId::Axiom, "Axiom", 0},   {RuleId::WL, "WL", 1},
    {RuleId::WR, "WR", 1},         {RuleId::AndL, "AndL", 1},
    {RuleId::AndR, "AndR", 2},     {RuleId::OrL, "OrL", 2},
    {RuleId::OrR, "OrR", 1},       {RuleId::ImpL, "ImpL", 2},
    {RuleId::ImpR, "ImpR", 1},     {RuleId::NotL, "NotL", 1},
    {RuleId::NotR, "NotR", 1},     {RuleId::ExL, "ExL", 1},
    {RuleId::ExR, "ExR", 1},       {RuleId::AllL, "AllL", 1},
    {RuleId::AllR, "AllR", 1},     {RuleId::EqL1, "EqL1", 1},
    {RuleId::EqL2, "EqL2", 1},     {RuleId::EqR, "EqR", 0},
    {RuleId::Cut, "Cut", 2},       {RuleId::Subst, "Subst", 1},
    {RuleId::RtcRefl, "RtcRefl", 0}, {RuleId::RtcStep, "RtcStep", 2},
    {RuleId::RtcInd, "RtcInd", 1}, {RuleId::RtcCase, "RtcCase", 2},
    {RuleId::PairInj, "PairInj", 1}, {RuleId::PairConstAx, "PairConstAx", 0},
    {RuleId::TheoryAxiom, "TheoryAxiom", 0},
}};

const RuleInfo& info(RuleId r) { return kRules[static_cast<std::size_t>(r)]; }

// Premise i is (ante \ removed_ante) + add[i].first |- (succ \ removed_succ) + add[i].second.
struct Shape {
  FormulaSet removed_ante;
  FormulaSet removed_succ;
  std::vector<std::pair<FormulaSet, FormulaSet>> add;
};

FormulaSet minus(const FormulaSet& a, const FormulaSet& b) {
  std::vector<FormulaPtr> out;
  for (const auto& f : a)
    if (!b.contains(f)) out.push_back(f);
  return FormulaSet(std::move(out));
}

[[noreturn]] void na(const std::string& what) { throw NotApplicable(what); }

const FormulaPtr& need_principal(const RuleParams& p, RuleId r) {
  if (!p.principal) na(std::string(rule_name(r)) + " needs a principal formula");
  return p.principal;
}

void need_kind(const FormulaPtr& f, FormulaKind k, RuleId r) {
  if (f->kind != k) na(std::string(rule_name(r)) + ": principal has the wrong shape: " + print(f));
}

void need_in(const FormulaSet& side, const FormulaPtr& f, const char* where) {
  if (!side.contains(f)) na(std::string("formula not in ") + where + ": " + print(f));
}

FormulaPtr rtc_like(const Formula& r, TermPtr s, TermPtr t) {
  return canonicalize(Formula::rtc(r.name, r.var2, r.body(), std::move(s), std::move(t)));
}

FormulaPtr canon_subst(const FormulaPtr& f, const std::string& v, const TermPtr& t) {
  return canonicalize(substitute(f, v, t));
}

std::string ind_tvar(const RuleParams& p) { return p.tvar.empty() ? p.eigen : p.tvar; }

Shape shape_of(RuleId rule, const Sequent& c, const RuleParams& p) {
  const auto& A = c.ante();
  const auto& S = c.succ();
  Shape sh;
  auto left = [&](FormulaKind k) -> const FormulaPtr& {
    const auto& f = need_principal(p, rule);
    need_kind(f, k, rule);
    need_in(A, f, "antecedent");
    sh.removed_ante = FormulaSet({f});
    return f;
  };
  auto right = [&](FormulaKind k) -> const FormulaPtr& {
    const auto& f = need_principal(p, rule);
    need_kind(f, k, rule);
    need_in(S, f, "succedent");
    sh.removed_succ = FormulaSet({f});
    return f;
  };
  auto both = [&](std::vector<FormulaPtr> a, std::vector<FormulaPtr> s) {
    sh.add.emplace_back(FormulaSet(std::move(a)), FormulaSet(std::move(s)));
  };

  switch (rule) {
    case RuleId::WL: {
      const auto& f = need_principal(p, rule);
      need_in(A, f, "antecedent");
      sh.removed_ante = FormulaSet({f});
      both({}, {});
      break;
    }
    case RuleId::WR: {
      const auto& f = need_principal(p, rule);
      need_in(S, f, "succedent");
      sh.removed_succ = FormulaSet({f});
      both({}, {});
      break;
    }
    case RuleId::AndL: {
      const auto& f = left(FormulaKind::And);
      both({f->left, f->right}, {});
      break;
    }
    case RuleId::AndR: {
      const auto& f = right(FormulaKind::And);
      both({}, {f->left});
      both({}, {f->right});
      break;
    }
    case RuleId::OrL: {
      const auto& f = left(FormulaKind::Or);
      both({f->left}, {});
      both({f->right}, {});
      break;
    }
    case RuleId::OrR: {
      const auto& f = right(FormulaKind::Or);
      both({}, {f->left, f->right});
      break;
    }
    case RuleId::ImpL: {
      const auto& f = left(FormulaKind::Implies);
      both({}, {f->left});
      both({f->right}, {});
      break;
    }
    case RuleId::ImpR: {
      const auto& f = right(FormulaKind::Implies);
      both({f->left}, {f->right});
      break;
    }
    case RuleId::NotL: {
      const auto& f = left(FormulaKind::Not);
      both({}, {f->left});
      break;
    }
    case RuleId::NotR: {
      const auto& f = right(FormulaKind::Not);
      both({f->left}, {});
      break;
    }
    case RuleId::ExL: {
      const auto& f = left(FormulaKind::Exists);
      std::string z = p.eigen.empty() ? f->name : p.eigen;
      both({canon_subst(f->left, f->name, Term::var(z))}, {});
      break;
    }
    case RuleId::AllR: {
      const auto& f = right(FormulaKind::Forall);
      std::string z = p.eigen.empty() ? f->name : p.eigen;
      both({}, {canon_subst(f->left, f->name, Term::var(z))});
      break;
    }
    case RuleId::AllL: {
      const auto& f = left(FormulaKind::Forall);
      if (!p.witness) na("AllL needs a witness term");
      both({canon_subst(f->left, f->name, p.witness)}, {});
      break;
    }
    case RuleId::ExR: {
      const auto& f = right(FormulaKind::Exists);
      if (!p.witness) na("ExR needs a witness term");
      both({}, {canon_subst(f->left, f->name, p.witness)});
      break;
    }
    case RuleId::EqL1:
    case RuleId::EqL2: {
      const auto& f = left(FormulaKind::Eq);
      if (!p.tmpl || p.tvar.empty()) na(std::string(rule_name(rule)) + " needs a rewrite template");
      const TermPtr& from = rule == RuleId::EqL1 ? f->rhs : f->lhs;
      const TermPtr& to = rule == RuleId::EqL1 ? f->lhs : f->rhs;
      auto old_f = canon_subst(p.tmpl, p.tvar, from);
      need_in(S, old_f, "succedent");
      sh.removed_succ = FormulaSet({old_f});
      both({}, {canon_subst(p.tmpl, p.tvar, to)});
      break;
    }
    case RuleId::RtcStep: {
      const auto& f = right(FormulaKind::Rtc);
      if (!p.witness) na("RtcStep needs an intermediate term");
      both({}, {rtc_like(*f, f->src(), p.witness)});
      both({}, {canonicalize(instantiate_body(*f, p.witness, f->dst()))});
      break;
    }
    case RuleId::RtcCase: {
      const auto& f = left(FormulaKind::Rtc);
      if (p.eigen.empty()) na("RtcCase needs an eigenvariable");
      auto z = Term::var(p.eigen);
      both({Formula::eq(f->src(), f->dst())}, {});
      both({rtc_like(*f, f->src(), z), canonicalize(instantiate_body(*f, z, f->dst()))}, {});
      break;
    }
    case RuleId::RtcInd: {
      const auto& f = left(FormulaKind::Rtc);
      if (!p.tmpl || p.eigen.empty() || p.eigen2.empty()) na("RtcInd needs an invariant and two eigenvariables");
      std::string tv = ind_tvar(p);
      auto psi_s = canon_subst(p.tmpl, tv, f->src());
      auto psi_t = canon_subst(p.tmpl, tv, f->dst());
      need_in(A, psi_s, "antecedent");
      need_in(S, psi_t, "succedent");
      sh.removed_ante = FormulaSet({f, psi_s});
      sh.removed_succ = FormulaSet({psi_t});
      auto x = Term::var(p.eigen);
      auto y = Term::var(p.eigen2);
      both({canon_subst(p.tmpl, tv, x), canonicalize(instantiate_body(*f, x, y))}, {canon_subst(p.tmpl, tv, y)});
      break;
    }
    case RuleId::PairInj: {
      const auto& f = right(FormulaKind::And);
      if (f->left->kind != FormulaKind::Eq || f->right->kind != FormulaKind::Eq)
        na("PairInj: principal must be a conjunction of two equalities");
      both({}, {Formula::eq(Term::pair(f->left->lhs, f->right->lhs), Term::pair(f->left->rhs, f->right->rhs))});
      break;
    }
    default:
      na(std::string(rule_name(rule)) + " has no principal-driven schema");
  }
  return sh;
}

bool uses_shape(RuleId r) {
  switch (r) {
    case RuleId::Axiom:
    case RuleId::EqR:
    case RuleId::Cut:
    case RuleId::Subst:
    case RuleId::RtcRefl:
    case RuleId::PairConstAx:
    case RuleId::TheoryAxiom:
      return false;
    default:
      return true;
  }
}

[[noreturn]] void mismatch(const std::string& what) { throw SchemaMismatch(what); }

// lo <= side <= lo + extra. Returns the members of extra actually present.
FormulaSet check_side(const FormulaSet& side, const FormulaSet& lo, const FormulaSet& extra, const std::string& where) {
  std::vector<FormulaPtr> retained;
  for (const auto& f : lo)
    if (!side.contains(f)) mismatch(where + " is missing " + print(f));
  for (const auto& f : side) {
    if (lo.contains(f)) {
      if (extra.contains(f)) retained.push_back(f);
      continue;
    }
    if (!extra.contains(f)) mismatch(where + " has unexpected " + print(f));
    retained.push_back(f);
  }
  return FormulaSet(std::move(retained));
}

void require_fresh(const std::string& v, const std::set<std::string>& used) {
  if (used.count(v)) throw FreshnessViolation(v);
}

std::set<std::string> fv_of(const FormulaSet& a) {
  std::set<std::string> out;
  a.collect_free_vars(out);
  return out;
}

void check_leaf(const RuleInstance& r, const Theory& theory) {
  const auto& c = r.conclusion;
  const auto& p = r.params;
  switch (r.rule) {
    case RuleId::Axiom:
      if (c.ante().size() != 1 || c.succ().size() != 1 || !alpha_eq(c.ante().items()[0], c.succ().items()[0]))
        mismatch("Axiom must be exactly 'phi |- phi'");
      if (p.principal && !alpha_eq(p.principal, c.ante().items()[0])) mismatch("Axiom principal differs");
      return;
    case RuleId::EqR: {
      if (!c.ante().empty() || c.succ().size() != 1) mismatch("EqR must be exactly '|- t = t'");
      const auto& f = c.succ().items()[0];
      if (f->kind != FormulaKind::Eq || !term_eq(f->lhs, f->rhs)) mismatch("EqR must be exactly '|- t = t'");
      return;
    }
    case RuleId::RtcRefl: {
      auto q = infer_params(r.rule, c, p, theory);
      if (!q.principal) mismatch("RtcRefl: no (rtc ...)(s, s) in the succedent");
      const auto& f = q.principal;
      if (f->kind != FormulaKind::Rtc || !term_eq(f->src(), f->dst()) || !c.succ().contains(f))
        mismatch("RtcRefl principal must be an RTC formula with equal endpoints in the succedent");
      return;
    }
    case RuleId::PairConstAx: {
      if (!theory.sig.pair_constant) mismatch("PairConstAx: the signature designates no pair constant");
      auto q = infer_params(r.rule, c, p, theory);
      if (!q.principal) mismatch("PairConstAx: no '<x, y> = c' in the antecedent");
      const auto& f = q.principal;
      if (f->kind != FormulaKind::Eq || !f->lhs->is_pair() || f->rhs->kind != Term::Kind::Const ||
          f->rhs->name != *theory.sig.pair_constant || !c.ante().contains(f))
        mismatch("PairConstAx principal must be '<x, y> = " + *theory.sig.pair_constant + "' in the antecedent");
      return;
    }
    case RuleId::TheoryAxiom:
      if (p.subst) {
        for (const auto& ax : theory.axioms)
          if (ax.substitute(*p.subst) == c) return;
        throw UnknownTheoryAxiom(print(c));
      }
      if (!find_theory_instance(c, theory)) throw UnknownTheoryAxiom(print(c));
      return;
    default:
      break;
  }
}

void check_cut(const RuleInstance& r) {
  if (!r.params.cut) mismatch("Cut needs a cut formula");
  const auto& phi = r.params.cut;
  const auto& c = r.conclusion;
  const auto& p1 = r.premises[0];
  const auto& p2 = r.premises[1];
  if (!p1.succ().contains(phi)) mismatch("Cut: left premise must have the cut formula on the right");
  if (!p2.ante().contains(phi)) mismatch("Cut: right premise must have the cut formula on the left");
  FormulaSet cut_only({phi});
  bool ante_ok = c.ante() == p1.ante().unite(minus(p2.ante(), cut_only)) || c.ante() == p1.ante().unite(p2.ante());
  bool succ_ok = c.succ() == minus(p1.succ(), cut_only).unite(p2.succ()) || c.succ() == p1.succ().unite(p2.succ());
  if (!ante_ok) mismatch("Cut: antecedent is not the union of the premise contexts");
  if (!succ_ok) mismatch("Cut: succedent is not the union of the premise contexts");
}

void check_freshness(const RuleInstance& r, const Shape& sh, const std::vector<FormulaSet>& kept) {
  const auto& c = r.conclusion;
  const auto& p = r.params;
  switch (r.rule) {
    case RuleId::ExL:
    case RuleId::AllR: {
      std::string z = p.eigen.empty() ? p.principal->name : p.eigen;
      require_fresh(z, c.free_vars());
      break;
    }
    case RuleId::RtcCase:
      require_fresh(p.eigen, c.free_vars());
      break;
    case RuleId::RtcInd: {
      std::set<std::string> ctx = fv_of(minus(c.ante(), sh.removed_ante));
      ctx.merge(fv_of(minus(c.succ(), sh.removed_succ)));
      for (const auto& k : kept) ctx.merge(fv_of(k));
      // Parameters of the step relation stay fixed while x and y range.
      for (const auto& v : p.principal->body()->free_vars())
        if (v != p.principal->name && v != p.principal->var2) ctx.insert(v);
      const std::string& x = p.eigen;
      const std::string& y = p.eigen2;
      std::string tv = ind_tvar(p);
      if (x == y) throw FreshnessViolation(y);
      require_fresh(x, ctx);
      if (x != tv && p.tmpl->has_free(x)) throw FreshnessViolation(x);
      auto psi_x = substitute(p.tmpl, tv, Term::var(x));
      std::set<std::string> ctx_y = ctx;
      for (const auto& v : psi_x->free_vars()) ctx_y.insert(v);
      require_fresh(y, ctx_y);
      break;
    }
    default:
      break;
  }
}

}  // namespace

std::string_view rule_name(RuleId r) { return info(r).name; }

std::optional<RuleId> rule_from_name(std::string_view name) {
  for (const auto& i : kRules)
    if (i.name == name) return i.id;
  return std::nullopt;
}

int premise_count(RuleId r) { return info(r).premises; }

std::vector<RuleId> all_rules() {
  std::vector<RuleId> out;
  for (const auto& i : kRules) out.push_back(i.id);
  return out;
}

RuleParams infer_params(RuleId rule, const Sequent& c, const RuleParams& params, const Theory& theory) {
  RuleParams p = params;
  if (p.principal) return p;
  switch (rule) {
    case RuleId::Axiom:
      if (c.ante().size() == 1) p.principal = c.ante().items()[0];
      break;
    case RuleId::EqR:
      if (c.succ().size() == 1) p.principal = c.succ().items()[0];
      break;
    case RuleId::RtcRefl:
      for (const auto& f : c.succ())
        if (f->is_rtc() && term_eq(f->src(), f->dst())) {
          p.principal = f;
          break;
        }
      break;
    case RuleId::PairConstAx:
      if (!theory.sig.pair_constant) break;
      for (const auto& f : c.ante())
        if (f->kind == FormulaKind::Eq && f->lhs->is_pair() && f->rhs->kind == Term::Kind::Const &&
            f->rhs->name == *theory.sig.pair_constant) {
          p.principal = f;
          break;
        }
      break;
    default:
      break;
  }
  return p;
}

void check_rule_instance(const RuleInstance& r, const Theory& theory) {
  const int n = premise_count(r.rule);
  if (static_cast<int>(r.premises.size()) != n)
    mismatch(std::string(rule_name(r.rule)) + " takes " + std::to_string(n) + " premise(s), got " +
             std::to_string(r.premises.size()));
  switch (r.rule) {
    case RuleId::Cut:
      check_cut(r);
      return;
    case RuleId::Subst:
      if (!r.params.subst) mismatch("Subst needs a substitution");
      if (r.premises[0].substitute(*r.params.subst) != r.conclusion)
        mismatch("Subst: conclusion is not the premise under the substitution");
      return;
    default:
      break;
  }
  if (!uses_shape(r.rule)) {
    check_leaf(r, theory);
    return;
  }
  Shape sh;
  try {
    sh = shape_of(r.rule, r.conclusion, r.params);
  } catch (const NotApplicable& e) {
    mismatch(e.what());
  }
  FormulaSet ante0 = minus(r.conclusion.ante(), sh.removed_ante);
  FormulaSet succ0 = minus(r.conclusion.succ(), sh.removed_succ);
  std::vector<FormulaSet> kept;
  for (int i = 0; i < n; ++i) {
    const auto& prem = r.premises[i];
    std::string where = "premise " + std::to_string(i + 1);
    try {
      kept.push_back(check_side(prem.ante(), ante0.unite(sh.add[i].first), sh.removed_ante, where + " antecedent"));
      kept.push_back(check_side(prem.succ(), succ0.unite(sh.add[i].second), sh.removed_succ, where + " succedent"));
    } catch (const SchemaMismatch&) {
      // Report freshness first when the eigenvariable is the culprit.
      check_freshness(r, sh, kept);
      throw;
    }
  }
  check_freshness(r, sh, kept);
}

bool rule_instance_ok(const RuleInstance& r, const Theory& theory, std::string* why) {
  try {
    check_rule_instance(r, theory);
    return true;
  } catch (const Error& e) {
    if (why) *why = e.what();
    return false;
  }
}

std::vector<Sequent> expected_premises(RuleId rule, const Sequent& c, const RuleParams& params) {
  switch (rule) {
    case RuleId::Axiom:
    case RuleId::EqR:
    case RuleId::RtcRefl:
    case RuleId::PairConstAx:
    case RuleId::TheoryAxiom:
      return {};
    case RuleId::Subst:
      na("Subst premise is not determined by its conclusion");
    case RuleId::Cut:
      if (!params.cut) na("Cut needs a cut formula");
      return {Sequent(c.ante(), c.succ().with(params.cut)), Sequent(c.ante().with(params.cut), c.succ())};
    default:
      break;
  }
  Shape sh = shape_of(rule, c, params);
  FormulaSet ante0 = minus(c.ante(), sh.removed_ante);
  FormulaSet succ0 = minus(c.succ(), sh.removed_succ);
  std::vector<Sequent> out;
  for (const auto& [a, s] : sh.add) out.emplace_back(ante0.unite(a), succ0.unite(s));
  return out;
}

// ---------------------------------------------------------------------------
// Matching

namespace {

using Binders = std::vector<std::pair<std::string, std::string>>;  // pattern name, target name

int level_of(const Binders& b, const std::string& v, bool pattern_side) {
  for (int i = static_cast<int>(b.size()) - 1; i >= 0; --i)
    if ((pattern_side ? b[i].first : b[i].second) == v) return i;
  return -1;
}

bool mentions_bound(const TermPtr& t, const Binders& b) {
  if (t->is_var()) return level_of(b, t->name, false) >= 0;
  for (const auto& a : t->args)
    if (mentions_bound(a, b)) return true;
  return false;
}

bool match_term(const TermPtr& pat, const TermPtr& tgt, Substitution& theta, const Binders& b) {
  switch (pat->kind) {
    case Term::Kind::Var: {
      int lp = level_of(b, pat->name, true);
      if (lp >= 0) return tgt->is_var() && level_of(b, tgt->name, false) == lp;
      if (mentions_bound(tgt, b)) return false;
      auto it = theta.find(pat->name);
      if (it != theta.end()) return term_eq(it->second, tgt);
      theta.emplace(pat->name, tgt);
      return true;
    }
    case Term::Kind::Const:
      return tgt->kind == Term::Kind::Const && tgt->name == pat->name;
    case Term::Kind::App:
      if (tgt->kind != Term::Kind::App || tgt->name != pat->name || tgt->args.size() != pat->args.size()) return false;
      for (std::size_t i = 0; i < pat->args.size(); ++i)
        if (!match_term(pat->args[i], tgt->args[i], theta, b)) return false;
      return true;
  }
  return false;
}

bool match_rec(const Formula& p, const Formula& t, Substitution& theta, Binders& b) {
  if (p.kind != t.kind) return false;
  switch (p.kind) {
    case FormulaKind::Bot:
    case FormulaKind::Top:
      return true;
    case FormulaKind::Eq:
      return match_term(p.lhs, t.lhs, theta, b) && match_term(p.rhs, t.rhs, theta, b);
    case FormulaKind::Pred:
      if (p.name != t.name || p.args.size() != t.args.size()) return false;
      for (std::size_t i = 0; i < p.args.size(); ++i)
        if (!match_term(p.args[i], t.args[i], theta, b)) return false;
      return true;
    case FormulaKind::Not:
      return match_rec(*p.left, *t.left, theta, b);
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Implies:
      return match_rec(*p.left, *t.left, theta, b) && match_rec(*p.right, *t.right, theta, b);
    case FormulaKind::Forall:
    case FormulaKind::Exists: {
      b.emplace_back(p.name, t.name);
      bool ok = match_rec(*p.left, *t.left, theta, b);
      b.pop_back();
      return ok;
    }
    case FormulaKind::Rtc: {
      if (!match_term(p.src(), t.src(), theta, b) || !match_term(p.dst(), t.dst(), theta, b)) return false;
      b.emplace_back(p.name, t.name);
      b.emplace_back(p.var2, t.var2);
      bool ok = match_rec(*p.body(), *t.body(), theta, b);
      b.pop_back();
      b.pop_back();
      return ok;
    }
  }
  return false;
}

struct SetMatcher {
  std::vector<FormulaPtr> pats;   // ante patterns then succ patterns
  std::size_t n_ante = 0;
  const FormulaSet* ta = nullptr;
  const FormulaSet* ts = nullptr;
  std::vector<int> covered_a, covered_s;
  std::size_t uncovered = 0;

  bool run(std::size_t i, Substitution& theta) {
    if (pats.size() - i < uncovered) return false;
    if (i == pats.size()) return uncovered == 0;
    bool ante = i < n_ante;
    const auto& side = ante ? ta->items() : ts->items();
    auto& cov = ante ? covered_a : covered_s;
    for (std::size_t j = 0; j < side.size(); ++j) {
      Substitution th = theta;
      if (!match_formula(pats[i], side[j], th)) continue;
      if (cov[j]++ == 0) --uncovered;
      if (run(i + 1, th)) {
        theta = std::move(th);
        return true;
      }
      if (--cov[j] == 0) ++uncovered;
    }
    return false;
  }
};

}  // namespace

bool match_formula(const FormulaPtr& pattern, const FormulaPtr& target, Substitution& theta) {
  Binders b;
  Substitution th = theta;
  if (!match_rec(*pattern, *target, th, b)) return false;
  theta = std::move(th);
  return true;
}

bool match_sequent(const Sequent& pattern, const Sequent& target, Substitution& theta) {
  SetMatcher m;
  for (const auto& f : pattern.ante()) m.pats.push_back(f);
  m.n_ante = m.pats.size();
  for (const auto& f : pattern.succ()) m.pats.push_back(f);
  m.ta = &target.ante();
  m.ts = &target.succ();
  m.covered_a.assign(target.ante().size(), 0);
  m.covered_s.assign(target.succ().size(), 0);
  m.uncovered = target.ante().size() + target.succ().size();
  Substitution th = theta;
  if (!m.run(0, th)) return false;
  theta = std::move(th);
  return true;
}

std::optional<std::pair<std::size_t, Substitution>> find_theory_instance(const Sequent& target, const Theory& theory) {
  for (std::size_t i = 0; i < theory.axioms.size(); ++i) {
    Substitution theta;
    if (match_sequent(theory.axioms[i], target, theta) && theory.axioms[i].substitute(theta) == target)
      return std::make_pair(i, theta);
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Macros

std::vector<RuleInstance> weakening_chain(const Sequent& big, const Sequent& small) {
  if (!small.ante().subset_of(big.ante()) || !small.succ().subset_of(big.succ()))
    throw NotApplicable("weakening target is not contained in " + print(big));
  std::vector<RuleInstance> out;
  Sequent cur = big;
  for (const auto& f : big.ante()) {
    if (small.ante().contains(f)) continue;
    Sequent next(cur.ante().without(f), cur.succ());
    RuleInstance r{RuleId::WL, cur, {next}, {}};
    r.params.principal = f;
    out.push_back(std::move(r));
    cur = next;
  }
  for (const auto& f : big.succ()) {
    if (small.succ().contains(f)) continue;
    Sequent next(cur.ante(), cur.succ().without(f));
    RuleInstance r{RuleId::WR, cur, {next}, {}};
    r.params.principal = f;
    out.push_back(std::move(r));
    cur = next;
  }
  return out;
}

std::vector<RuleInstance> axiom_macro(const Sequent& s, const FormulaPtr& phi) {
  if (!s.ante().contains(phi) || !s.succ().contains(phi)) throw NotApplicable("not an axiom instance: " + print(s));
  Sequent leaf(FormulaSet({phi}), FormulaSet({phi}));
  auto out = weakening_chain(s, leaf);
  RuleInstance ax{RuleId::Axiom, leaf, {}, {}};
  ax.params.principal = phi;
  out.push_back(std::move(ax));
  return out;
}

}  // namespace rtc
