#include "rtc/translate.hpp"

#include <algorithm>

#include "rtc/errors.hpp"

namespace rtc {

namespace {

FormulaPtr inst(const FormulaPtr& tmpl, const std::string& tvar, const TermPtr& t) {
  return canonicalize(substitute(tmpl, tvar, t));
}

FormulaPtr rtc_between(const Formula& r, const TermPtr& s, const TermPtr& t) {
  return canonicalize(Formula::rtc(r.name, r.var2, r.body(), s, t));
}

Sequent extend(const FormulaSet& a, std::vector<FormulaPtr> more_a, const FormulaSet& s,
               std::vector<FormulaPtr> more_s) {
  FormulaSet ante = a, succ = s;
  for (auto& f : more_a) ante = ante.with(f);
  for (auto& f : more_s) succ = succ.with(f);
  return Sequent(ante, succ);
}

void add_vars(std::set<std::string>& out, const FormulaPtr& f) {
  for (const auto& v : f->free_vars()) out.insert(v);
}

}  // namespace

InductionFragment derive_induction(const FormulaSet& gamma, const FormulaSet& delta, const FormulaPtr& rtc,
                                   const FormulaPtr& psi, const std::string& tvar, const std::string& x,
                                   const std::string& y, InductionNames names, int first_id) {
  if (!rtc->is_rtc()) throw NotAnRtcFormula(print(rtc));
  const Formula& R = *rtc;

  // Same side conditions as the induction rule itself.
  std::set<std::string> ctx;
  gamma.collect_free_vars(ctx);
  delta.collect_free_vars(ctx);
  for (const auto& v : R.body()->free_vars())
    if (v != R.name && v != R.var2) ctx.insert(v);
  if (x == y) throw FreshnessViolation(y);
  if (ctx.count(x) || (x != tvar && psi->has_free(x))) throw FreshnessViolation(x);
  auto psi_x = inst(psi, tvar, Term::var(x));
  if (ctx.count(y) || psi_x->has_free(y)) throw FreshnessViolation(y);

  // v and w avoid gamma, delta, phi and psi; z avoids the companion.
  std::set<std::string> avoid = ctx;
  for (const auto& v : psi->free_vars())
    if (v != tvar) avoid.insert(v);
  avoid.insert(x);
  avoid.insert(y);
  // Generated names additionally avoid s, t and the template variable.
  std::set<std::string> auto_avoid = avoid;
  add_vars(auto_avoid, rtc);
  auto_avoid.insert(tvar);
  auto choose = [&](const std::string& given, const std::string& base) {
    std::string n = given;
    if (n.empty()) n = fresh_like(base, auto_avoid);
    else if (avoid.count(n)) throw FreshnessViolation(n);
    avoid.insert(n);
    auto_avoid.insert(n);
    return n;
  };
  std::string v = choose(names.v, "v");
  std::string w = choose(names.w, "w");
  auto V = Term::var(v), W = Term::var(w);

  auto psi_v = inst(psi, tvar, V);
  auto psi_w = inst(psi, tvar, W);
  auto rtc_vw = rtc_between(R, V, W);
  Sequent companion = extend(gamma, {psi_v, rtc_vw}, delta, {psi_w});

  for (const auto& n : companion.free_vars()) {
    avoid.insert(n);
    auto_avoid.insert(n);
  }
  std::string z = choose(names.z, "z");
  auto Z = Term::var(z);

  auto psi_z = inst(psi, tvar, Z);
  auto rtc_vz = rtc_between(R, V, Z);
  auto phi_zw = canonicalize(instantiate_body(R, Z, W));
  auto eq_vw = Formula::eq(V, W);

  Sequent root = extend(gamma, {inst(psi, tvar, R.src()), canonicalize(rtc)}, delta, {inst(psi, tvar, R.dst())});
  Sequent base_case = extend(gamma, {psi_v, eq_vw}, delta, {psi_w});
  Sequent base_ax = extend(gamma, {psi_v}, delta, {psi_v});
  Sequent step = extend(gamma, {psi_v, rtc_vz, phi_zw}, delta, {psi_w});
  Sequent cut_l = extend(gamma, {psi_v, rtc_vz}, delta, {psi_z});
  Sequent cut_r = extend(gamma, {psi_z, phi_zw}, delta, {psi_w});
  Sequent open = extend(gamma, {psi_x, canonicalize(instantiate_body(R, Term::var(x), Term::var(y)))}, delta,
                        {inst(psi, tvar, Term::var(y))});

  InductionFragment out;
  ProofGraph& g = out.graph;
  int id = first_id;
  const int root_id = id++, comp_id = id++, eq_id = id++;
  out.companion = comp_id;

  RuleParams sp;
  sp.subst = Substitution{{v, R.src()}, {w, R.dst()}};
  g.add_internal(root_id, RuleInstance{RuleId::Subst, root, {companion}, sp}, {comp_id});

  auto ax = axiom_macro(base_ax, psi_v);
  const int ax_first = id;
  id += static_cast<int>(ax.size());
  const int cut_id = id++, lsub_id = id++, bud_id = id++, rsub_id = id++, open_id = id++;

  RuleParams cp;
  cp.principal = rtc_vw;
  cp.eigen = z;
  g.add_internal(comp_id, RuleInstance{RuleId::RtcCase, companion, {base_case, step}, cp}, {eq_id, cut_id});

  RuleParams ep;
  ep.principal = eq_vw;
  ep.tmpl = psi;
  ep.tvar = tvar;
  g.add_internal(eq_id, RuleInstance{RuleId::EqL1, base_case, {base_ax}, ep}, {ax_first});
  for (std::size_t i = 0; i < ax.size(); ++i) {
    int nid = ax_first + static_cast<int>(i);
    std::vector<int> kids;
    if (i + 1 < ax.size()) kids.push_back(nid + 1);
    g.add_internal(nid, ax[i], kids);
  }

  RuleParams kp;
  kp.cut = psi_z;
  g.add_internal(cut_id, RuleInstance{RuleId::Cut, step, {cut_l, cut_r}, kp}, {lsub_id, rsub_id});

  RuleParams lp;
  lp.subst = Substitution{{w, Z}};
  g.add_internal(lsub_id, RuleInstance{RuleId::Subst, cut_l, {companion}, lp}, {bud_id});
  g.add_bud(bud_id, companion, comp_id);

  RuleParams rp;
  rp.subst = Substitution{{x, Z}, {y, W}};
  g.add_internal(rsub_id, RuleInstance{RuleId::Subst, cut_r, {open}, rp}, {open_id});
  g.add_open(open_id, open);
  out.open = open_id;
  g.root = root_id;
  return out;
}

ProofGraph explicit_to_cyclic(const ProofGraph& p) {
  auto errs = validate_structure(p, p.theory);
  if (!errs.empty()) throw Error(describe(errs.front()));
  if (p.count(ProofNode::Kind::Bud) != 0) throw NotApplicable("expected a finite proof without buds");

  ProofGraph out = p;
  int next = p.next_id();
  for (const auto& [id, node] : p.nodes) {
    if (!node.internal() || node.rule.rule != RuleId::RtcInd) continue;
    const auto& r = node.rule;
    const auto& prm = r.params;
    std::string tv = prm.tvar.empty() ? prm.eigen : prm.tvar;
    auto X = Term::var(prm.eigen), Y = Term::var(prm.eigen2);
    const Sequent& premise = r.premises.at(0);
    FormulaSet gamma = premise.ante()
                           .without(inst(prm.tmpl, tv, X))
                           .without(canonicalize(instantiate_body(*prm.principal, X, Y)));
    FormulaSet delta = premise.succ().without(inst(prm.tmpl, tv, Y));

    auto frag = derive_induction(gamma, delta, prm.principal, prm.tmpl, tv, prm.eigen, prm.eigen2, {}, next);
    const auto& froot = frag.graph.node(frag.graph.root);
    if (froot.sequent != node.sequent)
      throw Error("node " + std::to_string(id) + ": induction conclusion does not match its translation");

    int child = node.children.at(0);
    for (auto [fid, fnode] : frag.graph.nodes) {
      if (fid == frag.open) continue;
      for (auto& c : fnode.children)
        if (c == frag.open) c = child;
      if (fid == frag.graph.root) {
        fnode.id = id;
        out.nodes[id] = fnode;
      } else {
        out.nodes[fid] = fnode;
      }
      next = std::max(next, fid + 1);
    }
  }
  return out;
}

BetaConfig BetaConfig::standard(BetaMode mode) {
  BetaConfig cfg;
  cfg.B = Formula::pred("beta", {Term::var("c"), Term::var("i"), Term::var("k")});
  cfg.mode = mode;
  return cfg;
}

void BetaConfig::validate() const {
  if (!B) throw SignatureMismatch("beta configuration has no formula");
  std::set<std::string> fv(B->free_vars().begin(), B->free_vars().end());
  if (fv != std::set<std::string>{c, i, k})
    throw SignatureMismatch("beta formula must have exactly the free variables " + c + ", " + i + ", " + k);
}

FormulaPtr beta(const BetaConfig& cfg, const TermPtr& c, const TermPtr& i, const TermPtr& k) {
  return substitute(cfg.B, Substitution{{cfg.c, c}, {cfg.i, i}, {cfg.k, k}});
}

FormulaPtr leq(const TermPtr& s, const TermPtr& t) {
  return Formula::rtc("w", "u", Formula::eq(Term::app("s", {Term::var("w")}), Term::var("u")), s, t);
}

namespace {

// Binder names for the strict order avoid everything in scope, so that
// canonicalisation has nothing to rename.
FormulaPtr lt_avoiding(const BetaConfig& cfg, const TermPtr& u, const TermPtr& z, std::set<std::string> avoid) {
  if (cfg.mode == BetaMode::Pa) return Formula::pred("lt", {u, z});
  term_vars(u, avoid);
  term_vars(z, avoid);
  std::string a = fresh_like("w", avoid);
  avoid.insert(a);
  std::string b = fresh_like("u", avoid);
  auto step = Formula::eq(Term::app("s", {Term::var(a)}), Term::var(b));
  return Formula::conj(Formula::neg(Formula::eq(u, z)), Formula::rtc(a, b, step, u, z));
}

}  // namespace

FormulaPtr lt(const BetaConfig& cfg, const TermPtr& u, const TermPtr& z) { return lt_avoiding(cfg, u, z, {}); }

namespace {

void check_arith(const TermPtr& t) {
  switch (t->kind) {
    case Term::Kind::Var:
      return;
    case Term::Kind::Const:
      if (t->name != "0") throw SignatureMismatch("constant '" + t->name + "' is not arithmetic");
      return;
    case Term::Kind::App:
      if (!((t->name == "s" && t->args.size() == 1) || (t->name == "plus" && t->args.size() == 2)))
        throw SignatureMismatch("function '" + t->name + "' is not arithmetic");
      for (const auto& a : t->args) check_arith(a);
  }
}

FormulaPtr beta_rec(const FormulaPtr& f, const BetaConfig& cfg) {
  switch (f->kind) {
    case FormulaKind::Bot:
    case FormulaKind::Top:
      return f;
    case FormulaKind::Eq:
      check_arith(f->lhs);
      check_arith(f->rhs);
      return f;
    case FormulaKind::Pred:
      for (const auto& a : f->args) check_arith(a);
      return f;
    case FormulaKind::Not:
      return Formula::neg(beta_rec(f->left, cfg));
    case FormulaKind::And:
      return Formula::conj(beta_rec(f->left, cfg), beta_rec(f->right, cfg));
    case FormulaKind::Or:
      return Formula::disj(beta_rec(f->left, cfg), beta_rec(f->right, cfg));
    case FormulaKind::Implies:
      return Formula::implies(beta_rec(f->left, cfg), beta_rec(f->right, cfg));
    case FormulaKind::Forall:
      return Formula::forall(f->name, beta_rec(f->left, cfg));
    case FormulaKind::Exists:
      return Formula::exists(f->name, beta_rec(f->left, cfg));
    case FormulaKind::Rtc:
      break;
  }
  check_arith(f->src());
  check_arith(f->dst());
  auto body = beta_rec(f->body(), cfg);
  std::set<std::string> avoid;
  add_vars(avoid, f);
  for (const auto& n : body->free_vars())
    if (n != f->name && n != f->var2) avoid.insert(n);
  auto fresh = [&](const std::string& base) {
    auto n = fresh_like(base, avoid);
    avoid.insert(n);
    return Term::var(n);
  };
  auto z = fresh("z"), c = fresh("c"), u = fresh("u"), v = fresh("v"), w = fresh("w");
  auto zero = Term::constant("0");
  auto succ = [](const TermPtr& t) { return Term::app("s", {t}); };

  auto step = substitute(body, Substitution{{f->name, v}, {f->var2, w}});
  auto inner = Formula::exists(
      v->name, Formula::exists(w->name, Formula::conj(Formula::conj(beta(cfg, c, u, v), beta(cfg, c, succ(u), w)), step)));
  auto guard = Formula::disj(Formula::eq(u, z), lt_avoiding(cfg, u, z, avoid));
  auto bounded = Formula::forall(u->name, Formula::implies(guard, inner));
  auto chain = Formula::exists(
      z->name, Formula::exists(c->name, Formula::conj(Formula::conj(beta(cfg, c, zero, f->src()),
                                                                    beta(cfg, c, succ(z), f->dst())),
                                                      bounded)));
  return Formula::disj(Formula::eq(f->src(), f->dst()), chain);
}

}  // namespace

FormulaPtr beta_translate(const FormulaPtr& f, const BetaConfig& cfg) {
  cfg.validate();
  return canonicalize(beta_rec(f, cfg));
}

FormulaPtr encode_rtc2(const std::string& x1, const std::string& x2, const std::string& y1, const std::string& y2,
                       const FormulaPtr& phi, const TermPtr& s1, const TermPtr& s2, const TermPtr& t1,
                       const TermPtr& t2, const Signature& sig) {
  auto it = sig.functions.find(std::string(kPairSymbol));
  if (it == sig.functions.end() || it->second != 2) throw MissingPairSymbol();
  std::set<std::string> seen;
  for (const auto& v : {x1, x2, y1, y2})
    if (!seen.insert(v).second) throw VariableClash(v);
  std::set<std::string> avoid = seen;
  add_vars(avoid, phi);
  std::string x = fresh_like("x", avoid);
  avoid.insert(x);
  std::string y = fresh_like("y", avoid);
  auto V = [](const std::string& n) { return Term::var(n); };
  auto body = Formula::conj(
      Formula::conj(Formula::eq(V(x), Term::pair(V(x1), V(x2))), Formula::eq(V(y), Term::pair(V(y1), V(y2)))), phi);
  body = Formula::exists(x1, Formula::exists(x2, Formula::exists(y1, Formula::exists(y2, body))));
  return canonicalize(Formula::rtc(x, y, body, Term::pair(s1, s2), Term::pair(t1, t2)));
}

}  // namespace rtc
