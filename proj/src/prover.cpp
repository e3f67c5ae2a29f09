#include "rtc/prover.hpp"

#include <functional>
#include <map>
#include <memory>

#include "rtc/errors.hpp"
#include "rtc/tracecheck.hpp"

namespace rtc {

std::string_view outcome_name(SearchOutcome::Kind k) {
  switch (k) {
    case SearchOutcome::Kind::Proved:
      return "proved";
    case SearchOutcome::Kind::Refuted:
      return "refuted";
    case SearchOutcome::Kind::Unknown:
      break;
  }
  return "unknown";
}

namespace {

std::optional<RuleId> invertible_left(FormulaKind k) {
  switch (k) {
    case FormulaKind::And:
      return RuleId::AndL;
    case FormulaKind::Or:
      return RuleId::OrL;
    case FormulaKind::Implies:
      return RuleId::ImpL;
    case FormulaKind::Not:
      return RuleId::NotL;
    case FormulaKind::Exists:
      return RuleId::ExL;
    default:
      return std::nullopt;
  }
}

std::optional<RuleId> invertible_right(FormulaKind k) {
  switch (k) {
    case FormulaKind::And:
      return RuleId::AndR;
    case FormulaKind::Or:
      return RuleId::OrR;
    case FormulaKind::Implies:
      return RuleId::ImpR;
    case FormulaKind::Not:
      return RuleId::NotR;
    case FormulaKind::Forall:
      return RuleId::AllR;
    default:
      return std::nullopt;
  }
}

// Matches patterns into the formulas of a sequent (several patterns may hit
// the same formula). Optional patterns may go unmatched, up to max_missing.
struct SubsetMatcher {
  struct Pat {
    FormulaPtr f;
    bool succ;
    bool optional;
  };
  std::vector<Pat> pats;
  const Sequent& target;
  int max_missing;
  std::function<bool(const Substitution&, const std::vector<FormulaPtr>&)> emit;

  bool run(std::size_t i, const Substitution& theta, std::vector<FormulaPtr>& missing) {
    if (i == pats.size()) return emit(theta, missing);
    const auto& p = pats[i];
    const auto& side = p.succ ? target.succ() : target.ante();
    for (const auto& t : side.items()) {
      Substitution th = theta;
      if (match_formula(p.f, t, th) && run(i + 1, th, missing)) return true;
    }
    if (p.optional && static_cast<int>(missing.size()) < max_missing) {
      missing.push_back(p.f);
      bool stop = run(i + 1, theta, missing);
      missing.pop_back();
      if (stop) return true;
    }
    return false;
  }
};

Substitution drop_identity(const Substitution& th) {
  Substitution out;
  for (const auto& [v, t] : th)
    if (!(t->is_var() && t->name == v)) out.emplace(v, t);
  return out;
}

bool binds_all(const Substitution& th, const Sequent& s) {
  for (const auto& v : s.free_vars())
    if (!th.count(v)) return false;
  return true;
}

// Variables of the goal, then its closed subterms, then fresh variables.
std::vector<TermPtr> witness_pool(const Sequent& g, int fresh) {
  std::vector<TermPtr> out;
  auto fv = g.free_vars();
  for (const auto& v : fv) out.push_back(Term::var(v));
  std::vector<TermPtr> closed;
  for (const auto* side : {&g.ante(), &g.succ()})
    for (const auto& f : side->items()) closed_subterms(f, closed);
  for (const auto& t : closed) {
    bool dup = false;
    for (const auto& o : out) dup = dup || term_eq(o, t);
    if (!dup) out.push_back(t);
  }
  std::set<std::string> avoid = fv;
  for (int i = 0; i < fresh; ++i) {
    auto n = fresh_like("r", avoid);
    avoid.insert(n);
    out.push_back(Term::var(n));
  }
  return out;
}

void atoms_of(const FormulaPtr& f, std::vector<FormulaPtr>& out) {
  switch (f->kind) {
    case FormulaKind::Eq:
    case FormulaKind::Pred:
    case FormulaKind::Rtc:
      for (const auto& o : out)
        if (o->key() == f->key()) return;
      out.push_back(f);
      return;
    case FormulaKind::Not:
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Implies:
      atoms_of(f->left, out);
      if (f->right) atoms_of(f->right, out);
      return;
    default:
      return;
  }
}

// Cut formulas that leave the right premise one theory axiom away.
std::vector<FormulaPtr> theory_cuts(const Sequent& g, const Theory& th) {
  std::vector<FormulaPtr> out;
  for (const auto& ax : th.axioms) {
    SubsetMatcher m{{}, g, 1, {}};
    for (const auto& f : ax.succ().items()) m.pats.push_back({f, true, false});
    for (const auto& f : ax.ante().items()) m.pats.push_back({f, false, true});
    m.emit = [&](const Substitution& theta, const std::vector<FormulaPtr>& missing) {
      if (missing.size() != 1 || !binds_all(theta, ax)) return false;
      auto c = canonicalize(substitute(missing[0], theta));
      if (g.ante().contains(c)) return false;
      for (const auto& o : out)
        if (o->key() == c->key()) return false;
      out.push_back(c);
      return false;
    };
    std::vector<FormulaPtr> missing;
    m.run(0, {}, missing);
  }
  return out;
}

}  // namespace

std::vector<Candidate> expand_fair(const Sequent& g, const SearchConfig& cfg) {
  auto fv = g.free_vars();
  auto eigen_for = [&](const std::string& base) { return fresh_like(base, fv); };

  for (const auto& f : g.ante().items()) {
    auto r = invertible_left(f->kind);
    if (!r) continue;
    RuleParams p;
    p.principal = f;
    if (*r == RuleId::ExL) p.eigen = eigen_for(f->name);
    return {{*r, p}};
  }
  for (const auto& f : g.succ().items()) {
    auto r = invertible_right(f->kind);
    if (!r) continue;
    RuleParams p;
    p.principal = f;
    if (*r == RuleId::AllR) p.eigen = eigen_for(f->name);
    return {{*r, p}};
  }

  std::vector<Candidate> out;
  // Rewriting with an antecedent equation, inside one succedent formula.
  for (const auto& e : g.ante().items()) {
    if (e->kind != FormulaKind::Eq || term_eq(e->lhs, e->rhs)) continue;
    for (const auto& f : g.succ().items()) {
      for (RuleId r : {RuleId::EqL1, RuleId::EqL2}) {
        const TermPtr& from = r == RuleId::EqL1 ? e->rhs : e->lhs;
        if (!formula_mentions(f, from)) continue;
        std::set<std::string> avoid = fv;
        for (const auto& v : f->free_vars()) avoid.insert(v);
        auto m = fresh_like("m", avoid);
        RuleParams p;
        p.principal = e;
        p.tmpl = abstract_term(f, from, m);
        p.tvar = m;
        out.push_back({r, p});
      }
    }
  }
  for (const auto& f : g.ante().items()) {
    if (!f->is_rtc()) continue;
    RuleParams p;
    p.principal = f;
    p.eigen = eigen_for("z");
    out.push_back({RuleId::RtcCase, p});
  }
  auto pool = witness_pool(g, cfg.fresh_pool);
  for (const auto& f : g.succ().items()) {
    if (!f->is_rtc()) continue;
    for (const auto& w : pool) {
      RuleParams p;
      p.principal = f;
      p.witness = w;
      out.push_back({RuleId::RtcStep, p});
    }
  }
  for (const auto& f : g.succ().items()) {
    if (f->kind != FormulaKind::Exists) continue;
    for (const auto& w : pool) {
      RuleParams p;
      p.principal = f;
      p.witness = w;
      out.push_back({RuleId::ExR, p});
    }
  }
  for (const auto& f : g.ante().items()) {
    if (f->kind != FormulaKind::Forall) continue;
    for (const auto& w : pool) {
      RuleParams p;
      p.principal = f;
      p.witness = w;
      out.push_back({RuleId::AllL, p});
    }
  }
  std::vector<FormulaPtr> cuts = theory_cuts(g, cfg.theory);
  if (cfg.allow_cut) {
    std::vector<FormulaPtr> atoms;
    for (const auto* side : {&g.ante(), &g.succ()})
      for (const auto& f : side->items()) atoms_of(f, atoms);
    for (const auto& a : atoms) {
      if (g.ante().contains(a) || g.succ().contains(a)) continue;
      bool dup = false;
      for (const auto& c : cuts) dup = dup || c->key() == a->key();
      if (!dup) cuts.push_back(a);
    }
  }
  for (const auto& c : cuts) {
    RuleParams p;
    p.cut = c;
    out.push_back({RuleId::Cut, p});
  }
  return out;
}

namespace {

struct PTree;
using PTreePtr = std::shared_ptr<const PTree>;

struct PTree {
  int uid = -1;
  bool bud = false;
  Sequent sequent;
  RuleInstance rule;  // unless bud
  int target = -1;    // companion uid, for buds
  std::vector<PTreePtr> kids;
};

struct Branch;
using BranchPtr = std::shared_ptr<const Branch>;

// The path from the root: rule applied at each ancestor and the premise taken.
struct Branch {
  std::shared_ptr<const RuleInstance> rule;
  int premise;
  int uid;
  BranchPtr up;
};

struct OutOfBudget {};

using Cont = std::function<bool(const PTreePtr&)>;

class Search {
 public:
  Search(const SearchConfig& cfg) : cfg_(cfg) {}

  std::size_t explored = 0;
  std::optional<ProofGraph> found;

  bool run(const Sequent& goal, int depth) {
    return solve(goal, depth, nullptr, [this](const PTreePtr& t) { return accept(t); });
  }

 private:
  const SearchConfig& cfg_;
  int next_uid_ = 0;
  // Every rule application in the current partial proof, in creation order.
  std::vector<std::pair<int, std::shared_ptr<const RuleInstance>>> applied_;

  // A linear chain of one-premise instances, ending in `last` (or a leaf when null).
  PTreePtr chain(const std::vector<RuleInstance>& steps, PTreePtr last) {
    for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
      auto n = std::make_shared<PTree>();
      n->uid = next_uid_++;
      n->sequent = it->conclusion;
      n->rule = *it;
      if (last) n->kids.push_back(last);
      last = n;
    }
    return last;
  }

  std::vector<std::vector<RuleInstance>> closers(const Sequent& g) {
    std::vector<std::vector<RuleInstance>> out;
    for (const auto& f : g.ante().items())
      if (g.succ().contains(f)) out.push_back(axiom_macro(g, f));
    for (const auto& f : g.succ().items()) {
      bool eq = f->kind == FormulaKind::Eq && term_eq(f->lhs, f->rhs);
      bool refl = f->is_rtc() && term_eq(f->src(), f->dst());
      if (!eq && !refl) continue;
      Sequent leaf({}, FormulaSet({f}));
      auto steps = weakening_chain(g, leaf);
      RuleParams p;
      p.principal = f;
      steps.push_back({eq ? RuleId::EqR : RuleId::RtcRefl, leaf, {}, p});
      out.push_back(std::move(steps));
    }
    for (const auto& ax : cfg_.theory.axioms) {
      SubsetMatcher m{{}, g, 0, {}};
      for (const auto& f : ax.ante().items()) m.pats.push_back({f, false, false});
      for (const auto& f : ax.succ().items()) m.pats.push_back({f, true, false});
      m.emit = [&](const Substitution& theta, const std::vector<FormulaPtr>&) {
        if (!binds_all(theta, ax)) return false;
        Sequent leaf = ax.substitute(theta);
        if (!leaf.ante().subset_of(g.ante()) || !leaf.succ().subset_of(g.succ())) return false;
        auto steps = weakening_chain(g, leaf);
        steps.push_back({RuleId::TheoryAxiom, leaf, {}, {}});
        out.push_back(std::move(steps));
        return true;
      };
      std::vector<FormulaPtr> missing;
      m.run(0, {}, missing);
    }
    return out;
  }

  // Substitution instances of `a` contained in g, as weakenings then Subst.
  template <typename F>
  bool for_each_instance(const Sequent& g, const Sequent& a, F&& f) {
    SubsetMatcher m{{}, g, 0, {}};
    for (const auto& x : a.ante().items()) m.pats.push_back({x, false, false});
    for (const auto& x : a.succ().items()) m.pats.push_back({x, true, false});
    std::set<std::string> tried;
    m.emit = [&](const Substitution& theta0, const std::vector<FormulaPtr>&) {
      Substitution theta = drop_identity(theta0);
      Sequent inst = a.substitute(theta);
      if (!tried.insert(inst.key()).second) return false;
      if (!inst.ante().subset_of(g.ante()) || !inst.succ().subset_of(g.succ())) return false;
      auto steps = weakening_chain(g, inst);
      if (!theta.empty()) {
        RuleParams p;
        p.subst = theta;
        steps.push_back({RuleId::Subst, inst, {a}, p});
      }
      return f(steps);
    };
    std::vector<FormulaPtr> missing;
    return m.run(0, {}, missing);
  }

  PTreePtr bud_chain(const std::vector<RuleInstance>& steps, const Sequent& a, int target) {
    auto bud = std::make_shared<PTree>();
    bud->uid = next_uid_++;
    bud->bud = true;
    bud->sequent = a;
    bud->target = target;
    return chain(steps, bud);
  }

  // Close g by a bud on some ancestor, through weakening and a substitution.
  bool try_buds(const Sequent& g, const BranchPtr& branch, const Cont& k) {
    std::vector<const Branch*> path;
    for (const Branch* b = branch.get(); b; b = b->up.get()) path.push_back(b);
    // down[i]: trace matrix from path[i]'s conclusion to g; path[0] is the parent.
    std::vector<EdgeMatrix> down(path.size());
    for (std::size_t i = 0; i < path.size(); ++i) {
      auto m = instance_matrix(*path[i]->rule, path[i]->premise);
      down[i] = i == 0 ? m : compose(m, down[i - 1]);
    }
    for (std::size_t i = 0; i < path.size(); ++i) {
      const Sequent& a = path[i]->rule->conclusion;
      bool done = for_each_instance(g, a, [&](const std::vector<RuleInstance>& steps) {
        EdgeMatrix cyc = down[i];
        for (const auto& s : steps) cyc = compose(cyc, instance_matrix(s, 0));
        return loops_progress(cyc) && k(bud_chain(steps, a, path[i]->uid));
      });
      if (done) return true;
    }
    if (!cfg_.global_companions) return false;
    std::set<int> on_branch;
    for (const auto* b : path) on_branch.insert(b->uid);
    for (const auto& [uid, r] : applied_) {
      if (on_branch.count(uid)) continue;
      const Sequent& a = r->conclusion;
      if (for_each_instance(g, a, [&](const std::vector<RuleInstance>& steps) { return k(bud_chain(steps, a, uid)); }))
        return true;
    }
    return false;
  }

  bool solve(const Sequent& g, int depth, const BranchPtr& branch, const Cont& k) {
    if (++explored > cfg_.max_nodes) throw OutOfBudget{};
    for (const auto& steps : closers(g))
      if (k(chain(steps, nullptr))) return true;
    if (try_buds(g, branch, k)) return true;
    if (depth <= 0) return false;
    for (const auto& c : expand_fair(g, cfg_)) {
      std::vector<Sequent> prems;
      try {
        prems = expected_premises(c.rule, g, c.params);
      } catch (const NotApplicable&) {
        continue;
      }
      auto inst = std::make_shared<RuleInstance>(RuleInstance{c.rule, g, prems, c.params});
      if (!rule_instance_ok(*inst, cfg_.theory)) continue;
      int uid = next_uid_++;
      applied_.emplace_back(uid, inst);
      bool ok = solve_premises(inst, uid, 0, {}, depth, branch, k);
      applied_.pop_back();
      if (ok) return true;
    }
    return false;
  }

  bool solve_premises(const std::shared_ptr<const RuleInstance>& inst, int uid, std::size_t i,
                      std::vector<PTreePtr> kids, int depth, const BranchPtr& branch, const Cont& k) {
    if (i == inst->premises.size()) {
      auto n = std::make_shared<PTree>();
      n->uid = uid;
      n->sequent = inst->conclusion;
      n->rule = *inst;
      n->kids = std::move(kids);
      return k(n);
    }
    auto below = std::make_shared<const Branch>(Branch{inst, static_cast<int>(i), uid, branch});
    return solve(inst->premises[i], depth - 1, below, [&, i, kids](const PTreePtr& t) {
      auto more = kids;
      more.push_back(t);
      return solve_premises(inst, uid, i + 1, std::move(more), depth, branch, k);
    });
  }

  bool accept(const PTreePtr& t) {
    ProofGraph g;
    g.theory = cfg_.theory;
    std::map<int, int> ids;
    int next = 0;
    std::function<int(const PTreePtr&)> emit = [&](const PTreePtr& n) -> int {
      int id = next++;
      ids[n->uid] = id;
      if (n->bud) {
        g.add_bud(id, n->sequent, ids.at(n->target));
        return id;
      }
      std::vector<int> kids;
      for (const auto& c : n->kids) kids.push_back(emit(c));
      g.add_internal(id, n->rule, kids);
      return id;
    };
    g.root = emit(t);
    if (!validate_structure(g, g.theory).empty()) return false;
    if (!check_global_trace_condition(g).accepted()) return false;
    found = std::move(g);
    return true;
  }
};

}  // namespace

SearchOutcome prove(const Sequent& goal, const SearchConfig& cfg) {
  SearchOutcome out;
  if (cfg.refute_size > 0) {
    ModelSearchOptions opts;
    opts.max_size = cfg.refute_size;
    opts.budget = cfg.refute_budget;
    opts.extra = cfg.theory.sig;
    try {
      if (auto cm = find_counter_model(goal, cfg.theory.axioms, opts)) {
        out.kind = SearchOutcome::Kind::Refuted;
        out.counter = std::move(cm);
        return out;
      }
    } catch (const BudgetExceeded&) {
    }
  }
  Search s(cfg);
  for (int d = 0; d <= cfg.max_depth; ++d) {
    out.depth = d;
    try {
      if (s.run(goal, d)) {
        out.kind = SearchOutcome::Kind::Proved;
        out.proof = std::move(s.found);
        out.nodes_explored = s.explored;
        return out;
      }
    } catch (const OutOfBudget&) {
      out.reason = "budget";
      out.nodes_explored = s.explored;
      return out;
    }
  }
  out.reason = "depth";
  out.nodes_explored = s.explored;
  return out;
}

}  // namespace rtc
