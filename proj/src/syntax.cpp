#include "rtc/syntax.hpp"

#include <algorithm>

#include "rtc/errors.hpp"

namespace rtc {

// ---------------------------------------------------------------- terms

TermPtr Term::var(std::string name) {
  return std::make_shared<const Term>(Term{Kind::Var, std::move(name), {}});
}

TermPtr Term::constant(std::string name) {
  return std::make_shared<const Term>(Term{Kind::Const, std::move(name), {}});
}

TermPtr Term::app(std::string fn, std::vector<TermPtr> args) {
  if (args.empty()) return constant(std::move(fn));
  return std::make_shared<const Term>(Term{Kind::App, std::move(fn), std::move(args)});
}

TermPtr Term::pair(TermPtr a, TermPtr b) { return app(std::string(kPairSymbol), {std::move(a), std::move(b)}); }

bool operator==(const Term& a, const Term& b) {
  if (a.kind != b.kind || a.name != b.name || a.args.size() != b.args.size()) return false;
  for (std::size_t i = 0; i < a.args.size(); ++i)
    if (!(*a.args[i] == *b.args[i])) return false;
  return true;
}

bool term_eq(const TermPtr& a, const TermPtr& b) { return a == b || *a == *b; }

namespace {

void term_key(const Term& t, const std::vector<std::string>* binders, std::string& out) {
  switch (t.kind) {
    case Term::Kind::Var: {
      if (binders) {
        for (std::size_t i = binders->size(); i-- > 0;) {
          if ((*binders)[i] == t.name) {
            out += '#';
            out += std::to_string(i);
            return;
          }
        }
      }
      out += '?';
      out += t.name;
      return;
    }
    case Term::Kind::Const:
      out += t.name;
      return;
    case Term::Kind::App:
      out += t.name;
      out += '(';
      for (std::size_t i = 0; i < t.args.size(); ++i) {
        if (i) out += ',';
        term_key(*t.args[i], binders, out);
      }
      out += ')';
      return;
  }
}

}  // namespace

bool term_less(const TermPtr& a, const TermPtr& b) {
  std::string ka, kb;
  term_key(*a, nullptr, ka);
  term_key(*b, nullptr, kb);
  return ka < kb;
}

void term_vars(const TermPtr& t, std::set<std::string>& out) {
  if (t->kind == Term::Kind::Var) {
    out.insert(t->name);
    return;
  }
  for (const auto& a : t->args) term_vars(a, out);
}

bool term_contains(const TermPtr& haystack, const TermPtr& needle) {
  if (term_eq(haystack, needle)) return true;
  for (const auto& a : haystack->args)
    if (term_contains(a, needle)) return true;
  return false;
}

std::string print(const TermPtr& t) {
  switch (t->kind) {
    case Term::Kind::Var:
    case Term::Kind::Const:
      return t->name;
    case Term::Kind::App: {
      if (t->is_pair()) return "<" + print(t->args[0]) + ", " + print(t->args[1]) + ">";
      std::string s = t->name + "(";
      for (std::size_t i = 0; i < t->args.size(); ++i) {
        if (i) s += ", ";
        s += print(t->args[i]);
      }
      return s + ")";
    }
  }
  return {};
}

TermPtr substitute(const TermPtr& t, const Substitution& s) {
  if (s.empty()) return t;
  switch (t->kind) {
    case Term::Kind::Var: {
      auto it = s.find(t->name);
      return it == s.end() ? t : it->second;
    }
    case Term::Kind::Const:
      return t;
    case Term::Kind::App: {
      std::vector<TermPtr> args;
      args.reserve(t->args.size());
      bool changed = false;
      for (const auto& a : t->args) {
        args.push_back(substitute(a, s));
        changed |= args.back() != a;
      }
      return changed ? Term::app(t->name, std::move(args)) : t;
    }
  }
  return t;
}

// ---------------------------------------------------------------- formulas

namespace {

void formula_key(const Formula& f, std::vector<std::string>& binders, std::string& out) {
  auto sub = [&](const FormulaPtr& g) { formula_key(*g, binders, out); };
  switch (f.kind) {
    case FormulaKind::Bot:
      out += 'F';
      return;
    case FormulaKind::Top:
      out += 'T';
      return;
    case FormulaKind::Eq:
      out += "=(";
      term_key(*f.lhs, &binders, out);
      out += ',';
      term_key(*f.rhs, &binders, out);
      out += ')';
      return;
    case FormulaKind::Pred:
      out += "P:";
      out += f.name;
      out += '(';
      for (std::size_t i = 0; i < f.args.size(); ++i) {
        if (i) out += ',';
        term_key(*f.args[i], &binders, out);
      }
      out += ')';
      return;
    case FormulaKind::Not:
      out += "~(";
      sub(f.left);
      out += ')';
      return;
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Implies:
      out += f.kind == FormulaKind::And ? "&(" : f.kind == FormulaKind::Or ? "|(" : ">(";
      sub(f.left);
      out += ',';
      sub(f.right);
      out += ')';
      return;
    case FormulaKind::Forall:
    case FormulaKind::Exists:
      out += f.kind == FormulaKind::Forall ? "A." : "E.";
      binders.push_back(f.name);
      sub(f.left);
      binders.pop_back();
      return;
    case FormulaKind::Rtc:
      out += "R(";
      term_key(*f.lhs, &binders, out);
      out += ',';
      term_key(*f.rhs, &binders, out);
      out += ';';
      binders.push_back(f.name);
      binders.push_back(f.var2);
      sub(f.left);
      binders.pop_back();
      binders.pop_back();
      out += ')';
      return;
  }
}

void add_vars(std::set<std::string>& acc, const std::vector<std::string>& v) { acc.insert(v.begin(), v.end()); }

}  // namespace

FormulaPtr finish(Formula&& f) {
  std::set<std::string> fv;
  switch (f.kind) {
    case FormulaKind::Bot:
    case FormulaKind::Top:
      break;
    case FormulaKind::Eq:
      term_vars(f.lhs, fv);
      term_vars(f.rhs, fv);
      break;
    case FormulaKind::Pred:
      for (const auto& a : f.args) term_vars(a, fv);
      break;
    case FormulaKind::Not:
      add_vars(fv, f.left->fv_);
      break;
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Implies:
      add_vars(fv, f.left->fv_);
      add_vars(fv, f.right->fv_);
      break;
    case FormulaKind::Forall:
    case FormulaKind::Exists:
      add_vars(fv, f.left->fv_);
      fv.erase(f.name);
      break;
    case FormulaKind::Rtc:
      add_vars(fv, f.left->fv_);
      fv.erase(f.name);
      fv.erase(f.var2);
      term_vars(f.lhs, fv);
      term_vars(f.rhs, fv);
      break;
  }
  f.fv_.assign(fv.begin(), fv.end());
  std::vector<std::string> binders;
  formula_key(f, binders, f.key_);
  return std::make_shared<const Formula>(std::move(f));
}

bool Formula::has_free(std::string_view v) const { return std::binary_search(fv_.begin(), fv_.end(), v); }

FormulaPtr Formula::bot() {
  Formula f;
  f.kind = FormulaKind::Bot;
  return finish(std::move(f));
}

FormulaPtr Formula::top() {
  Formula f;
  f.kind = FormulaKind::Top;
  return finish(std::move(f));
}

FormulaPtr Formula::eq(TermPtr a, TermPtr b) {
  Formula f;
  f.kind = FormulaKind::Eq;
  f.lhs = std::move(a);
  f.rhs = std::move(b);
  return finish(std::move(f));
}

FormulaPtr Formula::pred(std::string name, std::vector<TermPtr> args) {
  Formula f;
  f.kind = FormulaKind::Pred;
  f.name = std::move(name);
  f.args = std::move(args);
  return finish(std::move(f));
}

FormulaPtr Formula::neg(FormulaPtr a) {
  Formula f;
  f.kind = FormulaKind::Not;
  f.left = std::move(a);
  return finish(std::move(f));
}

namespace {
FormulaPtr binary(FormulaKind k, FormulaPtr a, FormulaPtr b) {
  Formula f;
  f.kind = k;
  f.left = std::move(a);
  f.right = std::move(b);
  return finish(std::move(f));
}
FormulaPtr quant(FormulaKind k, std::string v, FormulaPtr body) {
  Formula f;
  f.kind = k;
  f.name = std::move(v);
  f.left = std::move(body);
  return finish(std::move(f));
}
}  // namespace

FormulaPtr Formula::conj(FormulaPtr a, FormulaPtr b) { return binary(FormulaKind::And, std::move(a), std::move(b)); }
FormulaPtr Formula::disj(FormulaPtr a, FormulaPtr b) { return binary(FormulaKind::Or, std::move(a), std::move(b)); }
FormulaPtr Formula::implies(FormulaPtr a, FormulaPtr b) {
  return binary(FormulaKind::Implies, std::move(a), std::move(b));
}
FormulaPtr Formula::forall(std::string v, FormulaPtr body) {
  return quant(FormulaKind::Forall, std::move(v), std::move(body));
}
FormulaPtr Formula::exists(std::string v, FormulaPtr body) {
  return quant(FormulaKind::Exists, std::move(v), std::move(body));
}

FormulaPtr Formula::rtc(std::string x, std::string y, FormulaPtr body, TermPtr src, TermPtr dst) {
  if (x == y) throw Error("rtc binders must be distinct, got '" + x + "' twice");
  Formula f;
  f.kind = FormulaKind::Rtc;
  f.name = std::move(x);
  f.var2 = std::move(y);
  f.left = std::move(body);
  f.lhs = std::move(src);
  f.rhs = std::move(dst);
  return finish(std::move(f));
}

std::vector<std::string> free_vars(const FormulaPtr& f) { return f->free_vars(); }

bool alpha_eq(const FormulaPtr& a, const FormulaPtr& b) { return a == b || a->key() == b->key(); }

bool formula_less(const FormulaPtr& a, const FormulaPtr& b) { return a->key() < b->key(); }

std::string fresh_name(const std::set<std::string>& avoid) {
  for (std::size_t i = 0;; ++i) {
    std::string n = std::string(kReservedPrefix) + std::to_string(i);
    if (!avoid.count(n)) return n;
  }
}

std::string fresh_like(const std::string& base, const std::set<std::string>& avoid) {
  if (!avoid.count(base)) return base;
  for (std::size_t i = 1;; ++i) {
    std::string n = base + std::to_string(i);
    if (!avoid.count(n)) return n;
  }
}

namespace {

Substitution restrict_to(const Substitution& s, const Formula& f) {
  Substitution r;
  for (const auto& [v, t] : s) {
    if (t->is_var() && t->name == v) continue;
    if (f.has_free(v)) r.emplace(v, t);
  }
  return r;
}

std::set<std::string> range_vars(const Substitution& s) {
  std::set<std::string> out;
  for (const auto& [v, t] : s) term_vars(t, out);
  return out;
}

// Substitutes under a binder list, renaming binders that would capture.
std::pair<std::vector<std::string>, FormulaPtr> subst_under(const std::vector<std::string>& binders,
                                                            const FormulaPtr& body, Substitution s) {
  for (const auto& b : binders) s.erase(b);
  s = restrict_to(s, *body);
  if (s.empty()) return {binders, body};
  std::set<std::string> rv = range_vars(s);
  std::set<std::string> avoid = rv;
  add_vars(avoid, body->free_vars());
  for (const auto& [v, t] : s) avoid.insert(v);
  for (const auto& b : binders) avoid.insert(b);
  std::vector<std::string> out = binders;
  for (auto& b : out) {
    if (!rv.count(b)) continue;
    std::string nb = fresh_name(avoid);
    avoid.insert(nb);
    s[b] = Term::var(nb);
    b = nb;
  }
  return {out, substitute(body, s)};
}

}  // namespace

FormulaPtr substitute(const FormulaPtr& f, const Substitution& s0) {
  Substitution s = restrict_to(s0, *f);
  if (s.empty()) return f;
  switch (f->kind) {
    case FormulaKind::Bot:
    case FormulaKind::Top:
      return f;
    case FormulaKind::Eq:
      return Formula::eq(substitute(f->lhs, s), substitute(f->rhs, s));
    case FormulaKind::Pred: {
      std::vector<TermPtr> args;
      for (const auto& a : f->args) args.push_back(substitute(a, s));
      return Formula::pred(f->name, std::move(args));
    }
    case FormulaKind::Not:
      return Formula::neg(substitute(f->left, s));
    case FormulaKind::And:
      return Formula::conj(substitute(f->left, s), substitute(f->right, s));
    case FormulaKind::Or:
      return Formula::disj(substitute(f->left, s), substitute(f->right, s));
    case FormulaKind::Implies:
      return Formula::implies(substitute(f->left, s), substitute(f->right, s));
    case FormulaKind::Forall:
    case FormulaKind::Exists: {
      auto [bs, body] = subst_under({f->name}, f->left, s);
      return f->kind == FormulaKind::Forall ? Formula::forall(bs[0], body) : Formula::exists(bs[0], body);
    }
    case FormulaKind::Rtc: {
      auto [bs, body] = subst_under({f->name, f->var2}, f->left, s);
      return Formula::rtc(bs[0], bs[1], body, substitute(f->lhs, s), substitute(f->rhs, s));
    }
  }
  return f;
}

FormulaPtr substitute(const FormulaPtr& f, const std::string& var, const TermPtr& t) {
  return substitute(f, Substitution{{var, t}});
}

FormulaPtr instantiate_body(const Formula& rtc, const TermPtr& a, const TermPtr& b) {
  return substitute(rtc.body(), Substitution{{rtc.name, a}, {rtc.var2, b}});
}

namespace {

void all_names(const FormulaPtr& f, std::set<std::string>& out) {
  switch (f->kind) {
    case FormulaKind::Bot:
    case FormulaKind::Top:
      return;
    case FormulaKind::Eq:
      term_vars(f->lhs, out);
      term_vars(f->rhs, out);
      return;
    case FormulaKind::Pred:
      for (const auto& a : f->args) term_vars(a, out);
      return;
    case FormulaKind::Rtc:
      out.insert(f->name);
      out.insert(f->var2);
      term_vars(f->lhs, out);
      term_vars(f->rhs, out);
      all_names(f->left, out);
      return;
    case FormulaKind::Forall:
    case FormulaKind::Exists:
      out.insert(f->name);
      all_names(f->left, out);
      return;
    default:
      all_names(f->left, out);
      if (f->right) all_names(f->right, out);
      return;
  }
}

FormulaPtr canon_rec(const FormulaPtr& f, const std::set<std::string>& global_free, std::vector<std::string>& scope,
                     std::set<std::string>& used) {
  auto rename = [&](const std::string& b, FormulaPtr& body) -> std::string {
    bool clash = global_free.count(b) || std::find(scope.begin(), scope.end(), b) != scope.end();
    if (!clash) return b;
    std::string nb = fresh_name(used);
    used.insert(nb);
    body = substitute(body, b, Term::var(nb));
    return nb;
  };
  switch (f->kind) {
    case FormulaKind::Bot:
    case FormulaKind::Top:
    case FormulaKind::Eq:
    case FormulaKind::Pred:
      return f;
    case FormulaKind::Not: {
      auto l = canon_rec(f->left, global_free, scope, used);
      return l == f->left ? f : Formula::neg(l);
    }
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Implies: {
      auto l = canon_rec(f->left, global_free, scope, used);
      auto r = canon_rec(f->right, global_free, scope, used);
      if (l == f->left && r == f->right) return f;
      return binary(f->kind, l, r);
    }
    case FormulaKind::Forall:
    case FormulaKind::Exists: {
      FormulaPtr body = f->left;
      std::string b = rename(f->name, body);
      scope.push_back(b);
      body = canon_rec(body, global_free, scope, used);
      scope.pop_back();
      if (b == f->name && body == f->left) return f;
      return quant(f->kind, b, body);
    }
    case FormulaKind::Rtc: {
      FormulaPtr body = f->left;
      std::string x = rename(f->name, body);
      scope.push_back(x);
      std::string y = rename(f->var2, body);
      scope.push_back(y);
      body = canon_rec(body, global_free, scope, used);
      scope.pop_back();
      scope.pop_back();
      if (x == f->name && y == f->var2 && body == f->left) return f;
      return Formula::rtc(x, y, body, f->lhs, f->rhs);
    }
  }
  return f;
}

TermPtr abstract_in_term(const TermPtr& t, const TermPtr& what, const TermPtr& var) {
  if (term_eq(t, what)) return var;
  if (t->kind != Term::Kind::App) return t;
  std::vector<TermPtr> args;
  bool changed = false;
  for (const auto& a : t->args) {
    args.push_back(abstract_in_term(a, what, var));
    changed |= args.back() != a;
  }
  return changed ? Term::app(t->name, std::move(args)) : t;
}

FormulaPtr abstract_rec(const FormulaPtr& f, const TermPtr& what, const std::set<std::string>& what_vars,
                        const TermPtr& var) {
  switch (f->kind) {
    case FormulaKind::Bot:
    case FormulaKind::Top:
      return f;
    case FormulaKind::Eq:
      return Formula::eq(abstract_in_term(f->lhs, what, var), abstract_in_term(f->rhs, what, var));
    case FormulaKind::Pred: {
      std::vector<TermPtr> args;
      for (const auto& a : f->args) args.push_back(abstract_in_term(a, what, var));
      return Formula::pred(f->name, std::move(args));
    }
    case FormulaKind::Not:
      return Formula::neg(abstract_rec(f->left, what, what_vars, var));
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Implies:
      return binary(f->kind, abstract_rec(f->left, what, what_vars, var),
                    abstract_rec(f->right, what, what_vars, var));
    case FormulaKind::Forall:
    case FormulaKind::Exists:
      if (what_vars.count(f->name)) return f;
      return quant(f->kind, f->name, abstract_rec(f->left, what, what_vars, var));
    case FormulaKind::Rtc: {
      FormulaPtr body = f->left;
      if (!what_vars.count(f->name) && !what_vars.count(f->var2)) body = abstract_rec(body, what, what_vars, var);
      return Formula::rtc(f->name, f->var2, body, abstract_in_term(f->lhs, what, var),
                          abstract_in_term(f->rhs, what, var));
    }
  }
  return f;
}

void collect_closed(const TermPtr& t, const std::vector<std::string>& scope, std::vector<TermPtr>& out) {
  std::set<std::string> vs;
  term_vars(t, vs);
  bool closed = std::none_of(vs.begin(), vs.end(),
                             [&](const std::string& v) { return std::find(scope.begin(), scope.end(), v) != scope.end(); });
  if (closed) {
    if (std::none_of(out.begin(), out.end(), [&](const TermPtr& o) { return term_eq(o, t); })) out.push_back(t);
  }
  for (const auto& a : t->args) collect_closed(a, scope, out);
}

void closed_rec(const FormulaPtr& f, std::vector<std::string>& scope, std::vector<TermPtr>& out) {
  switch (f->kind) {
    case FormulaKind::Bot:
    case FormulaKind::Top:
      return;
    case FormulaKind::Eq:
      collect_closed(f->lhs, scope, out);
      collect_closed(f->rhs, scope, out);
      return;
    case FormulaKind::Pred:
      for (const auto& a : f->args) collect_closed(a, scope, out);
      return;
    case FormulaKind::Forall:
    case FormulaKind::Exists:
      scope.push_back(f->name);
      closed_rec(f->left, scope, out);
      scope.pop_back();
      return;
    case FormulaKind::Rtc:
      collect_closed(f->lhs, scope, out);
      collect_closed(f->rhs, scope, out);
      scope.push_back(f->name);
      scope.push_back(f->var2);
      closed_rec(f->left, scope, out);
      scope.pop_back();
      scope.pop_back();
      return;
    default:
      closed_rec(f->left, scope, out);
      if (f->right) closed_rec(f->right, scope, out);
      return;
  }
}

}  // namespace

FormulaPtr canonicalize(const FormulaPtr& f) {
  std::set<std::string> global(f->free_vars().begin(), f->free_vars().end());
  std::set<std::string> used;
  all_names(f, used);
  std::vector<std::string> scope;
  return canon_rec(f, global, scope, used);
}

FormulaPtr abstract_term(const FormulaPtr& f, const TermPtr& what, const std::string& var) {
  std::set<std::string> wv;
  term_vars(what, wv);
  return abstract_rec(f, what, wv, Term::var(var));
}

bool formula_mentions(const FormulaPtr& f, const TermPtr& t) {
  std::vector<TermPtr> subs;
  closed_subterms(f, subs);
  return std::any_of(subs.begin(), subs.end(), [&](const TermPtr& s) { return term_eq(s, t); });
}

void closed_subterms(const FormulaPtr& f, std::vector<TermPtr>& out) {
  std::vector<std::string> scope;
  closed_rec(f, scope, out);
}

// ---------------------------------------------------------------- printing

namespace {

int prec(const Formula& f) {
  switch (f.kind) {
    case FormulaKind::Implies:
      return 1;
    case FormulaKind::Or:
      return 2;
    case FormulaKind::And:
      return 3;
    case FormulaKind::Not:
      return 4;
    case FormulaKind::Forall:
    case FormulaKind::Exists:
      return 0;
    default:
      return 5;
  }
}

std::string print_prec(const FormulaPtr& f, int ctx) {
  std::string s;
  switch (f->kind) {
    case FormulaKind::Bot:
      return "bot";
    case FormulaKind::Top:
      return "top";
    case FormulaKind::Eq:
      return print(f->lhs) + " = " + print(f->rhs);
    case FormulaKind::Pred:
      s = f->name;
      if (!f->args.empty()) {
        s += '(';
        for (std::size_t i = 0; i < f->args.size(); ++i) {
          if (i) s += ", ";
          s += print(f->args[i]);
        }
        s += ')';
      }
      return s;
    case FormulaKind::Not:
      s = "~" + print_prec(f->left, 4);
      break;
    case FormulaKind::And:
      s = print_prec(f->left, 3) + " /\\ " + print_prec(f->right, 4);
      break;
    case FormulaKind::Or:
      s = print_prec(f->left, 2) + " \\/ " + print_prec(f->right, 3);
      break;
    case FormulaKind::Implies:
      s = print_prec(f->left, 2) + " -> " + print_prec(f->right, 1);
      break;
    case FormulaKind::Forall:
    case FormulaKind::Exists:
      s = (f->kind == FormulaKind::Forall ? "forall " : "exists ") + f->name + ". " + print_prec(f->left, 0);
      break;
    case FormulaKind::Rtc:
      return "(rtc " + f->name + " " + f->var2 + ". " + print_prec(f->left, 0) + ")(" + print(f->lhs) + ", " +
             print(f->rhs) + ")";
  }
  if (prec(*f) < ctx) return "(" + s + ")";
  return s;
}

}  // namespace

std::string print(const FormulaPtr& f) { return print_prec(f, 0); }

// ---------------------------------------------------------------- sets and sequents

FormulaSet::FormulaSet(std::vector<FormulaPtr> items) : items_(std::move(items)) {
  std::sort(items_.begin(), items_.end(), formula_less);
  items_.erase(std::unique(items_.begin(), items_.end(), alpha_eq), items_.end());
}

bool FormulaSet::contains(const FormulaPtr& f) const {
  return std::binary_search(items_.begin(), items_.end(), f, formula_less);
}

FormulaSet FormulaSet::with(const FormulaPtr& f) const {
  if (contains(f)) return *this;
  FormulaSet r = *this;
  r.items_.insert(std::lower_bound(r.items_.begin(), r.items_.end(), f, formula_less), f);
  return r;
}

FormulaSet FormulaSet::without(const FormulaPtr& f) const {
  FormulaSet r = *this;
  auto it = std::lower_bound(r.items_.begin(), r.items_.end(), f, formula_less);
  if (it != r.items_.end() && alpha_eq(*it, f)) r.items_.erase(it);
  return r;
}

FormulaSet FormulaSet::unite(const FormulaSet& o) const {
  std::vector<FormulaPtr> all = items_;
  all.insert(all.end(), o.items_.begin(), o.items_.end());
  return FormulaSet(std::move(all));
}

bool FormulaSet::operator==(const FormulaSet& o) const {
  return items_.size() == o.items_.size() && std::equal(items_.begin(), items_.end(), o.items_.begin(), alpha_eq);
}

bool FormulaSet::subset_of(const FormulaSet& o) const {
  return std::all_of(items_.begin(), items_.end(), [&](const FormulaPtr& f) { return o.contains(f); });
}

void FormulaSet::collect_free_vars(std::set<std::string>& out) const {
  for (const auto& f : items_) add_vars(out, f->free_vars());
}

std::string Sequent::key() const {
  std::string k;
  for (const auto& f : ante_) {
    k += f->key();
    k += '\x1f';
  }
  k += "|-";
  for (const auto& f : succ_) {
    k += f->key();
    k += '\x1f';
  }
  return k;
}

std::set<std::string> Sequent::free_vars() const {
  std::set<std::string> out;
  ante_.collect_free_vars(out);
  succ_.collect_free_vars(out);
  return out;
}

Sequent Sequent::substitute(const Substitution& s) const {
  std::vector<FormulaPtr> a, b;
  for (const auto& f : ante_) a.push_back(rtc::substitute(f, s));
  for (const auto& f : succ_) b.push_back(rtc::substitute(f, s));
  return Sequent(FormulaSet(std::move(a)), FormulaSet(std::move(b)));
}

std::vector<FormulaPtr> Sequent::rtc_ante() const {
  std::vector<FormulaPtr> out;
  for (const auto& f : ante_)
    if (f->is_rtc()) out.push_back(f);
  return out;
}

std::string print(const Sequent& s) {
  std::string out;
  for (std::size_t i = 0; i < s.ante().size(); ++i) {
    if (i) out += ", ";
    out += print(s.ante().items()[i]);
  }
  out += out.empty() ? "|-" : " |-";
  for (std::size_t i = 0; i < s.succ().size(); ++i) {
    out += i ? ", " : " ";
    out += print(s.succ().items()[i]);
  }
  return out;
}

// ---------------------------------------------------------------- signatures

bool Signature::has_pair() const {
  auto it = functions.find(std::string(kPairSymbol));
  return it != functions.end() && it->second == 2;
}

namespace {
void declare(std::map<std::string, int>& table, const std::string& name, int arity) {
  auto [it, inserted] = table.emplace(name, arity);
  if (!inserted && it->second != arity) throw ArityMismatch(name, it->second, arity);
}

void absorb_term(Signature& sig, const TermPtr& t) {
  if (t->kind == Term::Kind::Const) sig.constants.insert(t->name);
  if (t->kind != Term::Kind::App) return;
  declare(sig.functions, t->name, static_cast<int>(t->args.size()));
  for (const auto& a : t->args) absorb_term(sig, a);
}
}  // namespace

void Signature::merge(const Signature& o) {
  constants.insert(o.constants.begin(), o.constants.end());
  for (const auto& [n, a] : o.functions) declare(functions, n, a);
  for (const auto& [n, a] : o.predicates) declare(predicates, n, a);
  if (o.pair_constant) pair_constant = o.pair_constant;
}

void Signature::absorb(const FormulaPtr& f) {
  switch (f->kind) {
    case FormulaKind::Bot:
    case FormulaKind::Top:
      return;
    case FormulaKind::Eq:
      absorb_term(*this, f->lhs);
      absorb_term(*this, f->rhs);
      return;
    case FormulaKind::Pred:
      declare(predicates, f->name, static_cast<int>(f->args.size()));
      for (const auto& a : f->args) absorb_term(*this, a);
      return;
    case FormulaKind::Rtc:
      absorb_term(*this, f->lhs);
      absorb_term(*this, f->rhs);
      absorb(f->left);
      return;
    default:
      absorb(f->left);
      if (f->right) absorb(f->right);
      return;
  }
}

void Signature::absorb(const Sequent& s) {
  for (const auto& f : s.ante()) absorb(f);
  for (const auto& f : s.succ()) absorb(f);
}

}  // namespace rtc
