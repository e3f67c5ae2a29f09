#include "rtc/semantics.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <sstream>
#include <string_view>

#include "rtc/errors.hpp"

namespace rtc {

std::size_t FiniteModel::index(const std::vector<int>& args) const {
  std::size_t idx = 0;
  for (int a : args) idx = idx * static_cast<std::size_t>(size) + static_cast<std::size_t>(a);
  return idx;
}

int FiniteModel::apply(const std::string& fn, const std::vector<int>& args) const {
  auto it = functions.find(fn);
  if (it == functions.end() || it->second.arity != static_cast<int>(args.size()))
    throw SignatureMismatch("function '" + fn + "' is not interpreted with arity " + std::to_string(args.size()));
  return it->second.values[index(args)];
}

bool FiniteModel::holds(const std::string& pred, const std::vector<int>& args) const {
  auto it = predicates.find(pred);
  if (it == predicates.end() || it->second.arity != static_cast<int>(args.size()))
    throw SignatureMismatch("predicate '" + pred + "' is not interpreted with arity " + std::to_string(args.size()));
  return it->second.holds[index(args)] != 0;
}

namespace {

std::size_t ipow(std::size_t b, int e) {
  std::size_t r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

}  // namespace

void FiniteModel::validate() const {
  if (size < 1) throw SignatureMismatch("model size must be positive");
  for (const auto& [c, v] : constants)
    if (v < 0 || v >= size) throw SignatureMismatch("constant '" + c + "' out of range");
  for (const auto& [f, t] : functions) {
    if (t.values.size() != ipow(size, t.arity)) throw SignatureMismatch("function table '" + f + "' has wrong size");
    for (int v : t.values)
      if (v < 0 || v >= size) throw SignatureMismatch("function table '" + f + "' out of range");
  }
  for (const auto& [p, t] : predicates)
    if (t.holds.size() != ipow(size, t.arity)) throw SignatureMismatch("predicate table '" + p + "' has wrong size");
}

namespace {

class Evaluator {
 public:
  Evaluator(const FiniteModel& m, const Valuation& v) : m_(m) {
    for (const auto& [name, val] : v) env_.emplace_back(name, val);
  }

  int lookup(const std::string& name) const {
    for (auto it = env_.rbegin(); it != env_.rend(); ++it)
      if (it->first == name) return it->second;
    throw UnboundVariable(name);
  }

  int term(const Term& t) {
    switch (t.kind) {
      case Term::Kind::Var:
        return lookup(t.name);
      case Term::Kind::Const: {
        auto it = m_.constants.find(t.name);
        if (it == m_.constants.end()) throw SignatureMismatch("constant '" + t.name + "' is not interpreted");
        return it->second;
      }
      case Term::Kind::App: {
        std::vector<int> args;
        args.reserve(t.args.size());
        for (const auto& a : t.args) args.push_back(term(*a));
        return m_.apply(t.name, args);
      }
    }
    return 0;
  }

  bool formula(const Formula& f) {
    switch (f.kind) {
      case FormulaKind::Bot:
        return false;
      case FormulaKind::Top:
        return true;
      case FormulaKind::Eq:
        return term(*f.lhs) == term(*f.rhs);
      case FormulaKind::Pred: {
        std::vector<int> args;
        args.reserve(f.args.size());
        for (const auto& a : f.args) args.push_back(term(*a));
        return m_.holds(f.name, args);
      }
      case FormulaKind::Not:
        return !formula(*f.left);
      case FormulaKind::And:
        return formula(*f.left) && formula(*f.right);
      case FormulaKind::Or:
        return formula(*f.left) || formula(*f.right);
      case FormulaKind::Implies:
        return !formula(*f.left) || formula(*f.right);
      case FormulaKind::Forall:
      case FormulaKind::Exists: {
        bool want = f.kind == FormulaKind::Exists;
        env_.emplace_back(f.name, 0);
        bool result = !want;
        for (int a = 0; a < m_.size; ++a) {
          env_.back().second = a;
          if (formula(*f.left) == want) {
            result = want;
            break;
          }
        }
        env_.pop_back();
        return result;
      }
      case FormulaKind::Rtc:
        return chain(f, nullptr);
    }
    return false;
  }

  bool step(const Formula& rtc, int a, int b) {
    env_.emplace_back(rtc.name, a);
    env_.emplace_back(rtc.var2, b);
    bool r = formula(*rtc.body());
    env_.pop_back();
    env_.pop_back();
    return r;
  }

  // BFS from the source; fills `out` with a shortest chain when requested.
  bool chain(const Formula& rtc, std::vector<int>* out) {
    int s = term(*rtc.src());
    int t = term(*rtc.dst());
    if (s == t) {
      if (out) *out = {s};
      return true;
    }
    std::vector<int> parent(m_.size, -1);
    std::vector<char> seen(m_.size, 0);
    std::deque<int> queue{s};
    seen[s] = 1;
    while (!queue.empty()) {
      int a = queue.front();
      queue.pop_front();
      for (int b = 0; b < m_.size; ++b) {
        if (seen[b] || !step(rtc, a, b)) continue;
        seen[b] = 1;
        parent[b] = a;
        if (b == t) {
          if (out) {
            out->clear();
            for (int c = t;; c = parent[c]) {
              out->push_back(c);
              if (c == s) break;
            }
            std::reverse(out->begin(), out->end());
          }
          return true;
        }
        queue.push_back(b);
      }
    }
    return false;
  }

 private:
  const FiniteModel& m_;
  std::vector<std::pair<std::string, int>> env_;
};

}  // namespace

int evaluate(const FiniteModel& m, const Valuation& v, const TermPtr& t) { return Evaluator(m, v).term(*t); }

bool evaluate(const FiniteModel& m, const Valuation& v, const FormulaPtr& f) {
  return Evaluator(m, v).formula(*f);
}

bool invalidates(const FiniteModel& m, const Valuation& v, const Sequent& s) {
  Evaluator ev(m, v);
  for (const auto& f : s.ante())
    if (!ev.formula(*f)) return false;
  for (const auto& f : s.succ())
    if (ev.formula(*f)) return false;
  return true;
}

bool satisfies_universally(const FiniteModel& m, const Sequent& s) {
  std::set<std::string> fv = s.free_vars();
  std::vector<std::string> vars(fv.begin(), fv.end());
  Valuation v;
  for (const auto& x : vars) v[x] = 0;
  while (true) {
    if (invalidates(m, v, s)) return false;
    std::size_t i = vars.size();
    for (; i > 0; --i) {
      if (++v[vars[i - 1]] < m.size) break;
      v[vars[i - 1]] = 0;
    }
    if (i == 0) return true;
  }
}

std::optional<std::vector<int>> minimal_chain(const FiniteModel& m, const Valuation& v, const FormulaPtr& rtc) {
  if (!rtc->is_rtc()) throw NotAnRtcFormula(print(rtc));
  std::vector<int> out;
  if (!Evaluator(m, v).chain(*rtc, &out)) return std::nullopt;
  return out;
}

DegreeResult degree(const FiniteModel& m, const Valuation& v, const FormulaPtr& rtc) {
  auto c = minimal_chain(m, v, rtc);
  if (!c) return std::nullopt;
  return static_cast<int>(c->size()) - 1;
}

// ---------------------------------------------------------------- model search

namespace {

struct Layout {
  std::vector<std::string> constants;
  std::vector<std::pair<std::string, int>> functions;
  std::vector<std::pair<std::string, int>> predicates;
  std::vector<std::string> vars;
};

// Odometer over the table digits of one model size, last digit fastest.
class ModelEnumerator {
 public:
  ModelEnumerator(const Layout& layout, int n) : layout_(layout), n_(n) {
    for (std::size_t i = 0; i < layout.constants.size(); ++i) radix_.push_back(n);
    for (const auto& [f, k] : layout.functions)
      for (std::size_t j = 0; j < ipow(n, k); ++j) radix_.push_back(n);
    for (const auto& [p, k] : layout.predicates)
      for (std::size_t j = 0; j < ipow(n, k); ++j) radix_.push_back(2);
    digits_.assign(radix_.size(), 0);
  }

  FiniteModel model() const {
    FiniteModel m;
    m.size = n_;
    std::size_t d = 0;
    for (const auto& c : layout_.constants) m.constants[c] = digits_[d++];
    for (const auto& [f, k] : layout_.functions) {
      FunctionTable t{k, {}};
      for (std::size_t j = 0; j < ipow(n_, k); ++j) t.values.push_back(digits_[d++]);
      m.functions[f] = std::move(t);
    }
    for (const auto& [p, k] : layout_.predicates) {
      PredicateTable t{k, {}};
      for (std::size_t j = 0; j < ipow(n_, k); ++j) t.holds.push_back(static_cast<char>(digits_[d++]));
      m.predicates[p] = std::move(t);
    }
    return m;
  }

  bool advance() {
    for (std::size_t i = digits_.size(); i-- > 0;) {
      if (++digits_[i] < radix_[i]) return true;
      digits_[i] = 0;
    }
    return false;
  }

 private:
  const Layout& layout_;
  int n_;
  std::vector<int> radix_;
  std::vector<int> digits_;
};

}  // namespace

std::optional<CounterModel> find_counter_model(const Sequent& s, const std::vector<Sequent>& theory,
                                               const ModelSearchOptions& opts) {
  if (opts.max_size < 1 || opts.max_size > kModelSizeCap)
    throw Error("model size bound must lie in 1.." + std::to_string(kModelSizeCap));
  Signature sig = opts.extra;
  sig.absorb(s);
  for (const auto& ax : theory) sig.absorb(ax);
  Layout layout;
  layout.constants.assign(sig.constants.begin(), sig.constants.end());
  layout.functions.assign(sig.functions.begin(), sig.functions.end());
  layout.predicates.assign(sig.predicates.begin(), sig.predicates.end());
  std::set<std::string> fv = s.free_vars();
  layout.vars.assign(fv.begin(), fv.end());

  std::uint64_t examined = 0;
  for (int n = 1; n <= opts.max_size; ++n) {
    ModelEnumerator models(layout, n);
    do {
      FiniteModel m = models.model();
      std::optional<bool> theory_ok;
      Valuation v;
      for (const auto& x : layout.vars) v[x] = 0;
      while (true) {
        if (++examined > opts.budget) throw BudgetExceeded("model search budget exhausted");
        if (invalidates(m, v, s)) {
          if (!theory_ok) {
            theory_ok = std::all_of(theory.begin(), theory.end(),
                                    [&](const Sequent& ax) { return satisfies_universally(m, ax); });
          }
          if (*theory_ok) return CounterModel{m, v};
          break;
        }
        bool more = false;
        for (std::size_t i = layout.vars.size(); i-- > 0;) {
          if (++v[layout.vars[i]] < n) {
            more = true;
            break;
          }
          v[layout.vars[i]] = 0;
        }
        if (!more) break;
      }
    } while (models.advance());
  }
  return std::nullopt;
}

// ---------------------------------------------------------------- dump format

namespace {

std::vector<int> tuple_of(std::size_t idx, int arity, int n) {
  std::vector<int> t(arity);
  for (int i = arity; i-- > 0;) {
    t[i] = static_cast<int>(idx % n);
    idx /= n;
  }
  return t;
}

}  // namespace

std::string dump_model(const FiniteModel& m) {
  std::ostringstream os;
  os << "model { size = " << m.size << ";";
  for (const auto& [c, v] : m.constants) os << " const " << c << " = " << v << ";";
  for (const auto& [f, t] : m.functions) {
    os << " fn " << f;
    if (t.arity != 1) os << "/" << t.arity;
    os << " = [";
    for (std::size_t i = 0; i < t.values.size(); ++i) os << (i ? "," : "") << t.values[i];
    os << "];";
  }
  for (const auto& [p, t] : m.predicates) {
    os << " pred " << p << "/" << t.arity << " = {";
    bool first = true;
    for (std::size_t i = 0; i < t.holds.size(); ++i) {
      if (!t.holds[i]) continue;
      os << (first ? "" : ",") << "(";
      auto tup = tuple_of(i, t.arity, m.size);
      for (std::size_t j = 0; j < tup.size(); ++j) os << (j ? "," : "") << tup[j];
      os << ")";
      first = false;
    }
    os << "};";
  }
  os << " }";
  return os.str();
}

std::string dump_valuation(const Valuation& v) {
  std::ostringstream os;
  os << "valuation {";
  for (const auto& [x, a] : v) os << " " << x << " = " << a << ";";
  os << " }";
  return os.str();
}

namespace {

class DumpReader {
 public:
  explicit DumpReader(const std::string& s) : s_(s) {}

  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool accept(std::string_view tok) {
    skip();
    if (s_.compare(i_, tok.size(), tok) != 0) return false;
    i_ += tok.size();
    return true;
  }
  void expect(std::string_view tok) {
    if (!accept(tok)) throw SyntaxError(i_, "'" + std::string(tok) + "'");
  }
  std::string ident() {
    skip();
    std::size_t j = i_;
    while (j < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_' || s_[j] == '\'')) ++j;
    if (j == i_) throw SyntaxError(i_, "an identifier");
    std::string r = s_.substr(i_, j - i_);
    i_ = j;
    return r;
  }
  int number() {
    skip();
    std::size_t j = i_;
    while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
    if (j == i_) throw SyntaxError(i_, "a number");
    int r = std::stoi(s_.substr(i_, j - i_));
    i_ = j;
    return r;
  }

 private:
  const std::string& s_;
  std::size_t i_ = 0;
};

int arity_from_length(std::size_t len, int n) {
  for (int k = 0; k < 8; ++k)
    if (ipow(n, k) == len) return k;
  throw SignatureMismatch("table length " + std::to_string(len) + " is not a power of the domain size");
}

}  // namespace

FiniteModel parse_model(const std::string& text) {
  DumpReader r(text);
  FiniteModel m;
  r.expect("model");
  r.expect("{");
  r.expect("size");
  r.expect("=");
  m.size = r.number();
  r.expect(";");
  while (!r.accept("}")) {
    if (r.accept("const")) {
      std::string c = r.ident();
      r.expect("=");
      m.constants[c] = r.number();
    } else if (r.accept("fn")) {
      std::string f = r.ident();
      int arity = -1;
      if (r.accept("/")) arity = r.number();
      r.expect("=");
      r.expect("[");
      FunctionTable t;
      if (!r.accept("]")) {
        do t.values.push_back(r.number());
        while (r.accept(","));
        r.expect("]");
      }
      t.arity = arity >= 0 ? arity : arity_from_length(t.values.size(), m.size);
      m.functions[f] = std::move(t);
    } else if (r.accept("pred")) {
      std::string p = r.ident();
      int arity = -1;
      if (r.accept("/")) arity = r.number();
      r.expect("=");
      r.expect("{");
      std::vector<std::vector<int>> tuples;
      if (!r.accept("}")) {
        do {
          r.expect("(");
          std::vector<int> tup;
          if (!r.accept(")")) {
            do tup.push_back(r.number());
            while (r.accept(","));
            r.expect(")");
          }
          tuples.push_back(std::move(tup));
        } while (r.accept(","));
        r.expect("}");
      }
      if (arity < 0) {
        if (tuples.empty()) throw SignatureMismatch("empty predicate '" + p + "' needs an explicit arity");
        arity = static_cast<int>(tuples.front().size());
      }
      PredicateTable t{arity, std::vector<char>(ipow(m.size, arity), 0)};
      for (const auto& tup : tuples) {
        if (static_cast<int>(tup.size()) != arity) throw SignatureMismatch("tuple arity mismatch in '" + p + "'");
        for (int a : tup)
          if (a < 0 || a >= m.size) throw SignatureMismatch("tuple element out of range in '" + p + "'");
        t.holds[m.index(tup)] = 1;
      }
      m.predicates[p] = std::move(t);
    } else {
      throw SyntaxError(0, "'const', 'fn', 'pred' or '}'");
    }
    r.expect(";");
  }
  m.validate();
  return m;
}

}  // namespace rtc
