#pragma once

// Terms, formulas and sequents of transitive closure logic.
//
// All values are immutable and shared through shared_ptr<const T>. Formulas
// carry a precomputed alpha-invariant key (bound variables printed by binder
// level), which is what equality, ordering and set membership use.

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace rtc {

inline constexpr std::string_view kPairSymbol = "pair";
// Names with this prefix are reserved for generated variables.
inline constexpr std::string_view kReservedPrefix = "_v";

struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Term {
  enum class Kind { Var, Const, App };

  Kind kind;
  std::string name;
  std::vector<TermPtr> args;

  static TermPtr var(std::string name);
  static TermPtr constant(std::string name);
  static TermPtr app(std::string fn, std::vector<TermPtr> args);
  static TermPtr pair(TermPtr a, TermPtr b);

  bool is_var() const { return kind == Kind::Var; }
  bool is_pair() const { return kind == Kind::App && name == kPairSymbol && args.size() == 2; }
};

bool operator==(const Term& a, const Term& b);
bool term_eq(const TermPtr& a, const TermPtr& b);
bool term_less(const TermPtr& a, const TermPtr& b);
void term_vars(const TermPtr& t, std::set<std::string>& out);
bool term_contains(const TermPtr& haystack, const TermPtr& needle);
std::string print(const TermPtr& t);

using Substitution = std::map<std::string, TermPtr>;

TermPtr substitute(const TermPtr& t, const Substitution& s);

enum class FormulaKind { Bot, Top, Eq, Pred, Not, And, Or, Implies, Forall, Exists, Rtc };

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

// Field use by kind:
//   Eq       lhs, rhs
//   Pred     name, args
//   Not      left
//   And/Or/Implies  left, right
//   Forall/Exists   name (bound variable), left (body)
//   Rtc      name (x), var2 (y), left (body), lhs (source), rhs (target)
struct Formula {
  FormulaKind kind = FormulaKind::Top;
  std::string name;
  std::string var2;
  std::vector<TermPtr> args;
  TermPtr lhs;
  TermPtr rhs;
  FormulaPtr left;
  FormulaPtr right;

  const std::string& key() const { return key_; }
  const std::vector<std::string>& free_vars() const { return fv_; }
  bool has_free(std::string_view v) const;

  bool is_rtc() const { return kind == FormulaKind::Rtc; }
  const FormulaPtr& body() const { return left; }
  const TermPtr& src() const { return lhs; }
  const TermPtr& dst() const { return rhs; }

  static FormulaPtr bot();
  static FormulaPtr top();
  static FormulaPtr eq(TermPtr a, TermPtr b);
  static FormulaPtr pred(std::string name, std::vector<TermPtr> args);
  static FormulaPtr neg(FormulaPtr a);
  static FormulaPtr conj(FormulaPtr a, FormulaPtr b);
  static FormulaPtr disj(FormulaPtr a, FormulaPtr b);
  static FormulaPtr implies(FormulaPtr a, FormulaPtr b);
  static FormulaPtr forall(std::string v, FormulaPtr body);
  static FormulaPtr exists(std::string v, FormulaPtr body);
  // Throws Error when x == y.
  static FormulaPtr rtc(std::string x, std::string y, FormulaPtr body, TermPtr src, TermPtr dst);

 private:
  friend FormulaPtr finish(Formula&& f);
  std::string key_;
  std::vector<std::string> fv_;
};

std::vector<std::string> free_vars(const FormulaPtr& f);
bool alpha_eq(const FormulaPtr& a, const FormulaPtr& b);
bool formula_less(const FormulaPtr& a, const FormulaPtr& b);

// Simultaneous capture-avoiding substitution on free occurrences.
FormulaPtr substitute(const FormulaPtr& f, const Substitution& s);
FormulaPtr substitute(const FormulaPtr& f, const std::string& var, const TermPtr& t);

// The body of an RTC formula with its binders instantiated: body[a/x, b/y].
FormulaPtr instantiate_body(const Formula& rtc, const TermPtr& a, const TermPtr& b);

// Renames bound variables that shadow an enclosing binder or coincide with a
// free variable of the whole formula. Idempotent; preserves alpha-equivalence.
FormulaPtr canonicalize(const FormulaPtr& f);

// Replaces every free occurrence of the term `what` by the variable `var`.
FormulaPtr abstract_term(const FormulaPtr& f, const TermPtr& what, const std::string& var);
bool formula_mentions(const FormulaPtr& f, const TermPtr& t);
// Terms occurring in f that contain no bound variable, deduplicated.
void closed_subterms(const FormulaPtr& f, std::vector<TermPtr>& out);

std::string print(const FormulaPtr& f);

// Deterministic fresh-name source: the smallest _vN not in `avoid`.
std::string fresh_name(const std::set<std::string>& avoid);
// `base` itself if unused, otherwise base1, base2, ...
std::string fresh_like(const std::string& base, const std::set<std::string>& avoid);

// Canonical finite set of formulas, ordered by alpha-invariant key.
class FormulaSet {
 public:
  FormulaSet() = default;
  FormulaSet(std::vector<FormulaPtr> items);  // NOLINT: implicit is convenient

  bool contains(const FormulaPtr& f) const;
  FormulaSet with(const FormulaPtr& f) const;
  FormulaSet without(const FormulaPtr& f) const;
  FormulaSet unite(const FormulaSet& o) const;

  const std::vector<FormulaPtr>& items() const { return items_; }
  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }

  bool operator==(const FormulaSet& o) const;
  bool subset_of(const FormulaSet& o) const;
  void collect_free_vars(std::set<std::string>& out) const;

 private:
  std::vector<FormulaPtr> items_;
};

class Sequent {
 public:
  Sequent() = default;
  Sequent(FormulaSet ante, FormulaSet succ) : ante_(std::move(ante)), succ_(std::move(succ)) {}

  const FormulaSet& ante() const { return ante_; }
  const FormulaSet& succ() const { return succ_; }

  bool operator==(const Sequent& o) const { return ante_ == o.ante_ && succ_ == o.succ_; }
  bool operator!=(const Sequent& o) const { return !(*this == o); }
  bool operator<(const Sequent& o) const { return key() < o.key(); }

  std::string key() const;
  std::set<std::string> free_vars() const;
  Sequent substitute(const Substitution& s) const;
  // Antecedent RTC formulas.
  std::vector<FormulaPtr> rtc_ante() const;

 private:
  FormulaSet ante_;
  FormulaSet succ_;
};

std::string print(const Sequent& s);

struct Signature {
  std::set<std::string> constants;
  std::map<std::string, int> functions;
  std::map<std::string, int> predicates;
  // Constant c of the pairing axiom <x,y> = c |- .
  std::optional<std::string> pair_constant;

  bool has_pair() const;
  void merge(const Signature& o);
  // Adds every symbol occurring in f. Throws ArityMismatch on conflicts.
  void absorb(const FormulaPtr& f);
  void absorb(const Sequent& s);
};

}  // namespace rtc
