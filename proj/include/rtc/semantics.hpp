#pragma once

// Brute-force semantics of transitive closure logic over explicit finite
// structures with domain {0, ..., size-1}.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rtc/syntax.hpp"

namespace rtc {

struct FunctionTable {
  int arity = 0;
  // Row-major over argument tuples: index of (a0..ak-1) is sum ai * n^(k-1-i).
  std::vector<int> values;
};

struct PredicateTable {
  int arity = 0;
  std::vector<char> holds;  // same indexing as FunctionTable
};

struct FiniteModel {
  int size = 1;
  std::map<std::string, int> constants;
  std::map<std::string, FunctionTable> functions;
  std::map<std::string, PredicateTable> predicates;

  std::size_t index(const std::vector<int>& args) const;
  int apply(const std::string& fn, const std::vector<int>& args) const;
  bool holds(const std::string& pred, const std::vector<int>& args) const;

  // Throws SignatureMismatch when a table is missing, mis-sized or out of range.
  void validate() const;
};

using Valuation = std::map<std::string, int>;

struct CounterModel {
  FiniteModel model;
  Valuation valuation;
};

int evaluate(const FiniteModel& m, const Valuation& v, const TermPtr& t);
bool evaluate(const FiniteModel& m, const Valuation& v, const FormulaPtr& f);

// True iff every antecedent formula holds and no succedent formula does.
bool invalidates(const FiniteModel& m, const Valuation& v, const Sequent& s);
// Every valuation of the sequent's free variables satisfies it.
bool satisfies_universally(const FiniteModel& m, const Sequent& s);

// nullopt means the RTC formula is false (no witnessing chain).
using DegreeResult = std::optional<int>;

// Shortest witnessing chain a0..an for an RTC formula, BFS with ties broken
// by smallest element. A single-element chain when endpoints coincide.
std::optional<std::vector<int>> minimal_chain(const FiniteModel& m, const Valuation& v, const FormulaPtr& rtc);
DegreeResult degree(const FiniteModel& m, const Valuation& v, const FormulaPtr& rtc);

struct ModelSearchOptions {
  int max_size = 5;
  // Candidate (model, valuation) pairs examined before BudgetExceeded.
  std::uint64_t budget = 200'000'000;
  // Extra symbols to interpret beyond those occurring in the sequent/theory.
  Signature extra;
};

inline constexpr int kModelSizeCap = 5;

// First counter-model in enumeration order: by size, then lexicographically
// over constants, function tables, predicate tables and finally the
// valuation. Models must satisfy every theory sequent universally.
std::optional<CounterModel> find_counter_model(const Sequent& s, const std::vector<Sequent>& theory,
                                               const ModelSearchOptions& opts = {});

std::string dump_model(const FiniteModel& m);
std::string dump_valuation(const Valuation& v);
FiniteModel parse_model(const std::string& text);

}  // namespace rtc
