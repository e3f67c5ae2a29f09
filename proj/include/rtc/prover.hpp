#pragma once

// Bounded proof search for cyclic RTC proofs. Goals are first tested against
// small finite models; the search itself is iterative deepening over a
// depth-first, continuation-passing expansion in which buds close a branch
// whenever an ancestor's substitution instance is contained in the goal and
// the resulting cycle progresses.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "rtc/proofgraph.hpp"
#include "rtc/semantics.hpp"

namespace rtc {

struct SearchConfig {
  int max_depth = 12;
  std::size_t max_nodes = 100000;
  bool allow_cut = false;  // cuts on atomic subformulas of the goal
  Theory theory;
  int fresh_pool = 1;   // fresh variables offered as witnesses
  int refute_size = 3;  // 0 disables the counter-model pass
  std::uint64_t refute_budget = 2'000'000;
  // Buds may also target nodes outside the current branch. Such cycles are
  // not pre-screened for progress; the final trace check decides.
  bool global_companions = false;
};

struct SearchOutcome {
  enum class Kind { Proved, Refuted, Unknown };
  Kind kind = Kind::Unknown;
  std::optional<ProofGraph> proof;
  std::optional<CounterModel> counter;
  std::string reason;  // for Unknown: "budget" or "depth"
  std::size_t nodes_explored = 0;
  int depth = 0;  // the deepening bound at which the search ended
};

std::string_view outcome_name(SearchOutcome::Kind k);

struct Candidate {
  RuleId rule;
  RuleParams params;
};

// The non-closing rule applications tried at a goal, in order. When an
// invertible propositional rule applies, it is the only candidate.
std::vector<Candidate> expand_fair(const Sequent& goal, const SearchConfig& cfg);

SearchOutcome prove(const Sequent& goal, const SearchConfig& cfg = {});

}  // namespace rtc
