#pragma once

// Global trace condition by size-change style composition closure, a
// bounded path-enumeration cross-check, and basic-cycle analysis.

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "rtc/proofgraph.hpp"

namespace rtc {

// Relation between the antecedent RTC formulas at two nodes. Cells hold
// -1 (unrelated), 0 (related) or 1 (related through a progressing step).
struct EdgeMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<signed char> cell;

  EdgeMatrix() = default;
  EdgeMatrix(int r, int c) : rows(r), cols(c), cell(static_cast<std::size_t>(r) * c, -1) {}
  static EdgeMatrix identity(int n);

  signed char at(int i, int j) const { return cell[static_cast<std::size_t>(i) * cols + j]; }
  signed char& at(int i, int j) { return cell[static_cast<std::size_t>(i) * cols + j]; }
  bool operator==(const EdgeMatrix& o) const { return rows == o.rows && cols == o.cols && cell == o.cell; }
  bool progressing_diagonal() const;
};

EdgeMatrix compose(const EdgeMatrix& a, const EdgeMatrix& b);
// Whether the idempotent power of a square matrix has a progressing diagonal
// cell, i.e. whether looping it forever carries an infinitely progressing trace.
bool loops_progress(const EdgeMatrix& m);

// Antecedent RTC formulas of a node, in the order used for matrix indices.
std::vector<FormulaPtr> trace_positions(const ProofGraph& g, int node);
EdgeMatrix edge_matrix(const ProofGraph& g, const UnfoldedEdge& e);
// The same relation read off a rule instance and one of its premises.
EdgeMatrix instance_matrix(const RuleInstance& r, int premise);

// A cycle of the unfolded graph: nodes[i] --premise[i]--> nodes[i+1], and
// the last node leads back to nodes[0].
struct BasicCycle {
  std::vector<int> nodes;
  std::vector<int> premises;
  bool operator==(const BasicCycle& o) const { return nodes == o.nodes && premises == o.premises; }
};

EdgeMatrix cycle_matrix(const ProofGraph& g, const BasicCycle& c);

struct CycleReport {
  enum class Verdict { Accepted, Rejected, Indeterminate };
  Verdict verdict = Verdict::Accepted;
  // Rejections: an ultimately periodic path prefix . period^omega from the root.
  std::vector<int> prefix;
  BasicCycle period;
  std::size_t explored = 0;  // closure elements or periods examined

  bool accepted() const { return verdict == Verdict::Accepted; }
};

inline constexpr std::size_t kDefaultClosureCap = 2'000'000;
inline constexpr std::size_t kDefaultCycleCap = 100'000;

CycleReport check_global_trace_condition(const ProofGraph& g, std::size_t cap = kDefaultClosureCap);
// Every closed walk with period <= max_period, started from its least node.
CycleReport check_by_path_enumeration(const ProofGraph& g, int max_period, std::size_t cap = kDefaultClosureCap);
// True when the period's matrix has no progressing idempotent power.
bool witness_confirms(const ProofGraph& g, const CycleReport& r);

// Johnson's algorithm; parallel edges give distinct cycles. Each cycle
// starts at its least node; cycles come ordered by start node, then by
// depth-first discovery over edges sorted by (node, premise).
std::vector<BasicCycle> enumerate_basic_cycles(const ProofGraph& g, std::size_t cap = kDefaultCycleCap);
bool is_non_overlapping(const std::vector<BasicCycle>& cycles);
bool is_non_overlapping(const ProofGraph& g);

// (node, premise) edges carrying a progressing trace step.
std::set<std::pair<int, int>> progressing_edges(const ProofGraph& g);

std::string print_cycle(const BasicCycle& c);

}  // namespace rtc
