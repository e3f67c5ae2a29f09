#pragma once

// Finite, possibly cyclic, proof graphs: internal nodes carry a rule
// instance, buds point back to a companion with the same sequent.

#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "rtc/kernel.hpp"

namespace rtc {

struct ProofNode {
  enum class Kind { Internal, Bud, Open };

  int id = 0;
  Kind kind = Kind::Open;
  Sequent sequent;
  RuleInstance rule;          // Internal only; rule.conclusion == sequent
  std::vector<int> children;  // Internal only, in premise order
  int companion = -1;         // Bud only

  bool internal() const { return kind == Kind::Internal; }
  bool bud() const { return kind == Kind::Bud; }
};

struct ProofGraph {
  std::map<int, ProofNode> nodes;
  int root = 0;
  Theory theory;

  const ProofNode& node(int id) const;
  bool has(int id) const { return nodes.count(id) != 0; }
  int next_id() const { return nodes.empty() ? 0 : nodes.rbegin()->first + 1; }

  // Children are taken as given; premises of `r` should equal their sequents.
  int add_internal(int id, RuleInstance r, std::vector<int> children);
  int add_bud(int id, Sequent s, int companion);
  int add_open(int id, Sequent s);

  std::size_t count(ProofNode::Kind k) const;
};

struct StructureError {
  enum class Kind { MissingNode, BadPremiseLink, BudMismatch, KernelError, UnreachableNode, OpenLeaf };
  Kind kind;
  int node;
  std::string detail;
};

std::string_view error_kind_name(StructureError::Kind k);
std::string describe(const StructureError& e);

// Open leaves are reported unless allow_open (proof fragments).
std::vector<StructureError> validate_structure(const ProofGraph& g, const Theory& theory, bool allow_open = false);
std::vector<StructureError> validate_structure(const ProofGraph& g, bool allow_open = false);

// An edge of the unfolded graph: premise `premise` of internal node `from`,
// landing on `to` after redirecting buds to their companions.
struct UnfoldedEdge {
  int from;
  int premise;
  int to;
  int bud = -1;  // the bud passed through, if any
};

// Internal and open nodes reachable from the root, and the edges between them.
std::vector<int> unfolded_nodes(const ProofGraph& g);
std::vector<UnfoldedEdge> unfolded_edges(const ProofGraph& g);

struct TraceStep {
  FormulaPtr from;  // antecedent RTC formula of the conclusion
  FormulaPtr to;    // antecedent RTC formula of the premise
  bool progressing = false;
};

// Trace pairs across premise `premise` of a single rule instance.
std::vector<TraceStep> rule_trace_steps(const RuleInstance& r, int premise);

// Keyed by (internal node, premise index); identity across bud links.
using TraceRelation = std::map<std::pair<int, int>, std::vector<TraceStep>>;
TraceRelation trace_relation(const ProofGraph& g);

// ---------------------------------------------------------------------------
// Text format, see docs/proof-format.md.

ProofGraph parse_proof(const std::string& text);
ProofGraph load_proof(const std::string& path);
std::string write_proof(const ProofGraph& g);

std::string print_params(const RuleParams& p);

// Rendering. Highlighted edges are (node, premise) pairs.
std::string render_dot(const ProofGraph& g, const std::set<std::pair<int, int>>& highlight = {});
std::string render_latex(const ProofGraph& g);
std::string render_text(const ProofGraph& g);

}  // namespace rtc
