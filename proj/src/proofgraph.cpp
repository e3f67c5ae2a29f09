#include "rtc/proofgraph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "rtc/errors.hpp"
#include "rtc/parser.hpp"
#include "rtc/theory.hpp"

namespace rtc {

const ProofNode& ProofGraph::node(int id) const {
  auto it = nodes.find(id);
  if (it == nodes.end()) throw Error("no node " + std::to_string(id));
  return it->second;
}

int ProofGraph::add_internal(int id, RuleInstance r, std::vector<int> children) {
  ProofNode n;
  n.id = id;
  n.kind = ProofNode::Kind::Internal;
  n.sequent = r.conclusion;
  n.rule = std::move(r);
  n.children = std::move(children);
  nodes[id] = std::move(n);
  return id;
}

int ProofGraph::add_bud(int id, Sequent s, int companion) {
  ProofNode n;
  n.id = id;
  n.kind = ProofNode::Kind::Bud;
  n.sequent = std::move(s);
  n.companion = companion;
  nodes[id] = std::move(n);
  return id;
}

int ProofGraph::add_open(int id, Sequent s) {
  ProofNode n;
  n.id = id;
  n.kind = ProofNode::Kind::Open;
  n.sequent = std::move(s);
  nodes[id] = std::move(n);
  return id;
}

std::size_t ProofGraph::count(ProofNode::Kind k) const {
  std::size_t c = 0;
  for (const auto& [id, n] : nodes) c += n.kind == k;
  return c;
}

std::string_view error_kind_name(StructureError::Kind k) {
  switch (k) {
    case StructureError::Kind::MissingNode: return "MissingNode";
    case StructureError::Kind::BadPremiseLink: return "BadPremiseLink";
    case StructureError::Kind::BudMismatch: return "BudMismatch";
    case StructureError::Kind::KernelError: return "KernelError";
    case StructureError::Kind::UnreachableNode: return "UnreachableNode";
    case StructureError::Kind::OpenLeaf: return "OpenLeaf";
  }
  return "?";
}

std::string describe(const StructureError& e) {
  return std::string(error_kind_name(e.kind)) + " at node " + std::to_string(e.node) + ": " + e.detail;
}

std::vector<StructureError> validate_structure(const ProofGraph& g, bool allow_open) {
  return validate_structure(g, g.theory, allow_open);
}

std::vector<StructureError> validate_structure(const ProofGraph& g, const Theory& theory, bool allow_open) {
  using K = StructureError::Kind;
  std::vector<StructureError> errs;
  if (!g.has(g.root)) {
    errs.push_back({K::MissingNode, g.root, "root does not exist"});
    return errs;
  }
  for (const auto& [id, n] : g.nodes) {
    switch (n.kind) {
      case ProofNode::Kind::Internal: {
        if (n.rule.conclusion != n.sequent) {
          errs.push_back({K::KernelError, id, "rule conclusion differs from the node's sequent"});
          break;
        }
        if (n.children.size() != n.rule.premises.size()) {
          errs.push_back({K::BadPremiseLink, id,
                          std::to_string(n.children.size()) + " children for " +
                              std::to_string(n.rule.premises.size()) + " premises"});
        }
        for (std::size_t i = 0; i < n.children.size() && i < n.rule.premises.size(); ++i) {
          int c = n.children[i];
          if (!g.has(c)) {
            errs.push_back({K::MissingNode, id, "child " + std::to_string(c) + " does not exist"});
          } else if (g.node(c).sequent != n.rule.premises[i]) {
            errs.push_back({K::BadPremiseLink, id,
                            "premise " + std::to_string(i + 1) + " differs from node " + std::to_string(c)});
          }
        }
        std::string why;
        if (!rule_instance_ok(n.rule, theory, &why))
          errs.push_back({K::KernelError, id, std::string(rule_name(n.rule.rule)) + ": " + why});
        break;
      }
      case ProofNode::Kind::Bud:
        if (!g.has(n.companion) || !g.node(n.companion).internal()) {
          errs.push_back({K::MissingNode, id, "companion " + std::to_string(n.companion) + " is not an internal node"});
        } else if (g.node(n.companion).sequent != n.sequent) {
          errs.push_back({K::BudMismatch, id, "sequent differs from companion " + std::to_string(n.companion)});
        }
        break;
      case ProofNode::Kind::Open:
        if (!allow_open) errs.push_back({K::OpenLeaf, id, "open leaf"});
        break;
    }
  }
  std::set<int> seen{g.root};
  std::deque<int> todo{g.root};
  while (!todo.empty()) {
    int id = todo.front();
    todo.pop_front();
    const auto& n = g.node(id);
    std::vector<int> next = n.children;
    if (n.bud()) next.push_back(n.companion);
    for (int c : next)
      if (g.has(c) && seen.insert(c).second) todo.push_back(c);
  }
  for (const auto& [id, n] : g.nodes)
    if (!seen.count(id)) errs.push_back({K::UnreachableNode, id, "not reachable from the root"});
  return errs;
}

std::vector<int> unfolded_nodes(const ProofGraph& g) {
  std::vector<int> out;
  std::set<int> seen;
  std::deque<int> todo{g.root};
  // Breadth-first from the root, following bud links.
  while (!todo.empty()) {
    int id = todo.front();
    todo.pop_front();
    if (!g.has(id)) continue;
    const auto& n = g.node(id);
    if (n.bud()) {
      if (seen.insert(id).second) todo.push_back(n.companion);
      continue;
    }
    if (!seen.insert(id).second) continue;
    out.push_back(id);
    for (int c : n.children) todo.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<UnfoldedEdge> unfolded_edges(const ProofGraph& g) {
  std::vector<UnfoldedEdge> out;
  for (int id : unfolded_nodes(g)) {
    const auto& n = g.node(id);
    for (std::size_t i = 0; i < n.children.size(); ++i) {
      int c = n.children[i];
      if (!g.has(c)) continue;
      const auto& child = g.node(c);
      if (child.bud())
        out.push_back({id, static_cast<int>(i), child.companion, c});
      else
        out.push_back({id, static_cast<int>(i), c, -1});
    }
  }
  return out;
}

namespace {

FormulaPtr find_in(const FormulaSet& s, const FormulaPtr& f) {
  for (const auto& g : s)
    if (g->key() == f->key()) return g;
  return nullptr;
}

}  // namespace

std::vector<TraceStep> rule_trace_steps(const RuleInstance& r, int premise) {
  std::vector<TraceStep> out;
  if (premise < 0 || premise >= static_cast<int>(r.premises.size())) return out;
  const Sequent& c = r.conclusion;
  const Sequent& p = r.premises[premise];
  if (r.rule == RuleId::Subst) {
    if (!r.params.subst) return out;
    for (const auto& t2 : p.rtc_ante()) {
      auto img = canonicalize(substitute(t2, *r.params.subst));
      if (auto t1 = find_in(c.ante(), img)) out.push_back({t1, t2, false});
    }
    return out;
  }
  if (r.rule == RuleId::RtcCase && premise == 1 && r.params.principal && r.params.principal->is_rtc() &&
      !r.params.eigen.empty()) {
    const auto& f = r.params.principal;
    auto anc = canonicalize(Formula::rtc(f->name, f->var2, f->body(), f->src(), Term::var(r.params.eigen)));
    auto t1 = find_in(c.ante(), f);
    auto t2 = find_in(p.ante(), anc);
    if (t1 && t2) out.push_back({t1, t2, true});
  }
  for (const auto& t2 : p.rtc_ante())
    if (auto t1 = find_in(c.ante(), t2)) out.push_back({t1, t2, false});
  return out;
}

TraceRelation trace_relation(const ProofGraph& g) {
  TraceRelation rel;
  for (int id : unfolded_nodes(g)) {
    const auto& n = g.node(id);
    if (!n.internal()) continue;
    for (std::size_t i = 0; i < n.rule.premises.size(); ++i)
      rel[{id, static_cast<int>(i)}] = rule_trace_steps(n.rule, static_cast<int>(i));
  }
  return rel;
}

// ---------------------------------------------------------------------------
// Text format

namespace {

std::vector<std::string> split_top(const std::string& s, char sep, const std::string& open, const std::string& close) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char ch = s[i];
    // "->" is an implication arrow, not a closing angle bracket.
    bool arrow = ch == '>' && i > 0 && s[i - 1] == '-';
    if (open.find(ch) != std::string::npos) ++depth;
    if (close.find(ch) != std::string::npos && !arrow) --depth;
    if (ch == sep && depth == 0) {
      out.push_back(detail::trim(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(detail::trim(cur));
  return out;
}

int parse_int(const std::string& s, std::size_t lineno) {
  try {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (detail::trim(s.substr(used)).empty()) return v;
  } catch (const std::logic_error&) {
  }
  throw FormatError(lineno, "expected a node id, got '" + s + "'");
}

struct Reader {
  Signature sig;
  ParseOptions opts{true, true};
  std::size_t lineno = 0;

  Sequent seq(const std::string& s) {
    try {
      return parse_sequent(s, sig, opts);
    } catch (const SyntaxError& e) {
      throw FormatError(lineno, e.what());
    }
  }
  FormulaPtr formula(const std::string& s) {
    try {
      return parse_formula(s, sig, opts);
    } catch (const SyntaxError& e) {
      throw FormatError(lineno, e.what());
    }
  }
  TermPtr term(const std::string& s) {
    try {
      return parse_term(s, sig, opts);
    } catch (const SyntaxError& e) {
      throw FormatError(lineno, e.what());
    }
  }

  RuleParams params(const std::string& body) {
    RuleParams p;
    for (const auto& item : split_top(body, ';', "([{", ")]}")) {
      if (item.empty()) continue;
      auto eq = item.find('=');
      if (eq == std::string::npos) throw FormatError(lineno, "expected key=value in params, got '" + item + "'");
      std::string key = detail::trim(item.substr(0, eq));
      std::string val = detail::trim(item.substr(eq + 1));
      if (key == "principal") p.principal = formula(val);
      else if (key == "witness") p.witness = term(val);
      else if (key == "eigen") p.eigen = val;
      else if (key == "eigen2") p.eigen2 = val;
      else if (key == "template") p.tmpl = formula(val);
      else if (key == "tvar") p.tvar = val;
      else if (key == "cut") p.cut = formula(val);
      else if (key == "subst") p.subst = subst(val);
      else throw FormatError(lineno, "unknown parameter '" + key + "'");
    }
    return p;
  }

  Substitution subst(const std::string& val) {
    if (val.size() < 2 || val.front() != '[' || val.back() != ']')
      throw FormatError(lineno, "substitution must be written [x:=t, ...]");
    Substitution s;
    std::string inner = val.substr(1, val.size() - 2);
    if (detail::trim(inner).empty()) return s;
    for (const auto& b : split_top(inner, ',', "(<", ")>")) {
      auto pos = b.find(":=");
      if (pos == std::string::npos) throw FormatError(lineno, "expected x:=t, got '" + b + "'");
      s[detail::trim(b.substr(0, pos))] = term(detail::trim(b.substr(pos + 2)));
    }
    return s;
  }
};

}  // namespace

ProofGraph parse_proof(const std::string& text) {
  ProofGraph g;
  Reader rd;
  std::istringstream in(text);
  std::string raw;
  bool saw_header = false, saw_root = false;
  std::vector<std::pair<std::size_t, std::string>> axiom_lines, node_lines;
  while (std::getline(in, raw)) {
    ++rd.lineno;
    std::string line = detail::trim(raw.substr(0, raw.find('#')));
    if (line.empty()) continue;
    if (!saw_header) {
      if (line != "tcproof 1") throw FormatError(rd.lineno, "expected header 'tcproof 1'");
      saw_header = true;
      continue;
    }
    if (line.rfind("theory ", 0) == 0) {
      std::string name = detail::trim(line.substr(7));
      g.theory.name = name == "none" ? "" : name;
    } else if (line.rfind("axiom ", 0) == 0) {
      axiom_lines.emplace_back(rd.lineno, line.substr(6));
    } else if (line.rfind("root ", 0) == 0) {
      g.root = parse_int(line.substr(5), rd.lineno);
      saw_root = true;
    } else if (line.rfind("node ", 0) == 0) {
      node_lines.emplace_back(rd.lineno, line.substr(5));
    } else if (!detail::parse_declaration(line, rd.sig, rd.lineno)) {
      throw FormatError(rd.lineno, "unrecognised line '" + line + "'");
    }
  }
  if (!saw_header) throw FormatError(0, "empty proof file");
  if (!saw_root) throw FormatError(rd.lineno, "missing 'root' line");

  for (const auto& [ln, src] : axiom_lines) {
    rd.lineno = ln;
    // Axiom variables are schematic; reserved names are not needed there.
    try {
      g.theory.axioms.push_back(parse_sequent(src, rd.sig, ParseOptions{true, false}));
    } catch (const SyntaxError& e) {
      throw FormatError(ln, e.what());
    }
  }
  for (const auto& [ln, src] : node_lines) {
    rd.lineno = ln;
    auto colon = src.find(':');
    if (colon == std::string::npos) throw FormatError(ln, "expected 'node <id> : <sequent> ; ...'");
    int id = parse_int(src.substr(0, colon), ln);
    if (g.has(id)) throw FormatError(ln, "duplicate node " + std::to_string(id));
    auto parts = split_top(src.substr(colon + 1), ';', "{", "}");
    Sequent s = rd.seq(parts[0]);
    if (parts.size() == 2 && parts[1].rfind("bud", 0) == 0) {
      auto arrow = parts[1].find("->");
      if (arrow == std::string::npos) throw FormatError(ln, "expected 'bud -> <id>'");
      g.add_bud(id, s, parse_int(parts[1].substr(arrow + 2), ln));
      continue;
    }
    if (parts.size() == 2 && parts[1] == "open") {
      g.add_open(id, s);
      continue;
    }
    RuleInstance r;
    r.conclusion = s;
    std::vector<int> children;
    bool saw_rule = false;
    for (std::size_t i = 1; i < parts.size(); ++i) {
      const auto& part = parts[i];
      if (part.rfind("rule=", 0) == 0) {
        auto id_opt = rule_from_name(detail::trim(part.substr(5)));
        if (!id_opt) throw FormatError(ln, "unknown rule '" + part.substr(5) + "'");
        r.rule = *id_opt;
        saw_rule = true;
      } else if (part.rfind("params=", 0) == 0) {
        std::string body = detail::trim(part.substr(7));
        if (body.size() < 2 || body.front() != '{' || body.back() != '}')
          throw FormatError(ln, "params must be enclosed in braces");
        r.params = rd.params(body.substr(1, body.size() - 2));
      } else if (part.rfind("premises=", 0) == 0) {
        std::string body = detail::trim(part.substr(9));
        if (body.size() < 2 || body.front() != '[' || body.back() != ']')
          throw FormatError(ln, "premises must be written [id, ...]");
        std::string inner = body.substr(1, body.size() - 2);
        if (!detail::trim(inner).empty())
          for (const auto& c : split_top(inner, ',', "", "")) children.push_back(parse_int(c, ln));
      } else {
        throw FormatError(ln, "unexpected '" + part + "'");
      }
    }
    if (!saw_rule) throw FormatError(ln, "node " + std::to_string(id) + " has no rule");
    g.add_internal(id, std::move(r), std::move(children));
  }
  // Premise sequents come from the children, which may be declared later.
  for (auto& [id, n] : g.nodes) {
    if (!n.internal()) continue;
    n.rule.premises.clear();
    for (int c : n.children) n.rule.premises.push_back(g.has(c) ? g.node(c).sequent : Sequent());
  }
  g.theory.sig = rd.sig;
  return g;
}

ProofGraph load_proof(const std::string& path) { return parse_proof(detail::read_file(path)); }

std::string print_params(const RuleParams& p) {
  std::vector<std::string> items;
  if (p.principal) items.push_back("principal=" + print(p.principal));
  if (p.witness) items.push_back("witness=" + print(p.witness));
  if (!p.eigen.empty()) items.push_back("eigen=" + p.eigen);
  if (!p.eigen2.empty()) items.push_back("eigen2=" + p.eigen2);
  if (p.tmpl) items.push_back("template=" + print(p.tmpl));
  if (!p.tvar.empty()) items.push_back("tvar=" + p.tvar);
  if (p.subst) {
    std::string s = "subst=[";
    bool first = true;
    for (const auto& [v, t] : *p.subst) {
      if (!first) s += ", ";
      first = false;
      s += v + ":=" + print(t);
    }
    items.push_back(s + "]");
  }
  if (p.cut) items.push_back("cut=" + print(p.cut));
  std::string out = "{";
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? "; " : "") + items[i];
  return out + "}";
}

std::string write_proof(const ProofGraph& g) {
  Signature sig = g.theory.sig;
  for (const auto& a : g.theory.axioms) sig.absorb(a);
  for (const auto& [id, n] : g.nodes) {
    sig.absorb(n.sequent);
    const auto& p = n.rule.params;
    for (const auto& f : {p.principal, p.tmpl, p.cut})
      if (f) sig.absorb(f);
    // Constants occurring only in witness or substitution terms.
    std::vector<TermPtr> terms;
    if (p.witness) terms.push_back(p.witness);
    if (p.subst)
      for (const auto& [v, t] : *p.subst) terms.push_back(t);
    for (const auto& t : terms) sig.absorb(Formula::eq(t, t));
  }
  std::ostringstream out;
  out << "tcproof 1\n";
  out << "theory " << (g.theory.name.empty() ? "none" : g.theory.name) << "\n";
  out << detail::write_declarations(sig);
  for (const auto& a : g.theory.axioms) out << "axiom " << print(a) << "\n";
  out << "root " << g.root << "\n";
  for (const auto& [id, n] : g.nodes) {
    out << "node " << id << " : " << print(n.sequent) << " ; ";
    switch (n.kind) {
      case ProofNode::Kind::Bud:
        out << "bud -> " << n.companion;
        break;
      case ProofNode::Kind::Open:
        out << "open";
        break;
      case ProofNode::Kind::Internal: {
        out << "rule=" << rule_name(n.rule.rule);
        std::string params = print_params(n.rule.params);
        if (params != "{}") out << " ; params=" << params;
        out << " ; premises=[";
        for (std::size_t i = 0; i < n.children.size(); ++i) out << (i ? ", " : "") << n.children[i];
        out << "]";
        break;
      }
    }
    out << "\n";
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Rendering

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

std::string tex_term(const TermPtr& t) {
  if (t->is_pair()) return "\\langle " + tex_term(t->args[0]) + ", " + tex_term(t->args[1]) + "\\rangle";
  std::string name = t->kind == Term::Kind::Var ? t->name : "\\mathsf{" + t->name + "}";
  for (std::size_t i = 0; i < name.size(); ++i)
    if (name[i] == '_') name.insert(i++, "\\");
  if (t->args.empty()) return name;
  std::string out = name + "(";
  for (std::size_t i = 0; i < t->args.size(); ++i) out += (i ? ", " : "") + tex_term(t->args[i]);
  return out + ")";
}

std::string tex_var(const std::string& v) {
  std::string out;
  for (char c : v) {
    if (c == '_') out += '\\';
    out += c;
  }
  return out;
}

std::string tex_formula(const FormulaPtr& f, bool wrap = false) {
  std::string s;
  bool compound = true;
  switch (f->kind) {
    case FormulaKind::Bot: s = "\\bot"; compound = false; break;
    case FormulaKind::Top: s = "\\top"; compound = false; break;
    case FormulaKind::Eq: s = tex_term(f->lhs) + " = " + tex_term(f->rhs); break;
    case FormulaKind::Pred: {
      s = "\\mathit{" + f->name + "}";
      if (!f->args.empty()) {
        s += "(";
        for (std::size_t i = 0; i < f->args.size(); ++i) s += (i ? ", " : "") + tex_term(f->args[i]);
        s += ")";
      }
      compound = false;
      break;
    }
    case FormulaKind::Not: s = "\\neg " + tex_formula(f->left, true); compound = false; break;
    case FormulaKind::And: s = tex_formula(f->left, true) + " \\land " + tex_formula(f->right, true); break;
    case FormulaKind::Or: s = tex_formula(f->left, true) + " \\lor " + tex_formula(f->right, true); break;
    case FormulaKind::Implies: s = tex_formula(f->left, true) + " \\to " + tex_formula(f->right, true); break;
    case FormulaKind::Forall: s = "\\forall " + tex_var(f->name) + ".\\, " + tex_formula(f->left); break;
    case FormulaKind::Exists: s = "\\exists " + tex_var(f->name) + ".\\, " + tex_formula(f->left); break;
    case FormulaKind::Rtc:
      s = "(\\mathit{RTC}_{" + tex_var(f->name) + "," + tex_var(f->var2) + "}\\, " + tex_formula(f->body()) + ")(" +
          tex_term(f->src()) + ", " + tex_term(f->dst()) + ")";
      compound = false;
      break;
  }
  return wrap && compound ? "(" + s + ")" : s;
}

std::string tex_sequent(const Sequent& s) {
  std::string out;
  bool first = true;
  for (const auto& f : s.ante()) {
    out += (first ? "" : ", ") + tex_formula(f);
    first = false;
  }
  out += " \\vdash ";
  first = true;
  for (const auto& f : s.succ()) {
    out += (first ? "" : ", ") + tex_formula(f);
    first = false;
  }
  return out;
}

void tex_node(const ProofGraph& g, int id, std::set<int>& done, const std::set<int>& companions, std::ostream& out) {
  const auto& n = g.node(id);
  std::string seq = "$" + tex_sequent(n.sequent) + "$";
  if (n.bud()) {
    out << "\\AxiomC{" << seq << " $(\\dagger_{" << n.companion << "})$}\n";
    return;
  }
  if (!n.internal() || !done.insert(id).second) {
    out << "\\AxiomC{" << seq << (n.internal() ? " $[" + std::to_string(id) + "]$" : "") << "}\n";
    return;
  }
  for (int c : n.children) tex_node(g, c, done, companions, out);
  std::string label = "\\scriptsize " + std::string(rule_name(n.rule.rule));
  if (companions.count(id)) label += " $(\\dagger_{" + std::to_string(id) + "})$";
  if (n.children.empty()) out << "\\AxiomC{}\n";
  out << "\\RightLabel{" << label << "}\n";
  switch (n.children.size()) {
    case 0:
    case 1: out << "\\UnaryInfC{" << seq << "}\n"; break;
    case 2: out << "\\BinaryInfC{" << seq << "}\n"; break;
    default: out << "\\TrinaryInfC{" << seq << "}\n"; break;
  }
}

void text_node(const ProofGraph& g, int id, int depth, std::set<int>& done, std::ostream& out) {
  std::string pad(2 * depth, ' ');
  if (!g.has(id)) {
    out << pad << id << ": <missing>\n";
    return;
  }
  const auto& n = g.node(id);
  out << pad << id << ": " << print(n.sequent);
  if (n.bud()) {
    out << "   <bud of " << n.companion << ">\n";
    return;
  }
  if (!n.internal()) {
    out << "   <open>\n";
    return;
  }
  if (!done.insert(id).second) {
    out << "   <shown above>\n";
    return;
  }
  out << "   [" << rule_name(n.rule.rule) << "]\n";
  for (int c : n.children) text_node(g, c, depth + 1, done, out);
}

}  // namespace

std::string render_dot(const ProofGraph& g, const std::set<std::pair<int, int>>& highlight) {
  std::ostringstream out;
  out << "digraph proof {\n  node [shape=box, fontname=\"monospace\"];\n";
  for (const auto& [id, n] : g.nodes) {
    out << "  n" << id << " [label=\"" << dot_escape(std::to_string(id) + ": " + print(n.sequent))
        << (n.internal() ? "\\n" + std::string(rule_name(n.rule.rule)) : "") << "\"";
    if (n.bud()) out << ", style=dashed";
    if (n.kind == ProofNode::Kind::Open) out << ", style=dotted";
    if (id == g.root) out << ", penwidth=2";
    out << "];\n";
  }
  for (const auto& [id, n] : g.nodes) {
    for (std::size_t i = 0; i < n.children.size(); ++i) {
      out << "  n" << id << " -> n" << n.children[i];
      if (highlight.count({id, static_cast<int>(i)})) out << " [color=red, penwidth=2]";
      out << ";\n";
    }
    if (n.bud()) out << "  n" << id << " -> n" << n.companion << " [style=dashed, constraint=false];\n";
  }
  out << "}\n";
  return out.str();
}

std::string render_latex(const ProofGraph& g) {
  std::set<int> companions;
  for (const auto& [id, n] : g.nodes)
    if (n.bud()) companions.insert(n.companion);
  std::ostringstream out;
  std::set<int> done;
  out << "% requires \\usepackage{bussproofs}\n\\begin{prooftree}\n";
  if (g.has(g.root)) tex_node(g, g.root, done, companions, out);
  out << "\\end{prooftree}\n";
  return out.str();
}

std::string render_text(const ProofGraph& g) {
  std::ostringstream out;
  std::set<int> done;
  text_node(g, g.root, 0, done, out);
  return out.str();
}

}  // namespace rtc
