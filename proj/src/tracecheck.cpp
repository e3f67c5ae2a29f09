#include "rtc/tracecheck.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <unordered_map>

#include "rtc/errors.hpp"

namespace rtc {

EdgeMatrix EdgeMatrix::identity(int n) {
  EdgeMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 0;
  return m;
}

bool EdgeMatrix::progressing_diagonal() const {
  for (int i = 0; i < std::min(rows, cols); ++i)
    if (at(i, i) == 1) return true;
  return false;
}

EdgeMatrix compose(const EdgeMatrix& a, const EdgeMatrix& b) {
  if (a.cols != b.rows) throw Error("matrix dimensions do not compose");
  EdgeMatrix c(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j) {
      signed char x = a.at(i, j);
      if (x < 0) continue;
      for (int k = 0; k < b.cols; ++k) {
        signed char y = b.at(j, k);
        if (y < 0) continue;
        signed char v = std::max(x, y);
        if (v > c.at(i, k)) c.at(i, k) = v;
      }
    }
  return c;
}

bool loops_progress(const EdgeMatrix& m) {
  // Powers of m are eventually periodic; some power in the cycle is idempotent.
  std::vector<EdgeMatrix> powers{m};
  while (true) {
    EdgeMatrix next = compose(powers.back(), m);
    auto it = std::find(powers.begin(), powers.end(), next);
    if (it != powers.end()) {
      std::size_t start = static_cast<std::size_t>(it - powers.begin()) + 1;  // exponent of the repeat
      std::size_t len = powers.size() + 1 - start;
      std::size_t e = ((start + len - 1) / len) * len;  // multiple of len, >= start
      return powers[e - 1].progressing_diagonal();
    }
    powers.push_back(std::move(next));
  }
}

std::vector<FormulaPtr> trace_positions(const ProofGraph& g, int node) { return g.node(node).sequent.rtc_ante(); }

namespace {

int index_of(const std::vector<FormulaPtr>& v, const FormulaPtr& f) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i]->key() == f->key()) return static_cast<int>(i);
  return -1;
}

struct TraceGraph {
  std::vector<int> nodes;
  std::vector<UnfoldedEdge> edges;
  std::vector<EdgeMatrix> matrices;
  std::map<int, std::vector<std::size_t>> out;  // node -> edge indices, by premise

  explicit TraceGraph(const ProofGraph& g) : nodes(unfolded_nodes(g)), edges(unfolded_edges(g)) {
    for (std::size_t i = 0; i < edges.size(); ++i) {
      matrices.push_back(edge_matrix(g, edges[i]));
      out[edges[i].from].push_back(i);
    }
  }
};

std::vector<int> path_from_root(const ProofGraph& g, const TraceGraph& tg, int target) {
  std::map<int, int> parent{{g.root, g.root}};
  std::deque<int> todo{g.root};
  while (!todo.empty()) {
    int u = todo.front();
    todo.pop_front();
    if (u == target) break;
    auto it = tg.out.find(u);
    if (it == tg.out.end()) continue;
    for (std::size_t e : it->second) {
      int w = tg.edges[e].to;
      if (parent.emplace(w, u).second) todo.push_back(w);
    }
  }
  std::vector<int> path;
  if (!parent.count(target)) return path;
  for (int u = target; u != g.root;) {
    u = parent[u];
    path.push_back(u);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

BasicCycle cycle_of_edges(const TraceGraph& tg, const std::vector<std::size_t>& es) {
  BasicCycle c;
  for (std::size_t e : es) {
    c.nodes.push_back(tg.edges[e].from);
    c.premises.push_back(tg.edges[e].premise);
  }
  return c;
}

std::string matrix_key(int src, int dst, const EdgeMatrix& m) {
  std::string k = std::to_string(src) + ">" + std::to_string(dst) + ":";
  k.append(reinterpret_cast<const char*>(m.cell.data()), m.cell.size());
  return k;
}

}  // namespace

EdgeMatrix instance_matrix(const RuleInstance& r, int premise) {
  auto src = r.conclusion.rtc_ante();
  auto dst = r.premises.at(premise).rtc_ante();
  EdgeMatrix m(static_cast<int>(src.size()), static_cast<int>(dst.size()));
  for (const auto& st : rule_trace_steps(r, premise)) {
    int i = index_of(src, st.from);
    int j = index_of(dst, st.to);
    if (i < 0 || j < 0) continue;
    signed char v = st.progressing ? 1 : 0;
    if (v > m.at(i, j)) m.at(i, j) = v;
  }
  return m;
}

// Bud and companion sequents coincide, so the premise's positions are the target's.
EdgeMatrix edge_matrix(const ProofGraph& g, const UnfoldedEdge& e) { return instance_matrix(g.node(e.from).rule, e.premise); }

EdgeMatrix cycle_matrix(const ProofGraph& g, const BasicCycle& c) {
  EdgeMatrix acc;
  for (std::size_t i = 0; i < c.nodes.size(); ++i) {
    const auto& n = g.node(c.nodes[i]);
    int child = n.children.at(c.premises[i]);
    int to = g.node(child).bud() ? g.node(child).companion : child;
    EdgeMatrix m = edge_matrix(g, {c.nodes[i], c.premises[i], to, -1});
    acc = i == 0 ? m : compose(acc, m);
  }
  return acc;
}

CycleReport check_global_trace_condition(const ProofGraph& g, std::size_t cap) {
  TraceGraph tg(g);
  struct Elem {
    int src, dst;
    EdgeMatrix m;
    long parent;
    std::size_t edge;
  };
  std::vector<Elem> elems;
  std::unordered_map<std::string, std::size_t> seen;
  CycleReport rep;

  auto path_of = [&](std::size_t idx) {
    std::vector<std::size_t> es;
    for (long i = static_cast<long>(idx); i >= 0; i = elems[i].parent) es.push_back(elems[i].edge);
    std::reverse(es.begin(), es.end());
    return es;
  };
  auto add = [&](int src, int dst, EdgeMatrix m, long parent, std::size_t edge) -> bool {
    auto key = matrix_key(src, dst, m);
    if (seen.count(key)) return true;
    seen.emplace(std::move(key), elems.size());
    elems.push_back({src, dst, std::move(m), parent, edge});
    const auto& e = elems.back();
    if (src == dst && compose(e.m, e.m) == e.m && !e.m.progressing_diagonal()) {
      rep.verdict = CycleReport::Verdict::Rejected;
      rep.period = cycle_of_edges(tg, path_of(elems.size() - 1));
      rep.prefix = path_from_root(g, tg, src);
      return false;
    }
    return true;
  };

  for (std::size_t i = 0; i < tg.edges.size(); ++i)
    if (!add(tg.edges[i].from, tg.edges[i].to, tg.matrices[i], -1, i)) {
      rep.explored = elems.size();
      return rep;
    }
  for (std::size_t k = 0; k < elems.size(); ++k) {
    if (elems.size() > cap) {
      rep.verdict = CycleReport::Verdict::Indeterminate;
      break;
    }
    auto it = tg.out.find(elems[k].dst);
    if (it == tg.out.end()) continue;
    for (std::size_t e : it->second) {
      EdgeMatrix m = compose(elems[k].m, tg.matrices[e]);
      if (!add(elems[k].src, tg.edges[e].to, std::move(m), static_cast<long>(k), e)) {
        rep.explored = elems.size();
        return rep;
      }
    }
  }
  rep.explored = elems.size();
  return rep;
}

CycleReport check_by_path_enumeration(const ProofGraph& g, int max_period, std::size_t cap) {
  TraceGraph tg(g);
  CycleReport rep;
  std::vector<std::size_t> stack;
  std::vector<EdgeMatrix> acc;
  bool stop = false;

  std::function<void(int, int)> walk = [&](int start, int u) {
    auto it = tg.out.find(u);
    if (it == tg.out.end()) return;
    for (std::size_t e : it->second) {
      if (stop) return;
      int w = tg.edges[e].to;
      if (w < start) continue;
      EdgeMatrix m = acc.empty() ? tg.matrices[e] : compose(acc.back(), tg.matrices[e]);
      stack.push_back(e);
      if (w == start) {
        ++rep.explored;
        if (!loops_progress(m)) {
          rep.verdict = CycleReport::Verdict::Rejected;
          rep.period = cycle_of_edges(tg, stack);
          rep.prefix = path_from_root(g, tg, start);
          stop = true;
        } else if (rep.explored > cap) {
          rep.verdict = CycleReport::Verdict::Indeterminate;
          stop = true;
        }
      }
      if (!stop && static_cast<int>(stack.size()) < max_period) {
        acc.push_back(std::move(m));
        walk(start, w);
        acc.pop_back();
      }
      stack.pop_back();
    }
  };
  for (int s : tg.nodes) {
    walk(s, s);
    if (stop) break;
  }
  return rep;
}

bool witness_confirms(const ProofGraph& g, const CycleReport& r) {
  if (r.verdict != CycleReport::Verdict::Rejected || r.period.nodes.empty()) return false;
  return !loops_progress(cycle_matrix(g, r.period));
}

std::vector<BasicCycle> enumerate_basic_cycles(const ProofGraph& g, std::size_t cap) {
  TraceGraph tg(g);
  std::vector<BasicCycle> out;
  for (int s : tg.nodes) {
    // Strongly connected component of s among nodes >= s.
    auto reach = [&](bool forward) {
      std::set<int> seen{s};
      std::deque<int> todo{s};
      while (!todo.empty()) {
        int u = todo.front();
        todo.pop_front();
        for (const auto& e : tg.edges) {
          int a = forward ? e.from : e.to;
          int b = forward ? e.to : e.from;
          if (a == u && b >= s && seen.insert(b).second) todo.push_back(b);
        }
      }
      return seen;
    };
    std::set<int> fwd = reach(true), bwd = reach(false), scc;
    for (int v : fwd)
      if (bwd.count(v)) scc.insert(v);

    std::set<int> blocked;
    std::map<int, std::set<int>> bmap;
    std::vector<std::size_t> stack;
    std::function<void(int)> unblock = [&](int u) {
      blocked.erase(u);
      auto nodes = std::move(bmap[u]);
      bmap[u].clear();
      for (int w : nodes)
        if (blocked.count(w)) unblock(w);
    };
    std::function<bool(int)> circuit = [&](int v) {
      bool found = false;
      blocked.insert(v);
      auto it = tg.out.find(v);
      if (it != tg.out.end()) {
        for (std::size_t e : it->second) {
          int w = tg.edges[e].to;
          if (!scc.count(w)) continue;
          stack.push_back(e);
          if (w == s) {
            out.push_back(cycle_of_edges(tg, stack));
            if (out.size() > cap) throw BudgetExceeded("more than " + std::to_string(cap) + " basic cycles");
            found = true;
          } else if (!blocked.count(w) && circuit(w)) {
            found = true;
          }
          stack.pop_back();
        }
      }
      if (found) {
        unblock(v);
      } else if (it != tg.out.end()) {
        for (std::size_t e : it->second)
          if (scc.count(tg.edges[e].to)) bmap[tg.edges[e].to].insert(v);
      }
      return found;
    };
    circuit(s);
  }
  return out;
}

bool is_non_overlapping(const std::vector<BasicCycle>& cycles) {
  std::set<int> used;
  for (const auto& c : cycles) {
    std::set<int> mine(c.nodes.begin(), c.nodes.end());
    for (int v : mine)
      if (!used.insert(v).second) return false;
  }
  return true;
}

bool is_non_overlapping(const ProofGraph& g) { return is_non_overlapping(enumerate_basic_cycles(g)); }

std::set<std::pair<int, int>> progressing_edges(const ProofGraph& g) {
  std::set<std::pair<int, int>> out;
  for (const auto& [edge, steps] : trace_relation(g))
    for (const auto& s : steps)
      if (s.progressing) out.insert(edge);
  return out;
}

std::string print_cycle(const BasicCycle& c) {
  std::string out;
  for (std::size_t i = 0; i < c.nodes.size(); ++i) {
    out += std::to_string(c.nodes[i]) + " -" + std::to_string(c.premises[i] + 1) + "-> ";
  }
  return out + (c.nodes.empty() ? "" : std::to_string(c.nodes[0]));
}

}  // namespace rtc
