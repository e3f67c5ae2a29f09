#pragma once

// Test-only oracles, independent of the library's BFS-based RTC evaluation.

#include <random>
#include <vector>

#include "rtc/semantics.hpp"

namespace rtc::oracle {

// Reflexive-transitive closure of the step relation by Warshall's algorithm.
inline std::vector<std::vector<char>> warshall_closure(const FiniteModel& m, const Valuation& v, const Formula& rtc) {
  const int n = m.size;
  std::vector<std::vector<char>> reach(n, std::vector<char>(n, 0));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      Valuation w = v;
      w[rtc.name] = a;
      w[rtc.var2] = b;
      reach[a][b] = evaluate(m, w, rtc.body()) ? 1 : 0;
    }
    reach[a][a] = 1;
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (reach[i][k])
        for (int j = 0; j < n; ++j)
          if (reach[k][j]) reach[i][j] = 1;
  return reach;
}

inline bool rtc_by_warshall(const FiniteModel& m, const Valuation& v, const FormulaPtr& rtc) {
  auto reach = warshall_closure(m, v, *rtc);
  return reach[evaluate(m, v, rtc->src())][evaluate(m, v, rtc->dst())] != 0;
}

// Degree by iterating relational powers: the least k with (s,t) in R^k.
inline DegreeResult degree_by_powers(const FiniteModel& m, const Valuation& v, const FormulaPtr& rtc) {
  const int n = m.size;
  int s = evaluate(m, v, rtc->src());
  int t = evaluate(m, v, rtc->dst());
  std::vector<char> frontier(n, 0);
  frontier[s] = 1;
  for (int k = 0; k <= n; ++k) {
    if (frontier[t]) return k;
    std::vector<char> next(n, 0);
    for (int a = 0; a < n; ++a) {
      if (!frontier[a]) continue;
      for (int b = 0; b < n; ++b) {
        Valuation w = v;
        w[rtc->name] = a;
        w[rtc->var2] = b;
        if (evaluate(m, w, rtc->body())) next[b] = 1;
      }
    }
    frontier = next;
  }
  return std::nullopt;
}

// Calls fn(model) for every interpretation of the given symbols at size n.
template <typename Fn>
void for_each_model(int n, const std::vector<std::string>& constants, const std::vector<std::pair<std::string, int>>& preds,
                    const std::vector<std::pair<std::string, int>>& fns, Fn&& fn) {
  auto pw = [](int b, int e) {
    std::size_t r = 1;
    for (int i = 0; i < e; ++i) r *= static_cast<std::size_t>(b);
    return r;
  };
  std::vector<int> radix;
  for (std::size_t i = 0; i < constants.size(); ++i) radix.push_back(n);
  for (const auto& [f, k] : fns)
    for (std::size_t j = 0; j < pw(n, k); ++j) radix.push_back(n);
  for (const auto& [p, k] : preds)
    for (std::size_t j = 0; j < pw(n, k); ++j) radix.push_back(2);
  std::vector<int> d(radix.size(), 0);
  while (true) {
    FiniteModel m;
    m.size = n;
    std::size_t i = 0;
    for (const auto& c : constants) m.constants[c] = d[i++];
    for (const auto& [f, k] : fns) {
      FunctionTable t{k, {}};
      for (std::size_t j = 0; j < pw(n, k); ++j) t.values.push_back(d[i++]);
      m.functions[f] = t;
    }
    for (const auto& [p, k] : preds) {
      PredicateTable t{k, {}};
      for (std::size_t j = 0; j < pw(n, k); ++j) t.holds.push_back(static_cast<char>(d[i++]));
      m.predicates[p] = t;
    }
    fn(m);
    std::size_t k = d.size();
    for (; k > 0; --k) {
      if (++d[k - 1] < radix[k - 1]) break;
      d[k - 1] = 0;
    }
    if (k == 0) return;
  }
}

// Uniformly random interpretation of the given symbols at size n.
inline FiniteModel random_model(std::mt19937& rng, int n, const std::vector<std::string>& constants,
                                const std::vector<std::pair<std::string, int>>& preds,
                                const std::vector<std::pair<std::string, int>>& fns) {
  std::uniform_int_distribution<int> elem(0, n - 1), bit(0, 1);
  FiniteModel m;
  m.size = n;
  for (const auto& c : constants) m.constants[c] = elem(rng);
  for (const auto& [f, k] : fns) {
    FunctionTable t{k, {}};
    std::size_t rows = 1;
    for (int i = 0; i < k; ++i) rows *= static_cast<std::size_t>(n);
    for (std::size_t j = 0; j < rows; ++j) t.values.push_back(elem(rng));
    m.functions[f] = t;
  }
  for (const auto& [p, k] : preds) {
    PredicateTable t{k, {}};
    std::size_t rows = 1;
    for (int i = 0; i < k; ++i) rows *= static_cast<std::size_t>(n);
    for (std::size_t j = 0; j < rows; ++j) t.holds.push_back(static_cast<char>(bit(rng)));
    m.predicates[p] = t;
  }
  return m;
}

// Calls fn(valuation) for every valuation of vars over {0..n-1}.
template <typename Fn>
void for_each_valuation(int n, const std::vector<std::string>& vars, Fn&& fn) {
  Valuation v;
  for (const auto& x : vars) v[x] = 0;
  while (true) {
    fn(v);
    std::size_t k = vars.size();
    for (; k > 0; --k) {
      if (++v[vars[k - 1]] < n) break;
      v[vars[k - 1]] = 0;
    }
    if (k == 0) return;
  }
}

}  // namespace rtc::oracle
