#pragma once

#include "dint/graph.hpp"
#include "dint/interval.hpp"

#include <functional>
#include <random>
#include <vector>

namespace testutil {

// All labeled graphs on n vertices, optionally connected only.
inline std::vector<dint::Graph> all_graphs(int n, bool connected_only) {
  using dint::Graph;
  std::vector<std::pair<int, int>> slots;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) slots.emplace_back(u, v);
  std::vector<Graph> out;
  for (long long mask = 0; mask < (1LL << slots.size()); ++mask) {
    std::vector<std::pair<int, int>> es;
    for (size_t i = 0; i < slots.size(); ++i)
      if (mask >> i & 1) es.push_back(slots[i]);
    Graph g = Graph::from_edges(n, es);
    if (connected_only) {
      std::vector<char> seen(n + 1, 0);
      std::vector<int> stack{1};
      seen[1] = 1;
      int cnt = 1;
      while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int w : g.neighbors(u))
          if (!seen[w]) {
            seen[w] = 1;
            ++cnt;
            stack.push_back(w);
          }
      }
      if (cnt != n) continue;
    }
    out.push_back(std::move(g));
  }
  return out;
}

inline dint::Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<int, int>> es;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v)
      if (coin(rng)) es.emplace_back(u, v);
  return dint::Graph::from_edges(n, es);
}

// Exhaustive max pairwise-disjoint subfamily over a list of intervals.
inline int brute_max_disjoint(const std::vector<dint::Interval>& iv) {
  int k = static_cast<int>(iv.size());
  int best = 0;
  for (int mask = 0; mask < (1 << k); ++mask) {
    bool ok = true;
    int cnt = 0;
    for (int i = 0; i < k && ok; ++i) {
      if (!(mask >> i & 1)) continue;
      ++cnt;
      for (int j = i + 1; j < k && ok; ++j)
        if ((mask >> j & 1) && dint::intersects(iv[i], iv[j])) ok = false;
    }
    if (ok) best = std::max(best, cnt);
  }
  return best;
}

// Interval-graph test by endpoint-order enumeration: try every permutation of
// 2n endpoint events (n opens, n closes, close_i only after open_i) — a graph
// is interval iff some event order realizes exactly its edges.
inline bool brute_is_interval(const dint::Graph& g) {
  int n = g.vertex_count();
  std::vector<int> open_at(n + 1, -1);
  std::vector<char> done(n + 1, 0);
  std::vector<std::vector<char>> want(n + 1, std::vector<char>(n + 1, 0));
  for (auto [u, v] : g.edges()) want[u][v] = want[v][u] = 1;
  std::vector<std::vector<char>> got(n + 1, std::vector<char>(n + 1, 0));

  std::function<bool(int)> rec = [&](int placed) -> bool {
    if (placed == 2 * n) return true;
    for (int v = 1; v <= n; ++v) {
      if (done[v]) continue;
      if (open_at[v] < 0) {
        // open v: it must intersect exactly the open wanted neighbors
        bool ok = true;
        for (int u = 1; u <= n && ok; ++u)
          if (u != v && open_at[u] >= 0 && !done[u] && !want[v][u]) ok = false;
        if (!ok) continue;
        open_at[v] = placed;
        for (int u = 1; u <= n; ++u)
          if (u != v && open_at[u] >= 0 && !done[u]) got[v][u] = got[u][v] = 1;
        if (rec(placed + 1)) return true;
        for (int u = 1; u <= n; ++u)
          if (u != v && open_at[u] >= 0 && !done[u]) got[v][u] = got[u][v] = 0;
        open_at[v] = -1;
      } else {
        // close v only if all its wanted edges are realized
        bool ok = true;
        for (int u = 1; u <= n && ok; ++u)
          if (want[v][u] && !got[v][u]) ok = false;
        if (!ok) continue;
        done[v] = 1;
        if (rec(placed + 1)) return true;
        done[v] = 0;
      }
    }
    return false;
  };
  return rec(0);
}

}  // namespace testutil
