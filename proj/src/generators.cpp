#include "dint/generators.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace dint {

namespace {

const std::vector<std::pair<int, int>>& base_edges() {
  static const std::vector<std::pair<int, int>> edges = {
      {8, 1},  {8, 3},  {8, 7},   {8, 9},   {8, 10},  {9, 3},  {9, 7},  {1, 2},
      {1, 3},  {1, 4},  {1, 5},   {1, 6},   {1, 7},   {10, 3}, {10, 7}, {10, 11},
      {10, 12}, {10, 13}, {10, 14}, {3, 4},  {3, 5},   {3, 6},  {3, 7},  {3, 11},
      {5, 6},  {5, 7},  {7, 11},  {7, 12},  {7, 13},  {11, 12}};
  return edges;
}

}  // namespace

Graph counterexample_graph(int variant) {
  static const std::vector<std::vector<std::pair<int, int>>> extras = {
      {},
      {{11, 13}, {11, 14}, {5, 4}, {5, 2}},
      {{11, 13}, {5, 4}, {5, 2}},
      {{5, 4}, {5, 2}},
      {{11, 13}, {5, 4}},
      {{5, 4}}};
  if (variant < 0 || variant > 5) throw std::invalid_argument("variant must be in 0..5");
  auto edges = base_edges();
  for (auto e : extras[variant]) edges.push_back(e);
  return Graph::from_edges(14, edges);
}

DIntervalRep counterexample_interval_rep() {
  DIntervalRep rep;
  rep.d = 1;
  rep.parts[1] = {Interval(-10, -2)};
  rep.parts[2] = {Interval(-10, -9)};
  rep.parts[3] = {Interval(-8, Rational(9, 2))};
  rep.parts[4] = {Interval(-8, -7)};
  rep.parts[5] = {Interval(-6, -4)};
  rep.parts[6] = {Interval(-6, -5)};
  rep.parts[7] = {Interval(Rational(-9, 2), 8)};
  rep.parts[8] = {Interval(-3, 3)};
  rep.parts[9] = {Interval(-1, 1)};
  rep.parts[10] = {Interval(2, 10)};
  rep.parts[11] = {Interval(4, 6)};
  rep.parts[12] = {Interval(5, 6)};
  rep.parts[13] = {Interval(7, 8)};
  rep.parts[14] = {Interval(9, 10)};
  return rep;
}

Graph counterexample_d(int d) {
  if (d < 2) throw std::invalid_argument("d must be at least 2");
  auto edges = base_edges();
  int next = 15;
  for (int i = 0; i < 2 * d - 4; ++i, ++next) {
    edges.push_back({1, next});
    edges.push_back({3, next});
  }
  for (int i = 0; i < 2 * d - 4; ++i, ++next) {
    edges.push_back({7, next});
    edges.push_back({10, next});
  }
  return Graph::from_edges(next - 1, edges);
}

Graph balanced_gadget(int d) {
  if (d < 3) throw std::invalid_argument("d must be at least 3");
  int F = d * d + d - 1;  // f-side size of each block
  int T = d + 1;          // t-side size of each block
  int pendant = 7;
  auto f = [&](int i, int j) { return 7 + (i - 1) * (F + T) + j; };
  auto t = [&](int i, int k) { return 7 + (i - 1) * (F + T) + F + k; };
  int n = 7 + 5 * (F + T);

  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= 5; ++i)
    for (int j = 1; j <= F; ++j)
      for (int k = 1; k <= T; ++k) edges.push_back({f(i, j), t(i, k)});
  for (int i = 1; i <= 4; ++i) edges.push_back({f(i, F), f(i + 1, 1)});

  for (int i : {2, 4}) {
    for (int j = 1; j <= F; ++j) {
      edges.push_back({1, f(i, j)});
      edges.push_back({2, f(i, j)});
    }
    for (int k = 1; k <= T; ++k) {
      edges.push_back({1, t(i, k)});
      edges.push_back({2, t(i, k)});
    }
  }
  edges.push_back({1, f(3, F)});
  edges.push_back({1, f(5, 1)});
  edges.push_back({1, pendant});
  edges.push_back({2, f(1, F)});
  edges.push_back({2, f(3, 1)});
  edges.push_back({1, 2});
  for (int v : {3, 4, 5, 6}) {
    edges.push_back({1, v});
    edges.push_back({2, v});
  }

  int low_hi = d * d - d + 3;  // v_3/v_5 range end; mirror of the v_4 range
  edges.push_back({3, f(3, F)});
  edges.push_back({3, t(3, T)});
  edges.push_back({3, t(4, 1)});
  for (int j = 1; j <= low_hi; ++j) edges.push_back({3, f(4, j)});
  edges.push_back({4, f(5, 1)});
  edges.push_back({4, t(4, T)});
  edges.push_back({4, t(5, 1)});
  for (int j = 2 * d - 3; j <= F; ++j) edges.push_back({4, f(4, j)});
  edges.push_back({5, f(1, F)});
  edges.push_back({5, t(1, T - 1)});
  edges.push_back({5, t(2, 1)});
  for (int j = 1; j <= low_hi; ++j) edges.push_back({5, f(2, j)});
  edges.push_back({6, f(3, 1)});
  edges.push_back({6, t(2, T)});
  edges.push_back({6, t(3, 1)});
  for (int j = 2 * d - 3; j <= F; ++j) edges.push_back({6, f(2, j)});

  return Graph::from_edges(n, edges);
}

Graph complete_bipartite(int a, int b) {
  if (a < 0 || b < 0) throw std::invalid_argument("sides must be non-negative");
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= a; ++i)
    for (int j = 1; j <= b; ++j) edges.push_back({i, a + j});
  return Graph::from_edges(a + b, edges);
}

DIntervalRep random_interval_rep(int n, int max_m, std::uint64_t seed) {
  if (n < 0) throw std::invalid_argument("n must be non-negative");
  if (max_m < 1) throw std::invalid_argument("max_m must be positive");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> gap(1, 3), offset(0, 5), len(1, 7);

  std::vector<Rational> lo(n + 1), hi(n + 1);
  long long pos = 0;
  for (int v = 1; v <= n; ++v) {
    lo[v] = Rational(pos + offset(rng));
    hi[v] = lo[v] + len(rng);
    pos += gap(rng);
  }

  std::vector<int> by_lo(n);
  for (int v = 1; v <= n; ++v) by_lo[v - 1] = v;
  std::stable_sort(by_lo.begin(), by_lo.end(),
                   [&](int a, int b) { return lo[a] < lo[b]; });

  // Greedy earliest-right chain of disjoint intervals intersecting v; only a
  // bounded window of the sorted order can intersect (lo spread <= 12).
  auto chain_of = [&](int idx) {
    int v = by_lo[idx];
    std::vector<int> hits;
    for (int k = idx - 1; k >= 0 && lo[v] - lo[by_lo[k]] <= 12; --k)
      if (hi[by_lo[k]] >= lo[v]) hits.push_back(by_lo[k]);
    for (int k = idx + 1; k < n && lo[by_lo[k]] <= hi[v]; ++k) hits.push_back(by_lo[k]);
    std::sort(hits.begin(), hits.end(), [&](int a, int b) {
      if (hi[a] != hi[b]) return hi[a] < hi[b];
      return a < b;
    });
    std::vector<int> chain;
    for (int w : hits)
      if (chain.empty() || hi[chain.back()] < lo[w]) chain.push_back(w);
    return chain;
  };

  // Shrinking an interval only removes intersections, so processed vertices
  // never regress; one left-to-right pass enforces the bound everywhere.
  for (int idx = 0; idx < n; ++idx) {
    int v = by_lo[idx];
    for (auto chain = chain_of(idx); static_cast<int>(chain.size()) > max_m;
         chain = chain_of(idx)) {
      Rational cut = lo[chain[max_m]] - Rational(1, 2);
      hi[v] = std::max(lo[v], std::min(Rational(hi[v]), cut));
    }
  }

  DIntervalRep rep;
  rep.d = 1;
  for (int v = 1; v <= n; ++v) rep.parts[v] = {Interval(lo[v], hi[v])};
  return rep;
}

}  // namespace dint
