#include "dint/recognition.hpp"

#include "dint/pq_tree.hpp"

#include <algorithm>
#include <stdexcept>

namespace dint {

std::vector<int> lex_bfs(const Graph& g, const std::vector<int>& tie_break) {
  int n = g.vertex_count();
  if (static_cast<int>(tie_break.size()) != n)
    throw std::invalid_argument("tie_break must list every vertex");
  std::vector<int> prev_pos(n + 1, 0);
  for (int i = 0; i < n; ++i) prev_pos[tie_break[i]] = i;

  // Classes are contiguous vectors kept in lexicographic priority order.
  // Splits are stable, so each class stays sorted by descending prev_pos,
  // which makes the head of the first class the LexBFS+ pivot.
  std::vector<std::vector<int>> classes(1);
  classes[0] = tie_break;
  std::reverse(classes[0].begin(), classes[0].end());

  std::vector<char> visited(n + 1, 0), is_nb(n + 1, 0);
  std::vector<int> order;
  order.reserve(n);
  size_t first_class = 0;
  while (order.size() < static_cast<size_t>(n)) {
    while (classes[first_class].empty()) ++first_class;
    int v = classes[first_class].front();
    classes[first_class].erase(classes[first_class].begin());
    visited[v] = 1;
    order.push_back(v);

    for (int w : g.neighbors(v)) is_nb[w] = 1;
    std::vector<std::vector<int>> next;
    next.reserve(classes.size() + 4);
    for (size_t ci = first_class; ci < classes.size(); ++ci) {
      auto& cls = classes[ci];
      if (cls.empty()) continue;
      std::vector<int> in, out;
      for (int w : cls)
        (is_nb[w] ? in : out).push_back(w);
      if (!in.empty()) next.push_back(std::move(in));
      if (!out.empty()) next.push_back(std::move(out));
    }
    classes = std::move(next);
    first_class = 0;
    for (int w : g.neighbors(v)) is_nb[w] = 0;
  }
  return order;
}

namespace {

bool neighborhoods_consecutive(const Graph& g, const std::vector<int>& order) {
  int n = g.vertex_count();
  std::vector<int> pos(n + 1);
  for (int i = 0; i < n; ++i) pos[order[i]] = i;
  for (int v = 1; v <= n; ++v) {
    int lo = pos[v], hi = pos[v];
    for (int w : g.neighbors(v)) {
      lo = std::min(lo, pos[w]);
      hi = std::max(hi, pos[w]);
    }
    if (hi - lo != static_cast<int>(g.neighbors(v).size())) return false;
  }
  return true;
}

}  // namespace

std::optional<ProperOrder> recognize_proper_order(const Graph& g) {
  int n = g.vertex_count();
  if (n == 0) return ProperOrder{};
  std::vector<int> ids(n);
  for (int v = 1; v <= n; ++v) ids[v - 1] = v;
  auto s1 = lex_bfs(g, ids);
  auto s2 = lex_bfs(g, s1);
  auto s3 = lex_bfs(g, s2);
  if (neighborhoods_consecutive(g, s3)) return ProperOrder{std::move(s3)};
  return std::nullopt;
}

namespace {

// Maximum-cardinality search; returns vertices in visit order. Reversed, it
// is a perfect elimination ordering iff the graph is chordal.
std::vector<int> mcs_order(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> weight(n + 1, 0);
  std::vector<char> visited(n + 1, 0);
  std::vector<int> order;
  order.reserve(n);
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int v = 1; v <= n; ++v)
      if (!visited[v] && (best == -1 || weight[v] > weight[best])) best = v;
    visited[best] = 1;
    order.push_back(best);
    for (int w : g.neighbors(best))
      if (!visited[w]) ++weight[w];
  }
  return order;
}

// elim[i] is eliminated at step i; checks the perfect elimination property.
bool verify_peo(const Graph& g, const std::vector<int>& elim) {
  int n = g.vertex_count();
  std::vector<int> pos(n + 1);
  for (int i = 0; i < n; ++i) pos[elim[i]] = i;
  std::vector<char> mark(n + 1, 0);
  for (int i = 0; i < n; ++i) {
    int v = elim[i];
    std::vector<int> later;
    for (int w : g.neighbors(v))
      if (pos[w] > i) later.push_back(w);
    if (later.size() <= 1) continue;
    int parent = *std::min_element(later.begin(), later.end(),
                                   [&](int a, int b) { return pos[a] < pos[b]; });
    for (int w : g.neighbors(parent)) mark[w] = 1;
    bool ok = true;
    for (int w : later)
      if (w != parent && !mark[w]) {
        ok = false;
        break;
      }
    for (int w : g.neighbors(parent)) mark[w] = 0;
    if (!ok) return false;
  }
  return true;
}

// Maximal cliques of a chordal graph from a perfect elimination ordering:
// candidates are {v} plus v's later neighbors, pruned by containment. The
// containment scan only compares candidates sharing a vertex.
std::vector<std::vector<int>> maximal_cliques(const Graph& g, const std::vector<int>& elim) {
  int n = g.vertex_count();
  std::vector<int> pos(n + 1);
  for (int i = 0; i < n; ++i) pos[elim[i]] = i;
  std::vector<std::vector<int>> cand;
  for (int i = 0; i < n; ++i) {
    int v = elim[i];
    std::vector<int> c{v};
    for (int w : g.neighbors(v))
      if (pos[w] > i) c.push_back(w);
    std::sort(c.begin(), c.end());
    cand.push_back(std::move(c));
  }

  std::vector<std::vector<int>> at_vertex(n + 1);
  for (size_t ci = 0; ci < cand.size(); ++ci)
    for (int v : cand[ci]) at_vertex[v].push_back(static_cast<int>(ci));

  std::vector<std::vector<int>> out;
  for (size_t ci = 0; ci < cand.size(); ++ci) {
    const auto& c = cand[ci];
    bool maximal = true;
    for (int dj : at_vertex[c.front()]) {
      if (dj == static_cast<int>(ci)) continue;
      const auto& dcl = cand[dj];
      if (dcl.size() < c.size()) continue;
      if (dcl.size() == c.size() && dj > static_cast<int>(ci)) continue;
      if (std::includes(dcl.begin(), dcl.end(), c.begin(), c.end())) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(c);
  }
  return out;
}

}  // namespace

std::optional<DIntervalRep> recognize_interval(const Graph& g) {
  int n = g.vertex_count();
  DIntervalRep rep;
  rep.d = 1;
  if (n == 0) return rep;

  auto mcs = mcs_order(g);
  std::vector<int> elim(mcs.rbegin(), mcs.rend());
  if (!verify_peo(g, elim)) return std::nullopt;  // not chordal

  auto cliques = maximal_cliques(g, elim);
  int k = static_cast<int>(cliques.size());
  std::vector<std::vector<int>> cliques_of(n + 1);
  for (int ci = 0; ci < k; ++ci)
    for (int v : cliques[ci]) cliques_of[v].push_back(ci);

  PQTree tree(k);
  for (int v = 1; v <= n; ++v)
    if (!tree.reduce(cliques_of[v])) return std::nullopt;  // chordal but not interval

  auto front = tree.frontier();
  std::vector<int> clique_pos(k);
  for (int i = 0; i < k; ++i) clique_pos[front[i]] = i;

  for (int v = 1; v <= n; ++v) {
    int lo = k, hi = -1;
    for (int ci : cliques_of[v]) {
      lo = std::min(lo, clique_pos[ci]);
      hi = std::max(hi, clique_pos[ci]);
    }
    rep.parts[v] = {Interval(Rational(lo + 1), Rational(hi + 1))};
  }
  if (!(d_intersection_graph(rep) == g))
    throw std::logic_error("interval recognition produced a mismatched representation");
  return rep;
}

}  // namespace dint
