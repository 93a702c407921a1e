#include "dint/graph.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

namespace dint {

Graph::Graph(int n) : n_(n), adj_(n + 1) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) {
    if (u < 1 || u > n || v < 1 || v > n) throw std::invalid_argument("vertex id out of range");
    if (u == v) throw std::invalid_argument("self-loop");
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  for (int v = 1; v <= n; ++v) {
    auto& nb = g.adj_[v];
    std::sort(nb.begin(), nb.end());
    if (std::adjacent_find(nb.begin(), nb.end()) != nb.end())
      throw std::invalid_argument("duplicate edge");
    g.edge_count_ += static_cast<int>(nb.size());
  }
  g.edge_count_ /= 2;
  return g;
}

bool Graph::has_edge(int u, int v) const {
  if (u < 1 || u > n_ || v < 1 || v > n_ || u == v) return false;
  const auto& nb = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
  int other = adj_[u].size() <= adj_[v].size() ? v : u;
  return std::binary_search(nb.begin(), nb.end(), other);
}

const std::vector<int>& Graph::neighbors(int v) const {
  if (v < 1 || v > n_) throw std::out_of_range("vertex id out of range");
  return adj_[v];
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(edge_count_);
  for (int u = 1; u <= n_; ++u)
    for (int v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

bool Graph::operator==(const Graph& other) const {
  return n_ == other.n_ && adj_ == other.adj_;
}

Graph parse_graph(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  int n = -1;
  std::vector<std::pair<int, int>> edges;
  std::unordered_set<long long> seen;
  while (std::getline(in, line)) {
    ++lineno;
    size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '#') continue;
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (n < 0) {
      if (tag != "p") throw ParseError(lineno, "expected problem line 'p <n>'");
      if (!(ls >> n) || n < 0) throw ParseError(lineno, "invalid vertex count");
      std::string rest;
      if (ls >> rest) throw ParseError(lineno, "trailing tokens after 'p <n>'");
      continue;
    }
    if (tag != "e") throw ParseError(lineno, "expected edge line 'e <u> <v>'");
    int u, v;
    if (!(ls >> u >> v)) throw ParseError(lineno, "malformed edge line");
    std::string rest;
    if (ls >> rest) throw ParseError(lineno, "trailing tokens after edge");
    if (u < 1 || u > n || v < 1 || v > n) throw ParseError(lineno, "vertex id out of range");
    if (u == v) throw ParseError(lineno, "self-loop");
    if (u > v) std::swap(u, v);
    if (!seen.insert(static_cast<long long>(u) * (n + 1) + v).second)
      throw ParseError(lineno, "duplicate edge");
    edges.emplace_back(u, v);
  }
  if (n < 0) throw ParseError(lineno, "missing problem line 'p <n>'");
  return Graph::from_edges(n, edges);
}

std::string write_graph(const Graph& g) {
  std::ostringstream out;
  out << "p " << g.vertex_count() << "\n";
  for (auto [u, v] : g.edges()) out << "e " << u << " " << v << "\n";
  return out.str();
}

bool is_induced_star(const Graph& g, const StarWitness& w) {
  if (w.center < 1 || w.center > g.vertex_count() || w.leaves.empty()) return false;
  for (size_t i = 0; i < w.leaves.size(); ++i) {
    int a = w.leaves[i];
    if (a == w.center || !g.has_edge(w.center, a)) return false;
    for (size_t j = i + 1; j < w.leaves.size(); ++j)
      if (a == w.leaves[j] || g.has_edge(a, w.leaves[j])) return false;
  }
  return true;
}

namespace {

// Backtracking over independent t-subsets of nb, early exit on first hit.
bool extend_independent(const Graph& g, const std::vector<int>& nb, size_t from, int remaining,
                        std::vector<int>& chosen) {
  if (remaining == 0) return true;
  for (size_t i = from; i + remaining <= nb.size() + 0u; ++i) {
    int cand = nb[i];
    bool ok = true;
    for (int c : chosen)
      if (g.has_edge(c, cand)) {
        ok = false;
        break;
      }
    if (!ok) continue;
    chosen.push_back(cand);
    if (extend_independent(g, nb, i + 1, remaining - 1, chosen)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

std::optional<StarWitness> has_induced_star(const Graph& g, int t) {
  if (t < 1) throw std::invalid_argument("t must be positive");
  for (int c = 1; c <= g.vertex_count(); ++c) {
    const auto& nb = g.neighbors(c);
    if (static_cast<int>(nb.size()) < t) continue;
    std::vector<int> chosen;
    if (extend_independent(g, nb, 0, t, chosen)) return StarWitness{c, chosen};
  }
  return std::nullopt;
}

bool is_maximal_claw(const Graph& g, const StarWitness& w) {
  if (!is_induced_star(g, w)) throw std::invalid_argument("not a valid induced star");
  for (int x : g.neighbors(w.center)) {
    bool independent = true;
    for (int l : w.leaves)
      if (x == l || g.has_edge(x, l)) {
        independent = false;
        break;
      }
    if (independent) return false;
  }
  return true;
}

std::vector<StarWitness> maximal_three_claws(const Graph& g) {
  std::vector<StarWitness> out;
  for (int c = 1; c <= g.vertex_count(); ++c) {
    const auto& nb = g.neighbors(c);
    size_t k = nb.size();
    for (size_t i = 0; i < k; ++i)
      for (size_t j = i + 1; j < k; ++j) {
        if (g.has_edge(nb[i], nb[j])) continue;
        for (size_t l = j + 1; l < k; ++l) {
          if (g.has_edge(nb[i], nb[l]) || g.has_edge(nb[j], nb[l])) continue;
          StarWitness w{c, {nb[i], nb[j], nb[l]}};
          if (is_maximal_claw(g, w)) out.push_back(std::move(w));
        }
      }
  }
  return out;
}

std::optional<EClawWitness> find_e_claw(const Graph& g) {
  auto claws = maximal_three_claws(g);
  for (const auto& claw : claws) {
    int c = claw.center;
    const auto& ls = claw.leaves;
    // Choose which leaf stays bare (v6) and which two get pendants (v2, v4).
    for (int bare = 0; bare < 3; ++bare) {
      int v6 = ls[bare];
      int v2 = ls[(bare + 1) % 3];
      int v4 = ls[(bare + 2) % 3];
      for (int v1 : g.neighbors(v2)) {
        if (v1 == c || v1 == v2 || v1 == v4 || v1 == v6) continue;
        if (g.has_edge(v1, c) || g.has_edge(v1, v4) || g.has_edge(v1, v6)) continue;
        for (int v5 : g.neighbors(v4)) {
          if (v5 == c || v5 == v1 || v5 == v2 || v5 == v4 || v5 == v6) continue;
          if (g.has_edge(v5, c) || g.has_edge(v5, v2) || g.has_edge(v5, v6)) continue;
          if (g.has_edge(v1, v5)) continue;
          return EClawWitness{{v1, v2, c, v4, v5, v6}};
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace dint
