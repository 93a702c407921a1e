#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dint {

/// Error raised by the edge-list parser; carries the offending line number.
class ParseError : public std::runtime_error {
public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

private:
  int line_;
};

/// Simple undirected graph over vertex ids 1..n.
/// Immutable once built; neighbor lists are kept sorted.
class Graph {
public:
  Graph() : n_(0) {}
  explicit Graph(int n);

  /// Builds a graph from an edge list. Throws std::invalid_argument on
  /// self-loops, duplicate edges or ids outside 1..n.
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return edge_count_; }
  bool has_edge(int u, int v) const;
  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
  const std::vector<int>& neighbors(int v) const;

  /// Edges as (u, v) with u < v, sorted lexicographically.
  std::vector<std::pair<int, int>> edges() const;

  bool operator==(const Graph& other) const;

private:
  int n_;
  int edge_count_ = 0;
  std::vector<std::vector<int>> adj_;  // 1-based; adj_[0] unused
};

/// Edge-list document format:
///   '#' starts a comment line, first payload line is "p <n>",
///   every following payload line is "e <u> <v>" with 1 <= u < v <= n.
Graph parse_graph(const std::string& text);
std::string write_graph(const Graph& g);

/// An induced K_{1,t}: center adjacent to all leaves, leaves pairwise
/// non-adjacent.
struct StarWitness {
  int center = 0;
  std::vector<int> leaves;
};

/// Checks the StarWitness invariants against g.
bool is_induced_star(const Graph& g, const StarWitness& w);

/// Exhaustive search for an induced K_{1,t}: per center, enumerate
/// independent t-subsets of the neighborhood with early exit.
std::optional<StarWitness> has_induced_star(const Graph& g, int t);

/// True iff no vertex extends w to an induced K_{1,t+1} with the same center.
/// Throws std::invalid_argument if w is not an induced star of g.
bool is_maximal_claw(const Graph& g, const StarWitness& w);

/// All maximal induced 3-claws of g.
std::vector<StarWitness> maximal_three_claws(const Graph& g);

/// An induced E graph (star_{1,2,2}): path v1-v2-v3-v4-v5 plus edge v3-v6.
/// An E-claw is a maximal 3-claw [v3; v2,v4,v6] contained in such a subgraph.
struct EClawWitness {
  // Vertices in path order v1..v5, then v6. The claw is [v3; v2,v4,v6].
  std::vector<int> vertices;
};

std::optional<EClawWitness> find_e_claw(const Graph& g);
inline bool is_e_claw_free(const Graph& g) { return !find_e_claw(g).has_value(); }

}  // namespace dint
