#pragma once

#include "dint/graph.hpp"
#include "dint/interval.hpp"

#include <optional>
#include <vector>

namespace dint {

/// A vertex order in which every closed neighborhood N[v] occupies a
/// consecutive block of positions. Such an order exists exactly for unit
/// (equivalently proper) interval graphs.
struct ProperOrder {
  std::vector<int> order;
};

/// One lexicographic breadth-first sweep. Ties are broken toward the vertex
/// appearing latest in tie_break (LexBFS+); pass ascending ids for a plain
/// first sweep. Handles disconnected graphs.
std::vector<int> lex_bfs(const Graph& g, const std::vector<int>& tie_break);

/// Returns a ProperOrder iff g is a unit interval graph. Candidate orders come
/// from three LexBFS sweeps; the winner is verified directly, so a returned
/// order is always genuine.
std::optional<ProperOrder> recognize_proper_order(const Graph& g);

/// Returns an interval representation (d = 1, integer clique-index endpoints)
/// with intersection graph equal to g, or nullopt if g is not an interval
/// graph. Pipeline: maximum-cardinality search with elimination-ordering
/// verification, maximal cliques from the ordering, consecutive-ones
/// arrangement via a PQ-tree. The result is re-verified before returning.
std::optional<DIntervalRep> recognize_interval(const Graph& g);

}  // namespace dint
