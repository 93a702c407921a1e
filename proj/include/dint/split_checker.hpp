#pragma once

#include "dint/graph.hpp"
#include "dint/interval.hpp"

#include <chrono>
#include <map>
#include <optional>
#include <vector>

namespace dint {

enum class SplitMode { Disjoint, NonDisjoint };

/// A certificate that g is a (disjoint) unit 2-interval graph: every vertex v
/// is replaced by representatives v_1 (always) and v_2 (when split), every
/// original edge is realized by at least one representative pair, and the
/// resulting graph G' is unit interval. In non-disjoint mode a split vertex
/// may additionally carry an internal edge v_1-v_2; that edge represents no
/// original edge.
struct SplitSolution {
  int n = 0;
  std::vector<char> split;  // 1-based; split[v] != 0 iff v has two representatives
  // original edge (u,v), u < v  ->  nonempty set of pairs (i,j): u_i adjacent v_j
  std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> rep_edges;
  std::vector<int> internal_edges;  // vertices v with edge v_1-v_2, sorted
};

struct SearchLimits {
  long long node_budget = 1'000'000'000;
  std::chrono::milliseconds time_budget = std::chrono::minutes(30);
};

enum class SplitVerdict { Yes, No, Exhausted };

struct SplitResult {
  SplitVerdict verdict = SplitVerdict::No;
  std::optional<SplitSolution> solution;  // present iff verdict == Yes
  long long nodes = 0;
};

/// Exhaustive backtracking over splits and per-edge representative pairs.
/// No is returned only after the full pruned space is exhausted; every prune
/// preserves some canonical solution (one without removable representatives),
/// so No is a proof of non-membership. Exhausted means a budget tripped.
/// Set DINTERVAL_LOG=info|trace for a refutation log on stderr.
SplitResult search_split(const Graph& g, SplitMode mode, const SearchLimits& limits = {});

/// Independently rebuilds G' from s and checks every invariant: pair validity
/// against the split flags, edge coverage, mode rules, and unit-interval
/// membership of G'.
VerifyReport verify_split(const Graph& g, const SplitSolution& s, SplitMode mode);

/// Ground-truth oracle: enumerates every split mask and, per mask, every
/// neighborhood-consecutive ordering of the representatives, accepting when
/// some ordering covers all original edges. Exponential; intended for n <= 8.
bool brute_force_oracle(const Graph& g, SplitMode mode);

}  // namespace dint
