#pragma once

#include "dint/graph.hpp"
#include "dint/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace dint {

/// Closed interval [lo, hi] with exact rational endpoints; points allowed.
struct Interval {
  Rational lo;
  Rational hi;

  Interval() = default;
  Interval(Rational l, Rational h);

  Rational length() const { return hi - lo; }
  bool operator==(const Interval&) const = default;
};

/// Closed-interval intersection: shared endpoints count.
bool intersects(const Interval& a, const Interval& b);

/// Strict "fully to the left of": r(a) < l(b).
bool precedes(const Interval& a, const Interval& b);

/// A d-interval representation: each vertex owns between 1 and d intervals.
/// The multiset union of all lists is the underlying family.
struct DIntervalRep {
  int d = 1;
  std::map<int, std::vector<Interval>> parts;  // vertex id -> intervals

  /// Largest vertex id (0 when empty); vertex ids are expected to be 1..n.
  int vertex_count() const { return parts.empty() ? 0 : parts.rbegin()->first; }
  void check_invariants() const;  // throws std::invalid_argument
};

struct Violation {
  std::string kind;
  std::string witness;
};

struct VerifyReport {
  bool ok = true;
  std::vector<Violation> violations;

  void add(std::string kind, std::string witness) {
    ok = false;
    violations.push_back({std::move(kind), std::move(witness)});
  }
};

/// Intersection graph of the d-intervals: edge (u,v), u != v, iff some
/// interval of u meets some interval of v. Same-vertex overlaps add nothing.
Graph d_intersection_graph(const DIntervalRep& rep);

/// Maximum number of pairwise disjoint intervals of the family that intersect
/// vertex v's interval (v excluded), with a realizing witness. Requires one
/// interval per vertex. Computed by the earliest-right-endpoint greedy, ties
/// broken by smaller vertex id.
std::pair<int, std::vector<int>> max_disjoint_intersecting(const DIntervalRep& rep, int v);

/// Checks rep against g. Violation kinds: graph-mismatch-missing-edge,
/// graph-mismatch-extra-edge, non-unit-length, same-vertex-overlap,
/// not-balanced, too-many-parts.
VerifyReport verify_representation(const DIntervalRep& rep, const Graph& g, bool require_unit,
                                   bool require_disjoint, bool require_balanced);

/// Merges per-vertex overlapping intervals transitively into their union
/// (Observation-style normalization). If pad_part_count is set, dummy unit
/// intervals past the global maximum restore each vertex's original part
/// count. The intersection graph is unchanged.
DIntervalRep normalize_to_disjoint(const DIntervalRep& rep, bool pad_part_count = false);

/// For every vertex holding exactly one overlapping pair [a,b],[c,d] with
/// a <= c <= b <= d and b-a = d-c, replaces the pair by
/// [a, (b+c)/2 - eps] and [(b+c)/2 + eps, d]. With eps below half of the
/// smallest positive endpoint margin the intersection graph is preserved;
/// this is re-verified and a violation raises std::invalid_argument.
DIntervalRep balanced_split(const DIntervalRep& rep,
                            const std::optional<Rational>& epsilon = std::nullopt);

/// Remaps all endpoints to distinct integers preserving the intersection
/// graph; tangencies become proper overlaps.
DIntervalRep spread_endpoints(const DIntervalRep& rep);

/// Positions for dummy (never-intersecting) unit intervals: max_r + 2 + 3k.
Interval dummy_interval(const Rational& global_max, int k);

}  // namespace dint
