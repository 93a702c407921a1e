#pragma once

#include "dint/graph.hpp"
#include "dint/interval.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace dint {

/// Per-vertex record of the interval transform. The pieces replace the
/// vertex's single interval; every piece endpoint coincides with an endpoint
/// of some interval of the input family.
struct TransformPlan {
  int vertex = 0;
  int m = 0;                    // max pairwise disjoint neighbors of the interval
  int t = 1;                    // number of pieces, ceil(m/2), at least 1
  std::vector<int> A;           // auxiliary vertices: empty (m<=2), A1..A4 (m=3), A1..Am (m>3)
  std::vector<int> B;           // Bi = latest-starting member of N[Ai]; only for m>3
  std::vector<Interval> pieces;
};

struct NotInterval : std::runtime_error {
  NotInterval() : std::runtime_error("graph is not an interval graph") {}
};

/// Some vertex's interval meets more than 2d pairwise disjoint intervals, so
/// the graph has an induced K_{1,2d+1} and no unit d-interval representation.
struct ClawBoundExceeded : std::runtime_error {
  int vertex;
  std::vector<int> leaves;  // pairwise disjoint neighbors, witness star

  ClawBoundExceeded(int v, std::vector<int> ls)
      : std::runtime_error("vertex " + std::to_string(v) + " meets " +
                           std::to_string(ls.size()) + " pairwise disjoint neighbors"),
        vertex(v),
        leaves(std::move(ls)) {}
};

struct NotEClawFree : std::runtime_error {
  EClawWitness witness;

  explicit NotEClawFree(EClawWitness w)
      : std::runtime_error("graph contains an E-claw"), witness(std::move(w)) {}
};

/// The transform of one vertex, computed over the original family only
/// (independent of other vertices' transforms). rep must have one interval
/// per vertex. Argmin/argmax ties break toward the smaller vertex id.
TransformPlan transform_interval(int v, const DIntervalRep& rep);

/// ceil(max_m / 2), at least 1: the number of parts the transform needs.
int required_d(const DIntervalRep& rep);

/// Unit d-interval representation with the same intersection graph as rep
/// (one interval per vertex, max m <= 2d required). With pad set, dummy unit
/// intervals bring every vertex to exactly d parts.
DIntervalRep build_unit_d_rep(const DIntervalRep& rep, int d, bool pad = true);

/// As above, starting from a graph; an interval representation is computed
/// first. Throws NotInterval when none exists.
DIntervalRep build_unit_d_rep(const Graph& g, int d, bool pad = true);

/// Disjoint variant: additionally the intervals of each vertex are pairwise
/// disjoint. Requires the intersection graph to be E-claw-free; centers with
/// m = 3 are handled by first shrinking the side interval that has no
/// neighbor disjoint from the center's interval.
DIntervalRep build_disjoint_unit_d_rep_eclaw_free(const DIntervalRep& rep, int d, bool pad = true);

}  // namespace dint
