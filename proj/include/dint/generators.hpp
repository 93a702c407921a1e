#pragma once

#include "dint/graph.hpp"
#include "dint/interval.hpp"

#include <cstdint>

namespace dint {

/// The 14-vertex, 30-edge interval K_{1,5}-free graph that is not a disjoint
/// unit 2-interval graph. Variants 1..5 add these edge subsets:
///   1: {11-13, 11-14, 5-4, 5-2}   2: {11-13, 5-4, 5-2}   3: {5-4, 5-2}
///   4: {11-13, 5-4}               5: {5-4}
Graph counterexample_graph(int variant);

/// An interval representation (d = 1) whose intersection graph is
/// counterexample_graph(0).
DIntervalRep counterexample_interval_rep();

/// Variant 0 extended for d >= 2: 2d-4 extra vertices adjacent exactly to
/// {1,3} and 2d-4 adjacent exactly to {7,10}. d = 2 returns variant 0.
Graph counterexample_d(int d);

/// A graph that is balanced d-interval but not disjoint balanced d-interval
/// (d >= 3): five complete bipartite blocks K_{d^2+d-1, d+1} chained through
/// their f-sides, six special vertices v_1..v_6, and a pendant neighbor of
/// v_1. The source construction's general-d index range for v_3 is stated as
/// j in {1,...,d^2-3d+5}, which contradicts its own explicit d = 3 list
/// (j in {1,...,9}); this generator mirrors v_4's range instead,
/// j in {1,...,d^2-d+3}, which reproduces the d = 3 list exactly.
Graph balanced_gadget(int d);

Graph complete_bipartite(int a, int b);

/// Deterministic random d=1 representation with integer-window endpoints;
/// every vertex intersects at most max_m pairwise disjoint other intervals
/// (enforced by shrinking offenders, so the bound is exact, not expected).
DIntervalRep random_interval_rep(int n, int max_m, std::uint64_t seed);

}  // namespace dint
