#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dint/construction.hpp"
#include "dint/generators.hpp"
#include "dint/graph.hpp"
#include "dint/interval.hpp"
#include "helpers.hpp"

#include <algorithm>
#include <set>

using namespace dint;

namespace {

Interval iv(long long a, long long b) { return {Rational(a), Rational(b)}; }

// A long interval meeting eight pairwise disjoint neighbors, with six more
// intervals bridging consecutive gaps. Vertex 1 transforms into four pieces.
DIntervalRep eight_claw_rep() {
  DIntervalRep rep;
  rep.d = 1;
  rep.parts[1] = {iv(-10, 18)};
  rep.parts[2] = {iv(-11, -8)};
  rep.parts[3] = {iv(-7, -4)};
  rep.parts[4] = {iv(-3, 0)};
  rep.parts[5] = {iv(1, 3)};
  rep.parts[6] = {iv(4, 7)};
  rep.parts[7] = {iv(8, 11)};
  rep.parts[8] = {iv(12, 15)};
  rep.parts[9] = {iv(16, 19)};
  rep.parts[10] = {iv(-9, -6)};
  rep.parts[11] = {iv(-5, -2)};
  rep.parts[12] = {iv(-1, 2)};
  rep.parts[13] = {{Rational(5, 2), Rational(6)}};
  rep.parts[14] = {iv(11, 14)};
  rep.parts[15] = {iv(15, 18)};
  return rep;
}

// Every endpoint of every piece must be an endpoint of some input interval.
bool endpoints_from_input(const TransformPlan& plan, const DIntervalRep& rep) {
  std::set<Rational> ends;
  for (auto& [v, parts] : rep.parts)
    for (auto& i : parts) {
      ends.insert(i.lo);
      ends.insert(i.hi);
    }
  for (auto& p : plan.pieces)
    if (!ends.count(p.lo) || !ends.count(p.hi)) return false;
  return true;
}

int family_max_disjoint(const std::vector<Interval>& fam, const Interval& piece) {
  std::vector<Interval> nb;
  bool skipped_self = false;
  for (auto& o : fam) {
    if (!skipped_self && o.lo == piece.lo && o.hi == piece.hi) {
      skipped_self = true;
      continue;
    }
    if (intersects(o, piece)) nb.push_back(o);
  }
  // greedy by right endpoint gives the exact maximum for intervals
  std::sort(nb.begin(), nb.end(), [](const Interval& a, const Interval& b) {
    return a.hi < b.hi || (a.hi == b.hi && a.lo < b.lo);
  });
  int cnt = 0;
  bool have = false;
  Rational last;
  for (auto& o : nb)
    if (!have || o.lo > last) {
      ++cnt;
      last = o.hi;
      have = true;
    }
  return cnt;
}

}  // namespace

TEST_CASE("transform_interval, eight disjoint neighbors") {
  auto rep = eight_claw_rep();
  auto plan = transform_interval(1, rep);
  CHECK(plan.m == 8);
  CHECK(plan.t == 4);
  CHECK(plan.pieces == std::vector<Interval>{iv(-10, -4), iv(-1, 3), iv(4, 11), iv(12, 18)});
  CHECK(endpoints_from_input(plan, rep));
  for (size_t i = 0; i + 1 < plan.pieces.size(); ++i)
    CHECK(plan.pieces[i].hi < plan.pieces[i + 1].lo);
}

TEST_CASE("transform_interval on the counterexample representation") {
  auto rep = counterexample_interval_rep();
  auto p8 = transform_interval(8, rep);
  CHECK(p8.m == 3);
  CHECK(p8.pieces == std::vector<Interval>{iv(-3, 1), iv(-1, 3)});
  CHECK(intersects(p8.pieces[0], p8.pieces[1]));  // the m = 3 overlap case

  auto p2 = transform_interval(2, rep);
  CHECK(p2.m == 1);
  CHECK(p2.pieces == std::vector<Interval>{iv(-10, -9)});

  CHECK_THROWS_AS(transform_interval(99, rep), std::invalid_argument);
}

TEST_CASE("required_d examples") {
  CHECK(required_d(counterexample_interval_rep()) == 2);
  CHECK(required_d(eight_claw_rep()) == 4);
  DIntervalRep lone;
  lone.d = 1;
  lone.parts[1] = {iv(0, 5)};
  CHECK(required_d(lone) == 1);
}

TEST_CASE("build_unit_d_rep examples") {
  Graph g = counterexample_graph(0);
  auto rep = build_unit_d_rep(g, 2);
  auto report = verify_representation(rep, g, true, false, false);
  CHECK(report.ok);
  for (auto& [v, parts] : rep.parts) CHECK(parts.size() == 2);

  Graph p4 = Graph::from_edges(4, {{1, 2}, {2, 3}, {3, 4}});
  auto rp4 = build_unit_d_rep(p4, 2);
  CHECK(verify_representation(rp4, p4, true, false, false).ok);
  for (auto& [v, parts] : rp4.parts) {
    REQUIRE(parts.size() == 2);  // one real interval plus one dummy
    CHECK(parts[0].length() == Rational(1));
    CHECK(parts[1].length() == Rational(1));
  }

  CHECK_THROWS_AS(build_unit_d_rep(g, 1), ClawBoundExceeded);
  try {
    build_unit_d_rep(g, 1);
  } catch (const ClawBoundExceeded& e) {
    CHECK(e.leaves.size() >= 3);  // a K_{1,4} witness, e.g. [3; 4,6,9,11]
  }
  Graph c4 = Graph::from_edges(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}});
  CHECK_THROWS_AS(build_unit_d_rep(c4, 2), NotInterval);
}

TEST_CASE("build_disjoint_unit_d_rep_eclaw_free examples") {
  // the counterexample graph contains an E-claw
  CHECK_THROWS_AS(build_disjoint_unit_d_rep_eclaw_free(counterexample_interval_rep(), 2),
                  NotEClawFree);
  try {
    build_disjoint_unit_d_rep_eclaw_free(counterexample_interval_rep(), 2);
  } catch (const NotEClawFree& e) {
    Graph g = counterexample_graph(0);
    auto& v = e.witness.vertices;
    REQUIRE(v.size() == 6);
    CHECK(g.has_edge(v[1], v[2]));
    CHECK(is_maximal_claw(g, StarWitness{v[2], {v[1], v[3], v[5]}}));
  }

  // unit interval input: unchanged single intervals plus dummies
  DIntervalRep path;
  path.d = 1;
  for (int v = 1; v <= 4; ++v) path.parts[v] = {{Rational(v), Rational(v + 2)}};
  auto out = build_disjoint_unit_d_rep_eclaw_free(path, 2);
  CHECK(d_intersection_graph(out) == d_intersection_graph(path));
  CHECK(verify_representation(out, d_intersection_graph(path), true, true, false).ok);
}

TEST_CASE("construction property suite, random bounded representations") {
  for (int d : {2, 3}) {
    for (int trial = 0; trial < 40; ++trial) {
      auto rep = random_interval_rep(12 + trial % 9, 2 * d, 900 + d * 100 + trial);
      Graph g = d_intersection_graph(rep);
      auto out = build_unit_d_rep(rep, d);
      auto report = verify_representation(out, g, true, false, false);
      CHECK(report.ok);
      for (auto& [v, parts] : out.parts) CHECK(static_cast<int>(parts.size()) == d);

      // pre-unitize family: each piece meets at most two pairwise disjoint
      // pieces, and piece endpoints come from the input family
      std::vector<Interval> fam;
      std::vector<TransformPlan> plans;
      for (auto& [v, parts] : rep.parts) {
        plans.push_back(transform_interval(v, rep));
        for (auto& p : plans.back().pieces) fam.push_back(p);
      }
      for (auto& plan : plans) {
        CHECK(endpoints_from_input(plan, rep));
        bool overlap_allowed = plan.m == 3;
        for (size_t i = 0; i < plan.pieces.size(); ++i)
          for (size_t j = i + 1; j < plan.pieces.size(); ++j)
            if (!overlap_allowed || i != 0 || j != 1)
              CHECK(!intersects(plan.pieces[i], plan.pieces[j]));
        for (auto& p : plan.pieces) CHECK(family_max_disjoint(fam, p) <= 2);
      }
    }
  }
}

TEST_CASE("disjoint construction on E-claw-free inputs") {
  int done = 0;
  for (int seed = 0; done < 25 && seed < 400; ++seed) {
    auto rep = random_interval_rep(10, 4, 3000 + seed);
    Graph g = d_intersection_graph(rep);
    if (!is_e_claw_free(g)) continue;
    ++done;
    auto out = build_disjoint_unit_d_rep_eclaw_free(rep, 2);
    CHECK(verify_representation(out, g, true, true, false).ok);
  }
  CHECK(done == 25);
}
