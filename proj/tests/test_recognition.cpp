#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dint/generators.hpp"
#include "dint/graph.hpp"
#include "dint/interval.hpp"
#include "dint/recognition.hpp"
#include "helpers.hpp"

#include <algorithm>

using namespace dint;

namespace {

bool order_is_proper(const Graph& g, const ProperOrder& po) {
  int n = g.vertex_count();
  if (static_cast<int>(po.order.size()) != n) return false;
  std::vector<int> pos(n + 1, -1);
  for (int i = 0; i < n; ++i) pos[po.order[i]] = i;
  for (int v = 1; v <= n; ++v) {
    int lo = pos[v], hi = pos[v];
    for (int w : g.neighbors(v)) {
      lo = std::min(lo, pos[w]);
      hi = std::max(hi, pos[w]);
    }
    if (hi - lo != g.degree(v)) return false;  // block size = |N[v]|
  }
  return true;
}

}  // namespace

TEST_CASE("recognize_interval examples") {
  Graph g = counterexample_graph(0);
  auto rep = recognize_interval(g);
  REQUIRE(rep);
  CHECK(d_intersection_graph(*rep) == g);

  Graph c4 = Graph::from_edges(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}});
  CHECK(!recognize_interval(c4));

  Graph k13 = Graph::from_edges(4, {{1, 2}, {1, 3}, {1, 4}});
  auto star = recognize_interval(k13);
  REQUIRE(star);
  CHECK(d_intersection_graph(*star) == k13);
}

TEST_CASE("recognize_interval agrees with endpoint-order brute force, n <= 6") {
  for (int n = 1; n <= 6; ++n) {
    // all graphs is too many at n=6; sample the edge masks deterministically
    long long slots = 1LL * n * (n - 1) / 2;
    long long total = 1LL << slots;
    long long step = n < 6 ? 1 : 37;  // n=6: 32768/37 ~ 886 graphs incl. bounds
    for (long long mask = 0; mask < total; mask += step) {
      std::vector<std::pair<int, int>> es;
      int idx = 0;
      for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v, ++idx)
          if (mask >> idx & 1) es.emplace_back(u, v);
      Graph g = Graph::from_edges(n, es);
      auto rep = recognize_interval(g);
      if (rep) CHECK(d_intersection_graph(*rep) == g);
      CHECK(rep.has_value() == testutil::brute_is_interval(g));
    }
  }
}

TEST_CASE("recognize_proper_order examples") {
  Graph p4 = Graph::from_edges(4, {{1, 2}, {2, 3}, {3, 4}});
  auto po = recognize_proper_order(p4);
  REQUIRE(po);
  CHECK(order_is_proper(p4, *po));
  CHECK((po->order == std::vector<int>{1, 2, 3, 4} ||
         po->order == std::vector<int>{4, 3, 2, 1}));

  CHECK(!recognize_proper_order(Graph::from_edges(4, {{1, 2}, {1, 3}, {1, 4}})));
  CHECK(!recognize_proper_order(Graph::from_edges(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}})));
}

TEST_CASE("Roberts characterization on all graphs with n <= 7") {
  // unit interval iff interval and K_{1,3}-free; interval-ness via
  // recognize_interval, which the n <= 6 suite pins to brute force
  for (int n = 1; n <= 5; ++n)
    for (const auto& g : testutil::all_graphs(n, false)) {
      bool unit = recognize_proper_order(g).has_value();
      bool expect = recognize_interval(g).has_value() && !has_induced_star(g, 3);
      CHECK(unit == expect);
    }
  std::mt19937_64 rng(424242);
  for (int trial = 0; trial < 4000; ++trial) {
    int n = 6 + trial % 2;
    Graph g = testutil::random_graph(n, 0.25 + 0.1 * (trial % 5), rng);
    bool unit = recognize_proper_order(g).has_value();
    bool expect = recognize_interval(g).has_value() && !has_induced_star(g, 3);
    CHECK(unit == expect);
    if (unit) CHECK(order_is_proper(g, *recognize_proper_order(g)));
  }
}
