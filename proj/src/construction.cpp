#include "dint/construction.hpp"

#include "dint/unitizer.hpp"
#include "dint/recognition.hpp"

#include <algorithm>
#include <optional>

namespace dint {

namespace {

const Interval& the_interval(const DIntervalRep& rep, int v) {
  auto it = rep.parts.find(v);
  if (it == rep.parts.end()) throw std::invalid_argument("unknown vertex");
  return it->second.front();
}

void require_single_intervals(const DIntervalRep& rep) {
  for (const auto& [v, ivs] : rep.parts)
    if (ivs.size() != 1) throw std::invalid_argument("expected one interval per vertex");
}

// argmin of (r, id) over neighbors satisfying pred; -1 if none
template <class Pred>
int argmin_r(const DIntervalRep& rep, const std::vector<int>& cand, Pred pred) {
  int best = -1;
  for (int u : cand) {
    const Interval& J = the_interval(rep, u);
    if (!pred(J)) continue;
    if (best == -1 || J.hi < the_interval(rep, best).hi ||
        (J.hi == the_interval(rep, best).hi && u < best))
      best = u;
  }
  return best;
}

template <class Pred>
int argmax_l(const DIntervalRep& rep, const std::vector<int>& cand, Pred pred) {
  int best = -1;
  for (int u : cand) {
    const Interval& J = the_interval(rep, u);
    if (!pred(J)) continue;
    if (best == -1 || J.lo > the_interval(rep, best).lo ||
        (J.lo == the_interval(rep, best).lo && u < best))
      best = u;
  }
  return best;
}

// Greedy earliest-right chain over v's neighbors: a maximum set of pairwise
// disjoint intervals intersecting v's interval, in left-to-right order.
std::vector<int> greedy_chain(const DIntervalRep& rep, const Graph& g, int v) {
  std::vector<int> nbs(g.neighbors(v).begin(), g.neighbors(v).end());
  std::sort(nbs.begin(), nbs.end(), [&](int a, int b) {
    const Interval &A = the_interval(rep, a), &B = the_interval(rep, b);
    if (A.hi != B.hi) return A.hi < B.hi;
    return a < b;
  });
  std::vector<int> chain;
  for (int u : nbs)
    if (chain.empty() || the_interval(rep, chain.back()).hi < the_interval(rep, u).lo)
      chain.push_back(u);
  return chain;
}

TransformPlan transform_with_graph(int v, const DIntervalRep& rep, const Graph& g) {
  const Interval& I = the_interval(rep, v);
  TransformPlan plan;
  plan.vertex = v;
  const auto& nbs = g.neighbors(v);

  auto chain = greedy_chain(rep, g, v);
  int m = static_cast<int>(chain.size());
  plan.m = m;
  plan.t = std::max(1, (m + 1) / 2);

  if (m <= 2) {
    plan.pieces = {I};
    return plan;
  }

  auto any = [](const Interval&) { return true; };
  if (m == 3) {
    int a1 = argmin_r(rep, nbs, any);
    const Interval& A1 = the_interval(rep, a1);
    int a2 = argmin_r(rep, nbs, [&](const Interval& J) { return precedes(A1, J); });
    int a4 = argmax_l(rep, nbs, any);
    const Interval& A4 = the_interval(rep, a4);
    int a3 = argmax_l(rep, nbs, [&](const Interval& J) { return precedes(J, A4); });
    plan.A = {a1, a2, a3, a4};
    plan.pieces = {Interval(I.lo, the_interval(rep, a2).hi),
                   Interval(the_interval(rep, a3).lo, I.hi)};
    return plan;
  }

  plan.A.resize(m);
  for (int i = 0; i < m - 2; ++i) plan.A[i] = chain[i];
  plan.A[m - 1] = argmax_l(rep, nbs, any);
  const Interval& Am = the_interval(rep, plan.A[m - 1]);
  plan.A[m - 2] = argmax_l(rep, nbs, [&](const Interval& J) { return precedes(J, Am); });
  if (!precedes(the_interval(rep, plan.A[m - 3]), the_interval(rep, plan.A[m - 2])))
    throw std::logic_error("auxiliary family is not a disjoint chain");

  plan.B.resize(m);
  for (int i = 0; i < m; ++i) {
    int a = plan.A[i];
    std::vector<int> closed(g.neighbors(a).begin(), g.neighbors(a).end());
    closed.push_back(a);
    plan.B[i] = argmax_l(rep, closed, any);
  }

  auto l_of = [&](int u) { return the_interval(rep, u).lo; };
  auto r_of = [&](int u) { return the_interval(rep, u).hi; };
  int t = plan.t;
  plan.pieces.clear();
  plan.pieces.emplace_back(I.lo, r_of(plan.A[1]));
  if (m % 2 == 0) {
    for (int i = 2; i <= t - 1; ++i)
      plan.pieces.emplace_back(l_of(plan.B[2 * i - 2]), r_of(plan.A[2 * i - 1]));
    plan.pieces.emplace_back(l_of(plan.A[2 * t - 2]), I.hi);
  } else {
    for (int i = 2; i <= t - 2; ++i)
      plan.pieces.emplace_back(l_of(plan.B[2 * i - 2]), r_of(plan.A[2 * i - 1]));
    plan.pieces.push_back(the_interval(rep, plan.A[2 * t - 4]));
    plan.pieces.emplace_back(l_of(plan.A[2 * t - 3]), I.hi);
  }
  for (size_t i = 0; i + 1 < plan.pieces.size(); ++i)
    if (!precedes(plan.pieces[i], plan.pieces[i + 1]))
      throw std::logic_error("transform pieces are not pairwise disjoint");
  return plan;
}

void check_claw_bound(const DIntervalRep& rep, int v, int m, int d) {
  if (m <= 2 * d) return;
  auto [mm, witness] = max_disjoint_intersecting(rep, v);
  throw ClawBoundExceeded(v, witness);
}

// pieces (vertex, index) -> one labeled family item each
DIntervalRep assemble(const std::vector<std::pair<int, std::vector<Interval>>>& per_vertex, int d,
                      bool pad) {
  LabeledFamily fam;
  std::vector<std::pair<int, int>> owner;
  for (const auto& [v, pieces] : per_vertex)
    for (size_t i = 0; i < pieces.size(); ++i) {
      owner.emplace_back(v, static_cast<int>(i));
      fam.items.push_back({static_cast<int>(fam.items.size()), pieces[i]});
    }
  LabeledFamily unit = unitize(fam);

  DIntervalRep out;
  out.d = d;
  for (const auto& [v, pieces] : per_vertex) out.parts[v];
  Rational global_max(0);
  for (size_t i = 0; i < unit.items.size(); ++i) {
    out.parts[owner[i].first].push_back(unit.items[i].iv);
    global_max = std::max(global_max, unit.items[i].iv.hi);
  }
  if (pad) {
    int counter = 0;
    for (auto& [v, ivs] : out.parts)
      while (static_cast<int>(ivs.size()) < d) ivs.push_back(dummy_interval(global_max, counter++));
  }
  return out;
}

}  // namespace

TransformPlan transform_interval(int v, const DIntervalRep& rep) {
  require_single_intervals(rep);
  Graph g = d_intersection_graph(rep);
  return transform_with_graph(v, rep, g);
}

int required_d(const DIntervalRep& rep) {
  require_single_intervals(rep);
  Graph g = d_intersection_graph(rep);
  int worst = 2;  // m <= 2 still needs one part
  for (const auto& [v, ivs] : rep.parts)
    worst = std::max(worst, static_cast<int>(greedy_chain(rep, g, v).size()));
  return (worst + 1) / 2;
}

DIntervalRep build_unit_d_rep(const DIntervalRep& rep, int d, bool pad) {
  if (d < 1) throw std::invalid_argument("d must be positive");
  require_single_intervals(rep);
  if (rep.parts.empty()) {
    DIntervalRep out;
    out.d = d;
    return out;
  }
  DIntervalRep work = spread_endpoints(rep);
  Graph g = d_intersection_graph(work);

  std::vector<std::pair<int, std::vector<Interval>>> per_vertex;
  for (const auto& [v, ivs] : work.parts) {
    TransformPlan plan = transform_with_graph(v, work, g);
    check_claw_bound(work, v, plan.m, d);
    per_vertex.emplace_back(v, plan.pieces);
  }
  DIntervalRep out = assemble(per_vertex, d, pad);
  if (!(d_intersection_graph(out) == g))
    throw std::logic_error("construction changed the intersection graph");
  return out;
}

DIntervalRep build_unit_d_rep(const Graph& g, int d, bool pad) {
  auto rep = recognize_interval(g);
  if (!rep) throw NotInterval();
  return build_unit_d_rep(*rep, d, pad);
}

namespace {

bool properly_inside(const Interval& a, const Interval& i) {
  return i.lo < a.lo && a.hi < i.hi;
}

// Shrinks vertex a's interval to lie strictly inside enclosing while keeping
// every intersection with a's neighbors (all of which meet enclosing).
void shrink_inside(DIntervalRep& work, const Graph& g, int a, const Interval& enclosing) {
  const Interval& A = the_interval(work, a);
  Rational lo = A.lo, hi = A.hi;
  if (lo <= enclosing.lo) {
    Rational c = A.hi;
    for (int u : g.neighbors(a)) c = std::min(c, the_interval(work, u).hi);
    if (c <= enclosing.lo)
      throw std::logic_error("neighbor ends before the enclosing interval starts");
    lo = (enclosing.lo + c) / 2;
  }
  if (hi >= enclosing.hi) {
    Rational c = lo;
    for (int u : g.neighbors(a)) c = std::max(c, the_interval(work, u).lo);
    if (c >= enclosing.hi)
      throw std::logic_error("neighbor starts after the enclosing interval ends");
    hi = (c + enclosing.hi) / 2;
  }
  work.parts[a] = {Interval(lo, hi)};
}

}  // namespace

DIntervalRep build_disjoint_unit_d_rep_eclaw_free(const DIntervalRep& rep, int d, bool pad) {
  if (d < 1) throw std::invalid_argument("d must be positive");
  require_single_intervals(rep);
  if (rep.parts.empty()) {
    DIntervalRep out;
    out.d = d;
    return out;
  }
  Graph g = d_intersection_graph(rep);
  if (auto w = find_e_claw(g)) throw NotEClawFree(*w);

  DIntervalRep work = spread_endpoints(rep);
  auto any = [](const Interval&) { return true; };

  // Shrink phase: for every m = 3 center, pull the side interval that has no
  // neighbor disjoint from I properly inside I.
  for (const auto& [v, ivs] : work.parts) {
    if (static_cast<int>(greedy_chain(work, g, v).size()) != 3) continue;
    const Interval I = the_interval(work, v);
    const auto& nbs = g.neighbors(v);
    int a1 = argmin_r(work, nbs, any);
    int a4 = argmax_l(work, nbs, any);
    auto extendable = [&](int a) {
      for (int u : g.neighbors(a))
        if (!intersects(the_interval(work, u), I)) return true;
      return false;
    };
    if (!extendable(a1))
      shrink_inside(work, g, a1, I);
    else if (!extendable(a4))
      shrink_inside(work, g, a4, I);
    else
      throw std::logic_error("m = 3 center extendable on both sides in an E-claw-free graph");
  }
  if (!(d_intersection_graph(work) == g))
    throw std::logic_error("shrinking changed the intersection graph");

  std::vector<std::pair<int, std::vector<Interval>>> per_vertex;
  for (const auto& [v, ivs] : work.parts) {
    int m = static_cast<int>(greedy_chain(work, g, v).size());
    check_claw_bound(work, v, m, d);
    if (m != 3) {
      per_vertex.emplace_back(v, transform_with_graph(v, work, g).pieces);
      continue;
    }
    const Interval& I = the_interval(work, v);
    const auto& nbs = g.neighbors(v);
    int a1 = argmin_r(work, nbs, any);
    const Interval& A1 = the_interval(work, a1);
    int a4 = argmax_l(work, nbs, any);
    const Interval& A4 = the_interval(work, a4);
    std::vector<Interval> pieces;
    if (properly_inside(A1, I)) {
      int a3 = argmax_l(work, nbs, [&](const Interval& J) { return precedes(J, A4); });
      pieces = {A1, Interval(the_interval(work, a3).lo, I.hi)};
    } else if (properly_inside(A4, I)) {
      int a2 = argmin_r(work, nbs, [&](const Interval& J) { return precedes(A1, J); });
      pieces = {Interval(I.lo, the_interval(work, a2).hi), A4};
    } else {
      throw std::logic_error("no side interval properly inside I after shrinking");
    }
    if (!precedes(pieces[0], pieces[1]))
      throw std::logic_error("m = 3 disjoint pieces overlap");
    per_vertex.emplace_back(v, std::move(pieces));
  }
  DIntervalRep out = assemble(per_vertex, d, pad);
  if (!(d_intersection_graph(out) == g))
    throw std::logic_error("construction changed the intersection graph");
  return out;
}

}  // namespace dint
