#include "dint/unitizer.hpp"

#include "dint/recognition.hpp"

#include <algorithm>
#include <set>

namespace dint {

LabeledFamily unitize(const LabeledFamily& fam) {
  int k = static_cast<int>(fam.items.size());
  {
    std::set<int> labels;
    for (const auto& it : fam.items) labels.insert(it.label);
    if (static_cast<int>(labels.size()) != k)
      throw std::invalid_argument("duplicate labels in family");
  }
  if (k == 0) return {};

  // Intersection graph H over item indices 1..k (sweep, closed semantics).
  DIntervalRep as_rep;
  as_rep.d = 1;
  for (int i = 0; i < k; ++i) as_rep.parts[i + 1] = {fam.items[i].iv};
  Graph h = d_intersection_graph(as_rep);

  // Precondition: no item meets three pairwise disjoint items. The greedy
  // earliest-right scan over an item's neighbors finds a maximum disjoint set.
  for (int i = 1; i <= k; ++i) {
    auto [m, witness] = max_disjoint_intersecting(as_rep, i);
    if (m >= 3)
      throw ClawPresent(fam.items[i - 1].label,
                        {fam.items[witness[0] - 1].label, fam.items[witness[1] - 1].label,
                         fam.items[witness[2] - 1].label});
  }

  // Connected components, each keyed by its smallest member index.
  std::vector<int> comp(k + 1, -1);
  std::vector<std::vector<int>> members;
  for (int s = 1; s <= k; ++s) {
    if (comp[s] != -1) continue;
    int id = static_cast<int>(members.size());
    std::vector<int> stack{s};
    comp[s] = id;
    members.emplace_back();
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      members[id].push_back(v);
      for (int w : h.neighbors(v))
        if (comp[w] == -1) {
          comp[w] = id;
          stack.push_back(w);
        }
    }
    std::sort(members[id].begin(), members[id].end());
  }

  Rational delta(1, 2 * k + 2);
  std::vector<Rational> left(k + 1);
  Rational base(0);
  for (const auto& verts : members) {
    int nc = static_cast<int>(verts.size());
    std::vector<int> local(k + 1, 0);
    for (int i = 0; i < nc; ++i) local[verts[i]] = i + 1;
    std::vector<std::pair<int, int>> edges;
    for (int v : verts)
      for (int w : h.neighbors(v))
        if (v < w) edges.emplace_back(local[v], local[w]);
    Graph sub = Graph::from_edges(nc, edges);

    auto order = recognize_proper_order(sub);
    if (!order)
      throw InfeasibleOrder("component admits no proper order despite claw-freeness");

    // order positions within the component
    std::vector<int> pos(nc + 1);
    for (int i = 0; i < nc; ++i) pos[order->order[i]] = i;

    // In a proper order the earlier neighbors of each item occupy a suffix of
    // the processed prefix; fn[i] is where that suffix starts. Left endpoints
    // solve the difference system
    //   l[i-1] <= l[i],  l[fn[i]-1] + 1 + delta <= l[i],  l[i] <= l[fn[i]] + 1
    // which under the suffix property bounds every earlier pair. A plain
    // forward greedy is not enough: the adjacency upper bounds propagate
    // backward (a later separation may force an earlier pair apart), so the
    // system is solved by relaxation.
    std::vector<int> fn(nc, 0);
    for (int i = 1; i < nc; ++i) {
      int lv = order->order[i];
      int first_nb = i;
      int nb_count = 0;
      for (int w : sub.neighbors(lv))
        if (pos[w] < i) {
          first_nb = std::min(first_nb, pos[w]);
          ++nb_count;
        }
      if (nb_count != i - first_nb)
        throw InfeasibleOrder("backward neighborhood is not a suffix");
      fn[i] = first_nb;
    }

    std::vector<Rational> l(nc, Rational(0));
    bool changed = true;
    for (int pass = 0; changed; ++pass) {
      if (pass > nc) throw InfeasibleOrder("separation constraints are cyclic");
      changed = false;
      for (int i = 1; i < nc; ++i) {
        if (l[i] < l[i - 1]) {
          l[i] = l[i - 1];
          changed = true;
        }
        if (fn[i] >= 1) {
          Rational lb = l[fn[i] - 1] + 1 + delta;
          if (l[i] < lb) {
            l[i] = lb;
            changed = true;
          }
        }
        if (fn[i] < i) {
          Rational lb = l[i] - 1;  // l[fn] >= l[i] - 1
          if (l[fn[i]] < lb) {
            l[fn[i]] = lb;
            changed = true;
          }
        }
      }
    }
    for (int i = 1; i < nc; ++i)
      if (fn[i] < i && l[i] > l[fn[i]] + 1)
        throw InfeasibleOrder("placement would separate adjacent items");

    for (int i = 0; i < nc; ++i) left[verts[order->order[i] - 1]] = base + l[i];
    base = base + l[nc - 1] + 3;
  }

  LabeledFamily out;
  out.items.reserve(k);
  for (int i = 0; i < k; ++i)
    out.items.push_back({fam.items[i].label, Interval(left[i + 1], left[i + 1] + 1)});
  return out;
}

}  // namespace dint
