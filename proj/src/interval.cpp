#include "dint/interval.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace dint {

Interval::Interval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
  if (lo > hi) throw std::invalid_argument("interval with lo > hi");
}

bool intersects(const Interval& a, const Interval& b) {
  return std::max(a.lo, b.lo) <= std::min(a.hi, b.hi);
}

bool precedes(const Interval& a, const Interval& b) {
  return a.hi < b.lo;
}

void DIntervalRep::check_invariants() const {
  for (const auto& [v, ivs] : parts) {
    if (v < 1) throw std::invalid_argument("vertex id must be positive");
    if (ivs.empty()) throw std::invalid_argument("vertex with no intervals");
    if (static_cast<int>(ivs.size()) > d)
      throw std::invalid_argument("vertex with more than d intervals");
  }
}

namespace {

struct Event {
  Rational coord;
  int side;  // 0 = left, 1 = right; lefts sort first so tangencies intersect
  int vertex;
  int part;
};

std::vector<Event> sorted_events(const DIntervalRep& rep) {
  std::vector<Event> events;
  for (const auto& [v, ivs] : rep.parts)
    for (size_t i = 0; i < ivs.size(); ++i) {
      events.push_back({ivs[i].lo, 0, v, static_cast<int>(i)});
      events.push_back({ivs[i].hi, 1, v, static_cast<int>(i)});
    }
  std::stable_sort(events.begin(), events.end(), [](const Event& a, const Event& b) {
    if (a.coord != b.coord) return a.coord < b.coord;
    return a.side < b.side;
  });
  return events;
}

}  // namespace

Graph d_intersection_graph(const DIntervalRep& rep) {
  int n = rep.vertex_count();
  std::set<std::pair<int, int>> edge_set;
  std::vector<std::pair<int, int>> active;  // (vertex, part)
  for (const auto& ev : sorted_events(rep)) {
    if (ev.side == 0) {
      for (auto [w, wp] : active)
        if (w != ev.vertex) edge_set.insert(std::minmax(w, ev.vertex));
      active.emplace_back(ev.vertex, ev.part);
    } else {
      active.erase(std::find(active.begin(), active.end(), std::make_pair(ev.vertex, ev.part)));
    }
  }
  return Graph::from_edges(n, {edge_set.begin(), edge_set.end()});
}

std::pair<int, std::vector<int>> max_disjoint_intersecting(const DIntervalRep& rep, int v) {
  auto it = rep.parts.find(v);
  if (it == rep.parts.end()) throw std::invalid_argument("unknown vertex");
  for (const auto& [u, ivs] : rep.parts)
    if (ivs.size() != 1) throw std::invalid_argument("expected one interval per vertex");
  const Interval& base = it->second.front();

  std::vector<std::pair<Interval, int>> nb;
  for (const auto& [u, ivs] : rep.parts)
    if (u != v && intersects(base, ivs.front())) nb.emplace_back(ivs.front(), u);
  std::sort(nb.begin(), nb.end(), [](const auto& a, const auto& b) {
    if (a.first.hi != b.first.hi) return a.first.hi < b.first.hi;
    return a.second < b.second;
  });

  std::vector<int> witness;
  const Interval* last = nullptr;
  for (const auto& [iv, u] : nb) {
    if (last == nullptr || last->hi < iv.lo) {
      witness.push_back(u);
      last = &rep.parts.at(u).front();
    }
  }
  return {static_cast<int>(witness.size()), witness};
}

VerifyReport verify_representation(const DIntervalRep& rep, const Graph& g, bool require_unit,
                                   bool require_disjoint, bool require_balanced) {
  rep.check_invariants();
  if (static_cast<int>(rep.parts.size()) != g.vertex_count() ||
      rep.vertex_count() != g.vertex_count())
    throw std::invalid_argument("representation and graph vertex sets differ");

  VerifyReport report;
  for (const auto& [v, ivs] : rep.parts) {
    if (static_cast<int>(ivs.size()) > rep.d)
      report.add("too-many-parts", "vertex " + std::to_string(v));
    if (require_unit)
      for (const auto& iv : ivs)
        if (iv.length() != 1) {
          report.add("non-unit-length", "vertex " + std::to_string(v) + " interval [" +
                                            format_rational(iv.lo) + "," + format_rational(iv.hi) +
                                            "]");
          break;
        }
    if (require_disjoint) {
      for (size_t i = 0; i < ivs.size() && true; ++i) {
        bool hit = false;
        for (size_t j = i + 1; j < ivs.size(); ++j)
          if (intersects(ivs[i], ivs[j])) {
            report.add("same-vertex-overlap", "vertex " + std::to_string(v));
            hit = true;
            break;
          }
        if (hit) break;
      }
    }
    if (require_balanced) {
      for (const auto& iv : ivs)
        if (iv.length() != ivs.front().length()) {
          report.add("not-balanced", "vertex " + std::to_string(v));
          break;
        }
    }
  }

  Graph actual = d_intersection_graph(rep);
  for (auto [u, v] : g.edges())
    if (!actual.has_edge(u, v))
      report.add("graph-mismatch-missing-edge",
                 std::to_string(u) + "-" + std::to_string(v));
  for (auto [u, v] : actual.edges())
    if (!g.has_edge(u, v))
      report.add("graph-mismatch-extra-edge", std::to_string(u) + "-" + std::to_string(v));
  return report;
}

Interval dummy_interval(const Rational& global_max, int k) {
  Rational lo = global_max + 2 + 3 * k;
  return Interval(lo, lo + 1);
}

DIntervalRep normalize_to_disjoint(const DIntervalRep& rep, bool pad_part_count) {
  DIntervalRep out;
  out.d = rep.d;
  Rational global_max;
  bool have_max = false;
  for (const auto& [v, ivs] : rep.parts)
    for (const auto& iv : ivs)
      if (!have_max || iv.hi > global_max) {
        global_max = iv.hi;
        have_max = true;
      }

  int dummy_index = 0;
  for (const auto& [v, ivs] : rep.parts) {
    std::vector<Interval> sorted = ivs;
    std::sort(sorted.begin(), sorted.end(),
              [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    std::vector<Interval> merged;
    for (const auto& iv : sorted) {
      if (!merged.empty() && iv.lo <= merged.back().hi)
        merged.back().hi = std::max(merged.back().hi, iv.hi);
      else
        merged.push_back(iv);
    }
    if (pad_part_count)
      while (merged.size() < ivs.size()) merged.push_back(dummy_interval(global_max, dummy_index++));
    out.parts[v] = std::move(merged);
  }
  return out;
}

DIntervalRep balanced_split(const DIntervalRep& rep, const std::optional<Rational>& epsilon) {
  rep.check_invariants();
  for (const auto& [v, ivs] : rep.parts)
    for (const auto& iv : ivs)
      if (iv.length() != ivs.front().length())
        throw std::invalid_argument("input not balanced (vertex " + std::to_string(v) + ")");

  Rational eps;
  if (epsilon) {
    eps = *epsilon;
    if (eps <= 0) throw std::invalid_argument("epsilon must be positive");
  } else {
    // Half the minimum positive margin among endpoint differences, halved
    // again so midpoint +/- eps stays clear of every original endpoint.
    std::vector<Rational> coords;
    for (const auto& [v, ivs] : rep.parts)
      for (const auto& iv : ivs) {
        coords.push_back(iv.lo);
        coords.push_back(iv.hi);
      }
    std::sort(coords.begin(), coords.end());
    Rational min_gap;
    bool have_gap = false;
    for (size_t i = 1; i < coords.size(); ++i) {
      Rational gap = coords[i] - coords[i - 1];
      if (gap > 0 && (!have_gap || gap < min_gap)) {
        min_gap = gap;
        have_gap = true;
      }
    }
    eps = have_gap ? min_gap / 4 : Rational(1, 4);
  }

  DIntervalRep out;
  out.d = rep.d;
  for (const auto& [v, ivs] : rep.parts) {
    std::vector<Interval> sorted = ivs;
    std::sort(sorted.begin(), sorted.end(), [](const Interval& a, const Interval& b) {
      if (a.lo != b.lo) return a.lo < b.lo;
      return a.hi < b.hi;
    });
    int overlaps = 0;
    size_t pair_at = 0;
    for (size_t i = 0; i < sorted.size(); ++i)
      for (size_t j = i + 1; j < sorted.size(); ++j)
        if (intersects(sorted[i], sorted[j])) {
          ++overlaps;
          pair_at = i;
        }
    if (overlaps > 1)
      throw std::invalid_argument("vertex " + std::to_string(v) +
                                  " has more than one overlapping pair");
    std::vector<Interval> rebuilt;
    for (size_t i = 0; i < sorted.size(); ++i) {
      if (overlaps == 1 && i == pair_at) {
        const Interval& first = sorted[i];
        const Interval& second = sorted[i + 1];
        Rational mid = (first.hi + second.lo) / 2;
        rebuilt.emplace_back(first.lo, mid - eps);
        rebuilt.emplace_back(mid + eps, second.hi);
        ++i;
      } else {
        rebuilt.push_back(sorted[i]);
      }
    }
    out.parts[v] = std::move(rebuilt);
  }

  if (!(d_intersection_graph(out) == d_intersection_graph(rep)))
    throw std::invalid_argument("epsilon too large: intersection graph changed");
  return out;
}

DIntervalRep spread_endpoints(const DIntervalRep& rep) {
  auto events = sorted_events(rep);
  DIntervalRep out;
  out.d = rep.d;
  for (const auto& [v, ivs] : rep.parts) out.parts[v].resize(ivs.size());
  long long pos = 0;
  for (const auto& ev : events) {
    auto& iv = out.parts[ev.vertex][ev.part];
    if (ev.side == 0)
      iv.lo = Rational(pos++);
    else
      iv.hi = Rational(pos++);
  }
  return out;
}

}  // namespace dint
