#include "dint/split_checker.hpp"

#include "dint/construction.hpp"
#include "dint/log.hpp"
#include "dint/recognition.hpp"

#include <algorithm>
#include <array>
#include <bitset>
#include <functional>

namespace dint {

namespace {

// The search enumerates, for each admissible choice of split vertices, the
// candidate representative graphs G' directly as proper orderings: a graph is
// unit interval exactly when its vertices admit an ordering whose backward
// neighborhoods are suffixes with nondecreasing start positions, so
// enumerating such orderings over the representatives enumerates the unit
// interval G' and nothing else. A solution additionally needs every original
// edge realized by at least one intersecting representative pair and no
// spurious intersections, which the ordering enumeration enforces as it goes.
//
// In disjoint mode the enumeration is restricted to canonical solutions: an
// edge is realized by at most three representative pairs (four would induce a
// C4 on the representatives, as siblings are non-adjacent), an edge of an
// induced K_{1,3} by at most two (the claw leaves stay independent) and an
// edge of an induced K_{1,4} by exactly one. With internal sibling edges these
// bounds no longer hold, so non-disjoint mode only caps an edge at four pairs.
struct Searcher {
  const Graph& g;
  SplitMode mode;
  SearchLimits limits;
  int n;

  std::vector<std::pair<int, int>> edges;
  int ecount;
  std::vector<std::vector<int>> eidx;   // vertex pair -> edge index, -1 if absent
  std::vector<char> must_split;         // centers of induced K_{1,3}
  std::vector<int> ecap_base;           // max representative pairs per edge
  std::vector<int> ecap;                // per split choice, tightened from ecap_base

  long long nodes = 0;
  std::chrono::steady_clock::time_point deadline;
  bool exhausted = false;
  std::optional<SplitSolution> found;

  // per-split-choice scratch
  std::vector<char> split;
  std::vector<std::pair<int, int>> reps;  // (vertex, part), parts of a vertex adjacent
  std::vector<int> rep1, rep2;            // vertex -> rep index (rep2 = -1 if unsplit)
  int R = 0;
  std::vector<int> placed, pos_of, start, cover;
  std::vector<int> cover_by;  // per edge, 4-bit mask of realizing pairs
  std::vector<char> used;
  int uncovered = 0;

  explicit Searcher(const Graph& graph, SplitMode md, const SearchLimits& lim)
      : g(graph), mode(md), limits(lim), n(graph.vertex_count()) {
    edges = g.edges();
    ecount = static_cast<int>(edges.size());
    eidx.assign(n + 1, std::vector<int>(n + 1, -1));
    for (int e = 0; e < ecount; ++e)
      eidx[edges[e].first][edges[e].second] = eidx[edges[e].second][edges[e].first] = e;

    vadj.assign(n + 1, 0);
    for (auto [u, v] : edges) {
      vadj[u] |= std::uint64_t{1} << v;
      vadj[v] |= std::uint64_t{1} << u;
    }
    bool capped = mode == SplitMode::Disjoint;
    ecap_base.assign(ecount, capped ? 3 : 4);
    must_split.assign(n + 1, 0);
    for (int c = 1; c <= n; ++c) {
      const auto& nb = g.neighbors(c);
      int deg = static_cast<int>(nb.size());
      for (int a = 0; a < deg; ++a)
        for (int b = a + 1; b < deg; ++b) {
          if (g.has_edge(nb[a], nb[b])) continue;
          for (int d = b + 1; d < deg; ++d) {
            if (g.has_edge(nb[a], nb[d]) || g.has_edge(nb[b], nb[d])) continue;
            must_split[c] = 1;
            if (!capped) continue;
            for (int leaf : {nb[a], nb[b], nb[d]}) {
              int e = eidx[c][leaf];
              ecap_base[e] = std::min(ecap_base[e], 2);
            }
            for (int e2 = d + 1; e2 < deg; ++e2) {
              if (g.has_edge(nb[a], nb[e2]) || g.has_edge(nb[b], nb[e2]) ||
                  g.has_edge(nb[d], nb[e2]))
                continue;
              for (int leaf : {nb[a], nb[b], nb[d], nb[e2]}) ecap_base[eidx[c][leaf]] = 1;
            }
          }
        }
    }
  }

  bool tick() {
    if (exhausted) return false;
    ++nodes;
    if (nodes > limits.node_budget) {
      exhausted = true;
      return false;
    }
    if ((nodes & 4095) == 0 && std::chrono::steady_clock::now() > deadline) {
      exhausted = true;
      return false;
    }
    return true;
  }

  void run() {
    split.assign(n + 1, 0);
    choose_split(1);
  }

  // A vertex with three pairwise non-adjacent neighbors must split:
  // representatives of distinct non-adjacent vertices are never adjacent and
  // sibling edges join only a vertex to itself, so an unsplit center would
  // carry a claw into G'.
  void choose_split(int v) {
    if (found || exhausted) return;
    if (v > n) {
      try_split_choice();
      return;
    }
    if (!must_split[v]) {
      split[v] = 0;
      choose_split(v + 1);
      if (found || exhausted) return;
    }
    // both representatives of a split vertex must end up the sole realizer of
    // some incident edge, which takes two incident edges
    if (g.degree(v) < 2) return;
    split[v] = 1;
    choose_split(v + 1);
    split[v] = 0;
  }

  bool allowed(int a, int b) const {
    if (reps[a].first == reps[b].first) return mode == SplitMode::NonDisjoint;
    return g.has_edge(reps[a].first, reps[b].first);
  }

  std::vector<int> owed_cnt;           // scratch: per vertex, uncovered incident edges
  std::vector<int> free_cnt;           // per vertex, unplaced representatives
  std::vector<int> ppos1, ppos2;       // per vertex, position of each placed part (-1 unplaced)
  std::vector<int> sole_cand;          // per rep, incident edges it could still solely realize
  std::vector<std::uint64_t> vadj;     // vertex adjacency bitmask, bit w of vadj[v]
  std::vector<unsigned __int128> radj; // rep compatibility bitmask (adjacency allowed)
  std::vector<unsigned __int128> pmask; // pmask[k]: bitmask of placed[0..k-1]

  // Checked after every placement with window start st. Representatives at
  // positions before st never gain neighbors (window starts are
  // nondecreasing), so an uncovered edge must still admit a realizing pair
  // with one endpoint representative unplaced and the other unplaced or
  // placed at a position >= st. And a vertex whose uncovered edges can only
  // attach to one remaining representative cannot owe three pairwise
  // non-adjacent neighbors: neighborhoods in a unit interval graph are
  // claw-free, independence number at most two. (Two remaining
  // representatives never overflow: five pairwise non-adjacent owed
  // neighbors would be an induced K_{1,5}, excluded up front.)
  // keep sole_cand in step with cover_by: for each endpoint representative,
  // whether its pairs are the only ones on the edge
  void update_sole(int e, int m_old, int m_new) {
    auto [a, b] = edges[e];
    for (int side = 0; side < 2; ++side) {
      int v = side == 0 ? a : b;
      for (int i = 0; i < 2; ++i) {
        int r = i == 0 ? rep1[v] : rep2[v];
        if (r < 0) continue;
        int mine = side == 0 ? (i == 0 ? 0b0011 : 0b1100) : (i == 0 ? 0b0101 : 0b1010);
        bool was = (m_old & mine) != 0 && (m_old & ~mine) == 0;
        bool now = (m_new & mine) != 0 && (m_new & ~mine) == 0;
        sole_cand[r] += static_cast<int>(now) - static_cast<int>(was);
      }
    }
  }

  // Reversing a completed segment and swapping the two representatives of
  // every split vertex wholly inside it yields another valid segment with an
  // isomorphic contribution to G', so only the lexicographically smaller of
  // the pair continues past the segment boundary.
  bool segment_canonical(int seg_start, int pos) const {
    int len = pos - seg_start;
    if (len <= 1) return true;
    for (int i = 0; i < len; ++i) {
      int a = placed[seg_start + i];
      int b = placed[pos - 1 - i];
      int bv = reps[b].first;
      if (rep2[bv] >= 0) {
        int sib = b == rep1[bv] ? rep2[bv] : rep1[bv];
        if (used[sib] && pos_of[sib] >= seg_start) b = sib;
      }
      if (a != b) return a < b;
    }
    return true;
  }

  bool partial_ok(int st) {
    // a closed representative of a split vertex must still hold an edge it
    // could end up realizing solely: its own pairs are final and an edge
    // that has a foreign pair keeps it forever
    for (int t = 0; t < st; ++t) {
      int r = placed[t];
      if (rep2[reps[r].first] >= 0 && sole_cand[r] == 0) return false;
    }
    std::fill(owed_cnt.begin(), owed_cnt.end(), 0);
    int sz = static_cast<int>(placed.size());
    for (int e = 0; e < ecount; ++e) {
      if (cover[e] > 0) continue;
      auto [u, v] = edges[e];
      bool un_u = free_cnt[u] > 0, un_v = free_cnt[v] > 0;
      bool av_u = un_u || ppos1[u] >= st || ppos2[u] >= st;
      bool av_v = un_v || ppos1[v] >= st || ppos2[v] >= st;
      if (!((un_u && av_v) || (un_v && av_u))) return false;
      // an edge whose one side is fully placed must be realized by a future
      // representative whose window reaches back to the placed side, which
      // makes it adjacent to everything placed since that position
      if (!un_u || !un_v) {
        int pu = !un_u ? std::max(ppos1[u] >= st ? ppos1[u] : -1,
                                  ppos2[u] >= st ? ppos2[u] : -1)
                       : -1;
        int place_v = !un_u ? v : u;
        int p = !un_u ? pu
                      : std::max(ppos1[v] >= st ? ppos1[v] : -1,
                                 ppos2[v] >= st ? ppos2[v] : -1);
        unsigned __int128 need = pmask[sz] & ~pmask[p];
        bool feasible = false;
        for (int i = 0; i < 2 && !feasible; ++i) {
          int a = i == 0 ? rep1[place_v] : rep2[place_v];
          if (a < 0 || used[a]) continue;
          feasible = (need & ~radj[a]) == 0;
        }
        if (!feasible) return false;
      }
      ++owed_cnt[u];
      ++owed_cnt[v];
    }
    for (int v = 1; v <= n; ++v) {
      if (owed_cnt[v] < 3) continue;
      int avail = free_cnt[v] + (ppos1[v] >= st ? 1 : 0) + (ppos2[v] >= st ? 1 : 0);
      if (avail >= 2) continue;
      int U[64];
      int k = 0;
      for (int w : g.neighbors(v)) {
        int e = eidx[v][w];
        if (cover[e] == 0) U[k++] = w;
      }
      for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b) {
          if (vadj[U[a]] >> U[b] & 1) continue;
          for (int c = b + 1; c < k; ++c)
            if (!(vadj[U[a]] >> U[c] & 1) && !(vadj[U[b]] >> U[c] & 1)) return false;
        }
    }
    return true;
  }

  void try_split_choice() {
    reps.clear();
    rep1.assign(n + 1, -1);
    rep2.assign(n + 1, -1);
    for (int v = 1; v <= n; ++v) {
      rep1[v] = static_cast<int>(reps.size());
      reps.emplace_back(v, 1);
      if (split[v]) {
        rep2[v] = static_cast<int>(reps.size());
        reps.emplace_back(v, 2);
      }
    }
    R = static_cast<int>(reps.size());
    placed.clear();
    used.assign(R, 0);
    pos_of.assign(R, -1);
    start.assign(R, -1);
    cover.assign(ecount, 0);
    cover_by.assign(ecount, 0);
    owed_cnt.assign(n + 1, 0);
    free_cnt.assign(n + 1, 1);
    for (int v = 1; v <= n; ++v)
      if (split[v]) free_cnt[v] = 2;
    ppos1.assign(n + 1, -1);
    ppos2.assign(n + 1, -1);
    sole_cand.assign(R, 0);
    radj.assign(R, 0);
    pmask.assign(R + 1, 0);
    for (int a = 0; a < R; ++a)
      for (int b = 0; b < R; ++b)
        if (a != b && allowed(a, b)) radj[a] |= static_cast<unsigned __int128>(1) << b;
    // both representatives of a split degree-2 vertex must each solely
    // realize one of its two edges, so those edges take exactly one pair
    ecap = ecap_base;
    for (int v = 1; v <= n; ++v)
      if (split[v] && g.degree(v) == 2)
        for (int w : g.neighbors(v)) ecap[eidx[v][w]] = 1;
    uncovered = ecount;
    if (rec(0, 0, 0, R)) record();
  }

  // Canonical solutions have no removable representative: removing one that
  // is not the sole realizer of some edge leaves a smaller valid solution,
  // which the split enumeration visits separately. Once a fresh segment
  // starts, every earlier representative's neighborhood is final (later
  // windows never reach back), so a fully placed split vertex can be checked
  // exactly.
  bool rep_essential(int v) const {
    for (int i = 0; i < 2; ++i) {
      bool sole = false;
      for (int w : g.neighbors(v)) {
        int m = cover_by[eidx[v][w]];
        if (m == 0) continue;
        int mine = v < w ? (i == 0 ? 0b0011 : 0b1100) : (i == 0 ? 0b0101 : 0b1010);
        if ((m & ~mine) == 0) {
          sole = true;
          break;
        }
      }
      if (!sole) return false;
    }
    return true;
  }

  bool essential_ok() const {
    for (int v = 1; v <= n; ++v) {
      if (!split[v]) continue;
      bool u1 = used[rep1[v]], u2 = used[rep2[v]];
      if (u1 && u2) {
        if (!rep_essential(v)) return false;
      } else if (u1 || u2) {
        // a lone closed representative gains no neighbors; if it realizes no
        // edge at all it is removable
        int i = u1 ? 0 : 1;
        bool any = false;
        for (int w : g.neighbors(v)) {
          int m = cover_by[eidx[v][w]];
          int mine = v < w ? (i == 0 ? 0b0011 : 0b1100) : (i == 0 ? 0b0101 : 0b1010);
          if (m & mine) {
            any = true;
            break;
          }
        }
        if (!any) return false;
      }
    }
    return true;
  }

  // A proper ordering decomposes into segments, maximal runs with no fresh
  // restart; segments carry no cross edges, so they are enumerated sorted by
  // minimum rep index, and the v_1/v_2 relabeling symmetry is broken by
  // requiring v_1 before v_2 inside a segment.
  bool rec(int pos, int prev_s, int seg_start, int seg_min) {
    if (pos == R)
      return uncovered == 0 && segment_canonical(seg_start, R) && essential_ok();
    if (!tick()) return false;
    int min_unused = R;
    for (int r = 0; r < R; ++r)
      if (!used[r]) {
        min_unused = r;
        break;
      }
    // whether a fresh segment may start here does not depend on the
    // representative; evaluate once on first demand
    int fresh_allowed = -1;
    for (int r = min_unused; r < R; ++r) {
      if (used[r]) continue;
      bool sibling_here = reps[r].second == 1 && r + 1 < R &&
                          reps[r + 1].first == reps[r].first && used[r + 1] &&
                          pos_of[r + 1] >= seg_start;
      // the window must consist entirely of compatible representatives, so
      // valid starts form a suffix of [prev_s, pos]
      int st_min = pos;
      while (st_min > prev_s && (radj[r] >> placed[st_min - 1] & 1)) --st_min;
      for (int st = st_min; st <= pos; ++st) {
        bool fresh = st == pos;
        if (!fresh && sibling_here) continue;
        if (fresh && pos > 0) {
          if (fresh_allowed < 0)
            fresh_allowed =
                seg_min < min_unused && segment_canonical(seg_start, pos) && partial_ok(pos);
          if (!fresh_allowed) break;
        }
        used[r] = 1;
        pos_of[r] = pos;
        start[r] = st;
        placed.push_back(r);
        int rv = reps[r].first;
        --free_cnt[rv];
        (reps[r].second == 1 ? ppos1 : ppos2)[rv] = pos;
        pmask[pos + 1] = pmask[pos] | (static_cast<unsigned __int128>(1) << r);
        std::array<std::pair<int, int>, 64> touched;
        int ntouched = 0;
        bool over_cap = false;
        for (int t = st; t < pos; ++t) {
          int q = placed[t];
          int e = eidx[reps[r].first][reps[q].first];
          if (e >= 0) {
            if (cover[e]++ == 0) --uncovered;
            int bit = reps[r].first == edges[e].first
                          ? (reps[r].second - 1) * 2 + (reps[q].second - 1)
                          : (reps[q].second - 1) * 2 + (reps[r].second - 1);
            int m_old = cover_by[e];
            cover_by[e] |= 1 << bit;
            update_sole(e, m_old, cover_by[e]);
            touched[ntouched++] = {e, bit};
            if (cover[e] > ecap[e]) {
              over_cap = true;
              break;
            }
          }
        }
        bool win = !over_cap && partial_ok(st) &&
                   (fresh ? rec(pos + 1, st, pos, r)
                          : rec(pos + 1, st, seg_start, std::min(seg_min, r)));
        if (win) return true;
        for (int t = 0; t < ntouched; ++t) {
          auto [e, bit] = touched[t];
          if (--cover[e] == 0) ++uncovered;
          int m_old = cover_by[e];
          cover_by[e] &= ~(1 << bit);
          update_sole(e, m_old, cover_by[e]);
        }
        placed.pop_back();
        ++free_cnt[rv];
        (reps[r].second == 1 ? ppos1 : ppos2)[rv] = -1;
        start[r] = -1;
        pos_of[r] = -1;
        used[r] = 0;
        if (exhausted) return false;
      }
    }
    return false;
  }

  bool rep_adjacent(int a, int b) const {
    if (pos_of[a] > pos_of[b]) std::swap(a, b);
    return start[b] <= pos_of[a];
  }

  void record() {
    SplitSolution s;
    s.n = n;
    s.split.assign(n + 1, 0);
    for (int v = 1; v <= n; ++v) s.split[v] = split[v];
    for (int v = 1; v <= n; ++v) {
      if (split[v] && rep_adjacent(rep1[v], rep2[v])) s.internal_edges.push_back(v);
      for (int w : g.neighbors(v)) {
        if (w <= v) continue;
        auto& slot = s.rep_edges[{v, w}];
        for (int i = 1; i <= (split[v] ? 2 : 1); ++i)
          for (int j = 1; j <= (split[w] ? 2 : 1); ++j)
            if (rep_adjacent(i == 1 ? rep1[v] : rep2[v], j == 1 ? rep1[w] : rep2[w]))
              slot.push_back({i, j});
      }
    }
    found = std::move(s);
  }
};

// Constructive certificate: an interval K_{1,5}-free graph is a unit
// 2-interval graph, and with no E-claws the disjoint variant applies; the
// built representation converts directly into a solution.
std::optional<SplitSolution> construction_certificate(const Graph& g, SplitMode mode) {
  auto rep0 = recognize_interval(g);
  if (!rep0) return std::nullopt;
  if (mode == SplitMode::Disjoint && !is_e_claw_free(g)) return std::nullopt;
  DIntervalRep rep;
  try {
    rep = mode == SplitMode::Disjoint
              ? build_disjoint_unit_d_rep_eclaw_free(*rep0, 2, false)
              : build_unit_d_rep(*rep0, 2, false);
  } catch (const std::exception&) {
    return std::nullopt;
  }
  SplitSolution s;
  s.n = g.vertex_count();
  s.split.assign(s.n + 1, 0);
  for (int v = 1; v <= s.n; ++v) {
    const auto& pv = rep.parts.at(v);
    s.split[v] = pv.size() == 2;
    if (s.split[v] && intersects(pv[0], pv[1])) s.internal_edges.push_back(v);
    for (int w = v + 1; w <= s.n; ++w) {
      const auto& pw = rep.parts.at(w);
      for (int i = 0; i < static_cast<int>(pv.size()); ++i)
        for (int j = 0; j < static_cast<int>(pw.size()); ++j)
          if (intersects(pv[i], pw[j])) s.rep_edges[{v, w}].push_back({i + 1, j + 1});
    }
  }
  return s;
}

}  // namespace

SplitResult search_split(const Graph& g, SplitMode mode, const SearchLimits& limits) {
  SplitResult res;
  int n = g.vertex_count();
  if (n == 0) {
    res.verdict = SplitVerdict::Yes;
    res.solution = SplitSolution{};
    return res;
  }
  if (n > 60) throw std::invalid_argument("split search supports at most 60 vertices");
  if (auto star = has_induced_star(g, 5)) {
    log_line(LogLevel::Info,
             "K_{1,5} centered at " + std::to_string(star->center) + ": immediate No");
    res.verdict = SplitVerdict::No;
    return res;
  }
  if (auto cert = construction_certificate(g, mode); cert && verify_split(g, *cert, mode).ok) {
    log_line(LogLevel::Info, "solved by direct construction");
    res.verdict = SplitVerdict::Yes;
    res.solution = std::move(cert);
    return res;
  }

  Searcher s(g, mode, limits);
  s.deadline = std::chrono::steady_clock::now() + limits.time_budget;
  s.run();
  res.nodes = s.nodes;
  if (s.found) {
    res.verdict = SplitVerdict::Yes;
    res.solution = std::move(s.found);
  } else if (s.exhausted) {
    res.verdict = SplitVerdict::Exhausted;
  } else {
    res.verdict = SplitVerdict::No;
  }
  log_line(LogLevel::Info, "search explored " + std::to_string(res.nodes) + " nodes");
  return res;
}

VerifyReport verify_split(const Graph& g, const SplitSolution& s, SplitMode mode) {
  VerifyReport report;
  int n = g.vertex_count();
  if (s.n != n) {
    report.add("vertex-count-mismatch", std::to_string(s.n) + " vs " + std::to_string(n));
    return report;
  }
  if (static_cast<int>(s.split.size()) != n + 1) {
    report.add("split-vector-size", std::to_string(s.split.size()));
    return report;
  }

  auto edges = g.edges();
  for (auto e : edges) {
    auto it = s.rep_edges.find(e);
    if (it == s.rep_edges.end() || it->second.empty())
      report.add("uncovered-edge", std::to_string(e.first) + "-" + std::to_string(e.second));
  }
  for (const auto& [e, prs] : s.rep_edges) {
    if (!g.has_edge(e.first, e.second)) {
      report.add("phantom-edge", std::to_string(e.first) + "-" + std::to_string(e.second));
      continue;
    }
    for (auto [i, j] : prs) {
      bool ok_i = i == 1 || (i == 2 && s.split[e.first]);
      bool ok_j = j == 1 || (j == 2 && s.split[e.second]);
      if (i < 1 || i > 2 || j < 1 || j > 2 || !ok_i || !ok_j)
        report.add("invalid-representative-pair", std::to_string(e.first) + "_" +
                                                      std::to_string(i) + "-" +
                                                      std::to_string(e.second) + "_" +
                                                      std::to_string(j));
    }
  }
  for (int v : s.internal_edges) {
    if (v < 1 || v > n || !s.split[v])
      report.add("invalid-internal-edge", std::to_string(v));
    else if (mode == SplitMode::Disjoint)
      report.add("internal-edge-in-disjoint-mode", std::to_string(v));
  }
  if (!report.ok) return report;

  // Rebuild G' and test unit-interval membership.
  std::vector<int> local(2 * n + 2, 0);
  int R = 0;
  for (int v = 1; v <= n; ++v) {
    local[2 * v] = ++R;
    if (s.split[v]) local[2 * v + 1] = ++R;
  }
  std::vector<std::pair<int, int>> es;
  for (const auto& [e, prs] : s.rep_edges)
    for (auto [i, j] : prs) {
      auto p = std::minmax(local[2 * e.first + i - 1], local[2 * e.second + j - 1]);
      es.push_back(p);
    }
  for (int v : s.internal_edges) es.emplace_back(local[2 * v], local[2 * v + 1]);
  std::sort(es.begin(), es.end());
  es.erase(std::unique(es.begin(), es.end()), es.end());
  Graph gp = Graph::from_edges(R, es);
  if (!recognize_proper_order(gp)) report.add("not-unit-interval", "G'");
  return report;
}

bool brute_force_oracle(const Graph& g, SplitMode mode) {
  int n = g.vertex_count();
  if (n == 0) return true;
  if (n > 16) throw std::invalid_argument("oracle limited to 16 vertices");

  auto edges = g.edges();
  int ecount = static_cast<int>(edges.size());
  std::vector<std::vector<int>> eidx(n + 1, std::vector<int>(n + 1, -1));
  for (int e = 0; e < ecount; ++e)
    eidx[edges[e].first][edges[e].second] = eidx[edges[e].second][edges[e].first] = e;

  // An unsplit vertex with three pairwise non-adjacent neighbors is a claw
  // center in G' regardless of edge choices (reps of distinct non-adjacent
  // vertices are never adjacent), so such masks cannot work.
  std::vector<char> needs_split(n + 1, 0);
  for (int c = 1; c <= n; ++c) {
    const auto& nb = g.neighbors(c);
    int deg = static_cast<int>(nb.size());
    for (int a = 0; a < deg && !needs_split[c]; ++a)
      for (int b = a + 1; b < deg && !needs_split[c]; ++b) {
        if (g.has_edge(nb[a], nb[b])) continue;
        for (int d = b + 1; d < deg; ++d)
          if (!g.has_edge(nb[a], nb[d]) && !g.has_edge(nb[b], nb[d])) {
            needs_split[c] = 1;
            break;
          }
      }
  }

  for (int mask = 0; mask < (1 << n); ++mask) {
    bool skip = false;
    for (int v = 1; v <= n && !skip; ++v)
      if (needs_split[v] && !((mask >> (v - 1)) & 1)) skip = true;
    if (skip) continue;
    std::vector<std::pair<int, int>> reps;
    for (int v = 1; v <= n; ++v) {
      reps.emplace_back(v, 1);
      if (mask & (1 << (v - 1))) reps.emplace_back(v, 2);
    }
    int R = static_cast<int>(reps.size());
    auto allowed = [&](int a, int b) {
      if (reps[a].first == reps[b].first) return mode == SplitMode::NonDisjoint;
      return g.has_edge(reps[a].first, reps[b].first);
    };

    std::vector<int> placed;
    std::vector<char> used(R, 0);
    std::vector<int> pos_of(R, -1);
    std::vector<int> cover(ecount, 0);
    int uncovered = ecount;

    // Uncovered edges can only be realized by reps that are both still
    // unplaced (reps left behind by a fresh segment gain no new neighbors).
    auto coverable = [&]() {
      for (int e = 0; e < ecount; ++e) {
        if (cover[e] > 0) continue;
        auto [u, v] = edges[e];
        bool u_free = !used[2 * (u - 1)] || ((mask >> (u - 1)) & 1 && !used[2 * (u - 1) + 1]);
        bool v_free = !used[2 * (v - 1)] || ((mask >> (v - 1)) & 1 && !used[2 * (v - 1) + 1]);
        if (!u_free || !v_free) return false;
      }
      return true;
    };

    // Every unit interval graph admits an ordering whose backward
    // neighborhoods are suffixes with nondecreasing starts, and conversely
    // every such ordering yields a unit interval graph; enumerating the
    // orderings enumerates all candidate G'. An ordering decomposes into
    // segments (maximal runs with no fresh restart); segments carry no cross
    // edges, so they are enumerated sorted by minimum rep index, and the
    // v_1/v_2 relabeling symmetry is broken within a segment.
    std::function<bool(int, int, int, int)> rec = [&](int pos, int prev_s, int seg_start,
                                                      int seg_min) -> bool {
      if (pos == R) return uncovered == 0;
      int min_unused = R;
      for (int r = 0; r < R; ++r)
        if (!used[r]) {
          min_unused = r;
          break;
        }
      for (int r = min_unused; r < R; ++r) {
        if (used[r]) continue;
        bool sibling_here = reps[r].second == 1 && r + 1 < R &&
                            reps[r + 1].first == reps[r].first && used[r + 1] &&
                            pos_of[r + 1] >= seg_start;
        for (int st = prev_s; st <= pos; ++st) {
          bool fresh = st == pos;
          // same-segment sibling order: v_1 before v_2
          if (!fresh && sibling_here) continue;
          if (fresh && pos > 0 && (seg_min > min_unused || !coverable())) break;
          bool ok = true;
          for (int t = st; t < pos && ok; ++t) ok = allowed(r, placed[t]);
          if (!ok) continue;
          used[r] = 1;
          pos_of[r] = pos;
          placed.push_back(r);
          std::vector<int> touched;
          for (int t = st; t < pos; ++t) {
            int e = eidx[reps[r].first][reps[placed[t]].first];
            if (e >= 0) {
              if (cover[e]++ == 0) --uncovered;
              touched.push_back(e);
            }
          }
          bool win = fresh ? rec(pos + 1, st, pos, r)
                           : rec(pos + 1, st, seg_start, std::min(seg_min, r));
          if (win) return true;
          for (int e : touched)
            if (--cover[e] == 0) ++uncovered;
          placed.pop_back();
          pos_of[r] = -1;
          used[r] = 0;
        }
      }
      return false;
    };
    if (rec(0, 0, 0, R)) return true;
  }
  return false;
}

}  // namespace dint
