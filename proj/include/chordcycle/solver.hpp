// Copyright 2026 The chordcycle Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CHORDCYCLE_SOLVER_HPP
#define CHORDCYCLE_SOLVER_HPP

#include <atomic>
#include <limits>
#include <queue>
#include <stdexcept>
#include <thread>
#include <vector>

#include "chordcycle/decomposition.hpp"
#include "chordcycle/graph.hpp"
#include "chordcycle/io.hpp"

namespace chordcycle {

/// Minimal cycle length for a chord budget, with a witness cycle.
struct ChordCycleResult {
  int length = 0;
  std::vector<int> witness;  // simple cycle as a vertex sequence
  int chords_used = 0;
  int budget = 0;
};

namespace detail {

inline void run_workers(int threads, int items,
                        const std::function<void(int)>& work) {
  threads = std::max(1, threads);
  if (threads == 1 || items <= 1) {
    for (int i = 0; i < items; ++i) work(i);
    return;
  }
  std::atomic<int> next{0};
  auto loop = [&] {
    for (;;) {
      int i = next.fetch_add(1);
      if (i >= items) return;
      work(i);
    }
  };
  std::vector<std::thread> pool;
  int spawn = std::min(threads, items);
  pool.reserve(spawn);
  for (int t = 0; t < spawn; ++t) pool.emplace_back(loop);
  for (auto& th : pool) th.join();
}

inline int count_chords_on_cycle(const DecomposedGraph& dg,
                                 const std::vector<int>& cycle) {
  int chords = 0;
  for (std::size_t i = 0; i < cycle.size(); ++i)
    if (dg.is_chord(cycle[i], cycle[(i + 1) % cycle.size()])) ++chords;
  return chords;
}

inline void check_witness(const DecomposedGraph& dg,
                          const ChordCycleResult& r) {
  const Graph& g = dg.graph();
  if (static_cast<int>(r.witness.size()) != r.length)
    throw std::logic_error("solver: witness length mismatch");
  std::vector<char> seen(g.vertex_count(), 0);
  for (std::size_t i = 0; i < r.witness.size(); ++i) {
    int u = r.witness[i], v = r.witness[(i + 1) % r.witness.size()];
    if (u < 0 || u >= g.vertex_count() || seen[u])
      throw std::logic_error("solver: witness is not a simple cycle");
    seen[u] = 1;
    if (!g.has_edge(u, v))
      throw std::logic_error("solver: witness uses a non-edge");
  }
  if (count_chords_on_cycle(dg, r.witness) != r.chords_used ||
      r.chords_used > r.budget)
    throw std::logic_error("solver: witness chord count mismatch");
}

/// Shortest-path layer over states (vertex, chords used), excluding one
/// edge. dist is indexed state = vertex * (budget + 1) + chords.
struct ProductSearch {
  const DecomposedGraph& dg;
  int excluded_edge;
  int budget;  // max chords usable on the path
  std::vector<int> dist;
  std::vector<int> parent;

  ProductSearch(const DecomposedGraph& d, int edge, int b)
      : dg(d), excluded_edge(edge), budget(b) {}

  void run(int source) {
    const Graph& g = dg.graph();
    const int width = budget + 1;
    dist.assign(g.vertex_count() * width, -1);
    parent.assign(dist.size(), -1);
    std::queue<int> q;
    int s = source * width;
    dist[s] = 0;
    q.push(s);
    while (!q.empty()) {
      int state = q.front();
      q.pop();
      int v = state / width, c = state % width;
      for (const auto& arc : g.neighbors(v)) {
        if (arc.edge == excluded_edge) continue;
        int nc = c + (dg.is_chord_edge(arc.edge) ? 1 : 0);
        if (nc > budget) continue;
        int nstate = arc.to * width + nc;
        if (dist[nstate] >= 0) continue;
        dist[nstate] = dist[state] + 1;
        parent[nstate] = state;
        q.push(nstate);
      }
    }
  }

  /// Shortest distance to `target` using at most `cap` chords.
  int best_to(int target, int cap) const {
    const int width = budget + 1;
    int best = -1;
    for (int c = 0; c <= std::min(cap, budget); ++c) {
      int d = dist[target * width + c];
      if (d >= 0 && (best < 0 || d < best)) best = d;
    }
    return best;
  }

  /// Vertex sequence source..target of the shortest path within `cap`.
  std::vector<int> path_to(int target, int cap) const {
    const int width = budget + 1;
    int pick = -1;
    for (int c = 0; c <= std::min(cap, budget); ++c) {
      int st = target * width + c;
      if (dist[st] >= 0 && (pick < 0 || dist[st] < dist[pick])) pick = st;
    }
    std::vector<int> path;
    for (int st = pick; st >= 0; st = parent[st]) path.push_back(st / width);
    std::reverse(path.begin(), path.end());
    return path;
  }
};

/// Split a closed walk into simple cycles and return the shortest one
/// (ties by canonical form); every fragment of the split respects the
/// walk's chord budget because chord counts add up across fragments.
inline std::vector<int> best_cycle_in_closed_walk(const std::vector<int>& walk,
                                                  int n) {
  std::vector<int> pos(n, -1), stack;
  std::vector<std::vector<int>> fragments;
  for (int w : walk) {
    if (pos[w] < 0) {
      pos[w] = static_cast<int>(stack.size());
      stack.push_back(w);
      continue;
    }
    std::vector<int> frag(stack.begin() + pos[w], stack.end());
    if (frag.size() >= 3) fragments.push_back(std::move(frag));
    for (std::size_t i = pos[w] + 1; i < stack.size(); ++i) pos[stack[i]] = -1;
    stack.resize(pos[w] + 1);
  }
  if (stack.size() >= 3) fragments.push_back(std::move(stack));
  std::vector<int> best;
  for (auto& frag : fragments) {
    auto canon = DecomposedGraph::canonical_cycle(frag);
    if (best.empty() || canon.size() < best.size() ||
        (canon.size() == best.size() && canon < best))
      best = std::move(canon);
  }
  if (best.empty())
    throw std::logic_error("solver: closed walk contained no simple cycle");
  return best;
}

inline void require_valid(const DecomposedGraph& dg, int k) {
  if (k < 0) throw std::invalid_argument("solver: chord budget is negative");
  if (dg.graph().vertex_count() == 0)
    throw std::invalid_argument("solver: empty graph");
  auto report = validate(dg);
  if (!report.empty()) throw InvariantError(std::move(report));
}

}  // namespace detail

/// Exact minimum length over simple cycles with at most k chords, for every
/// k = 0..k_max, sharing one per-edge product search. For every edge {u,v} a
/// shortest-path search runs from u to v in the graph minus that edge over
/// states (vertex, chords used); distance + 1 is a candidate cycle length.
/// Any optimal cycle yields such a path, and any closed walk found splits
/// into simple cycles at least one of which respects the budget and is no
/// longer, so the minimum over edges is exact. Ties go to the smallest edge
/// index, so results do not depend on `threads`.
inline std::vector<ChordCycleResult> min_chord_cycle_all_k(
    const DecomposedGraph& dg, int k_max, int threads = 1) {
  detail::require_valid(dg, k_max);
  const Graph& g = dg.graph();
  const int m = g.edge_count();
  constexpr int kInf = std::numeric_limits<int>::max();

  // Phase 1: per-edge candidate lengths for every budget cap.
  std::vector<std::vector<int>> candidate(m,
                                          std::vector<int>(k_max + 1, kInf));
  detail::run_workers(threads, m, [&](int ei) {
    int chord_cost = dg.is_chord_edge(ei) ? 1 : 0;
    int path_budget = k_max - chord_cost;
    if (path_budget < 0) return;
    detail::ProductSearch search(dg, ei, path_budget);
    search.run(g.edge(ei).a);
    for (int k = chord_cost; k <= k_max; ++k) {
      int d = search.best_to(g.edge(ei).b, k - chord_cost);
      if (d >= 0) candidate[ei][k] = d + 1;
    }
  });

  // Phase 2: deterministic reduction and witness extraction per budget.
  std::vector<ChordCycleResult> results;
  results.reserve(k_max + 1);
  for (int k = 0; k <= k_max; ++k) {
    int best_len = kInf, best_edge = -1;
    for (int ei = 0; ei < m; ++ei)
      if (candidate[ei][k] < best_len) {
        best_len = candidate[ei][k];
        best_edge = ei;
      }
    if (best_edge < 0)
      throw std::logic_error(
          "solver: no cycle within budget (impossible for a valid "
          "decomposition)");
    int chord_cost = dg.is_chord_edge(best_edge) ? 1 : 0;
    detail::ProductSearch search(dg, best_edge, k - chord_cost);
    search.run(g.edge(best_edge).a);
    std::vector<int> walk =
        search.path_to(g.edge(best_edge).b, k - chord_cost);
    std::vector<int> cycle =
        detail::best_cycle_in_closed_walk(walk, g.vertex_count());
    if (static_cast<int>(cycle.size()) != best_len)
      throw std::logic_error("solver: extracted witness length mismatch");
    ChordCycleResult r{best_len, std::move(cycle),
                       detail::count_chords_on_cycle(dg, cycle), k};
    r.chords_used = detail::count_chords_on_cycle(dg, r.witness);
    detail::check_witness(dg, r);
    if (k > 0 && r.length > results.back().length)
      throw std::logic_error("solver: lengths not non-increasing in k");
    results.push_back(std::move(r));
  }
  return results;
}

/// Exact minimum cycle length using at most k chords, with witness.
inline ChordCycleResult min_chord_cycle(const DecomposedGraph& dg, int k,
                                        int threads = 1) {
  return min_chord_cycle_all_k(dg, k, threads).back();
}

/// Independent oracle: exhaustively enumerates every simple cycle (rooted
/// depth-first enumeration, smallest vertex of the cycle as the root) and
/// filters by chord count. Exponential; refuses graphs above 20 vertices.
inline ChordCycleResult oracle_min_chord_cycle(const DecomposedGraph& dg,
                                               int k) {
  detail::require_valid(dg, k);
  const Graph& g = dg.graph();
  const int n = g.vertex_count();
  if (n > 20)
    throw std::invalid_argument("oracle_min_chord_cycle: size limit (20) exceeded");

  int best_len = std::numeric_limits<int>::max();
  std::vector<int> best_cycle;
  std::vector<int> path;
  std::vector<char> on_path(n, 0);
  int chords = 0;

  auto consider = [&](const std::vector<int>& cyc) {
    auto canon = DecomposedGraph::canonical_cycle(cyc);
    int len = static_cast<int>(canon.size());
    if (len < best_len || (len == best_len && canon < best_cycle)) {
      best_len = len;
      best_cycle = std::move(canon);
    }
  };

  std::function<void(int, int)> extend = [&](int root, int v) {
    for (const auto& arc : g.neighbors(v)) {
      int chord_cost = dg.is_chord_edge(arc.edge) ? 1 : 0;
      if (arc.to == root && path.size() >= 3 && path[1] < path.back() &&
          chords + chord_cost <= k)
        consider(path);
      if (arc.to <= root || on_path[arc.to]) continue;
      if (chords + chord_cost > k) continue;
      if (static_cast<int>(path.size()) >= best_len) continue;
      on_path[arc.to] = 1;
      path.push_back(arc.to);
      chords += chord_cost;
      extend(root, arc.to);
      chords -= chord_cost;
      path.pop_back();
      on_path[arc.to] = 0;
    }
  };

  for (int root = 0; root < n; ++root) {
    path.assign(1, root);
    on_path.assign(n, 0);
    on_path[root] = 1;
    chords = 0;
    extend(root, root);
  }
  if (best_cycle.empty())
    throw std::logic_error(
        "oracle: no cycle within budget (impossible for a valid "
        "decomposition)");
  ChordCycleResult r{best_len, std::move(best_cycle), 0, k};
  r.chords_used = detail::count_chords_on_cycle(dg, r.witness);
  detail::check_witness(dg, r);
  return r;
}

}  // namespace chordcycle

#endif  // CHORDCYCLE_SOLVER_HPP
