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

#ifndef CHORDCYCLE_ALGORITHMS_HPP
#define CHORDCYCLE_ALGORITHMS_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <queue>
#include <stdexcept>
#include <vector>

#include "chordcycle/graph.hpp"

namespace chordcycle {

/// Exact girth: BFS rooted at every vertex, minimum over detected cycles.
/// Returns nullopt for acyclic graphs (the explicit "no cycle" value).
inline std::optional<int> girth(const Graph& g) {
  const int n = g.vertex_count();
  int best = -1;
  std::vector<int> dist(n), parent_edge(n);
  for (int root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(parent_edge.begin(), parent_edge.end(), -1);
    std::queue<int> q;
    dist[root] = 0;
    q.push(root);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      // Once v is deeper than half the best cycle, nothing shorter can
      // still be found from this root.
      if (best >= 0 && 2 * dist[v] >= best) break;
      for (const auto& arc : g.neighbors(v)) {
        if (arc.edge == parent_edge[v]) continue;
        if (dist[arc.to] < 0) {
          dist[arc.to] = dist[v] + 1;
          parent_edge[arc.to] = arc.edge;
          q.push(arc.to);
        } else {
          int len = dist[v] + dist[arc.to] + 1;
          if (best < 0 || len < best) best = len;
        }
      }
    }
  }
  if (best < 0) return std::nullopt;
  return best;
}

namespace detail {

inline void bridge_dfs(const Graph& g, int v, int parent_edge,
                       int& timer, std::vector<int>& disc,
                       std::vector<int>& low, std::vector<int>& out) {
  disc[v] = low[v] = timer++;
  for (const auto& arc : g.neighbors(v)) {
    if (arc.edge == parent_edge) continue;
    if (disc[arc.to] >= 0) {
      low[v] = std::min(low[v], disc[arc.to]);
    } else {
      bridge_dfs(g, arc.to, arc.edge, timer, disc, low, out);
      low[v] = std::min(low[v], low[arc.to]);
      if (low[arc.to] > disc[v]) out.push_back(arc.edge);
    }
  }
}

}  // namespace detail

/// Cut edges, by one DFS with low-point values. Sorted by edge index.
inline std::vector<Edge> find_bridges(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> disc(n, -1), low(n, -1), found;
  int timer = 0;
  for (int v = 0; v < n; ++v)
    if (disc[v] < 0) detail::bridge_dfs(g, v, -1, timer, disc, low, found);
  std::sort(found.begin(), found.end());
  std::vector<Edge> out;
  out.reserve(found.size());
  for (int e : found) out.push_back(g.edge(e));
  return out;
}

namespace detail {

/// Per-vertex invariant used to cut the isomorphism search: degree plus
/// the full histogram of BFS distances to all other vertices.
inline std::vector<int> distance_profile(const Graph& g, int root) {
  const int n = g.vertex_count();
  std::vector<int> dist(n, -1);
  std::queue<int> q;
  dist[root] = 0;
  q.push(root);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (const auto& arc : g.neighbors(v))
      if (dist[arc.to] < 0) {
        dist[arc.to] = dist[v] + 1;
        q.push(arc.to);
      }
  }
  std::vector<int> profile(n + 2, 0);
  profile[0] = g.degree(root);
  for (int d : dist) profile[1 + (d < 0 ? n : d)]++;
  return profile;
}

struct IsoState {
  const Graph& g1;
  const Graph& g2;
  std::vector<int> map12;   // g1 vertex -> g2 vertex or -1
  std::vector<int> map21;   // inverse
  std::vector<int> order;   // assignment order of g1 vertices
  const std::vector<int>& cls1;
  const std::vector<int>& cls2;

  bool extend(std::size_t pos) {
    if (pos == order.size()) return true;
    int v = order[pos];
    for (int w = 0; w < g2.vertex_count(); ++w) {
      if (map21[w] >= 0 || cls2[w] != cls1[v]) continue;
      bool ok = true;
      for (const auto& arc : g1.neighbors(v)) {
        int m = map12[arc.to];
        if (m >= 0 && !g2.has_edge(w, m)) {
          ok = false;
          break;
        }
      }
      if (ok) {
        // Mapped neighbors of w must be neighbors of v too.
        for (const auto& arc : g2.neighbors(w)) {
          int m = map21[arc.to];
          if (m >= 0 && !g1.has_edge(v, m)) {
            ok = false;
            break;
          }
        }
      }
      if (!ok) continue;
      map12[v] = w;
      map21[w] = v;
      if (extend(pos + 1)) return true;
      map12[v] = -1;
      map21[w] = -1;
    }
    return false;
  }
};

}  // namespace detail

/// Backtracking isomorphism test with degree/distance-profile pruning.
/// Intended for small certified instances; throws above 64 vertices.
inline bool is_isomorphic(const Graph& g1, const Graph& g2) {
  if (g1.vertex_count() > 64 || g2.vertex_count() > 64)
    throw std::invalid_argument("is_isomorphic: size limit (64) exceeded");
  const int n = g1.vertex_count();
  if (n != g2.vertex_count() || g1.edge_count() != g2.edge_count())
    return false;
  if (n == 0) return true;

  // Partition both vertex sets into classes by distance profile.
  std::map<std::vector<int>, int> class_ids;
  std::vector<int> cls1(n), cls2(n);
  std::map<int, int> count1, count2;
  for (int v = 0; v < n; ++v) {
    auto p = detail::distance_profile(g1, v);
    auto [it, inserted] =
        class_ids.emplace(std::move(p), static_cast<int>(class_ids.size()));
    cls1[v] = it->second;
    count1[cls1[v]]++;
  }
  for (int v = 0; v < n; ++v) {
    auto p = detail::distance_profile(g2, v);
    auto it = class_ids.find(p);
    if (it == class_ids.end()) return false;
    cls2[v] = it->second;
    count2[cls2[v]]++;
  }
  if (count1 != count2) return false;

  // Assign vertices connectivity-first so adjacency constraints bind early.
  std::vector<int> order;
  std::vector<char> placed(n, 0);
  std::vector<int> attached(n, 0);
  for (int step = 0; step < n; ++step) {
    int pick = -1;
    for (int v = 0; v < n; ++v) {
      if (placed[v]) continue;
      if (pick < 0 || attached[v] > attached[pick]) pick = v;
    }
    placed[pick] = 1;
    order.push_back(pick);
    for (const auto& arc : g1.neighbors(pick)) attached[arc.to]++;
  }

  detail::IsoState state{g1, g2, std::vector<int>(n, -1),
                         std::vector<int>(n, -1), order, cls1, cls2};
  return state.extend(0);
}

}  // namespace chordcycle

#endif  // CHORDCYCLE_ALGORITHMS_HPP
