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

#ifndef CHORDCYCLE_GRAPH_HPP
#define CHORDCYCLE_GRAPH_HPP

#include <algorithm>
#include <compare>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace chordcycle {

/// Unordered pair of distinct vertices, normalized so a < b.
struct Edge {
  int a = -1;
  int b = -1;

  Edge() = default;
  Edge(int u, int v) : a(std::min(u, v)), b(std::max(u, v)) {}

  int other(int v) const { return v == a ? b : a; }
  bool touches(int v) const { return v == a || v == b; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..n-1. Immutable after
/// construction; the edge list is sorted and deduplication is rejected
/// rather than silent, so edge indices are canonical.
class Graph {
 public:
  struct Arc {
    int to;    // neighbor vertex
    int edge;  // index into edges()
  };

  Graph() = default;

  Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n < 0) throw std::invalid_argument("vertex count must be >= 0");
    std::sort(edges_.begin(), edges_.end());
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      const Edge& e = edges_[i];
      if (e.a == e.b)
        throw std::invalid_argument("self-loop at vertex " +
                                    std::to_string(e.a));
      if (e.a < 0 || e.b >= n)
        throw std::invalid_argument("edge {" + std::to_string(e.a) + "," +
                                    std::to_string(e.b) +
                                    "} out of vertex range");
      if (i > 0 && edges_[i - 1] == e)
        throw std::invalid_argument("parallel edge {" + std::to_string(e.a) +
                                    "," + std::to_string(e.b) + "}");
    }
    adj_.assign(n_, {});
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      adj_[edges_[i].a].push_back({edges_[i].b, static_cast<int>(i)});
      adj_[edges_[i].b].push_back({edges_[i].a, static_cast<int>(i)});
    }
    for (auto& list : adj_)
      std::sort(list.begin(), list.end(),
                [](const Arc& x, const Arc& y) { return x.to < y.to; });
  }

  static Graph from_pairs(int n, const std::vector<std::pair<int, int>>& ps) {
    std::vector<Edge> es;
    es.reserve(ps.size());
    for (auto [u, v] : ps) es.emplace_back(u, v);
    return Graph(n, std::move(es));
  }

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int i) const { return edges_[i]; }
  const std::vector<Arc>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }

  /// Index of {u,v} in edges(), or -1 if the edge is absent.
  int edge_index(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return -1;
    const auto& list = adj_[u];
    auto it = std::lower_bound(
        list.begin(), list.end(), v,
        [](const Arc& a, int val) { return a.to < val; });
    if (it != list.end() && it->to == v) return it->edge;
    return -1;
  }

  bool has_edge(int u, int v) const { return edge_index(u, v) >= 0; }

  /// True iff all degrees equal; writes the common degree if asked.
  bool is_regular(int* degree_out = nullptr) const {
    int d = n_ > 0 ? degree(0) : 0;
    for (int v = 1; v < n_; ++v)
      if (degree(v) != d) return false;
    if (degree_out) *degree_out = d;
    return true;
  }

  bool is_cubic() const {
    int d = 0;
    return n_ > 0 && is_regular(&d) && d == 3;
  }

  friend bool operator==(const Graph& x, const Graph& y) {
    return x.n_ == y.n_ && x.edges_ == y.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;            // sorted, no duplicates
  std::vector<std::vector<Arc>> adj_;  // sorted by neighbor
};

/// True iff one traversal reaches all vertices (vacuously true for n <= 1).
inline bool is_connected(const Graph& g) {
  const int n = g.vertex_count();
  if (n <= 1) return true;
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (const auto& arc : g.neighbors(v)) {
      if (!seen[arc.to]) {
        seen[arc.to] = 1;
        ++reached;
        stack.push_back(arc.to);
      }
    }
  }
  return reached == n;
}

}  // namespace chordcycle

#endif  // CHORDCYCLE_GRAPH_HPP
