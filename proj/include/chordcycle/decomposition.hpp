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

#ifndef CHORDCYCLE_DECOMPOSITION_HPP
#define CHORDCYCLE_DECOMPOSITION_HPP

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "chordcycle/graph.hpp"

namespace chordcycle {

/// A graph together with an edge 2-coloring into a 2-factor (given as its
/// cycles) and the complementary chord set. Construction never fails on
/// semantic grounds; validate() reports every violated invariant instead.
class DecomposedGraph {
 public:
  DecomposedGraph() = default;

  /// Graph is derived as the union of factor and chord edges.
  DecomposedGraph(int n, std::vector<std::vector<int>> factor_cycles,
                  std::vector<Edge> chords)
      : factor_cycles_(std::move(factor_cycles)), chords_(std::move(chords)) {
    std::set<Edge> union_edges;
    for (const auto& cyc : factor_cycles_)
      for (std::size_t i = 0; i < cyc.size(); ++i)
        union_edges.emplace(cyc[i], cyc[(i + 1) % cyc.size()]);
    for (const Edge& e : chords_) union_edges.insert(e);
    graph_ = Graph(n, {union_edges.begin(), union_edges.end()});
    index_chords();
  }

  /// Explicit graph; used when the claimed decomposition may not match it.
  DecomposedGraph(Graph graph, std::vector<std::vector<int>> factor_cycles,
                  std::vector<Edge> chords)
      : graph_(std::move(graph)),
        factor_cycles_(std::move(factor_cycles)),
        chords_(std::move(chords)) {
    index_chords();
  }

  const Graph& graph() const { return graph_; }
  const std::vector<std::vector<int>>& factor_cycles() const {
    return factor_cycles_;
  }
  const std::vector<Edge>& chord_edges() const { return chords_; }

  bool is_chord_edge(int edge_index) const {
    return edge_index >= 0 &&
           edge_index < static_cast<int>(is_chord_.size()) &&
           is_chord_[edge_index];
  }
  bool is_chord(int u, int v) const {
    return is_chord_edge(graph_.edge_index(u, v));
  }

  int shortest_factor_cycle() const {
    int best = 0;
    for (const auto& cyc : factor_cycles_)
      if (best == 0 || static_cast<int>(cyc.size()) < best)
        best = static_cast<int>(cyc.size());
    return best;
  }

  /// Rotation/reflection-normalized factor cycles plus sorted chords; two
  /// decompositions are equal iff their canonical forms agree.
  DecomposedGraph canonical() const {
    std::vector<std::vector<int>> cycles;
    cycles.reserve(factor_cycles_.size());
    for (const auto& cyc : factor_cycles_) cycles.push_back(canonical_cycle(cyc));
    std::sort(cycles.begin(), cycles.end());
    std::vector<Edge> chords = chords_;
    std::sort(chords.begin(), chords.end());
    return DecomposedGraph(graph_, std::move(cycles), std::move(chords));
  }

  friend bool operator==(const DecomposedGraph& x, const DecomposedGraph& y) {
    DecomposedGraph cx = x.canonical();
    DecomposedGraph cy = y.canonical();
    return cx.graph_ == cy.graph_ && cx.factor_cycles_ == cy.factor_cycles_ &&
           cx.chords_ == cy.chords_;
  }

  static std::vector<int> canonical_cycle(const std::vector<int>& cyc) {
    if (cyc.empty()) return cyc;
    const std::size_t len = cyc.size();
    std::size_t start = 0;
    for (std::size_t i = 1; i < len; ++i)
      if (cyc[i] < cyc[start]) start = i;
    std::vector<int> fwd(len), rev(len);
    for (std::size_t i = 0; i < len; ++i) {
      fwd[i] = cyc[(start + i) % len];
      rev[i] = cyc[(start + len - i) % len];
    }
    return std::min(fwd, rev);
  }

 private:
  void index_chords() {
    is_chord_.assign(graph_.edge_count(), 0);
    for (const Edge& e : chords_) {
      int idx = graph_.edge_index(e.a, e.b);
      if (idx >= 0) is_chord_[idx] = 1;
    }
  }

  Graph graph_;
  std::vector<std::vector<int>> factor_cycles_;
  std::vector<Edge> chords_;
  std::vector<char> is_chord_;
};

namespace detail {

inline std::string edge_str(const Edge& e) {
  return "{" + std::to_string(e.a) + "," + std::to_string(e.b) + "}";
}

}  // namespace detail

/// Every violated invariant with the offending vertex or edge; an empty
/// report means the decomposition is valid.
inline std::vector<std::string> validate(const DecomposedGraph& dg) {
  std::vector<std::string> report;
  const Graph& g = dg.graph();
  const int n = g.vertex_count();

  int deg = 0;
  if (!g.is_regular(&deg)) {
    report.push_back("graph is not regular");
  } else if (n > 0 && deg < 3) {
    report.push_back("graph is " + std::to_string(deg) +
                     "-regular, expected degree >= 3");
  }

  // 2-factor: cycles of length >= 3 partitioning the vertex set.
  std::vector<int> cover(n, 0);
  for (const auto& cyc : dg.factor_cycles()) {
    if (cyc.size() < 3)
      report.push_back("factor cycle of length " + std::to_string(cyc.size()) +
                       ", expected >= 3");
    for (int v : cyc) {
      if (v < 0 || v >= n) {
        report.push_back("factor vertex " + std::to_string(v) +
                         " out of range");
        continue;
      }
      if (++cover[v] == 2)
        report.push_back("vertex " + std::to_string(v) +
                         " appears in more than one factor position");
    }
  }
  for (int v = 0; v < n; ++v)
    if (cover[v] == 0)
      report.push_back("vertex " + std::to_string(v) +
                       " not covered by the 2-factor");

  // Edge partition: factor and chord edges present, disjoint, union = E.
  std::set<Edge> factor_edges;
  for (const auto& cyc : dg.factor_cycles()) {
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      int u = cyc[i], v = cyc[(i + 1) % cyc.size()];
      if (u < 0 || u >= n || v < 0 || v >= n) continue;
      if (u == v) {
        report.push_back("factor cycle repeats vertex " + std::to_string(u));
        continue;
      }
      Edge e(u, v);
      if (!g.has_edge(e.a, e.b))
        report.push_back("factor edge " + detail::edge_str(e) +
                         " not in the graph");
      if (!factor_edges.insert(e).second)
        report.push_back("factor edge " + detail::edge_str(e) + " repeated");
    }
  }
  std::set<Edge> chord_set;
  std::vector<int> chord_count(n, 0);
  for (const Edge& e : dg.chord_edges()) {
    if (e.a < 0 || e.b >= n) {
      report.push_back("chord " + detail::edge_str(e) + " out of range");
      continue;
    }
    if (!g.has_edge(e.a, e.b))
      report.push_back("chord " + detail::edge_str(e) + " not in the graph");
    if (!chord_set.insert(e).second)
      report.push_back("chord " + detail::edge_str(e) + " repeated");
    if (factor_edges.count(e))
      report.push_back("edge " + detail::edge_str(e) +
                       " both factor and chord");
    chord_count[e.a]++;
    chord_count[e.b]++;
  }
  for (const Edge& e : g.edges())
    if (!factor_edges.count(e) && !chord_set.count(e))
      report.push_back("edge " + detail::edge_str(e) +
                       " neither factor nor chord");

  for (int v = 0; v < n; ++v) {
    int expected = g.degree(v) - 2;
    if (chord_count[v] != expected)
      report.push_back("vertex " + std::to_string(v) + " has " +
                       std::to_string(chord_count[v]) + " chords, expected " +
                       std::to_string(expected));
  }
  return report;
}

inline bool is_valid(const DecomposedGraph& dg) { return validate(dg).empty(); }

}  // namespace chordcycle

#endif  // CHORDCYCLE_DECOMPOSITION_HPP
