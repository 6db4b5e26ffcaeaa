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

#ifndef CHORDCYCLE_MATCHING_HPP
#define CHORDCYCLE_MATCHING_HPP

#include <numeric>
#include <queue>
#include <vector>

#include "chordcycle/graph.hpp"

namespace chordcycle {
namespace detail {

/// Edmonds' augmenting-path search with blossom contraction, the classic
/// O(V^3) array formulation. Roots are tried in increasing vertex order,
/// so the returned matching is deterministic, not merely maximum.
class BlossomMatcher {
 public:
  explicit BlossomMatcher(const Graph& g)
      : g_(g),
        n_(g.vertex_count()),
        match_(n_, -1),
        parent_(n_),
        base_(n_),
        used_(n_),
        blossom_(n_) {}

  std::vector<int> run() {
    for (int v = 0; v < n_; ++v) {
      if (match_[v] != -1) continue;
      int leaf = find_augmenting_path(v);
      while (leaf != -1) {  // flip matched/unmatched along the path
        int pv = parent_[leaf];
        int ppv = match_[pv];
        match_[leaf] = pv;
        match_[pv] = leaf;
        leaf = ppv;
      }
    }
    return match_;
  }

 private:
  int lowest_common_base(int a, int b) {
    std::vector<char> mark(n_, 0);
    for (;;) {
      a = base_[a];
      mark[a] = 1;
      if (match_[a] == -1) break;
      a = parent_[match_[a]];
    }
    for (;;) {
      b = base_[b];
      if (mark[b]) return b;
      b = parent_[match_[b]];
    }
  }

  void mark_blossom_path(int v, int b, int child) {
    while (base_[v] != b) {
      blossom_[base_[v]] = 1;
      blossom_[base_[match_[v]]] = 1;
      parent_[v] = child;
      child = match_[v];
      v = parent_[match_[v]];
    }
  }

  int find_augmenting_path(int root) {
    std::fill(used_.begin(), used_.end(), 0);
    std::fill(parent_.begin(), parent_.end(), -1);
    std::iota(base_.begin(), base_.end(), 0);
    used_[root] = 1;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (const auto& arc : g_.neighbors(v)) {
        int to = arc.to;
        if (base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] != -1 && parent_[match_[to]] != -1)) {
          // Odd cycle: contract the blossom down to its common base.
          int cur_base = lowest_common_base(v, to);
          std::fill(blossom_.begin(), blossom_.end(), 0);
          mark_blossom_path(v, cur_base, to);
          mark_blossom_path(to, cur_base, v);
          for (int i = 0; i < n_; ++i) {
            if (!blossom_[base_[i]]) continue;
            base_[i] = cur_base;
            if (!used_[i]) {
              used_[i] = 1;
              q.push(i);
            }
          }
        } else if (parent_[to] == -1) {
          parent_[to] = v;
          if (match_[to] == -1) return to;  // augmenting path found
          used_[match_[to]] = 1;
          q.push(match_[to]);
        }
      }
    }
    return -1;
  }

  const Graph& g_;
  int n_;
  std::vector<int> match_, parent_, base_;
  std::vector<char> used_, blossom_;
};

}  // namespace detail

/// Maximum-cardinality matching as a list of disjoint edges, sorted.
inline std::vector<Edge> maximum_matching(const Graph& g) {
  std::vector<int> mate = detail::BlossomMatcher(g).run();
  std::vector<Edge> out;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (mate[v] > v) out.emplace_back(v, mate[v]);
  return out;
}

}  // namespace chordcycle

#endif  // CHORDCYCLE_MATCHING_HPP
