// Copyright 2026 The kplanar Authors
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


#pragma once

// Independent recomputations used as test oracles. They only read the raw
// arrays of a planarization and share no code with the library.

#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "kplanar/planarization.hpp"

namespace kplanar::oracle {

inline int find(std::vector<int>& up, int x) {
  while (up[x] != x) x = up[x] = up[up[x]];
  return x;
}

// Components of the planarization as a plain graph.
inline int components(const Planarization& p) {
  std::vector<int> up(p.num_nodes());
  std::iota(up.begin(), up.end(), 0);
  for (const Dart& d : p.darts) up[find(up, d.node)] = find(up, p.darts[d.twin].node);
  std::set<int> roots;
  for (int v = 0; v < p.num_nodes(); ++v) roots.insert(find(up, v));
  return static_cast<int>(roots.size());
}

// Cells from Euler's formula V - E + F = 1 + C, with F counted as cells of
// the whole plane.
inline int euler_cells(const Planarization& p) {
  return 1 + components(p) - p.num_nodes() + p.num_darts() / 2;
}

// Face orbits by brute force: the face after d is prev(twin(d)), where prev
// inverts the rotation.
inline int face_orbits(const Planarization& p) {
  const int D = p.num_darts();
  std::vector<int> prev(D);
  for (int d = 0; d < D; ++d) prev[p.darts[d].next] = d;
  std::vector<bool> seen(D, false);
  int faces = 0;
  for (int d = 0; d < D; ++d) {
    if (seen[d]) continue;
    ++faces;
    for (int x = d; !seen[x]; x = prev[p.darts[x].twin]) seen[x] = true;
  }
  return faces;
}

inline std::vector<int> degree(const Planarization& p) {
  std::vector<int> deg(p.num_nodes(), 0);
  for (const Dart& d : p.darts) ++deg[d.node];
  return deg;
}

inline int count_kind(const Planarization& p, NodeKind k) {
  int n = 0;
  for (const Node& v : p.nodes) n += v.kind == k;
  return n;
}

// Crossing count per edge: every dart of e ending at a crossing node is one
// traversal of that node, and each traversal is seen from two darts.
inline std::vector<int> crossings_per_edge(const Planarization& p) {
  std::vector<int> c(p.num_edges(), 0);
  for (const Dart& d : p.darts) {
    if (p.nodes[d.node].kind == NodeKind::Crossing) ++c[d.edge];
  }
  for (int& x : c) x /= 2;
  return c;
}

// Vertices (not crossings) of degree 0.
inline int degree0(const Planarization& p) {
  const std::vector<int> deg = degree(p);
  int n = 0;
  for (int v = 0; v < p.num_nodes(); ++v) {
    n += p.nodes[v].kind != NodeKind::Crossing && deg[v] == 0;
  }
  return n;
}

}  // namespace kplanar::oracle
