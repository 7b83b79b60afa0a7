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


#include <algorithm>
#include <boost/pending/disjoint_sets.hpp>
#include <map>

#include "kplanar/core.hpp"
#include "kplanar/error.hpp"

namespace kplanar {

namespace {

// Rebuilds p without the doomed edges and nodes. Crossings losing a passage
// are dissolved; components are re-anchored from the old cell structure.
Planarization rebuild(const Planarization& p, std::vector<bool> dead_edge,
                      const std::vector<bool>& dead_node) {
  require_valid(p);
  const int D = p.num_darts(), N = p.num_nodes();
  const CellMap old = cells(p);
  for (DartId d = 0; d < D; ++d) {
    if (dead_node[p.darts[d].node]) dead_edge[p.darts[d].edge] = true;
  }
  auto alive = [&](DartId d) { return !dead_edge[p.darts[d].edge]; };

  std::vector<int> alive_deg(N, 0);
  for (DartId d = 0; d < D; ++d) {
    if (alive(d)) ++alive_deg[p.darts[d].node];
  }
  std::vector<NodeId> new_node(N, kNone);
  Planarization q;
  for (NodeId v = 0; v < N; ++v) {
    const Node& node = p.nodes[v];
    if (dead_node[v]) continue;
    if (node.kind == NodeKind::Crossing) {
      if (alive_deg[v] != 4) continue;
      new_node[v] = q.add_node(NodeKind::Crossing, node.label);
    } else {
      new_node[v] = q.add_node(
          alive_deg[v] == 0 ? NodeKind::Isolated : node.kind, node.label);
    }
  }
  std::vector<EdgeId> new_edge(p.num_edges(), kNone);
  for (EdgeId e = 0; e < p.num_edges(); ++e) {
    if (!dead_edge[e]) new_edge[e] = q.add_edge(p.edges[e]);
  }

  // Split each surviving trace at surviving nodes.
  std::vector<DartId> to_new(D, kNone);
  for (const EdgeTrace& t : trace_edges(p)) {
    if (dead_edge[t.edge]) continue;
    size_t i = 0;
    while (i < t.segments.size()) {
      const DartId first = t.segments[i];
      size_t j = i;
      while (new_node[p.darts[p.twin(t.segments[j])].node] == kNone) ++j;
      const DartId last = t.segments[j];
      const DartId nd =
          q.add_segment(new_node[p.darts[first].node],
                        new_node[p.darts[p.twin(last)].node], new_edge[t.edge]);
      for (size_t s = i; s <= j; ++s) {
        to_new[t.segments[s]] = nd;
        to_new[p.twin(t.segments[s])] = nd + 1;
      }
      i = j + 1;
    }
  }
  for (const auto& r : rotations(p)) {
    if (r.empty() || new_node[p.darts[r[0]].node] == kNone) continue;
    std::vector<DartId> ccw;
    for (DartId d : r) {
      if (alive(d)) ccw.push_back(to_new[d]);
    }
    if (!ccw.empty()) q.set_rotation(ccw);
  }

  // New components.
  const int NN = q.num_nodes();
  boost::disjoint_sets_with_storage<> cds(NN);
  for (const Dart& d : q.darts) cds.union_set(d.node, q.darts[d.twin].node);
  std::vector<int> comp(NN);
  std::map<int, int> comp_id;
  for (NodeId v = 0; v < NN; ++v) {
    const int r = cds.find_set(v);
    comp_id.emplace(r, static_cast<int>(comp_id.size()));
    comp[v] = comp_id[r];
  }
  const int C = static_cast<int>(comp_id.size());
  if (C == 0) return q;
  std::vector<int> darts_in(C, 0);
  for (const Dart& d : q.darts) ++darts_in[comp[d.node]];
  int root = 0;
  for (int c = 1; c < C; ++c) {
    if (darts_in[c] > darts_in[root]) root = c;
  }
  if (C == 1) {
    if (p.outer != kNone && alive(p.outer)) q.outer = to_new[p.outer];
    return q;
  }
  const FaceMap nf = face_map(q);

  // Old faces grouped per component K: old faces joined across segments not
  // in K and across old nesting, then labeled by the K-face they fall in.
  const int OF = static_cast<int>(old.faces.faces.size());
  auto in_comp = [&](DartId d, int k) {
    return alive(d) && comp[q.darts[to_new[d]].node] == k;
  };
  std::vector<std::vector<int>> face_label(C);
  for (int k = 0; k < C; ++k) {
    if (darts_in[k] == 0) continue;
    boost::disjoint_sets_with_storage<> fds(std::max(OF, 1));
    for (DartId d = 0; d < D; ++d) {
      if (!in_comp(d, k)) {
        fds.union_set(old.faces.face_of_dart[d],
                      old.faces.face_of_dart[p.twin(d)]);
      }
    }
    std::vector<int> first_of_cell(old.cells.size(), kNone);
    for (int f = 0; f < OF; ++f) {
      int& x = first_of_cell[old.cell_of_face[f]];
      if (x == kNone) x = f;
      fds.union_set(f, x);
    }
    std::vector<int> rep_label(std::max(OF, 1), kNone);
    for (DartId d = 0; d < D; ++d) {
      if (in_comp(d, k)) {
        rep_label[fds.find_set(old.faces.face_of_dart[d])] =
            nf.face_of_dart[to_new[d]];
      }
    }
    face_label[k].assign(OF, kNone);
    for (int f = 0; f < OF; ++f) face_label[k][f] = rep_label[fds.find_set(f)];
  }

  // Old face standing in for each new component and each new isolated node.
  std::vector<int> probe(C, kNone);
  for (DartId d = 0; d < D; ++d) {
    if (alive(d) && probe[comp[q.darts[to_new[d]].node]] == kNone) {
      probe[comp[q.darts[to_new[d]].node]] = old.faces.face_of_dart[d];
    }
  }
  for (NodeId v = 0; v < N; ++v) {
    if (new_node[v] == kNone) continue;
    const int c = comp[new_node[v]];
    if (probe[c] != kNone) continue;
    for (DartId d = 0; d < D && probe[c] == kNone; ++d) {
      if (p.darts[d].node == v) probe[c] = old.faces.face_of_dart[d];
    }
    if (probe[c] == kNone && old.cell_of_node[v] != kNone) {
      const Cell& cell = old.cells[old.cell_of_node[v]];
      if (!cell.boundary_walks.empty()) {
        probe[c] = old.faces.face_of_dart[cell.boundary_walks[0][0]];
      }
    }
  }
  auto location = [&](int k, int x) {
    return probe[x] == kNone ? kNone : face_label[k][probe[x]];
  };

  // Component k contains x when x is not in k's face toward the root.
  auto contains = [&](int k, int x) {
    if (darts_in[k] == 0 || k == x) return false;
    if (k == root) return true;
    return location(k, x) != location(k, root);
  };
  std::vector<int> depth(C, 0);
  for (int k = 0; k < C; ++k) {
    for (int j = 0; j < C; ++j) {
      if (j != root && contains(j, k)) ++depth[k];
    }
  }
  std::vector<NodeId> some_node(C, kNone);
  for (NodeId v = NN - 1; v >= 0; --v) some_node[comp[v]] = v;
  auto dart_in_face = [&](int face) { return nf.faces[face][0]; };
  for (int x = 0; x < C; ++x) {
    if (x == root) continue;
    int parent = kNone;
    for (int k = 0; k < C; ++k) {
      if (contains(k, x) && (parent == kNone || depth[k] > depth[parent])) {
        parent = k;
      }
    }
    Anchor a;
    if (darts_in[x] == 0) {
      a.node = some_node[x];
    } else {
      const int parent_probe = parent == kNone ? root : parent;
      a.dart = dart_in_face(location(x, parent_probe));
    }
    a.host = parent == kNone ? kOuter : dart_in_face(location(parent, x));
    q.anchors.push_back(a);
  }
  if (darts_in[root] > 0) {
    if (p.outer != kNone && alive(p.outer) &&
        comp[q.darts[to_new[p.outer]].node] == root) {
      q.outer = to_new[p.outer];
    }
  }
  // Components with darts hosted by the outer face need an outer dart.
  for (const Anchor& a : q.anchors) {
    if (a.host == kOuter && darts_in[root] > 0 && q.outer == kNone) {
      throw ValidationError("re-anchoring lost the outer face");
    }
  }
  return q;
}

}  // namespace

Planarization remove_edges(const Planarization& p,
                           const std::vector<EdgeId>& doomed) {
  std::vector<bool> dead_edge(p.num_edges(), false);
  for (EdgeId e : doomed) dead_edge.at(e) = true;
  return rebuild(p, dead_edge, std::vector<bool>(p.num_nodes(), false));
}

Planarization remove_vertex(const Planarization& p, NodeId v) {
  if (v < 0 || v >= p.num_nodes() || !is_vertex(p.nodes[v].kind)) {
    throw InvalidArgument("not a vertex: " + std::to_string(v));
  }
  std::vector<bool> dead_node(p.num_nodes(), false);
  dead_node[v] = true;
  return rebuild(p, std::vector<bool>(p.num_edges(), false), dead_node);
}

Planarization remove_elements(const Planarization& p,
                              const std::vector<EdgeId>& edges,
                              const std::vector<NodeId>& nodes) {
  std::vector<bool> dead_edge(p.num_edges(), false);
  std::vector<bool> dead_node(p.num_nodes(), false);
  for (EdgeId e : edges) dead_edge.at(e) = true;
  for (NodeId v : nodes) {
    if (!is_vertex(p.nodes.at(v).kind)) throw InvalidArgument("not a vertex: " + std::to_string(v));
    dead_node[v] = true;
  }
  return rebuild(p, dead_edge, dead_node);
}

std::vector<Planarization> essential_blocks(const Planarization& p) {
  if (p.num_edges() == 0) return {};
  const ConnectivityReport cr = components_and_cuts(p);
  if (cr.essentially_2_connected) return {p};
  const int N = p.num_nodes();
  NodeId cut = kNone;
  boost::disjoint_sets_with_storage<> ds(N);
  if (cr.components_with_edges <= 1) cut = cr.drawing_cut_vertices.front();
  for (const Dart& d : p.darts) {
    const NodeId a = d.node, b = p.darts[d.twin].node;
    if (a != cut && b != cut) ds.union_set(a, b);
  }
  // Every edge and degree-0 vertex goes to the part of one of its nodes.
  std::vector<int> part_of_edge(p.num_edges(), kNone);
  for (const Dart& d : p.darts) {
    if (d.node != cut) part_of_edge[d.edge] = ds.find_set(d.node);
  }
  const CellMap cm = cells(p);
  const std::vector<int> deg = degrees(p);
  std::vector<int> part_of_node(N, kNone);
  for (NodeId v = 0; v < N; ++v) {
    if (!is_vertex(p.nodes[v].kind) || v == cut) continue;
    if (deg[v] > 0) {
      part_of_node[v] = ds.find_set(v);
      continue;
    }
    const Cell& c = cm.cells[cm.cell_of_node[v]];
    DartId low = kNone;
    for (const auto& walk : c.boundary_walks) {
      for (DartId d : walk) low = low == kNone ? d : std::min(low, d);
    }
    part_of_node[v] = low == kNone ? part_of_edge[0] : part_of_edge[p.darts[low].edge];
  }
  std::vector<int> parts(part_of_edge.begin(), part_of_edge.end());
  std::sort(parts.begin(), parts.end());
  parts.erase(std::unique(parts.begin(), parts.end()), parts.end());
  std::vector<Planarization> out;
  for (int part : parts) {
    std::vector<EdgeId> edges;
    std::vector<NodeId> nodes;
    for (EdgeId e = 0; e < p.num_edges(); ++e) {
      if (part_of_edge[e] != part) edges.push_back(e);
    }
    for (NodeId v = 0; v < N; ++v) {
      if (part_of_node[v] != kNone && part_of_node[v] != part) nodes.push_back(v);
    }
    for (Planarization& b : essential_blocks(remove_elements(p, edges, nodes))) {
      out.push_back(std::move(b));
    }
  }
  return out;
}

}  // namespace kplanar
