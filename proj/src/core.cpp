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


#include "kplanar/core.hpp"

#include <algorithm>
#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/biconnected_components.hpp>
#include <boost/pending/disjoint_sets.hpp>
#include <set>
#include <sstream>

#include "kplanar/error.hpp"

namespace kplanar {

namespace {

std::vector<int> node_components(const Planarization& p) {
  boost::disjoint_sets_with_storage<> ds(p.num_nodes());
  for (const Dart& d : p.darts) ds.union_set(d.node, p.darts[d.twin].node);
  std::vector<int> comp(p.num_nodes(), kNone);
  std::vector<int> id_of_rep(p.num_nodes(), kNone);
  int next = 0;
  for (NodeId v = 0; v < p.num_nodes(); ++v) {
    const int r = ds.find_set(v);
    if (id_of_rep[r] == kNone) id_of_rep[r] = next++;
    comp[v] = id_of_rep[r];
  }
  return comp;
}

// Component placed by each anchor, or kNone when the anchor is malformed.
int anchored_component(const Planarization& p, const Anchor& a,
                       const std::vector<int>& comp) {
  if (a.node != kNone) {
    return a.node >= 0 && a.node < p.num_nodes() ? comp[a.node] : kNone;
  }
  if (a.dart >= 0 && a.dart < p.num_darts()) return comp[p.darts[a.dart].node];
  return kNone;
}

std::vector<NodeId> articulation(int n,
                                 const std::set<std::pair<int, int>>& edges) {
  using Graph =
      boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  Graph g(n);
  for (auto [a, b] : edges) boost::add_edge(a, b, g);
  std::vector<Graph::vertex_descriptor> out;
  boost::articulation_points(g, std::back_inserter(out));
  std::vector<NodeId> res(out.begin(), out.end());
  std::sort(res.begin(), res.end());
  res.erase(std::unique(res.begin(), res.end()), res.end());
  return res;
}

}  // namespace

std::string ValidationReport::summary() const {
  std::ostringstream out;
  for (size_t i = 0; i < violations.size() && i < 8; ++i) {
    const Violation& v = violations[i];
    if (i) out << "; ";
    out << v.what;
    if (v.node != kNone) out << " (node " << v.node << ")";
    if (v.dart != kNone) out << " (dart " << v.dart << ")";
    if (v.edge != kNone) out << " (edge " << v.edge << ")";
  }
  if (violations.size() > 8) out << "; ...";
  return out.str();
}

ValidationReport validate(const Planarization& p) {
  ValidationReport r;
  auto add = [&](std::string what, DartId d = kNone, NodeId v = kNone,
                 EdgeId e = kNone) {
    r.violations.push_back({std::move(what), d, v, e});
  };
  const int D = p.num_darts(), N = p.num_nodes(), M = p.num_edges();

  for (DartId d = 0; d < D; ++d) {
    const Dart& x = p.darts[d];
    if (x.node < 0 || x.node >= N || x.twin < 0 || x.twin >= D ||
        x.next < 0 || x.next >= D || x.edge < 0 || x.edge >= M) {
      add("dart field out of range", d);
    }
  }
  if (!r.ok()) return r;

  for (DartId d = 0; d < D; ++d) {
    const DartId t = p.twin(d);
    if (t == d) {
      add("twin has a fixed point", d);
    } else if (p.twin(t) != d) {
      add("twin is not an involution", d);
    } else if (p.darts[t].edge != p.darts[d].edge) {
      add("segment darts carry different edges", d);
    }
  }
  std::vector<int> indeg(D, 0);
  for (DartId d = 0; d < D; ++d) {
    ++indeg[p.next(d)];
    if (p.darts[p.next(d)].node != p.darts[d].node) {
      add("rotation leaves its node", d);
    }
  }
  for (DartId d = 0; d < D; ++d) {
    if (indeg[d] != 1) add("rotation is not a permutation", d);
  }
  if (!r.ok()) return r;

  const std::vector<int> deg = degrees(p);
  {
    std::vector<bool> seen(N, false);
    for (DartId d = 0; d < D; ++d) {
      const NodeId v = p.darts[d].node;
      if (seen[v]) continue;
      seen[v] = true;
      int len = 0;
      DartId x = d;
      do {
        ++len;
        x = p.next(x);
      } while (x != d);
      if (len != deg[v]) add("several rotation cycles at one node", d, v);
    }
  }
  if (!r.ok()) return r;

  const auto rot = rotations(p);
  for (NodeId v = 0; v < N; ++v) {
    const NodeKind kind = p.nodes[v].kind;
    if (kind == NodeKind::Crossing && deg[v] != 4) {
      add("crossing degree != 4", kNone, v);
    } else if (kind == NodeKind::Isolated && deg[v] != 0) {
      add("isolated vertex has darts", kNone, v);
    } else if (kind == NodeKind::Crossing) {
      const auto& q = rot[v];
      if (p.darts[q[0]].edge != p.darts[q[2]].edge ||
          p.darts[q[1]].edge != p.darts[q[3]].edge) {
        add("improper crossing", q[0], v);
      }
    }
  }
  if (!r.ok()) return r;

  // Edge traces.
  std::vector<bool> covered(D, false);
  std::vector<int> traces_of_edge(M, 0);
  for (DartId d = 0; d < D; ++d) {
    if (covered[d] || p.nodes[p.darts[d].node].kind != NodeKind::Real) continue;
    const EdgeId e = p.darts[d].edge;
    ++traces_of_edge[e];
    DartId x = d;
    bool broken = false;
    for (int steps = 0;; ++steps) {
      if (steps > D) {
        broken = true;
        break;
      }
      covered[x] = covered[p.twin(x)] = true;
      if (p.darts[x].edge != e) add("edge label changes along a trace", x);
      const NodeId w = p.darts[p.twin(x)].node;
      if (p.nodes[w].kind != NodeKind::Crossing) {
        if (w == p.darts[d].node) add("loop edge", d, w, e);
        break;
      }
      x = p.next(p.next(p.twin(x)));
    }
    if (broken) add("trace does not terminate", d, kNone, e);
  }
  for (DartId d = 0; d < D; ++d) {
    if (!covered[d]) {
      add("segment on a closed curve without endpoints", d);
      covered[d] = covered[p.twin(d)] = true;
    }
  }
  for (EdgeId e = 0; e < M; ++e) {
    if (traces_of_edge[e] == 0) add("edge without segments", kNone, kNone, e);
    if (traces_of_edge[e] > 1) add("edge label on several traces", kNone, kNone, e);
  }

  // Planarity of each component.
  const std::vector<int> comp = node_components(p);
  const int C = N == 0 ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
  {
    std::vector<long> vc(C, 0), dc(C, 0), fc(C, 0);
    for (NodeId v = 0; v < N; ++v) ++vc[comp[v]];
    for (DartId d = 0; d < D; ++d) ++dc[comp[p.darts[d].node]];
    const FaceMap fm = face_map(p);
    for (const auto& f : fm.faces) ++fc[comp[p.darts[f[0]].node]];
    for (int c = 0; c < C; ++c) {
      if (dc[c] > 0 && vc[c] - dc[c] / 2 + fc[c] != 2) {
        add("component is not planar", kNone, kNone);
      }
    }
  }

  // Anchors.
  std::vector<int> anchor_of(C, kNone);
  for (int i = 0; i < static_cast<int>(p.anchors.size()); ++i) {
    const Anchor& a = p.anchors[i];
    if (a.node != kNone && a.dart != kNone) {
      add("anchor names both a node and a dart", a.dart, a.node);
      continue;
    }
    const int c = anchored_component(p, a, comp);
    if (c == kNone) {
      add("anchor refers to nothing", a.dart, a.node);
      continue;
    }
    if (a.node != kNone && deg[a.node] != 0) {
      add("node anchor on a node with darts", kNone, a.node);
    }
    if (a.host != kOuter && (a.host < 0 || a.host >= D)) {
      add("anchor host out of range", a.host);
      continue;
    }
    if (a.host != kOuter && comp[p.darts[a.host].node] == c) {
      add("anchor hosted by its own component", a.host);
    }
    if (anchor_of[c] != kNone) add("component anchored twice", a.dart, a.node);
    anchor_of[c] = i;
  }
  int root = kNone, unanchored = 0;
  for (int c = 0; c < C; ++c) {
    if (anchor_of[c] == kNone) {
      ++unanchored;
      if (root == kNone) root = c;
    }
  }
  if (C > 0 && unanchored != 1) {
    add(unanchored == 0 ? "anchor cycle" : "component without anchor");
  }
  if (!r.ok()) return r;
  bool root_has_darts = false;
  for (DartId d = 0; d < D; ++d) {
    if (comp[p.darts[d].node] == root) root_has_darts = true;
  }
  if (p.outer != kNone) {
    if (p.outer < 0 || p.outer >= D || comp[p.darts[p.outer].node] != root) {
      add("outer dart not on the root component", p.outer);
    }
  }
  for (const Anchor& a : p.anchors) {
    if (a.host == kOuter && root_has_darts && p.outer == kNone) {
      add("outer anchor without an outer dart", a.dart, a.node);
    }
  }
  for (int c = 0; c < C; ++c) {
    int x = c;
    for (int steps = 0; x != root; ++steps) {
      if (steps > C) {
        add("anchor cycle");
        return r;
      }
      const Anchor& a = p.anchors[anchor_of[x]];
      x = a.host == kOuter ? root : comp[p.darts[a.host].node];
    }
  }
  return r;
}

void require_valid(const Planarization& p) {
  const ValidationReport r = validate(p);
  if (!r.ok()) throw ValidationError(r.summary());
}

std::vector<EdgeTrace> trace_edges(const Planarization& p) {
  std::vector<EdgeTrace> out(p.num_edges());
  std::vector<bool> done(p.num_edges(), false);
  std::vector<bool> covered(p.num_darts(), false);
  for (DartId d = 0; d < p.num_darts(); ++d) {
    const EdgeId e = p.darts[d].edge;
    if (done[e] || p.nodes[p.darts[d].node].kind != NodeKind::Real) continue;
    done[e] = true;
    EdgeTrace& t = out[e];
    t.edge = e;
    t.u = p.darts[d].node;
    DartId x = d;
    for (;;) {
      if (covered[x]) throw TraceBroken("edge " + std::to_string(e) + " revisits a segment");
      covered[x] = covered[p.twin(x)] = true;
      t.segments.push_back(x);
      const NodeId w = p.darts[p.twin(x)].node;
      if (p.nodes[w].kind != NodeKind::Crossing) {
        t.v = w;
        break;
      }
      x = p.next(p.next(p.twin(x)));
    }
    t.crossing_count = static_cast<int>(t.segments.size()) - 1;
  }
  for (EdgeId e = 0; e < p.num_edges(); ++e) {
    if (!done[e]) throw TraceBroken("edge " + std::to_string(e) + " has no real endpoint");
  }
  for (DartId d = 0; d < p.num_darts(); ++d) {
    if (!covered[d]) throw TraceBroken("segment of dart " + std::to_string(d) + " lies on no trace");
  }
  return out;
}

std::vector<int> crossing_counts(const Planarization& p) {
  std::vector<int> out;
  for (const EdgeTrace& t : trace_edges(p)) out.push_back(t.crossing_count);
  return out;
}

std::vector<std::pair<NodeId, NodeId>> edge_endpoints(const Planarization& p) {
  std::vector<std::pair<NodeId, NodeId>> out;
  for (const EdgeTrace& t : trace_edges(p)) out.emplace_back(t.u, t.v);
  return out;
}

CellMap cells(const Planarization& p) {
  CellMap cm;
  cm.faces = face_map(p);
  const int F = static_cast<int>(cm.faces.faces.size());
  const int N = p.num_nodes();
  const std::vector<int> comp = node_components(p);
  const int C = N == 0 ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
  const std::vector<int> deg = degrees(p);

  std::vector<int> anchor_of(C, kNone);
  for (int i = 0; i < static_cast<int>(p.anchors.size()); ++i) {
    const int c = anchored_component(p, p.anchors[i], comp);
    if (c != kNone) anchor_of[c] = i;
  }
  int root = kNone;
  for (int c = 0; c < C && root == kNone; ++c) {
    if (anchor_of[c] == kNone) root = c;
  }
  if (C > 0 && root == kNone) throw AnchorCycle("every component is anchored");
  for (int c = 0; c < C; ++c) {
    int x = c;
    for (int steps = 0; x != root; ++steps) {
      if (steps > C) throw AnchorCycle("nesting does not reach the root");
      const Anchor& a = p.anchors[anchor_of[x]];
      x = a.host == kOuter ? root : comp[p.darts[a.host].node];
    }
  }

  // Faces 0..F-1 plus a sentinel cell for drawings whose root has no darts.
  const int S = F;
  boost::disjoint_sets_with_storage<> ds(F + 1);
  bool root_has_darts = false;
  for (DartId d = 0; d < p.num_darts(); ++d) {
    if (comp[p.darts[d].node] == root) root_has_darts = true;
  }
  const int outer_face =
      root_has_darts && p.outer != kNone ? cm.faces.face_of_dart[p.outer] : S;
  auto host_face = [&](DartId host) {
    return host == kOuter ? outer_face : cm.faces.face_of_dart[host];
  };
  std::vector<int> node_face(N, kNone);
  bool sentinel_used = F == 0;
  for (const Anchor& a : p.anchors) {
    const int h = host_face(a.host);
    if (a.node != kNone) {
      node_face[a.node] = h;
    } else {
      ds.union_set(cm.faces.face_of_dart[a.dart], h);
    }
    if (h == S) sentinel_used = true;
  }
  for (NodeId v = 0; v < N; ++v) {
    if (deg[v] == 0 && node_face[v] == kNone) {
      node_face[v] = S;
      sentinel_used = true;
    }
  }

  std::vector<int> cell_of_rep(F + 1, kNone);
  cm.cell_of_face.assign(F, kNone);
  auto cell_for = [&](int f) {
    const int r = ds.find_set(f);
    if (cell_of_rep[r] == kNone) {
      cell_of_rep[r] = static_cast<int>(cm.cells.size());
      cm.cells.push_back({});
      cm.cells.back().id = cell_of_rep[r];
    }
    return cell_of_rep[r];
  };
  for (int f = 0; f < F; ++f) {
    cm.cell_of_face[f] = cell_for(f);
    cm.cells[cm.cell_of_face[f]].boundary_walks.push_back(cm.faces.faces[f]);
  }
  if (sentinel_used) cell_for(S);
  cm.cell_of_dart.assign(p.num_darts(), kNone);
  for (DartId d = 0; d < p.num_darts(); ++d) {
    cm.cell_of_dart[d] = cm.cell_of_face[cm.faces.face_of_dart[d]];
  }
  cm.cell_of_node.assign(N, kNone);
  for (NodeId v = 0; v < N; ++v) {
    if (node_face[v] == kNone) continue;
    const int c = cell_for(node_face[v]);
    cm.cell_of_node[v] = c;
    cm.cells[c].isolated.push_back(v);
  }
  for (Cell& c : cm.cells) {
    std::set<NodeId> inc(c.isolated.begin(), c.isolated.end());
    for (const auto& w : c.boundary_walks) {
      for (DartId d : w) {
        const NodeId v = p.darts[d].node;
        if (is_vertex(p.nodes[v].kind)) inc.insert(v);
      }
    }
    c.incident.assign(inc.begin(), inc.end());
  }
  return cm;
}

ConnectivityReport components_and_cuts(const Planarization& p) {
  ConnectivityReport r;
  r.component_of_node = node_components(p);
  const int N = p.num_nodes();
  const int C = N == 0 ? 0 : *std::max_element(r.component_of_node.begin(),
                                               r.component_of_node.end()) + 1;
  r.components.resize(C);
  for (NodeId v = 0; v < N; ++v) r.components[r.component_of_node[v]].push_back(v);
  std::vector<bool> has_edges(C, false);
  for (const Dart& d : p.darts) has_edges[r.component_of_node[d.node]] = true;
  r.components_with_edges =
      static_cast<int>(std::count(has_edges.begin(), has_edges.end(), true));

  std::set<std::pair<int, int>> g_edges, p_edges;
  for (auto [u, v] : edge_endpoints(p)) {
    if (u != v) g_edges.insert({std::min(u, v), std::max(u, v)});
  }
  for (DartId d = 0; d < p.num_darts(); ++d) {
    const NodeId a = p.darts[d].node, b = p.darts[p.twin(d)].node;
    if (a != b) p_edges.insert({std::min(a, b), std::max(a, b)});
  }
  for (NodeId v : articulation(N, g_edges)) {
    if (is_vertex(p.nodes[v].kind)) r.graph_cut_vertices.push_back(v);
  }
  r.planarization_cut_vertices = articulation(N, p_edges);
  for (NodeId v : r.graph_cut_vertices) {
    if (p.nodes[v].kind == NodeKind::Real &&
        std::binary_search(r.planarization_cut_vertices.begin(),
                           r.planarization_cut_vertices.end(), v)) {
      r.drawing_cut_vertices.push_back(v);
    }
  }
  r.essentially_2_connected = p.num_edges() >= 1 &&
                              r.drawing_cut_vertices.empty() &&
                              r.components_with_edges <= 1;
  return r;
}

Planarization add_isolated_in_empty_cells(const Planarization& p) {
  const CellMap cm = cells(p);
  Planarization q = p;
  for (const Cell& c : cm.cells) {
    if (!c.incident.empty()) continue;
    const NodeId v = q.add_node(NodeKind::Isolated);
    if (p.num_nodes() == 0) continue;  // the new node becomes the root
    Anchor a;
    a.node = v;
    a.host = c.boundary_walks.empty() ? kOuter : c.boundary_walks[0][0];
    q.anchors.push_back(a);
  }
  return q;
}

}  // namespace kplanar
