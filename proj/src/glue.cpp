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

#include "kplanar/core.hpp"
#include "kplanar/error.hpp"
#include "kplanar/families.hpp"

namespace kplanar {

Planarization glue(const Planarization& d1, NodeId v1, const Planarization& d2,
                   NodeId v2, int host_cell) {
  require_valid(d1);
  require_valid(d2);
  if (v1 < 0 || v1 >= d1.num_nodes() || !is_vertex(d1.nodes[v1].kind) ||
      v2 < 0 || v2 >= d2.num_nodes() || !is_vertex(d2.nodes[v2].kind)) {
    throw InvalidArgument("glue points must be vertices");
  }
  const CellMap cm = cells(d1);
  if (host_cell < 0 || host_cell >= static_cast<int>(cm.cells.size())) {
    throw NotIncident("no cell " + std::to_string(host_cell));
  }
  const std::vector<NodeId>& inc = cm.cells[host_cell].incident;
  if (!std::binary_search(inc.begin(), inc.end(), v1)) {
    throw NotIncident("cell " + std::to_string(host_cell) + " is not incident to vertex " + std::to_string(v1));
  }
  if (inc.size() != 1) {
    throw NotIncident("cell " + std::to_string(host_cell) + " has vertices other than " + std::to_string(v1));
  }
  const std::vector<int> deg1 = degrees(d1), deg2 = degrees(d2);
  if (d2.num_nodes() == 1) return d1;
  if (d1.num_nodes() == 1) return d2;
  if (deg1[v1] == 0 || deg2[v2] == 0) {
    throw Unsupported("gluing at a vertex without edges");
  }
  const ConnectivityReport c2 = components_and_cuts(d2);
  for (const Anchor& a : d2.anchors) {
    const NodeId placed = a.node != kNone ? a.node : d2.darts[a.dart].node;
    if (c2.component_of_node[placed] == c2.component_of_node[v2]) {
      throw Unsupported("the glue vertex of the second drawing is nested");
    }
  }

  Planarization q = d1;
  const int D1 = d1.num_darts(), E1 = d1.num_edges();
  std::vector<NodeId> node_map(d2.num_nodes());
  for (NodeId v = 0; v < d2.num_nodes(); ++v) {
    node_map[v] = v == v2 ? v1 : q.add_node(d2.nodes[v].kind, d2.nodes[v].label);
  }
  for (const std::string& label : d2.edges) q.add_edge(label);
  for (const Dart& d : d2.darts) {
    q.darts.push_back({node_map[d.node], d.twin + D1, d.next + D1, d.edge + E1});
  }
  DartId c = kNone;
  for (DartId d = 0; d < D1; ++d) {
    if (d1.darts[d].node == v1 && cm.cell_of_dart[d] == host_cell) {
      c = d;
      break;
    }
  }
  DartId a = kNone;
  for (DartId d = 0; d < d2.num_darts() && a == kNone; ++d) {
    if (d2.darts[d].node == v2) a = d;
  }
  DartId last = a;
  while (d2.next(last) != a) last = d2.next(last);
  // Splice the rotation at v2 into the corner after c.
  q.darts[last + D1].next = q.darts[c].next;
  q.darts[c].next = a + D1;

  for (const Anchor& an : d2.anchors) {
    Anchor b;
    b.node = an.node == kNone ? kNone : node_map[an.node];
    b.dart = an.dart == kNone ? kNone : an.dart + D1;
    if (an.host != kOuter) {
      b.host = an.host + D1;
    } else if (d2.outer != kNone) {
      b.host = d2.outer + D1;
    } else {
      b.host = a + D1;
    }
    q.anchors.push_back(b);
  }
  require_valid(q);
  return q;
}

std::vector<GluePoint> glue_points(const Planarization& d) {
  const std::vector<int> deg = degrees(d);
  std::vector<GluePoint> out;
  for (const Cell& c : cells(d).cells) {
    if (c.incident.size() == 1 && deg[c.incident[0]] > 0) out.push_back({c.incident[0], c.id});
  }
  return out;
}

Planarization glue_first(const Planarization& d1, const Planarization& d2) {
  const std::vector<GluePoint> points = glue_points(d1);
  if (points.empty()) throw NotIncident("no cell with a single incident vertex");
  const std::vector<int> deg = degrees(d2);
  NodeId v2 = kNone;
  for (NodeId v = 0; v < d2.num_nodes() && v2 == kNone; ++v) {
    if (d2.nodes[v].kind == NodeKind::Real && deg[v] > 0) v2 = v;
  }
  if (v2 == kNone) {
    if (d2.num_nodes() == 1) return d1;
    throw Unsupported("second drawing has no vertex with edges");
  }
  return glue(d1, points[0].vertex, d2, v2, points[0].cell);
}

}  // namespace kplanar
