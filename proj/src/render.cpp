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


#include "kplanar/render.hpp"

#include <Eigen/SparseCore>
#include <Eigen/SparseLU>
#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <map>
#include <numbers>

#include "kplanar/core.hpp"
#include "kplanar/error.hpp"

namespace kplanar {

namespace {

struct Disk {
  Point c;
  double r = 1;
};

Point at(const Disk& d, Point unit) { return {d.c.x + d.r * unit.x, d.c.y + d.r * unit.y}; }

double cross(Point o, Point a, Point b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

double seg_dist(Point p, Point a, Point b) {
  const double dx = b.x - a.x, dy = b.y - a.y;
  const double len2 = dx * dx + dy * dy;
  double t = len2 > 0 ? ((p.x - a.x) * dx + (p.y - a.y) * dy) / len2 : 0;
  t = std::clamp(t, 0.0, 1.0);
  return std::hypot(p.x - a.x - t * dx, p.y - a.y - t * dy);
}

// Unit-disk layout of one component with darts.
struct ComponentLayout {
  std::map<NodeId, Point> node;
  std::map<DartId, Point> near;  // subdivision point next to node(d)
  std::map<int, Disk> hub;       // free disk per face of p
  bool degenerate = false;
};

ComponentLayout tutte(const Planarization& p, const FaceMap& fm,
                      const std::vector<NodeId>& comp, DartId outer) {
  // Vertex ids: component nodes, one near point per dart, then per face a
  // ring of corner vertices and a hub.
  std::map<NodeId, int> id;
  int V = 0;
  for (NodeId v : comp) id[v] = V++;
  std::map<DartId, int> near;
  std::vector<int> faces;
  for (DartId d = 0; d < p.num_darts(); ++d) {
    if (!id.count(p.darts[d].node)) continue;
    near[d] = V++;
    faces.push_back(fm.face_of_dart[d]);
  }
  std::sort(faces.begin(), faces.end());
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());

  std::vector<std::pair<int, int>> edges;
  std::vector<std::array<int, 3>> triangles;  // counterclockwise
  for (const auto& [d, a] : near) {
    edges.push_back({id[p.darts[d].node], a});
    if (d < p.twin(d)) edges.push_back({a, near[p.twin(d)]});
  }
  std::map<int, int> hub_of;
  std::map<int, std::vector<int>> ring_of;
  const int outer_face = fm.face_of_dart[outer];
  for (int f : faces) {
    std::vector<DartId> walk = fm.faces[f];
    if (f == outer_face) std::rotate(walk.begin(), std::find(walk.begin(), walk.end(), outer), walk.end());
    std::vector<int> w;
    for (DartId d : walk) {
      w.push_back(id[p.darts[d].node]);
      w.push_back(near[d]);
      w.push_back(near[p.twin(d)]);
    }
    const int L = static_cast<int>(w.size());
    std::vector<int> ring(L);
    for (int& c : ring) c = V++;
    const int hub = V++;
    for (int i = 0; i < L; ++i) {
      const int j = (i + 1) % L;
      edges.push_back({ring[i], w[i]});
      edges.push_back({ring[i], w[j]});
      edges.push_back({ring[i], ring[j]});
      edges.push_back({ring[i], hub});
      triangles.push_back({w[i], w[j], ring[i]});
      triangles.push_back({ring[i], w[j], ring[j]});
      if (!(f == outer_face && i == 0)) triangles.push_back({ring[i], ring[j], hub});
    }
    hub_of[f] = hub;
    ring_of[f] = ring;
  }

  // The outer triangle is a left face, so it runs clockwise.
  std::vector<Point> pos(V);
  std::vector<int> fixed(V, -1);
  const std::vector<int>& outer_ring = ring_of[outer_face];
  const int corners[3] = {outer_ring[0], outer_ring[1], hub_of[outer_face]};
  for (int i = 0; i < 3; ++i) {
    const double a = std::numbers::pi / 2 - 2 * std::numbers::pi * i / 3;
    fixed[corners[i]] = i;
    pos[corners[i]] = {std::cos(a), std::sin(a)};
  }
  std::vector<int> var(V, -1);
  int n_var = 0;
  for (int v = 0; v < V; ++v) {
    if (fixed[v] < 0) var[v] = n_var++;
  }
  std::vector<Eigen::Triplet<double>> trip;
  Eigen::VectorXd bx = Eigen::VectorXd::Zero(n_var), by = Eigen::VectorXd::Zero(n_var);
  std::vector<int> deg(V, 0);
  for (auto [a, b] : edges) {
    ++deg[a];
    ++deg[b];
  }
  for (auto [a, b] : edges) {
    for (auto [s, t] : {std::pair{a, b}, {b, a}}) {
      if (var[s] < 0) continue;
      if (var[t] >= 0) {
        trip.emplace_back(var[s], var[t], -1.0);
      } else {
        bx[var[s]] += pos[t].x;
        by[var[s]] += pos[t].y;
      }
    }
  }
  for (int v = 0; v < V; ++v) {
    if (var[v] >= 0) trip.emplace_back(var[v], var[v], deg[v]);
  }
  Eigen::SparseMatrix<double> A(n_var, n_var);
  A.setFromTriplets(trip.begin(), trip.end());
  Eigen::SparseLU<Eigen::SparseMatrix<double>> lu;
  lu.compute(A);
  ComponentLayout out;
  if (lu.info() != Eigen::Success) {
    out.degenerate = true;
  } else {
    const Eigen::VectorXd x = lu.solve(bx), y = lu.solve(by);
    for (int v = 0; v < V; ++v) {
      if (var[v] >= 0) pos[v] = {x[var[v]], y[var[v]]};
    }
    for (const auto& t : triangles) {
      if (!(cross(pos[t[0]], pos[t[1]], pos[t[2]]) > 0)) out.degenerate = true;
    }
  }
  for (NodeId v : comp) out.node[v] = pos[id[v]];
  for (const auto& [d, a] : near) out.near[d] = pos[a];
  for (int f : faces) {
    if (f == outer_face) continue;
    const Point h = pos[hub_of[f]];
    const std::vector<int>& ring = ring_of[f];
    double r = 1;
    for (size_t i = 0; i < ring.size(); ++i) {
      r = std::min(r, seg_dist(h, pos[ring[i]], pos[ring[(i + 1) % ring.size()]]));
    }
    out.hub[f] = {h, 0.9 * r};
  }
  return out;
}

Layout circular(const Planarization& p) {
  Layout l;
  const int N = p.num_nodes();
  l.node_pos.resize(N);
  for (int v = 0; v < N; ++v) {
    const double a = 2 * std::numbers::pi * v / std::max(N, 1);
    l.node_pos[v] = {std::cos(a), std::sin(a)};
  }
  l.dart_path.resize(p.num_darts());
  for (DartId d = 0; d < p.num_darts(); ++d) {
    const Point a = l.node_pos[p.darts[d].node], b = l.node_pos[p.darts[p.twin(d)].node];
    l.dart_path[d] = {a, {(2 * a.x + b.x) / 3, (2 * a.y + b.y) / 3},
                      {(a.x + 2 * b.x) / 3, (a.y + 2 * b.y) / 3}, b};
  }
  l.degenerate = true;
  return l;
}

}  // namespace

Layout layout(const Planarization& p) {
  require_valid(p);
  const ConnectivityReport conn = components_and_cuts(p);
  const FaceMap fm = face_map(p);
  const int C = static_cast<int>(conn.components.size());

  // Components and degree-0 nodes hosted by each face, or by the outer face.
  std::vector<int> comp_of_anchor(p.anchors.size());
  std::vector<bool> anchored(C, false);
  std::map<int, std::vector<int>> items;  // face id or -1 -> anchor indices
  for (size_t i = 0; i < p.anchors.size(); ++i) {
    const Anchor& a = p.anchors[i];
    const int c = conn.component_of_node[a.node];
    anchored[c] = true;
    comp_of_anchor[i] = c;
    items[a.host == kOuter ? -1 : fm.face_of_dart[a.host]].push_back(static_cast<int>(i));
  }
  int root = 0;
  while (root < C && anchored[root]) ++root;

  Layout l;
  l.node_pos.resize(p.num_nodes());
  l.dart_path.resize(p.num_darts());
  std::vector<DartId> first_dart(C, kNone);
  for (DartId d = p.num_darts() - 1; d >= 0; --d) first_dart[conn.component_of_node[p.darts[d].node]] = d;

  bool degenerate = false;
  std::vector<std::pair<int, Disk>> todo;  // (anchor index, disk); -1 is the root
  auto place_items = [&](const std::vector<int>& list, const Disk& disk) {
    const int q = static_cast<int>(list.size());
    for (int j = 0; j < q; ++j) {
      const double w = disk.r / q;
      todo.push_back({list[j], {{disk.c.x - disk.r + w * (2 * j + 1), disk.c.y}, 0.8 * w}});
    }
  };
  todo.push_back({-1, {{0, 0}, 1}});
  if (items.count(-1)) {
    const auto& outside = items[-1];
    for (size_t j = 0; j < outside.size(); ++j) {
      todo.push_back({outside[j], {{2.5 + 2.0 * static_cast<double>(j), 0}, 0.9}});
    }
  }
  for (size_t t = 0; t < todo.size(); ++t) {
    const auto [ai, disk] = todo[t];
    const int c = ai < 0 ? root : comp_of_anchor[ai];
    if (c >= C) continue;
    if (first_dart[c] == kNone) {
      for (NodeId v : conn.components[c]) l.node_pos[v] = disk.c;
      continue;
    }
    DartId outer = first_dart[c];
    if (ai >= 0) {
      outer = p.anchors[ai].dart;
    } else if (p.outer != kNone) {
      outer = p.outer;
    }
    const ComponentLayout cl = tutte(p, fm, conn.components[c], outer);
    degenerate |= cl.degenerate;
    for (const auto& [v, pt] : cl.node) l.node_pos[v] = at(disk, pt);
    for (const auto& [d, pt] : cl.near) {
      const DartId e = p.twin(d);
      l.dart_path[d] = {at(disk, cl.node.at(p.darts[d].node)), at(disk, pt),
                        at(disk, cl.near.at(e)), at(disk, cl.node.at(p.darts[e].node))};
    }
    for (const auto& [f, hd] : cl.hub) {
      auto it = items.find(f);
      if (it != items.end()) place_items(it->second, {at(disk, hd.c), hd.r * disk.r});
    }
  }
  if (degenerate) return circular(p);
  return l;
}

std::vector<std::vector<DartId>> extract_rotations(const Planarization& p, const Layout& l) {
  std::vector<std::vector<std::pair<double, DartId>>> by_angle(p.num_nodes());
  for (DartId d = 0; d < p.num_darts(); ++d) {
    const Point a = l.dart_path[d][0], b = l.dart_path[d][1];
    by_angle[p.darts[d].node].push_back({std::atan2(b.y - a.y, b.x - a.x), d});
  }
  std::vector<std::vector<DartId>> out(p.num_nodes());
  for (NodeId v = 0; v < p.num_nodes(); ++v) {
    auto& list = by_angle[v];
    std::sort(list.begin(), list.end());
    for (const auto& [angle, d] : list) out[v].push_back(d);
    if (!out[v].empty()) {
      std::rotate(out[v].begin(), std::min_element(out[v].begin(), out[v].end()), out[v].end());
    }
  }
  return out;
}

bool topology_matches(const Planarization& p, const Layout& l) {
  return extract_rotations(p, l) == rotations(p);
}

std::string render_svg(const Planarization& p, const Layout& l) {
  double x0 = 1e300, y0 = 1e300, x1 = -1e300, y1 = -1e300;
  auto grow = [&](Point q) {
    x0 = std::min(x0, q.x);
    y0 = std::min(y0, q.y);
    x1 = std::max(x1, q.x);
    y1 = std::max(y1, q.y);
  };
  for (const Point& q : l.node_pos) grow(q);
  for (const auto& path : l.dart_path) {
    for (const Point& q : path) grow(q);
  }
  if (x0 > x1) x0 = y0 = x1 = y1 = 0;
  const double size = 800, margin = 20;
  const double scale = (size - 2 * margin) / std::max({x1 - x0, y1 - y0, 1e-9});
  char buf[160];
  auto px = [&](Point q) {
    std::snprintf(buf, sizeof buf, "%.3f,%.3f", margin + (q.x - x0) * scale,
                  margin + (y1 - q.y) * scale);
    return std::string(buf);
  };
  static const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
                                  "#8c564b", "#e377c2", "#17becf", "#bcbd22", "#7f7f7f"};
  const double w = margin * 2 + (x1 - x0) * scale, h = margin * 2 + (y1 - y0) * scale;
  std::string out;
  std::snprintf(buf, sizeof buf,
                "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"%.0f\" "
                "height=\"%.0f\">\n",
                w, h);
  out += buf;
  for (DartId d = 0; d < p.num_darts(); ++d) {
    if (d > p.twin(d)) continue;
    out += "  <polyline fill=\"none\" stroke-width=\"1.5\" stroke=\"";
    out += palette[p.darts[d].edge % 10];
    out += "\" points=\"";
    for (size_t i = 0; i < l.dart_path[d].size(); ++i) {
      if (i) out += ' ';
      out += px(l.dart_path[d][i]);
    }
    out += "\"/>\n";
  }
  for (NodeId v = 0; v < p.num_nodes(); ++v) {
    if (p.nodes[v].kind == NodeKind::Crossing) continue;
    const std::string xy = px(l.node_pos[v]);
    const size_t comma = xy.find(',');
    out += "  <circle r=\"4\" fill=\"";
    out += p.nodes[v].kind == NodeKind::Isolated ? "white\" stroke=\"black" : "black";
    out += "\" cx=\"" + xy.substr(0, comma) + "\" cy=\"" + xy.substr(comma + 1) + "\"/>\n";
  }
  out += "</svg>\n";
  return out;
}

std::string render_svg(const Planarization& p) { return render_svg(p, layout(p)); }

}  // namespace kplanar
