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


#include "kplanar/sketch.hpp"

#include <algorithm>
#include <set>

#include "kplanar/error.hpp"

namespace kplanar {

Sketch::Sketch(const Planarization& p) {
  const std::vector<int> deg = degrees(p);
  for (NodeId v = 0; v < p.num_nodes(); ++v) {
    kind_.push_back(p.nodes[v].kind);
    dead_.push_back(deg[v] == 0);
    tip_.push_back(false);
  }
  num_edges_ = p.num_edges();
  std::vector<DartId> to(p.num_darts(), kNone);
  for (DartId d = 0; d < p.num_darts(); ++d) {
    if (to[d] != kNone) continue;
    const DartId t = p.twin(d);
    to[d] = new_segment(p.darts[d].node, p.darts[t].node, p.darts[d].edge);
    to[t] = to[d] + 1;
  }
  for (DartId d = 0; d < p.num_darts(); ++d) {
    next_[to[d]] = to[p.next(d)];
    prev_[to[p.next(d)]] = to[d];
  }
}

NodeId Sketch::add_node(NodeKind kind) {
  kind_.push_back(kind);
  dead_.push_back(false);
  tip_.push_back(false);
  return num_nodes() - 1;
}

EdgeId Sketch::add_edge() { return num_edges_++; }

DartId Sketch::new_segment(NodeId a, NodeId b, EdgeId e) {
  const DartId d = num_darts();
  node_.insert(node_.end(), {a, b});
  next_.insert(next_.end(), {d, d + 1});
  prev_.insert(prev_.end(), {d, d + 1});
  edge_.insert(edge_.end(), {e, e});
  return d;
}

void Sketch::insert_after(DartId c, DartId d) {
  const DartId n = next_[c];
  next_[c] = d;
  prev_[d] = c;
  next_[d] = n;
  prev_[n] = d;
}

void Sketch::detach(DartId d) {
  const DartId a = prev_[d], b = next_[d];
  next_[a] = b;
  prev_[b] = a;
  next_[d] = prev_[d] = d;
}

void Sketch::replace(DartId old_dart, DartId new_dart) {
  if (next_[old_dart] == old_dart) {
    next_[new_dart] = prev_[new_dart] = new_dart;
  } else {
    const DartId a = prev_[old_dart], b = next_[old_dart];
    next_[a] = new_dart;
    prev_[new_dart] = a;
    next_[new_dart] = b;
    prev_[b] = new_dart;
    next_[old_dart] = prev_[old_dart] = old_dart;
  }
  node_[new_dart] = node_[old_dart];
}

std::vector<DartId> Sketch::face(DartId d) const {
  std::vector<DartId> out;
  DartId x = d;
  do {
    out.push_back(x);
    x = prev_[x ^ 1];
  } while (x != d);
  return out;
}

std::vector<DartId> Sketch::darts_at(NodeId v) const {
  std::vector<DartId> out;
  for (DartId d = 0; d < num_darts(); ++d) {
    if (node_[d] == v) out.push_back(d);
  }
  return out;
}

std::vector<DartId> Sketch::live_darts() const {
  std::vector<DartId> out;
  for (DartId d = 0; d < num_darts(); ++d) {
    if (alive(d)) out.push_back(d);
  }
  return out;
}

int Sketch::face_vertex_count(DartId d) const {
  std::set<NodeId> vs;
  for (DartId x : face(d)) {
    const NodeId v = node_[x];
    if (kind_[v] == NodeKind::Real && !tip_[v]) vs.insert(v);
  }
  return static_cast<int>(vs.size());
}

std::vector<int> Sketch::crossing_counts() const {
  std::vector<int> cc(num_edges_, 0);
  for (DartId d = 0; d < num_darts(); ++d) {
    if (alive(d) && kind_[node_[d]] == NodeKind::Crossing) ++cc[edge_[d]];
  }
  for (int& c : cc) c /= 2;
  return cc;
}

int Sketch::shared_crossings(EdgeId a, EdgeId b) const {
  int count = 0;
  for (NodeId x = 0; x < num_nodes(); ++x) {
    if (dead_[x] || kind_[x] != NodeKind::Crossing) continue;
    int na = 0, nb = 0;
    for (DartId d : darts_at(x)) {
      na += edge_[d] == a;
      nb += edge_[d] == b;
    }
    if (a == b ? na == 4 : (na > 0 && nb > 0)) ++count;
  }
  return count;
}

Pen Sketch::pen_at(NodeId v, DartId corner, EdgeId e) {
  Pen pen;
  pen.edge = e;
  pen.start = v;
  pen.tip = add_node(NodeKind::Real);
  tip_[pen.tip] = true;
  const DartId t = new_segment(v, pen.tip, e);
  if (corner != kNone) insert_after(corner, t);
  pen.tip_dart = t ^ 1;
  return pen;
}

Pen Sketch::pen_fresh(EdgeId e, DartId host) {
  const NodeId u = add_node(NodeKind::Real);
  Pen pen = pen_at(u, kNone, e);
  pen.host = host;
  pen.detached = host != kNone;
  return pen;
}

Pen Sketch::reopen(NodeId v) {
  const std::vector<DartId> ds = darts_at(v);
  if (ds.size() != 1 || kind_[v] != NodeKind::Real) {
    throw InvalidArgument("reopen needs a degree-1 vertex");
  }
  Pen pen;
  pen.edge = edge_[ds[0]];
  pen.tip = v;
  pen.tip_dart = ds[0];
  tip_[v] = true;
  return pen;
}

std::vector<DartId> Sketch::pen_face(const Pen& pen) const {
  return pen.detached ? face(pen.host) : face(pen.tip_dart);
}

std::vector<DartId> Sketch::pen_candidates(const Pen& pen) const {
  std::vector<DartId> out;
  for (DartId h : face(pen.tip_dart)) {
    if ((h >> 1) != (pen.tip_dart >> 1)) out.push_back(h);
  }
  if (pen.detached) {
    for (DartId h : face(pen.host)) out.push_back(h);
  }
  return out;
}

NodeId Sketch::cross(Pen& pen, DartId h) {
  const NodeId q = node_[h ^ 1];
  const NodeId x = add_node(NodeKind::Crossing);
  const DartId g = new_segment(x, q, edge_[h]);
  replace(h ^ 1, g ^ 1);
  node_[h ^ 1] = x;
  const DartId bp = h ^ 1, bq = g;
  const DartId pi = pen.tip_dart;
  detach(pi);
  node_[pi] = x;
  const DartId po = new_segment(x, pen.tip, pen.edge);
  pen.tip_dart = po ^ 1;
  // Pen arrives from the left of h and leaves to its right.
  const DartId ring[4] = {bp, po, bq, pi};
  for (int i = 0; i < 4; ++i) {
    next_[ring[i]] = ring[(i + 1) % 4];
    prev_[ring[(i + 1) % 4]] = ring[i];
  }
  // Crossing its own curve leaves a detached pen detached.
  if (edge_[h] != pen.edge) pen.detached = false;
  return x;
}

NodeId Sketch::curl(Pen& pen, bool flip) {
  const DartId a = pen.tip_dart;
  const NodeId y = add_node(NodeKind::Crossing);
  detach(a);
  node_[a] = y;
  const DartId b = new_segment(y, y, pen.edge);
  const DartId c = b ^ 1;
  const DartId d = new_segment(y, pen.tip, pen.edge);
  pen.tip_dart = d ^ 1;
  const DartId ring0[4] = {a, c, b, d};
  const DartId ring1[4] = {a, d, b, c};
  const DartId* ring = flip ? ring1 : ring0;
  for (int i = 0; i < 4; ++i) {
    next_[ring[i]] = ring[(i + 1) % 4];
    prev_[ring[(i + 1) % 4]] = ring[i];
  }
  return y;
}

NodeId Sketch::end_at(Pen& pen, NodeId v, DartId corner) {
  const DartId t = pen.tip_dart;
  detach(t);
  node_[t] = v;
  if (corner != kNone) insert_after(corner, t);
  dead_[pen.tip] = true;
  tip_[pen.tip] = false;
  pen.detached = false;
  return v;
}

NodeId Sketch::end_new(Pen& pen) {
  tip_[pen.tip] = false;
  return pen.tip;
}

void Sketch::dissolve(NodeId x) {
  const std::vector<DartId> ds = darts_at(x);
  const DartId a = ds[0], b = ds[1];
  detach(a);
  detach(b);
  replace(b ^ 1, a);
  node_[b] = node_[b ^ 1] = kNone;
  dead_[x] = true;
}

void Sketch::remove_edge(EdgeId e) {
  std::set<NodeId> touched;
  for (DartId d = 0; d < num_darts(); ++d) {
    if (!alive(d) || edge_[d] != e) continue;
    touched.insert(node_[d]);
    detach(d);
    node_[d] = kNone;
  }
  for (NodeId x : touched) {
    if (kind_[x] != NodeKind::Crossing) continue;
    const size_t deg = darts_at(x).size();
    if (deg == 0) dead_[x] = true;
    if (deg == 2) dissolve(x);
  }
}

Planarization Sketch::build() const {
  Planarization p;
  std::vector<NodeId> nid(num_nodes(), kNone);
  std::vector<bool> has_darts(num_nodes(), false);
  std::vector<bool> has_edge(num_edges_, false);
  for (DartId d = 0; d < num_darts(); ++d) {
    if (!alive(d)) continue;
    has_darts[node_[d]] = true;
    has_edge[edge_[d]] = true;
  }
  for (NodeId v = 0; v < num_nodes(); ++v) {
    if (!dead_[v] && has_darts[v]) nid[v] = p.add_node(kind_[v]);
  }
  std::vector<EdgeId> eid(num_edges_, kNone);
  for (EdgeId e = 0; e < num_edges_; ++e) {
    if (has_edge[e]) eid[e] = p.add_edge();
  }
  std::vector<DartId> did(num_darts(), kNone);
  for (DartId d = 0; d < num_darts(); d += 2) {
    if (!alive(d)) continue;
    did[d] = p.add_segment(nid[node_[d]], nid[node_[d + 1]], eid[edge_[d]]);
    did[d + 1] = did[d] + 1;
  }
  for (DartId d = 0; d < num_darts(); ++d) {
    if (alive(d)) p.darts[did[d]].next = did[next_[d]];
  }
  return p;
}

}  // namespace kplanar
