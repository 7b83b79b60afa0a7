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

#include <vector>

#include "kplanar/planarization.hpp"

namespace kplanar {

// A curve being drawn. The pen tip is a temporary node hanging off the last
// crossing (or the start vertex) by the tip segment.
struct Pen {
  EdgeId edge = kNone;
  NodeId start = kNone;
  NodeId tip = kNone;
  DartId tip_dart = kNone;  // dart at the tip node
  // Left face dart of the host face while the pen is still detached.
  DartId host = kNone;
  bool detached = false;
};

// Mutable single-component drawing used by constructions and search. Darts
// come in pairs (d, d ^ 1); removed darts and nodes stay as tombstones until
// build().
class Sketch {
 public:
  Sketch() = default;
  // Loads the darts of p; degree-0 nodes and anchors are dropped.
  explicit Sketch(const Planarization& p);

  NodeId add_node(NodeKind kind);
  EdgeId add_edge();
  int num_edges() const { return num_edges_; }
  int num_darts() const { return static_cast<int>(node_.size()); }
  int num_nodes() const { return static_cast<int>(kind_.size()); }

  bool alive(DartId d) const { return node_[d] != kNone; }
  NodeId node(DartId d) const { return node_[d]; }
  EdgeId edge(DartId d) const { return edge_[d]; }
  NodeKind kind(NodeId v) const { return kind_[v]; }
  bool dead_node(NodeId v) const { return dead_[v]; }
  bool is_tip(NodeId v) const { return tip_[v]; }
  DartId next(DartId d) const { return next_[d]; }

  // Left face of d as a dart cycle.
  std::vector<DartId> face(DartId d) const;
  std::vector<DartId> darts_at(NodeId v) const;
  std::vector<DartId> live_darts() const;
  // Distinct real vertices on the left face of d.
  int face_vertex_count(DartId d) const;
  // Crossing traversals per edge (a selfcrossing counts twice).
  std::vector<int> crossing_counts() const;
  // Number of crossing nodes shared by edges a and b (a == b: selfcrossings).
  int shared_crossings(EdgeId a, EdgeId b) const;

  // Starts edge e at v, leaving into the left face of `corner` (a dart at
  // v), or alone when v has no darts.
  Pen pen_at(NodeId v, DartId corner, EdgeId e);
  // Starts edge e at a new vertex placed in the left face of `host`
  // (kNone on an empty sketch).
  Pen pen_fresh(EdgeId e, DartId host);
  // Turns a degree-1 real vertex back into a pen tip.
  Pen reopen(NodeId v);

  // Face the pen can end in: the host face while detached.
  std::vector<DartId> pen_face(const Pen& pen) const;
  // Darts the pen may cross next: on its face, not on the tip segment, plus
  // the host face while detached.
  std::vector<DartId> pen_candidates(const Pen& pen) const;
  NodeId cross(Pen& pen, DartId h);
  // Crosses the tip segment itself, leaving a small empty loop.
  NodeId curl(Pen& pen, bool flip);
  NodeId end_at(Pen& pen, NodeId v, DartId corner);
  NodeId end_new(Pen& pen);

  void remove_edge(EdgeId e);

  // Compacts into a planarization of the drawn component.
  Planarization build() const;

 private:
  DartId new_segment(NodeId a, NodeId b, EdgeId e);
  DartId prev(DartId d) const { return prev_[d]; }
  void insert_after(DartId c, DartId d);
  void replace(DartId old_dart, DartId new_dart);
  void detach(DartId d);
  void dissolve(NodeId x);

  std::vector<NodeKind> kind_;
  std::vector<bool> dead_;
  std::vector<bool> tip_;
  std::vector<NodeId> node_;
  std::vector<DartId> next_, prev_;
  std::vector<EdgeId> edge_;
  int num_edges_ = 0;
};

}  // namespace kplanar
