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

#include <string>
#include <vector>

#include "kplanar/planarization.hpp"

namespace kplanar {

struct Violation {
  std::string what;
  DartId dart = kNone;
  NodeId node = kNone;
  EdgeId edge = kNone;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  std::string summary() const;
};

ValidationReport validate(const Planarization& p);
// Throws ValidationError listing the first violations.
void require_valid(const Planarization& p);

struct EdgeTrace {
  EdgeId edge = kNone;
  NodeId u = kNone;
  NodeId v = kNone;
  // Darts in walk order, each pointing away from u.
  std::vector<DartId> segments;
  int crossing_count = 0;
};

std::vector<EdgeTrace> trace_edges(const Planarization& p);
std::vector<int> crossing_counts(const Planarization& p);

struct Cell {
  int id = 0;
  std::vector<std::vector<DartId>> boundary_walks;
  std::vector<NodeId> isolated;
  // Sorted vertex ids on a boundary walk or anchored inside.
  std::vector<NodeId> incident;
};

struct CellMap {
  std::vector<Cell> cells;
  FaceMap faces;
  std::vector<int> cell_of_face;
  std::vector<int> cell_of_dart;
  // Cell holding each degree-0 node, kNone for other nodes.
  std::vector<int> cell_of_node;
};

CellMap cells(const Planarization& p);

struct ConnectivityReport {
  std::vector<std::vector<NodeId>> components;
  std::vector<int> component_of_node;
  std::vector<NodeId> graph_cut_vertices;
  std::vector<NodeId> planarization_cut_vertices;
  std::vector<NodeId> drawing_cut_vertices;
  int components_with_edges = 0;
  bool essentially_2_connected = false;
};

ConnectivityReport components_and_cuts(const Planarization& p);

Planarization add_isolated_in_empty_cells(const Planarization& p);

// Deletes edges (or a vertex with its incident edges), dissolving crossings
// that lose a passage and re-anchoring components that come apart.
Planarization remove_edges(const Planarization& p,
                           const std::vector<EdgeId>& doomed);
Planarization remove_vertex(const Planarization& p, NodeId v);
Planarization remove_elements(const Planarization& p,
                              const std::vector<EdgeId>& edges,
                              const std::vector<NodeId>& nodes);

// Splits p at cut-vertices and between components with edges until every
// piece is essentially 2-connected. Each degree-0 vertex joins the piece
// that bounds its cell.
std::vector<Planarization> essential_blocks(const Planarization& p);

// Sphere-invariant code: equal for drawings related by relabeling,
// reflection, or a change of outer face.
std::vector<int> canonical_code(const Planarization& p);
std::string canonical_form(const Planarization& p);

// Endpoints (u, v) of every edge, from its trace.
std::vector<std::pair<NodeId, NodeId>> edge_endpoints(const Planarization& p);

}  // namespace kplanar
