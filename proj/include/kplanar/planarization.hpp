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

namespace kplanar {

using NodeId = int;
using DartId = int;
using EdgeId = int;

inline constexpr int kNone = -1;
// Host value of an anchor placed in the outer face of the root component.
inline constexpr DartId kOuter = -2;

enum class NodeKind { Real, Crossing, Isolated };

const char* to_string(NodeKind kind);

struct Node {
  NodeKind kind = NodeKind::Real;
  std::string label;
};

// One half of a planarization segment. `next` is the counterclockwise
// successor in the rotation at `node`.
struct Dart {
  NodeId node = kNone;
  DartId twin = kNone;
  DartId next = kNone;
  EdgeId edge = kNone;
};

// Places a nested component, or a degree-0 node, inside the left face of
// `host`. For a component with darts, `dart` is a dart of that component
// whose left face is the component's outer face.
struct Anchor {
  NodeId node = kNone;
  DartId dart = kNone;
  DartId host = kOuter;
};

// A drawing given by its planarization: real vertices, crossings as degree-4
// nodes, and a rotation system. Faces are traversed with the face on the left
// of each dart; the left-face successor of d is the clockwise neighbour of
// twin(d).
struct Planarization {
  std::vector<Node> nodes;
  std::vector<Dart> darts;
  std::vector<std::string> edges;
  std::vector<Anchor> anchors;
  // Optional dart of the root component whose left face is drawn unbounded.
  DartId outer = kNone;

  int num_nodes() const { return static_cast<int>(nodes.size()); }
  int num_darts() const { return static_cast<int>(darts.size()); }
  int num_edges() const { return static_cast<int>(edges.size()); }

  NodeId add_node(NodeKind kind, std::string label = {});
  EdgeId add_edge(std::string label = {});
  // Appends the two darts of a segment a -> b. Both start as singleton
  // rotations; callers fix the rotation with set_rotation.
  DartId add_segment(NodeId a, NodeId b, EdgeId e);
  void set_rotation(const std::vector<DartId>& ccw);

  DartId twin(DartId d) const { return darts[d].twin; }
  DartId next(DartId d) const { return darts[d].next; }
  // Next dart along the left face of d.
  DartId face_next(DartId d) const;
};

// Per-node counterclockwise rotation, each starting at the smallest dart id.
// Requires a valid rotation system.
std::vector<std::vector<DartId>> rotations(const Planarization& p);

std::vector<int> degrees(const Planarization& p);

// Index of each left-face orbit, and the orbits themselves.
struct FaceMap {
  std::vector<int> face_of_dart;
  std::vector<std::vector<DartId>> faces;
};
FaceMap face_map(const Planarization& p);

bool is_vertex(NodeKind kind);

}  // namespace kplanar
