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


#include "kplanar/planarization.hpp"

#include <utility>

namespace kplanar {

const char* to_string(NodeKind kind) {
  switch (kind) {
    case NodeKind::Real:
      return "real";
    case NodeKind::Crossing:
      return "crossing";
    case NodeKind::Isolated:
      return "isolated";
  }
  return "?";
}

bool is_vertex(NodeKind kind) { return kind != NodeKind::Crossing; }

NodeId Planarization::add_node(NodeKind kind, std::string label) {
  nodes.push_back({kind, std::move(label)});
  return num_nodes() - 1;
}

EdgeId Planarization::add_edge(std::string label) {
  edges.push_back(std::move(label));
  return num_edges() - 1;
}

DartId Planarization::add_segment(NodeId a, NodeId b, EdgeId e) {
  const DartId d = num_darts();
  darts.push_back({a, d + 1, d, e});
  darts.push_back({b, d, d + 1, e});
  return d;
}

void Planarization::set_rotation(const std::vector<DartId>& ccw) {
  for (size_t i = 0; i < ccw.size(); ++i) {
    darts[ccw[i]].next = ccw[(i + 1) % ccw.size()];
  }
}

DartId Planarization::face_next(DartId d) const {
  const DartId t = twin(d);
  DartId x = t;
  while (next(x) != t) x = next(x);
  return x;
}

std::vector<std::vector<DartId>> rotations(const Planarization& p) {
  std::vector<std::vector<DartId>> rot(p.num_nodes());
  for (DartId d = 0; d < p.num_darts(); ++d) {
    auto& r = rot[p.darts[d].node];
    if (!r.empty()) continue;
    DartId x = d;
    do {
      r.push_back(x);
      x = p.next(x);
    } while (x != d && static_cast<int>(r.size()) <= p.num_darts());
  }
  return rot;
}

std::vector<int> degrees(const Planarization& p) {
  std::vector<int> deg(p.num_nodes(), 0);
  for (const Dart& d : p.darts) ++deg[d.node];
  return deg;
}

FaceMap face_map(const Planarization& p) {
  const int n = p.num_darts();
  std::vector<DartId> prev(n);
  for (DartId d = 0; d < n; ++d) prev[p.next(d)] = d;
  FaceMap fm;
  fm.face_of_dart.assign(n, kNone);
  for (DartId d = 0; d < n; ++d) {
    if (fm.face_of_dart[d] != kNone) continue;
    const int f = static_cast<int>(fm.faces.size());
    fm.faces.emplace_back();
    DartId x = d;
    while (fm.face_of_dart[x] == kNone) {
      fm.face_of_dart[x] = f;
      fm.faces.back().push_back(x);
      x = prev[p.twin(x)];
    }
  }
  return fm;
}

}  // namespace kplanar
