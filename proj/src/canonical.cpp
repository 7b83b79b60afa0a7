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
#include <sstream>

#include "kplanar/core.hpp"

namespace kplanar {

namespace {

class Canon {
 public:
  explicit Canon(const Planarization& p) : p_(p), cm_(cells(p)) {
    const ConnectivityReport conn = components_and_cuts(p);
    comp_ = conn.component_of_node;
    comp_darts_.resize(conn.components.size());
    for (DartId d = 0; d < p.num_darts(); ++d) {
      comp_darts_[comp_[p.darts[d].node]].push_back(d);
    }
    prev_.resize(p.num_darts());
    for (DartId d = 0; d < p.num_darts(); ++d) prev_[p.next(d)] = d;
    cell_faces_.resize(cm_.cells.size());
    for (int f = 0; f < static_cast<int>(cm_.faces.faces.size()); ++f) {
      const NodeId v = p.darts[cm_.faces.faces[f][0]].node;
      cell_faces_[cm_.cell_of_face[f]].push_back({comp_[v], f});
    }
  }

  std::vector<int> code() {
    int most = 0;
    for (const auto& ds : comp_darts_) most = std::max(most, static_cast<int>(ds.size()));
    if (most == 0) return {-7, p_.num_nodes()};
    std::vector<int> best;
    for (int k = 0; k < static_cast<int>(comp_darts_.size()); ++k) {
      if (static_cast<int>(comp_darts_[k].size()) != most) continue;
      for (DartId d0 : comp_darts_[k]) {
        for (bool mirror : {false, true}) {
          std::vector<int> c = encode(k, d0, mirror, kNone);
          if (best.empty() || c < best) best = std::move(c);
        }
      }
    }
    return best;
  }

 private:
  int face_key(DartId d, bool mirror) const {
    return cm_.faces.face_of_dart[mirror ? p_.twin(d) : d];
  }

  // Least encoding of component k entered through its face lying in `cell`.
  std::vector<int> best_from(int k, int cell, bool mirror) {
    std::vector<int> best;
    for (DartId d0 : comp_darts_[k]) {
      if (cm_.cell_of_face[face_key(d0, mirror)] != cell) continue;
      std::vector<int> c = encode(k, d0, mirror, cell);
      if (best.empty() || c < best) best = std::move(c);
    }
    return best;
  }

  std::vector<int> encode(int k, DartId d0, bool mirror, int from_cell) {
    std::vector<DartId> order{d0};
    std::vector<int> label(p_.num_darts(), kNone);
    label[d0] = 0;
    for (size_t i = 0; i < order.size(); ++i) {
      const DartId x = order[i];
      for (DartId y : {mirror ? prev_[x] : p_.next(x), p_.twin(x)}) {
        if (label[y] == kNone) {
          label[y] = static_cast<int>(order.size());
          order.push_back(y);
        }
      }
    }
    std::vector<int> node_idx(p_.num_nodes(), kNone), edge_idx(p_.num_edges(), kNone);
    int nodes = 0, edges = 0;
    std::vector<int> out{static_cast<int>(order.size())};
    std::vector<int> face_order;
    std::vector<int> face_seen(cm_.faces.faces.size(), 0);
    for (DartId x : order) {
      const NodeId v = p_.darts[x].node;
      const EdgeId e = p_.darts[x].edge;
      if (node_idx[v] == kNone) node_idx[v] = nodes++;
      if (edge_idx[e] == kNone) edge_idx[e] = edges++;
      out.push_back(node_idx[v]);
      out.push_back(p_.nodes[v].kind == NodeKind::Crossing ? 2 : 1);
      out.push_back(label[p_.twin(x)]);
      out.push_back(label[mirror ? prev_[x] : p_.next(x)]);
      out.push_back(edge_idx[e]);
      const int f = face_key(x, mirror);
      if (!face_seen[f]) {
        face_seen[f] = 1;
        face_order.push_back(f);
      }
    }
    for (int f : face_order) {
      const int c = cm_.cell_of_face[f];
      if (c == from_cell) {
        out.push_back(-2);
        continue;
      }
      std::vector<std::vector<int>> kids;
      for (auto [j, g] : cell_faces_[c]) {
        if (j != k) kids.push_back(best_from(j, c, mirror));
      }
      std::sort(kids.begin(), kids.end());
      out.push_back(-3);
      out.push_back(static_cast<int>(cm_.cells[c].isolated.size()));
      out.push_back(static_cast<int>(kids.size()));
      for (const auto& kid : kids) out.insert(out.end(), kid.begin(), kid.end());
    }
    return out;
  }

  const Planarization& p_;
  CellMap cm_;
  std::vector<int> comp_;
  std::vector<std::vector<DartId>> comp_darts_;
  std::vector<DartId> prev_;
  std::vector<std::vector<std::pair<int, int>>> cell_faces_;
};

}  // namespace

std::vector<int> canonical_code(const Planarization& p) {
  require_valid(p);
  return Canon(p).code();
}

std::string canonical_form(const Planarization& p) {
  std::ostringstream out;
  bool first = true;
  for (int x : canonical_code(p)) {
    if (!first) out << ',';
    out << x;
    first = false;
  }
  return out.str();
}

}  // namespace kplanar
