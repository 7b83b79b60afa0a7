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


#include "kplanar/saturation.hpp"

#include <algorithm>
#include <boost/pending/disjoint_sets.hpp>
#include <functional>
#include <map>
#include <set>

#include "kplanar/core.hpp"
#include "kplanar/error.hpp"
#include "kplanar/sketch.hpp"

namespace kplanar {

namespace {

struct State {
  int cell;
  std::vector<unsigned char> usage;
  int parent;
  DartId via;
  int length;
};

bool dominates(const std::vector<unsigned char>& a,
               const std::vector<unsigned char>& b) {
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

class Oracle {
 public:
  Oracle(const Planarization& p, const StyleSpec& s)
      : p_(p), s_(s), cm_(cells(p)), ends_(edge_endpoints(p)) {
    const std::vector<int> cc = crossing_counts(p);
    budget_.resize(p.num_edges());
    for (EdgeId e = 0; e < p.num_edges(); ++e) {
      budget_[e] = std::max(0, s.k - cc[e]);
      if (s.has(kM)) budget_[e] = std::min(budget_[e], 1);
    }
    cells_of_.resize(p.num_nodes());
    darts_of_cell_.resize(cm_.cells.size());
    for (const Cell& c : cm_.cells) {
      for (NodeId w : c.incident) cells_of_[w].push_back(c.id);
    }
    for (DartId d = 0; d < p.num_darts(); ++d) darts_of_cell_[cm_.cell_of_dart[d]].push_back(d);
    incident_.resize(p.num_nodes());
    for (EdgeId e = 0; e < p.num_edges(); ++e) {
      incident_[ends_[e].first].push_back(e);
      incident_[ends_[e].second].push_back(e);
      parallel_.insert(std::minmax(ends_[e].first, ends_[e].second));
    }
  }

  // Shortest surviving walk from u to every reachable v.
  std::map<NodeId, InsertionWitness> from(NodeId u) {
    std::vector<State> states;
    std::vector<std::vector<int>> at(cm_.cells.size());
    std::vector<unsigned char> limit(budget_.begin(), budget_.end());
    if (s_.has(kI)) {
      for (EdgeId e : incident_[u]) limit[e] = 0;
    }
    std::vector<int> frontier;
    for (int c : cells_of_[u]) {
      states.push_back({c, std::vector<unsigned char>(p_.num_edges(), 0), kNone, kNone, 0});
      at[c].push_back(static_cast<int>(states.size()) - 1);
      frontier.push_back(static_cast<int>(states.size()) - 1);
    }
    std::map<NodeId, int> best;
    for (int length = 0; !frontier.empty(); ++length) {
      for (int i : frontier) {
        const State& st = states[i];
        for (NodeId v : cm_.cells[st.cell].incident) {
          if (v == u || best.count(v) || !target_ok(u, v, st)) continue;
          best[v] = i;
        }
      }
      if (length == s_.k) break;
      std::vector<int> next;
      for (int i : frontier) {
        for (DartId d : darts_of_cell_[states[i].cell]) {
          const EdgeId e = p_.darts[d].edge;
          if (states[i].usage[e] >= limit[e]) continue;
          std::vector<unsigned char> usage = states[i].usage;
          ++usage[e];
          const int c = cm_.cell_of_dart[p_.twin(d)];
          bool dominated = false;
          for (int j : at[c]) {
            if (dominates(states[j].usage, usage)) {
              dominated = true;
              break;
            }
          }
          if (dominated) continue;
          states.push_back({c, std::move(usage), i, d, length + 1});
          at[c].push_back(static_cast<int>(states.size()) - 1);
          next.push_back(static_cast<int>(states.size()) - 1);
        }
      }
      frontier = std::move(next);
    }
    std::map<NodeId, InsertionWitness> out;
    for (auto [v, i] : best) {
      InsertionWitness w;
      w.u = u;
      w.v = v;
      w.end_cell = states[i].cell;
      int j = i;
      for (; states[j].parent != kNone; j = states[j].parent) {
        w.walk.push_back({states[j].via, p_.darts[states[j].via].edge});
      }
      w.start_cell = states[j].cell;
      std::reverse(w.walk.begin(), w.walk.end());
      w.needs_simple_realization = s_.has(kS);
      w.realization_status = realization(w);
      out[v] = std::move(w);
    }
    return out;
  }

  std::vector<NodeId> vertices() const {
    std::vector<NodeId> out;
    for (NodeId v = 0; v < p_.num_nodes(); ++v) {
      if (is_vertex(p_.nodes[v].kind)) out.push_back(v);
    }
    return out;
  }

 private:
  bool target_ok(NodeId u, NodeId v, const State& st) const {
    if (s_.has(kI)) {
      for (EdgeId e : incident_[v]) {
        if (st.usage[e] > 0) return false;
      }
    }
    if (st.length == 0 && s_.has(kH) && parallel_.count(std::minmax(u, v))) {
      return chord_escapes_homotopy(u, v, st.cell);
    }
    return true;
  }

  // Whether some chord uv through cell c is homotopic to no parallel edge.
  bool chord_escapes_homotopy(NodeId u, NodeId v, int c) const {
    const FaceMap& fm = cm_.faces;
    const int F = static_cast<int>(fm.faces.size());
    int host = kNone;
    std::vector<int> item_faces;
    for (int f = 0; f < F; ++f) {
      if (cm_.cell_of_face[f] != c) continue;
      bool hu = false, hv = false;
      for (DartId d : fm.faces[f]) {
        hu |= p_.darts[d].node == u;
        hv |= p_.darts[d].node == v;
      }
      if (hu && hv && host == kNone) {
        host = f;
      } else {
        item_faces.push_back(f);
      }
    }
    const int items = static_cast<int>(item_faces.size() + cm_.cells[c].isolated.size());
    if (host == kNone || items >= 2) return true;
    std::vector<EdgeId> parallels;
    for (EdgeId e = 0; e < p_.num_edges(); ++e) {
      if (std::minmax(ends_[e].first, ends_[e].second) == std::minmax(u, v)) parallels.push_back(e);
    }
    const std::vector<DartId>& walk = fm.faces[host];
    const int L = static_cast<int>(walk.size());
    for (int i = 0; i < L; ++i) {
      if (p_.darts[walk[i]].node != u) continue;
      for (int j = 0; j < L; ++j) {
        if (p_.darts[walk[j]].node != v) continue;
        // Darts from position i up to j lie on the first side of the chord.
        std::vector<int> side(p_.num_darts(), kNone);
        for (int t = i; t != j; t = (t + 1) % L) side[walk[t]] = 0;
        for (int t = j; t != i; t = (t + 1) % L) side[walk[t]] = 1;
        for (int assign = 0; assign < (items == 1 ? 2 : 1); ++assign) {
          bool all = true;
          for (EdgeId e : parallels) {
            if (!both_sides_occupied(e, u, v, c, host, side, assign)) {
              all = false;
              break;
            }
          }
          if (all) return true;
        }
      }
    }
    return false;
  }

  bool both_sides_occupied(EdgeId e, NodeId u, NodeId v, int c, int host,
                           const std::vector<int>& side, int assign) const {
    const FaceMap& fm = cm_.faces;
    const int F = static_cast<int>(fm.faces.size());
    const int half[2] = {F, F + 1};
    boost::disjoint_sets_with_storage<> ds(F + 2);
    auto region = [&](DartId d) {
      const int f = fm.face_of_dart[d];
      return f == host ? half[side[d]] : f;
    };
    for (DartId d = 0; d < p_.num_darts(); ++d) {
      if (p_.darts[d].edge != e) ds.union_set(region(d), region(p_.twin(d)));
    }
    std::vector<int> first_face(cm_.cells.size(), kNone);
    for (int f = 0; f < F; ++f) {
      const int cf = cm_.cell_of_face[f];
      if (f == host) continue;
      if (cf == c) {
        ds.union_set(f, half[assign]);
      } else if (first_face[cf] == kNone) {
        first_face[cf] = f;
      } else {
        ds.union_set(f, first_face[cf]);
      }
    }
    bool occupied[2] = {false, false};
    auto mark = [&](int r, NodeId w) {
      if (w == u || w == v) return;
      for (int s = 0; s < 2; ++s) {
        if (ds.find_set(r) == ds.find_set(half[s])) occupied[s] = true;
      }
    };
    for (DartId d = 0; d < p_.num_darts(); ++d) {
      const NodeId w = p_.darts[d].node;
      if (p_.nodes[w].kind == NodeKind::Real) mark(region(d), w);
    }
    for (const Cell& cell : cm_.cells) {
      for (NodeId w : cell.isolated) {
        if (cell.id == c) {
          mark(half[assign], w);
        } else if (first_face[cell.id] != kNone) {
          mark(first_face[cell.id], w);
        }
      }
    }
    return occupied[0] && occupied[1];
  }

  // Cell-simple walks are realized by one arc per cell. Otherwise the arcs
  // sharing a cell must not interleave along a single boundary walk.
  Realization realization(const InsertionWitness& w) const {
    std::vector<int> seq{w.start_cell};
    for (const WalkStep& st : w.walk) seq.push_back(cm_.cell_of_dart[p_.twin(st.dart)]);
    std::set<int> seen(seq.begin(), seq.end());
    if (seen.size() == seq.size()) return Realization::Simple;
    // Chord endpoints in each cell as (face, position); corners of vertices
    // take even positions, segment midpoints odd ones.
    std::map<int, std::vector<std::pair<std::vector<int>, std::vector<int>>>> chords;
    const FaceMap& fm = cm_.faces;
    auto corner_options = [&](NodeId x, int cell) {
      std::vector<int> opts;
      for (int f = 0; f < static_cast<int>(fm.faces.size()); ++f) {
        if (cm_.cell_of_face[f] != cell) continue;
        for (size_t t = 0; t < fm.faces[f].size(); ++t) {
          if (p_.darts[fm.faces[f][t]].node == x) opts.push_back(f * 100000 + 2 * static_cast<int>(t));
        }
      }
      return opts;
    };
    auto mid = [&](DartId d) {
      const int f = fm.face_of_dart[d];
      const auto& face = fm.faces[f];
      const int t = static_cast<int>(std::find(face.begin(), face.end(), d) - face.begin());
      return std::vector<int>{f * 100000 + 2 * t + 1};
    };
    for (size_t i = 0; i < seq.size(); ++i) {
      const std::vector<int> in = i == 0 ? corner_options(w.u, seq[0]) : mid(p_.twin(w.walk[i - 1].dart));
      const std::vector<int> out = i + 1 == seq.size() ? corner_options(w.v, seq[i]) : mid(w.walk[i].dart);
      chords[seq[i]].push_back({in, out});
    }
    for (const auto& [cell, list] : chords) {
      if (list.size() < 2) continue;
      if (!non_interleaving(list)) return Realization::NotCheckedSimple;
    }
    return Realization::Simple;
  }

  static bool non_interleaving(
      const std::vector<std::pair<std::vector<int>, std::vector<int>>>& list) {
    // Endpoint choices only matter for vertex corners; try them all.
    std::vector<std::pair<int, int>> pick(list.size());
    std::function<bool(size_t)> go = [&](size_t i) -> bool {
      if (i == list.size()) {
        std::set<int> faces, points;
        for (auto [a, b] : pick) {
          faces.insert(a / 100000);
          faces.insert(b / 100000);
          if (a % 2 == 1 && !points.insert(a).second) return false;
          if (b % 2 == 1 && !points.insert(b).second) return false;
        }
        if (faces.size() != 1) return false;
        for (size_t x = 0; x < pick.size(); ++x) {
          for (size_t y = x + 1; y < pick.size(); ++y) {
            auto [a, b] = std::minmax(pick[x].first, pick[x].second);
            const int c = pick[y].first, d = pick[y].second;
            const bool ci = a < c && c < b, di = a < d && d < b;
            const bool shared = c == a || c == b || d == a || d == b;
            if (ci != di && !shared) return false;
          }
        }
        return true;
      }
      for (int a : list[i].first) {
        for (int b : list[i].second) {
          pick[i] = {a, b};
          if (go(i + 1)) return true;
        }
      }
      return false;
    };
    return go(0);
  }

  const Planarization& p_;
  StyleSpec s_;
  CellMap cm_;
  std::vector<std::pair<NodeId, NodeId>> ends_;
  std::vector<int> budget_;
  std::vector<std::vector<int>> cells_of_;
  std::vector<std::vector<DartId>> darts_of_cell_;
  std::vector<std::vector<EdgeId>> incident_;
  std::set<std::pair<NodeId, NodeId>> parallel_;
};

}  // namespace

const char* to_string(SaturationStatus s) {
  switch (s) {
    case SaturationStatus::Saturated:
      return "SATURATED";
    case SaturationStatus::Insertable:
      return "INSERTABLE";
    case SaturationStatus::Unknown:
      return "UNKNOWN";
  }
  return "?";
}

const char* to_string(Realization r) {
  return r == Realization::Simple ? "Simple" : "NotCheckedSimple";
}

FilledReport is_filled(const Planarization& p) {
  const CellMap cm = cells(p);
  const std::vector<int> cc = crossing_counts(p);
  FilledReport r;
  for (const Cell& c : cm.cells) {
    std::set<std::pair<NodeId, NodeId>> joined;
    for (const auto& walk : c.boundary_walks) {
      for (DartId d : walk) {
        if (cc[p.darts[d].edge] != 0) continue;
        joined.insert(std::minmax(p.darts[d].node, p.darts[p.twin(d)].node));
      }
    }
    for (size_t i = 0; i < c.incident.size(); ++i) {
      for (size_t j = i + 1; j < c.incident.size(); ++j) {
        if (!joined.count({c.incident[i], c.incident[j]})) {
          r.filled = false;
          r.violations.push_back({c.id, c.incident[i], c.incident[j]});
        }
      }
    }
  }
  return r;
}

bool is_tight(const Planarization& p, int k) {
  if (p.num_edges() == 0) return false;
  for (int c : crossing_counts(p)) {
    if (c != k) return false;
  }
  for (const Cell& c : cells(p).cells) {
    if (c.incident.size() != 1) return false;
  }
  return true;
}

SaturationVerdict check_saturated(const Planarization& p, const StyleSpec& s) {
  if (s.has(kH) && (s.restrictions & (kS | kI | kM)) != (kS | kI | kM)) {
    throw Unsupported("H is only handled together with S, I and M");
  }
  const StyleVerdict sv = check_style(p, s);
  if (!sv.in_style) {
    throw NotInStyle("drawing violates " + std::string(1, sv.violations[0].restriction) +
                     ": " + sv.violations[0].detail);
  }
  Oracle oracle(p, s);
  SaturationVerdict out;
  std::optional<InsertionWitness> unverified;
  for (NodeId u : oracle.vertices()) {
    for (auto& [v, w] : oracle.from(u)) {
      if (w.needs_simple_realization && w.realization_status != Realization::Simple) {
        if (!unverified) unverified = w;
        continue;
      }
      out.status = SaturationStatus::Insertable;
      out.witness = std::move(w);
      return out;
    }
  }
  if (unverified) {
    out.status = SaturationStatus::Unknown;
    out.witness = unverified;
    out.notes.push_back("shortest walks found lack a certified simple realization");
  }
  return out;
}

Planarization insert_witness(const Planarization& p, const InsertionWitness& w) {
  const ConnectivityReport cr = components_and_cuts(p);
  if (cr.components.size() != 1 || p.num_darts() == 0) {
    throw Unsupported("insertion needs a single component with edges");
  }
  for (DartId d = 0; d < p.num_darts(); ++d) {
    if (p.twin(d) != (d ^ 1)) throw Unsupported("darts are not stored in twin pairs");
  }
  const CellMap cm = cells(p);
  Sketch sk(p);
  const EdgeId e = sk.add_edge();
  DartId corner = kNone;
  for (DartId d : sk.darts_at(w.u)) {
    if (cm.cell_of_dart[d] == w.start_cell) {
      corner = d;
      break;
    }
  }
  if (corner == kNone) throw InvalidArgument("start cell is not incident to u");
  Pen pen = sk.pen_at(w.u, corner, e);
  for (const WalkStep& st : w.walk) {
    const auto cand = sk.pen_candidates(pen);
    if (std::find(cand.begin(), cand.end(), st.dart) == cand.end()) {
      throw Unsupported("walk step leaves the current face");
    }
    sk.cross(pen, st.dart);
  }
  DartId end = kNone;
  for (DartId d : sk.pen_face(pen)) {
    if (sk.node(d) == w.v) {
      end = d;
      break;
    }
  }
  if (end == kNone) throw InvalidArgument("end cell is not incident to v");
  sk.end_at(pen, w.v, end);
  Planarization q = sk.build();
  for (NodeId v = 0; v < p.num_nodes(); ++v) q.nodes[v].label = p.nodes[v].label;
  for (EdgeId f = 0; f < p.num_edges(); ++f) q.edges[f] = p.edges[f];
  q.outer = p.outer;
  require_valid(q);
  return q;
}

bool verify_saturated_implies_filled(const Planarization& p, const StyleSpec& s) {
  if (check_saturated(p, s).status != SaturationStatus::Saturated) {
    throw PreconditionFailed("drawing is not saturated");
  }
  return is_filled(p).filled;
}

}  // namespace kplanar
