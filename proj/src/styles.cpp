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


#include "kplanar/styles.hpp"

#include <algorithm>
#include <boost/pending/disjoint_sets.hpp>
#include <cctype>
#include <map>
#include <set>

#include "kplanar/core.hpp"
#include "kplanar/error.hpp"

namespace kplanar {

namespace {

// Edge pair (a <= b) of every crossing node; a == b for a selfcrossing.
std::vector<std::pair<NodeId, std::pair<EdgeId, EdgeId>>> crossing_pairs(
    const Planarization& p) {
  std::vector<std::pair<NodeId, std::pair<EdgeId, EdgeId>>> out;
  const auto rot = rotations(p);
  for (NodeId x = 0; x < p.num_nodes(); ++x) {
    if (p.nodes[x].kind != NodeKind::Crossing) continue;
    const EdgeId a = p.darts[rot[x][0]].edge, b = p.darts[rot[x][1]].edge;
    out.push_back({x, {std::min(a, b), std::max(a, b)}});
  }
  return out;
}

bool share_endpoint(std::pair<NodeId, NodeId> a, std::pair<NodeId, NodeId> b) {
  return a.first == b.first || a.first == b.second || a.second == b.first ||
         a.second == b.second;
}

}  // namespace

unsigned parse_restrictions(const std::string& text) {
  unsigned out = 0;
  for (char ch : text) {
    switch (std::tolower(static_cast<unsigned char>(ch))) {
      case 's':
        out |= kS;
        break;
      case 'i':
        out |= kI;
        break;
      case 'm':
        out |= kM;
        break;
      case 'h':
        out |= kH;
        break;
      case ',':
      case ' ':
      case '{':
      case '}':
        break;
      default:
        throw InvalidArgument(std::string("unknown restriction '") + ch + "'");
    }
  }
  return out;
}

std::string restrictions_to_string(unsigned r) {
  std::string out;
  for (auto [bit, ch] : {std::pair{kS, 's'}, {kI, 'i'}, {kM, 'm'}, {kH, 'h'}}) {
    if (!(r & bit)) continue;
    if (!out.empty()) out += ',';
    out += ch;
  }
  return out;
}

std::string restrictions_to_set(unsigned r) {
  std::string out = restrictions_to_string(r);
  for (char& ch : out) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  return "{" + out + "}";
}

void StyleVerdict::add(StyleViolation v) {
  in_style = false;
  violations.push_back(std::move(v));
}

void StyleVerdict::merge(const StyleVerdict& other) {
  for (const StyleViolation& v : other.violations) add(v);
}

StyleVerdict check_k_planar(const Planarization& p, int k) {
  StyleVerdict out;
  for (const EdgeTrace& t : trace_edges(p)) {
    if (t.crossing_count > k) {
      out.add({'k', {t.edge}, {}, "crossed " + std::to_string(t.crossing_count) + " times"});
    }
  }
  return out;
}

StyleVerdict check_single_crossing(const Planarization& p) {
  std::map<std::pair<EdgeId, EdgeId>, std::vector<NodeId>> shared;
  for (const auto& [x, ab] : crossing_pairs(p)) shared[ab].push_back(x);
  StyleVerdict out;
  for (const auto& [ab, xs] : shared) {
    if (xs.size() < 2) continue;
    if (ab.first == ab.second) {
      out.add({'M', {ab.first}, xs, "edge crosses itself " + std::to_string(xs.size()) + " times"});
    } else {
      out.add({'M', {ab.first, ab.second}, xs, "edges cross " + std::to_string(xs.size()) + " times"});
    }
  }
  return out;
}

StyleVerdict check_locally_starlike(const Planarization& p) {
  const auto ends = edge_endpoints(p);
  StyleVerdict out;
  for (const auto& [x, ab] : crossing_pairs(p)) {
    if (ab.first != ab.second && share_endpoint(ends[ab.first], ends[ab.second])) {
      out.add({'I', {ab.first, ab.second}, {x}, "incident edges cross"});
    }
  }
  return out;
}

StyleVerdict check_selfcrossing_free(const Planarization& p) {
  StyleVerdict out;
  for (const auto& [x, ab] : crossing_pairs(p)) {
    if (ab.first == ab.second) out.add({'S', {ab.first}, {x}, "selfcrossing"});
  }
  return out;
}

bool parallel_edges_homotopic(const Planarization& p, EdgeId e, EdgeId f) {
  const auto ends = edge_endpoints(p);
  auto key = [](std::pair<NodeId, NodeId> uv) {
    return std::minmax(uv.first, uv.second);
  };
  if (e == f || key(ends[e]) != key(ends[f])) {
    throw InvalidArgument("edges are not distinct parallel edges");
  }
  const CellMap cm = cells(p);
  const int C = static_cast<int>(cm.cells.size());
  boost::disjoint_sets_with_storage<> ds(C);
  for (DartId d = 0; d < p.num_darts(); ++d) {
    const EdgeId g = p.darts[d].edge;
    if (g != e && g != f) ds.union_set(cm.cell_of_dart[d], cm.cell_of_dart[p.twin(d)]);
  }
  const auto traces = trace_edges(p);
  const DartId first = traces[e].segments.front();
  const int left = ds.find_set(cm.cell_of_dart[first]);
  const int right = ds.find_set(cm.cell_of_dart[p.twin(first)]);
  const auto [u, v] = key(ends[e]);
  bool left_has = false, right_has = false;
  for (int c = 0; c < C; ++c) {
    const int side = ds.find_set(c);
    for (NodeId w : cm.cells[c].incident) {
      if (w == u || w == v) continue;
      left_has |= side == left;
      right_has |= side == right;
    }
  }
  return !(left_has && right_has);
}

StyleVerdict check_homotopy_free(const Planarization& p) {
  if (!check_selfcrossing_free(p).in_style || !check_locally_starlike(p).in_style) {
    throw Unsupported("homotopy is only decided for selfcrossing-free, locally starlike drawings");
  }
  const auto ends = edge_endpoints(p);
  std::map<std::pair<NodeId, NodeId>, std::vector<EdgeId>> bundles;
  for (EdgeId e = 0; e < p.num_edges(); ++e) {
    bundles[std::minmax(ends[e].first, ends[e].second)].push_back(e);
  }
  StyleVerdict out;
  for (const auto& [uv, es] : bundles) {
    for (size_t i = 0; i < es.size(); ++i) {
      for (size_t j = i + 1; j < es.size(); ++j) {
        if (parallel_edges_homotopic(p, es[i], es[j])) {
          out.add({'H', {es[i], es[j]}, {uv.first, uv.second}, "parallel edges are homotopic"});
        }
      }
    }
  }
  return out;
}

StyleVerdict check_style(const Planarization& p, const StyleSpec& s) {
  StyleVerdict out = check_k_planar(p, s.k);
  if (s.has(kS)) out.merge(check_selfcrossing_free(p));
  if (s.has(kI)) out.merge(check_locally_starlike(p));
  if (s.has(kM)) out.merge(check_single_crossing(p));
  if (s.has(kH)) out.merge(check_homotopy_free(p));
  return out;
}

}  // namespace kplanar
