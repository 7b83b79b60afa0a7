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


#include "kplanar/search.hpp"

#include <algorithm>
#include <set>

#include "kplanar/core.hpp"
#include "kplanar/error.hpp"
#include "kplanar/saturation.hpp"
#include "kplanar/sketch.hpp"

namespace kplanar {

namespace {

constexpr int kExhaustiveEdges = 4;

struct State {
  Sketch sk;
  std::vector<std::pair<NodeId, NodeId>> ends;
  std::vector<int> cc;  // crossing count per edge
};

class Searcher {
 public:
  Searcher(const StyleSpec& s, int m_max, const SearchOptions& opt)
      : s_(s), m_max_(m_max), opt_(opt) {}

  SearchResult run() {
    if (m_max_ >= 1 && !hopeless()) next_edge(State{});
    out_.exhaustive = !out_.budget_exceeded && m_max_ <= kExhaustiveEdges;
    return std::move(out_);
  }

 private:
  // Under M an edge is crossed at most once by every other edge and once by
  // itself, so it cannot collect k crossings with too few edges.
  bool hopeless() const {
    if (!opt_.capacity_pruning || !s_.has(kM)) return false;
    return (s_.has(kS) ? 0 : 2) + m_max_ - 1 < s_.k;
  }

  bool can_still_be_tight(const State& st) const {
    if (!opt_.capacity_pruning) return true;
    const int left = m_max_ - st.sk.num_edges();
    const int per_edge = s_.has(kM) ? 1 : s_.k;
    for (int c : st.cc) {
      if (s_.k - c > left * per_edge) return false;
    }
    return true;
  }

  bool tick() {
    if (out_.budget_exceeded) return false;
    if (++out_.nodes > opt_.budget) {
      out_.budget_exceeded = true;
      return false;
    }
    return true;
  }

  void next_edge(const State& st) {
    if (!tick()) return;
    const int m = st.sk.num_edges();
    if (m > 0) {
      const Planarization p = st.sk.build();
      if (!seen_.insert(canonical_code(p)).second) return;
      ++out_.prefixes;
      evaluate(p);
    }
    if (m == m_max_ || !can_still_be_tight(st)) return;

    // Starts at every corner of every vertex.
    for (NodeId v = 0; v < st.sk.num_nodes(); ++v) {
      if (st.sk.dead_node(v) || st.sk.kind(v) != NodeKind::Real) continue;
      for (DartId c : st.sk.darts_at(v)) {
        State nx = st;
        const EdgeId e = nx.sk.add_edge();
        Pen pen = nx.sk.pen_at(v, c, e);
        start(nx, pen);
      }
    }
    // Starts at a new vertex in every face.
    if (m == 0) {
      State nx = st;
      const EdgeId e = nx.sk.add_edge();
      Pen pen = nx.sk.pen_fresh(e, kNone);
      start(nx, pen);
      return;
    }
    std::vector<bool> done(st.sk.num_darts(), false);
    for (DartId h : st.sk.live_darts()) {
      if (done[h]) continue;
      for (DartId d : st.sk.face(h)) done[d] = true;
      State nx = st;
      const EdgeId e = nx.sk.add_edge();
      Pen pen = nx.sk.pen_fresh(e, h);
      start(nx, pen);
    }
  }

  void start(State& st, Pen& pen) {
    st.ends.push_back({pen.start, kNone});
    st.cc.push_back(0);
    std::vector<int> crossed(st.cc.size(), 0);
    draw(st, pen, crossed);
  }

  bool incident(const State& st, EdgeId g, NodeId v) const {
    return st.ends[g].first == v || st.ends[g].second == v;
  }

  // crossed[g]: crossings of the pen edge with g (with itself for g == e).
  void draw(const State& st, const Pen& pen, const std::vector<int>& crossed) {
    if (!tick()) return;
    const EdgeId e = pen.edge;

    // Finish at a vertex of the pen face.
    for (DartId c : st.sk.pen_face(pen)) {
      const NodeId v = st.sk.node(c);
      if (st.sk.kind(v) != NodeKind::Real || st.sk.is_tip(v) || v == pen.start) continue;
      if (s_.has(kI)) {
        bool bad = false;
        for (EdgeId g = 0; g < e && !bad; ++g) bad = crossed[g] > 0 && incident(st, g, v);
        if (bad) continue;
      }
      State nx = st;
      Pen p2 = pen;
      nx.sk.end_at(p2, v, c);
      nx.ends[e].second = v;
      next_edge(nx);
    }
    // Finish at a new vertex; a detached curve would be a second component.
    if (!pen.detached) {
      State nx = st;
      Pen p2 = pen;
      nx.ends[e].second = nx.sk.end_new(p2);
      next_edge(nx);
    }

    const bool self_ok = !s_.has(kS) && st.cc[e] + 2 <= s_.k &&
                         !(s_.has(kM) && crossed[e] >= 1);
    for (DartId h : st.sk.pen_candidates(pen)) {
      const EdgeId g = st.sk.edge(h);
      if (g == e) {
        if (!self_ok) continue;
      } else {
        if (st.cc[e] + 1 > s_.k || st.cc[g] + 1 > s_.k) continue;
        if (s_.has(kM) && crossed[g] >= 1) continue;
        if (s_.has(kI) && incident(st, g, pen.start)) continue;
      }
      State nx = st;
      Pen p2 = pen;
      nx.sk.cross(p2, h);
      std::vector<int> c2 = crossed;
      ++c2[g];
      if (g == e) {
        nx.cc[e] += 2;
      } else {
        ++nx.cc[e];
        ++nx.cc[g];
      }
      draw(nx, p2, c2);
    }
    if (self_ok) {
      for (bool flip : {false, true}) {
        State nx = st;
        Pen p2 = pen;
        nx.sk.curl(p2, flip);
        nx.cc[e] += 2;
        std::vector<int> c2 = crossed;
        ++c2[e];
        draw(nx, p2, c2);
      }
    }
  }

  void evaluate(const Planarization& prefix) {
    const Planarization p = add_isolated_in_empty_cells(prefix);
    if (!components_and_cuts(p).essentially_2_connected) return;
    if (!is_tight(p, s_.k)) return;
    if (s_.has(kH) && !(s_.has(kS) && s_.has(kI))) {
      throw Unsupported("search with H needs S and I");
    }
    if (!check_style(p, s_).in_style) return;
    if (found_.insert(canonical_code(p)).second) out_.drawings.push_back(p);
  }

  StyleSpec s_;
  int m_max_;
  SearchOptions opt_;
  SearchResult out_;
  std::set<std::vector<int>> seen_, found_;
};

}  // namespace

SearchResult search_tight(const StyleSpec& s, int m_max, const SearchOptions& opt) {
  if (s.k < 1) throw InvalidArgument("k must be positive");
  if (m_max < 0) throw InvalidArgument("m_max must be non-negative");
  return Searcher(s, m_max, opt).run();
}

}  // namespace kplanar
