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


#include "kplanar/families.hpp"

#include <algorithm>
#include <filesystem>
#include <functional>
#include <map>

#include "kplanar/core.hpp"
#include "kplanar/dsl.hpp"
#include "kplanar/error.hpp"
#include "kplanar/saturation.hpp"
#include "kplanar/seeds.hpp"
#include "kplanar/sketch.hpp"

namespace kplanar {

namespace {

int choose2(int x) { return x * (x - 1) / 2; }

Planarization complete(const Sketch& sk) {
  return add_isolated_in_empty_cells(sk.build());
}

bool tight_in_style(const Planarization& p, Family f, int k) {
  if (!is_tight(p, k)) return false;
  for (unsigned x : family_info(f).styles) {
    if (x & kH) continue;
    if (!check_style(p, {k, x}).in_style) return false;
  }
  return true;
}

Planarization checked(Planarization p, Family f, int k) {
  const Expected want = expected_counts(f, k);
  int n = 0, cr = 0;
  for (const Node& node : p.nodes) (node.kind == NodeKind::Crossing ? cr : n)++;
  if (!is_tight(p, k) || p.num_edges() != want.m || n != want.n || cr != want.cr) {
    throw GeneralizationUnverified(std::string(to_string(f)) + " at k = " + std::to_string(k) + " is not tight with the expected counts");
  }
  for (unsigned x : family_info(f).styles) {
    if (!check_style(p, {k, x}).in_style) {
      throw GeneralizationUnverified(std::string(to_string(f)) + " at k = " + std::to_string(k) + " leaves style " + restrictions_to_set(x));
    }
  }
  return p;
}

Sketch seed_sketch(const std::string& name) { return Sketch(parse(seed_text(name))); }

// Degree-1 real vertex at the end of edge e.
NodeId loose_end(const Sketch& sk, EdgeId e) {
  for (NodeId v = 0; v < sk.num_nodes(); ++v) {
    if (sk.dead_node(v) || sk.kind(v) != NodeKind::Real) continue;
    const auto ds = sk.darts_at(v);
    if (ds.size() == 1 && sk.edge(ds[0]) == e) return v;
  }
  throw GeneralizationUnverified("edge " + std::to_string(e) + " has no loose end");
}

// Depth-first routing of one new edge. Every required crossing is made
// exactly once; after each crossing, the faces along the finished segment may
// hold at most `cap` vertices.
class Router {
 public:
  using Accept = std::function<bool(const Sketch&, NodeId end)>;

  Router(int cap, NodeId end, Accept accept, long budget = 2000000)
      : cap_(cap), end_(end), accept_(std::move(accept)), budget_(budget) {}

  bool from_vertex(const Sketch& sk, NodeId start, EdgeId e,
                   const std::vector<int>& need) {
    for (DartId c : sk.darts_at(start)) {
      Sketch s = sk;
      Pen pen = s.pen_at(start, c, e);
      if (walk(s, pen, need)) return true;
    }
    return false;
  }

  bool from_fresh(const Sketch& sk, EdgeId e, const std::vector<int>& need) {
    std::vector<bool> seen(sk.num_darts(), false);
    for (DartId h : sk.live_darts()) {
      if (seen[h]) continue;
      for (DartId x : sk.face(h)) seen[x] = true;
      Sketch s = sk;
      Pen pen = s.pen_fresh(e, h);
      if (walk(s, pen, need)) return true;
    }
    return false;
  }

  bool exhausted() const { return budget_ < 0; }

 private:
  bool walk(const Sketch& sk, const Pen& pen, const std::vector<int>& need) {
    if (--budget_ < 0) return false;
    if (std::all_of(need.begin(), need.end(), [](int x) { return x == 0; })) {
      return finish(sk, pen);
    }
    for (DartId h : sk.pen_candidates(pen)) {
      const EdgeId e = sk.edge(h);
      if (need[e] == 0) continue;
      Sketch s = sk;
      Pen p = pen;
      const NodeId x = s.cross(p, h);
      bool ok = true;
      for (DartId d : s.darts_at(x)) {
        if (s.edge(d) != p.edge || d == (p.tip_dart ^ 1)) continue;
        if (s.face_vertex_count(d) > cap_ || s.face_vertex_count(d ^ 1) > cap_) ok = false;
      }
      if (!ok) continue;
      std::vector<int> rest = need;
      --rest[e];
      if (walk(s, p, rest)) return true;
    }
    return false;
  }

  bool finish(const Sketch& sk, const Pen& pen) {
    if (end_ == kNone) {
      if (sk.face_vertex_count(pen.tip_dart) != 0) return false;
      Sketch s = sk;
      Pen p = pen;
      return accept_(s, s.end_new(p));
    }
    for (DartId c : sk.pen_face(pen)) {
      if (sk.node(c) != end_) continue;
      Sketch s = sk;
      Pen p = pen;
      s.end_at(p, end_, c);
      if (accept_(s, end_)) return true;
    }
    return false;
  }

  int cap_;
  NodeId end_;
  Accept accept_;
  long budget_;
};

[[noreturn]] void unverified(Family f, int k, const std::string& why) {
  throw GeneralizationUnverified(std::string(to_string(f)) + " at k = " + std::to_string(k) + ": " + why);
}

// Sketches of the spiral without isolated vertices, one per even k.
Sketch spiral_sketch(int k) {
  if (k == 4) {
    for (bool flip : {false, true}) {
      Sketch sk;
      const NodeId u = sk.add_node(NodeKind::Real);
      const EdgeId e = sk.add_edge();
      Pen pen = sk.pen_at(u, kNone, e);
      sk.curl(pen, flip);
      for (DartId h : sk.pen_candidates(pen)) {
        if (sk.edge(h) != e || sk.node(h) != sk.node(h ^ 1)) continue;
        Sketch s = sk;
        Pen p = pen;
        s.cross(p, h);
        s.end_new(p);
        if (tight_in_style(complete(s), Family::Spiral, 4)) return s;
      }
    }
    unverified(Family::Spiral, 4, "no base spiral");
  }
  const Sketch base = spiral_sketch(k - 2);
  for (bool flip : {false, true}) {
    Sketch s = base;
    Pen pen = s.reopen(loose_end(s, 0));
    s.curl(pen, flip);
    s.end_new(pen);
    if (tight_in_style(complete(s), Family::Spiral, k)) return s;
  }
  unverified(Family::Spiral, k, "curl extension failed");
}

Sketch odd_pair_sketch(int k) {
  if (k == 5) return seed_sketch("oddpair_5");
  const Sketch base = odd_pair_sketch(k - 2);
  for (int flips = 0; flips < 4; ++flips) {
    Sketch s = base;
    for (EdgeId e = 0; e < 2; ++e) {
      Pen pen = s.reopen(loose_end(s, e));
      s.curl(pen, (flips >> e) & 1);
      s.end_new(pen);
    }
    if (tight_in_style(complete(s), Family::OddPair, k)) return s;
  }
  unverified(Family::OddPair, k, "curl extension failed");
}

Sketch weave_sketch(int k) {
  if (k == 4) return seed_sketch("weave_4");
  if (k == 5) return seed_sketch("weave_5");
  const Sketch base = weave_sketch(k - 1);
  // Zigzag: one end of edge 0 hooks once more around edge 1.
  for (NodeId v = 0; v < base.num_nodes(); ++v) {
    if (base.dead_node(v) || base.kind(v) != NodeKind::Real) continue;
    const auto ds = base.darts_at(v);
    if (ds.size() != 1 || base.edge(ds[0]) != 0) continue;
    Sketch s0 = base;
    const Pen pen = s0.reopen(v);
    for (DartId h : s0.pen_candidates(pen)) {
      if (s0.edge(h) != 1 || s0.face_vertex_count(h ^ 1) != 0) continue;
      Sketch s = s0;
      Pen p = pen;
      s.cross(p, h);
      s.end_new(p);
      if (tight_in_style(complete(s), Family::Weave, k)) return s;
    }
  }
  unverified(Family::Weave, k, "zigzag step failed");
}

Sketch star_sketch(int k) {
  if (k == 4) return seed_sketch("star_4");
  const Sketch base = star_sketch(k - 1);
  NodeId center = kNone;
  size_t best = 0;
  for (NodeId v = 0; v < base.num_nodes(); ++v) {
    if (base.dead_node(v) || base.kind(v) != NodeKind::Real) continue;
    const size_t deg = base.darts_at(v).size();
    if (deg > best) {
      best = deg;
      center = v;
    }
  }
  Sketch out = base;
  const EdgeId e = out.add_edge();
  std::vector<int> need(e + 1, 1);
  std::optional<Sketch> found;
  Router r(1, kNone, [&](const Sketch& s, NodeId) {
    if (!tight_in_style(complete(s), Family::Star, k)) return false;
    found = s;
    return true;
  });
  if (!r.from_vertex(out, center, e, need)) unverified(Family::Star, k, "no route for the new edge");
  return *found;
}

Sketch cycle_sketch(int k) {
  if (k == 4) return seed_sketch("cycle_4");
  const Sketch base = cycle_sketch(k - 1);
  const Planarization bp = base.build();
  const EdgeId last = base.num_edges() - 1;
  const auto ends = edge_endpoints(bp);
  std::optional<Sketch> found;
  for (int orient = 0; orient < 2 && !found; ++orient) {
    NodeId a = ends[last].first, b = ends[last].second;
    if (orient) std::swap(a, b);
    Sketch s = Sketch(bp);
    s.remove_edge(last);
    const EdgeId e2 = s.add_edge();
    std::vector<int> need1(e2 + 1, 1);
    need1[last] = need1[e2] = 0;
    Router first(2, kNone, [&](const Sketch& s1, NodeId x) {
      std::vector<int> need2(e2 + 1, 1);
      need2[e2] = 0;
      Router second(1, b, [&](const Sketch& s2, NodeId) {
        if (!tight_in_style(complete(s2), Family::Cycle, k)) return false;
        found = s2;
        return true;
      }, 20000);
      return second.from_vertex(s1, x, e2, need2);
    });
    first.from_vertex(s, a, last, need1);
  }
  if (!found) unverified(Family::Cycle, k, "no rerouting of the closing edge");
  return *found;
}

Sketch matching_sketch(Family f, int k, const std::string& seed, int k0,
                       int cap, bool self) {
  if (k == k0) return seed_sketch(seed);
  const Sketch base = matching_sketch(f, k - 1, seed, k0, cap, self);
  Sketch out = base;
  const EdgeId e = out.add_edge();
  std::vector<int> need(e + 1, 1);
  need[e] = self ? 1 : 0;
  std::optional<Sketch> found;
  Router r(cap, kNone, [&](const Sketch& s, NodeId) {
    if (!tight_in_style(complete(s), f, k)) return false;
    found = s;
    return true;
  });
  if (!r.from_fresh(out, e, need)) unverified(f, k, "no route for the new edge");
  return *found;
}

void require_range(Family f, int k) {
  if (family_accepts(f, k)) return;
  const FamilyInfo& info = family_info(f);
  if (info.parity >= 0 && k >= info.k_min && k % 2 != info.parity) {
    throw BadParity(std::string(to_string(f)) + " needs " + (info.parity ? "odd" : "even") + " k");
  }
  throw InvalidArgument(std::string(to_string(f)) + " is not defined for k = " + std::to_string(k));
}

Planarization build_family(Family f, int k) {
  require_range(f, k);
  switch (f) {
    case Family::Spiral:
      return complete(spiral_sketch(k));
    case Family::OddPair:
      return complete(odd_pair_sketch(k));
    case Family::Weave:
      return complete(weave_sketch(k));
    case Family::Star:
      return complete(star_sketch(k));
    case Family::Cycle:
      return complete(cycle_sketch(k));
    case Family::IM4:
      return complete(seed_sketch("im_4"));
    case Family::IMMatching:
      return complete(matching_sketch(f, k, "imm_5", 5, 2, true));
    case Family::SIMMatching:
      return complete(matching_sketch(f, k, "simm_7", 7, 1, false));
  }
  throw InvalidArgument("unknown family");
}

const std::map<Family, FamilyInfo>& infos() {
  static const std::map<Family, FamilyInfo> table = {
      {Family::Spiral, {Family::Spiral, {0, kI}, 4, -1, 0, "one edge curled into k/2 selfcrossings"}},
      {Family::OddPair, {Family::OddPair, {0, kI}, 5, -1, 1, "two edges, seeded at k = 5 and extended by curls"}},
      {Family::Weave, {Family::Weave, {kS, kS | kI}, 4, -1, -1, "two edges weaving, seeded at k = 4, 5 and extended by zigzags"}},
      {Family::Star, {Family::Star, {kM}, 4, -1, -1, "star seeded at k = 4, one routed edge per step"}},
      {Family::Cycle, {Family::Cycle, {kS | kM}, 4, -1, -1, "cycle seeded at k = 4, closing edge rerouted per step"}},
      {Family::IM4, {Family::IM4, {kI | kM}, 4, 4, -1, "two paths of length two"}},
      {Family::IMMatching, {Family::IMMatching, {kI | kM}, 5, -1, -1, "matching seeded at k = 5, one routed edge per step"}},
      {Family::SIMMatching, {Family::SIMMatching, {kS | kI | kM, kS | kI | kM | kH}, 7, -1, -1, "matching seeded at k = 7, one routed edge per step"}},
  };
  return table;
}

}  // namespace

const char* to_string(Family f) {
  switch (f) {
    case Family::Spiral:
      return "spiral";
    case Family::OddPair:
      return "odd-pair";
    case Family::Weave:
      return "weave";
    case Family::Star:
      return "star";
    case Family::Cycle:
      return "cycle";
    case Family::IM4:
      return "im4";
    case Family::IMMatching:
      return "im-matching";
    case Family::SIMMatching:
      return "sim-matching";
  }
  return "?";
}

Family family_from_string(const std::string& name) {
  for (Family f : all_families()) {
    if (name == to_string(f)) return f;
  }
  throw InvalidArgument("unknown family '" + name + "'");
}

std::vector<Family> all_families() {
  return {Family::Spiral, Family::OddPair, Family::Weave, Family::Star,
          Family::Cycle, Family::IM4, Family::IMMatching, Family::SIMMatching};
}

const FamilyInfo& family_info(Family f) { return infos().at(f); }

bool family_accepts(Family f, int k) {
  const FamilyInfo& info = family_info(f);
  if (k < info.k_min || (info.k_max >= 0 && k > info.k_max)) return false;
  return info.parity < 0 || k % 2 == info.parity;
}

Expected expected_counts(Family f, int k) {
  switch (f) {
    case Family::Spiral:
      return {1, (k + 2) / 2, k / 2};
    case Family::OddPair:
    case Family::Weave:
      return {2, k, k};
    case Family::Star:
    case Family::IMMatching:
      return {k - 1, choose2(k - 1) + 2, choose2(k)};
    case Family::Cycle:
    case Family::SIMMatching:
      return {k + 1, choose2(k) + 1, choose2(k + 1)};
    case Family::IM4:
      return {4, 6, 8};
  }
  return {};
}

Planarization generate(Family f, int k) { return checked(build_family(f, k), f, k); }

Planarization gen_spiral(int k) { return generate(Family::Spiral, k); }
Planarization gen_odd_pair(int k) { return generate(Family::OddPair, k); }
Planarization gen_weave(int k) { return generate(Family::Weave, k); }
Planarization gen_star(int k) { return generate(Family::Star, k); }
Planarization gen_cycle(int k) { return generate(Family::Cycle, k); }
Planarization gen_im(int k) {
  return generate(k == 4 ? Family::IM4 : Family::IMMatching, k);
}
Planarization gen_sim_matching(int k) { return generate(Family::SIMMatching, k); }

std::optional<Family> family_for(const StyleSpec& s) {
  const int k = s.k;
  const unsigned x = s.restrictions & (kS | kI | kM);
  if (k < 4) return std::nullopt;
  if (s.has(kH) && x != (kS | kI | kM)) return std::nullopt;
  switch (x) {
    case 0:
    case kI:
      return k % 2 == 0 ? Family::Spiral : Family::OddPair;
    case kS:
    case kS | kI:
      return Family::Weave;
    case kM:
      return Family::Star;
    case kS | kM:
      return Family::Cycle;
    case kI | kM:
      return k == 4 ? Family::IM4 : Family::IMMatching;
    default:
      if (k < 7) return std::nullopt;
      return Family::SIMMatching;
  }
}

std::string catalog_file_name(Family f, int k) {
  return std::string(to_string(f)) + "_" + std::to_string(k) + ".kpd";
}

CatalogEntry load_catalog_entry(const std::string& dir, Family f, int k) {
  CatalogEntry entry;
  entry.family = f;
  entry.k = k;
  entry.source = family_info(f).source;
  entry.drawing = parse(read_file((std::filesystem::path(dir) / catalog_file_name(f, k)).string()));
  entry.expected = expected_counts(f, k);
  return entry;
}

std::vector<CatalogEntry> load_catalog(const std::string& dir) {
  std::vector<CatalogEntry> out;
  for (Family f : all_families()) {
    for (int k = 1; k <= 64; ++k) {
      if (std::filesystem::exists(std::filesystem::path(dir) / catalog_file_name(f, k))) {
        out.push_back(load_catalog_entry(dir, f, k));
      }
    }
  }
  return out;
}

}  // namespace kplanar
