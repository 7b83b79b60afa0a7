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


// Acceptance suite: one PASS or FAIL line per criterion, nonzero exit if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <optional>
#include <random>
#include <tuple>
#include <string>
#include <vector>

#include "drawings.hpp"
#include "kplanar/core.hpp"
#include "kplanar/dsl.hpp"
#include "kplanar/error.hpp"
#include "kplanar/families.hpp"
#include "kplanar/metrics.hpp"
#include "kplanar/render.hpp"
#include "kplanar/saturation.hpp"
#include "kplanar/search.hpp"
#include "kplanar/styles.hpp"
#include "kplanar/table.hpp"
#include "oracles.hpp"

using namespace kplanar;
namespace t = kplanar::testing;

namespace {

const std::string kCatalog = KPLANAR_CATALOG_DIR;

// Collects failures for one criterion; the first few are printed.
struct Check {
  int checks = 0;
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) failures.push_back(what);
  }
};

int vertices(const Planarization& p) {
  return oracle::count_kind(p, NodeKind::Real) + oracle::count_kind(p, NodeKind::Isolated);
}

bool density_exact(const Planarization& p, const Rational& a) {
  return Rational(p.num_edges()) == a * Rational(vertices(p) - 1);
}

std::string name(Family f, int k) { return std::string(to_string(f)) + " k=" + std::to_string(k); }

StyleSpec own_style(Family f, int k) { return {k, family_info(f).styles.front()}; }

std::vector<CatalogEntry>& catalog() {
  static std::vector<CatalogEntry> all = load_catalog(kCatalog);
  return all;
}

// Random composition of 2..5 tight drawings of one style at random glue
// points.
Planarization random_glued(std::mt19937& rng, StyleSpec* style) {
  std::vector<const CatalogEntry*> pool;
  for (const CatalogEntry& e : catalog()) pool.push_back(&e);
  const CatalogEntry& seed = *pool[rng() % pool.size()];
  *style = own_style(seed.family, seed.k);
  Planarization g = seed.drawing;
  const int copies = 2 + static_cast<int>(rng() % 4);
  for (int i = 1; i < copies; ++i) {
    const std::vector<GluePoint> points = glue_points(g);
    const GluePoint at = points[rng() % points.size()];
    const Planarization& d2 = seed.drawing;
    const auto deg = oracle::degree(d2);
    std::vector<NodeId> vs;
    for (NodeId v = 0; v < d2.num_nodes(); ++v) {
      if (d2.nodes[v].kind == NodeKind::Real && deg[v] > 0) vs.push_back(v);
    }
    g = glue(g, at.vertex, d2, vs[rng() % vs.size()], at.cell);
  }
  return g;
}

void lemma32(Check& c, const Planarization& p, int k, const std::string& what) {
  try {
    c.expect(verify_lemma32(p, k).equal, what);
  } catch (const Error& e) {
    c.expect(false, what + ": " + e.what());
  }
}

// 1. Table reproduction and anchors.
void table(Check& c) {
  int pass = 0, open = 0;
  for (unsigned r : table_rows()) {
    for (int k = 4; k <= 12; ++k) {
      const TableCell cell = table_cell({k, r});
      const std::string what = "{" + restrictions_to_string(r) + "} k=" + std::to_string(k);
      if (cell.status == CellStatus::Open) {
        ++open;
        continue;
      }
      c.expect(cell.status == CellStatus::Pass, what + ": " + cell.detail);
      pass += cell.status == CellStatus::Pass;
    }
  }
  for (const CatalogEntry& e : catalog()) {
    for (unsigned s : family_info(e.family).styles) {
      std::optional<Rational> a;
      try {
        a = alpha({e.k, s});
      } catch (const Unresolved&) {
        continue;
      }
      c.expect(density_exact(e.drawing, *a), "catalog " + name(e.family, e.k));
    }
  }
  struct AnchorCase {
    int k;
    unsigned r;
    int m, n;
  };
  for (const AnchorCase& a : std::vector<AnchorCase>{{4, 0, 1, 3},
                                                     {5, kS, 2, 5},
                                                     {4, kM, 3, 5},
                                                     {4, kS | kM, 5, 7},
                                                     {4, kI | kM, 4, 6},
                                                     {7, kS | kI | kM, 8, 22}}) {
    const std::optional<Family> f = family_for({a.k, a.r});
    const std::string what = "anchor {" + restrictions_to_string(a.r) + "} k=" + std::to_string(a.k);
    if (!f) {
      c.expect(false, what + ": no family");
      continue;
    }
    const Planarization p = generate(*f, a.k);
    c.expect(p.num_edges() == a.m && vertices(p) == a.n, what);
    c.expect(density_exact(p, alpha({a.k, a.r})), what + " density");
  }
  std::printf("    %d resolved cells pass, %d open\n", pass, open);
}

// 2. Edge count identity on instances, glued compositions and hand cases.
void lemma32_all(Check& c) {
  for (const CatalogEntry& e : catalog()) lemma32(c, e.drawing, e.k, "catalog " + name(e.family, e.k));
  for (Family f : all_families()) {
    for (int k = 4; k <= 12; ++k) {
      if (family_accepts(f, k)) lemma32(c, generate(f, k), k, "generated " + name(f, k));
    }
  }

  std::mt19937 rng(2024);
  int glued = 0;
  for (; glued < 1000; ++glued) {
    StyleSpec s;
    const Planarization g = random_glued(rng, &s);
    const std::string what = "glued #" + std::to_string(glued);
    const std::vector<Planarization> blocks = essential_blocks(g);
    int m = 0;
    for (const Planarization& b : blocks) {
      m += b.num_edges();
      lemma32(c, b, s.k, what + " block");
    }
    c.expect(m == g.num_edges(), what + " edge sum");
    c.expect(density_exact(g, alpha(s)), what + " density");
  }
  std::printf("    %d glued compositions\n", glued);

  for (int k = 3; k <= 10; ++k) lemma32(c, t::triangle(), k, "triangle k=" + std::to_string(k));
  for (int i = 0; i < 200; ++i) {
    const int k = 3 + static_cast<int>(rng() % 8);
    const Planarization p =
        t::random_triangulation(rng, 3 + static_cast<int>(rng() % 10), static_cast<int>(rng() % 4));
    lemma32(c, p, k, "triangulation #" + std::to_string(i));
  }
}

// 3. Saturation at k, insertability at k+1, saturated implies filled.
void saturation(Check& c) {
  auto filled_if_saturated = [&](const Planarization& p, const StyleSpec& s, const std::string& what) {
    const SaturationVerdict v = check_saturated(p, s);
    if (v.status == SaturationStatus::Saturated) {
      c.expect(verify_saturated_implies_filled(p, s), what + " saturated but not filled");
    }
    return v.status;
  };
  for (const CatalogEntry& e : catalog()) {
    for (unsigned r : family_info(e.family).styles) {
      const std::string what = name(e.family, e.k) + " {" + restrictions_to_string(r) + "}";
      try {
        c.expect(filled_if_saturated(e.drawing, {e.k, r}, what) == SaturationStatus::Saturated,
                 what + " not saturated");
        // Insertable at k+1 only in the family's own style: under I alone a
        // spiral stays saturated for every k.
        if (r == family_info(e.family).styles.front()) {
          c.expect(filled_if_saturated(e.drawing, {e.k + 1, r}, what) == SaturationStatus::Insertable,
                   what + " not insertable at k+1");
        }
      } catch (const Error& err) {
        c.expect(false, what + ": " + err.what());
      }
    }
  }
  std::mt19937 rng(77);
  for (int i = 0; i < 100; ++i) {
    StyleSpec s;
    const Planarization g = random_glued(rng, &s);
    const std::string what = "glued #" + std::to_string(i);
    c.expect(filled_if_saturated(g, s, what) == SaturationStatus::Saturated, what + " not saturated");
    const Planarization q = remove_edges(g, {static_cast<EdgeId>(rng() % g.num_edges())});
    filled_if_saturated(q, s, what + " minus an edge");
  }
  for (int i = 0; i < 200; ++i) {
    const StyleSpec s{static_cast<int>(3 + rng() % 4), static_cast<unsigned>(rng() % 8)};
    filled_if_saturated(t::random_in_style(rng, s, 1 + static_cast<int>(rng() % 5)), s,
                        "random #" + std::to_string(i));
  }
}

// 4. Iterated gluing of up to 50 copies.
void scaling(Check& c) {
  for (Family f : all_families()) {
    for (int k = 4; k <= 9; ++k) {
      if (!family_accepts(f, k)) continue;
      if (k > family_info(f).k_min + 1) break;
      const Planarization base = generate(f, k);
      const StyleSpec s = own_style(f, k);
      const Rational a = alpha(s);
      Planarization g = base;
      for (int copies = 1; copies <= 50; ++copies) {
        if (copies > 1) g = glue_first(g, base);
        const std::string what = name(f, k) + " t=" + std::to_string(copies);
        c.expect(g.num_edges() == copies * base.num_edges(), what + " edges");
        c.expect(density_exact(g, a), what + " density");
        c.expect(is_tight(g, k), what + " tight");
      }
    }
  }
}

// 5. Exhaustive non-existence, raw enumeration without capacity pruning.
void nonexistence(Check& c) {
  struct Case {
    unsigned r;
    int m_max;
  };
  SearchOptions opt;
  opt.capacity_pruning = false;
  opt.budget = 2'000'000'000;
  for (const Case& x : std::vector<Case>{{kS, 1}, {kM, 2}, {kS | kM, 4}}) {
    const auto t0 = std::chrono::steady_clock::now();
    const SearchResult r = search_tight({4, x.r}, x.m_max, opt);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const std::string what = "{" + restrictions_to_string(x.r) + "} m<=" + std::to_string(x.m_max);
    c.expect(r.exhaustive, what + " not exhaustive");
    c.expect(r.drawings.empty(), what + " found " + std::to_string(r.drawings.size()));
    c.expect(secs <= 300, what + " took " + std::to_string(secs) + " s");
    std::printf("    %s: %lld nodes, %lld prefixes, %.1f s\n", what.c_str(), r.nodes, r.prefixes, secs);
  }
}

Planarization random_deletion(std::mt19937& rng, const Planarization& p) {
  std::vector<EdgeId> edges;
  for (EdgeId e = 0; e < p.num_edges(); ++e) {
    if (rng() % 3 == 0) edges.push_back(e);
  }
  std::vector<NodeId> nodes;
  if (rng() % 2 == 0) {
    std::vector<NodeId> vs;
    for (NodeId v = 0; v < p.num_nodes(); ++v) {
      if (p.nodes[v].kind != NodeKind::Crossing) vs.push_back(v);
    }
    if (!vs.empty()) nodes.push_back(vs[rng() % vs.size()]);
  }
  if (edges.empty() && nodes.empty() && p.num_edges() > 0) edges.push_back(0);
  return remove_elements(p, edges, nodes);
}

// 6. Monotonicity of S, I and M under deletion; H is not monotone.
void monotonicity(Check& c) {
  std::mt19937 rng(606);
  std::vector<std::pair<Planarization, StyleSpec>> sources;
  for (const CatalogEntry& e : catalog()) {
    sources.emplace_back(e.drawing, StyleSpec{e.k, family_info(e.family).styles.front() & (kS | kI | kM)});
  }
  for (int i = 0; i < 1000; ++i) {
    Planarization p;
    StyleSpec s;
    if (i % 4 == 0) {
      std::tie(p, s) = sources[rng() % sources.size()];
    } else {
      s = {static_cast<int>(3 + rng() % 5), static_cast<unsigned>(rng() % 8)};
      p = t::random_in_style(rng, s, 2 + static_cast<int>(rng() % 5));
    }
    const std::string what = "deletion #" + std::to_string(i);
    c.expect(check_style(p, s).in_style, what + " source out of style");
    const Planarization q = random_deletion(rng, p);
    c.expect(validate(q).ok(), what + " invalid");
    c.expect(check_style(q, s).in_style, what + " left the style");
  }

  const Planarization d = t::digon(true, true);
  c.expect(check_homotopy_free(d).in_style, "H witness source");
  const auto deg = oracle::degree(d);
  NodeId pendant = kNone;
  for (NodeId v = 0; v < d.num_nodes(); ++v) {
    if (deg[v] == 1) pendant = v;
  }
  c.expect(pendant != kNone && !check_homotopy_free(remove_vertex(d, pendant)).in_style,
           "H witness: deleting a pendant vertex keeps it homotopy-free");
}

// 7. Euler, angle and planar-side identities on filled essentially
// 2-connected drawings.
void identities(Check& c) {
  std::vector<std::pair<Planarization, std::string>> drawings;
  for (const CatalogEntry& e : catalog()) drawings.emplace_back(e.drawing, name(e.family, e.k));
  std::mt19937 rng(707);
  for (int i = 0; i < 200; ++i) {
    drawings.emplace_back(
        t::random_triangulation(rng, 3 + static_cast<int>(rng() % 12), static_cast<int>(rng() % 4)),
        "triangulation #" + std::to_string(i));
  }
  for (int i = 0; i < 100; ++i) {
    StyleSpec s;
    for (Planarization& b : essential_blocks(random_glued(rng, &s))) {
      drawings.emplace_back(std::move(b), "glued block #" + std::to_string(i));
    }
  }
  for (int i = 0; i < 1000; ++i) {
    const StyleSpec s{static_cast<int>(3 + rng() % 5), static_cast<unsigned>(rng() % 8)};
    drawings.emplace_back(t::random_in_style(rng, s, 1 + static_cast<int>(rng() % 6)),
                          "random #" + std::to_string(i));
  }
  drawings.emplace_back(t::triangle(), "triangle");
  drawings.emplace_back(t::digon(true, true), "digon");

  int used = 0;
  for (const auto& [p, what] : drawings) {
    c.expect(verify_euler(p), what + " euler");
    if (!is_filled(p).filled || !components_and_cuts(p).essentially_2_connected) continue;
    ++used;
    c.expect(verify_angle_identity(p), what + " angle identity");
    if (vertices(p) >= 3) c.expect(verify_planar_side_identity(p), what + " planar-side identity");
  }
  std::printf("    %d filled essentially 2-connected drawings of %zu\n", used, drawings.size());
}

// 8. Text and SVG round trips.
void serialization(Check& c) {
  for (const CatalogEntry& e : catalog()) {
    const std::string what = name(e.family, e.k);
    const std::string text = emit(e.drawing);
    const Planarization q = parse(text);
    c.expect(canonical_code(q) == canonical_code(e.drawing), what + " parse(emit) changed the drawing");
    c.expect(emit(q) == text, what + " emit not a fixed point");
  }
  for (Family f : all_families()) {
    for (int k = 4; k <= 9; ++k) {
      if (!family_accepts(f, k)) continue;
      const Planarization p = generate(f, k);
      const Layout l = layout(p);
      c.expect(!l.degenerate && topology_matches(p, l), name(f, k) + " svg round trip");
    }
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void(Check&)>>> criteria = {
      {"1 table reproduction", table},
      {"2 edge count identity", lemma32_all},
      {"3 saturation", saturation},
      {"4 iterated gluing", scaling},
      {"5 exhaustive non-existence", nonexistence},
      {"6 style monotonicity", monotonicity},
      {"7 counting identities", identities},
      {"8 serialization", serialization},
  };
  int failed = 0;
  for (const auto& [label, run] : criteria) {
    Check c;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      run(c);
    } catch (const std::exception& e) {
      c.failures.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool ok = c.failures.empty();
    failed += !ok;
    std::printf("%s %s (%d checks, %.1f s)\n", ok ? "PASS" : "FAIL", label, c.checks, secs);
    for (size_t i = 0; i < c.failures.size() && i < 5; ++i) {
      std::printf("    %s\n", c.failures[i].c_str());
    }
    if (c.failures.size() > 5) std::printf("    ... %zu more\n", c.failures.size() - 5);
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
