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


#include <gtest/gtest.h>

#include <random>

#include "drawings.hpp"
#include "kplanar/core.hpp"
#include "kplanar/error.hpp"
#include "kplanar/families.hpp"
#include "kplanar/saturation.hpp"
#include "kplanar/sketch.hpp"
#include "oracles.hpp"

using namespace kplanar;
namespace t = kplanar::testing;

TEST(Filled, TightDrawings) {
  for (Family f : all_families()) {
    EXPECT_TRUE(is_filled(generate(f, family_info(f).k_min)).filled) << to_string(f);
  }
}

TEST(Filled, TwoIsolatedVerticesInOneCell) {
  const FilledReport r = is_filled(t::two_isolated());
  ASSERT_FALSE(r.filled);
  ASSERT_EQ(r.violations.size(), 1u);
  EXPECT_EQ(std::min(r.violations[0].u, r.violations[0].v), 0);
  EXPECT_EQ(std::max(r.violations[0].u, r.violations[0].v), 1);
}

TEST(Filled, Triangle) { EXPECT_TRUE(is_filled(t::triangle()).filled); }

TEST(Tight, SpiralWithAndWithoutIsolatedVertex) {
  EXPECT_TRUE(is_tight(gen_spiral(4), 4));
  const Planarization bare = t::bare_spiral4();
  EXPECT_FALSE(is_tight(bare, 4));
  // Cell oracle: three cells but only two vertices, so one cell is empty.
  EXPECT_EQ(oracle::euler_cells(bare), 3);
  int empty = 0;
  for (const Cell& c : cells(bare).cells) empty += c.incident.empty();
  EXPECT_EQ(empty, 1);
}

TEST(Tight, TriangleIsNot) { EXPECT_FALSE(is_tight(t::triangle(), 4)); }

TEST(Saturated, TightDrawingsAtTheirStyle) {
  for (Family f : all_families()) {
    for (int k = 4; k <= 8; ++k) {
      if (!family_accepts(f, k)) continue;
      const Planarization p = generate(f, k);
      for (unsigned r : family_info(f).styles) {
        const SaturationVerdict v = check_saturated(p, {k, r});
        EXPECT_EQ(v.status, SaturationStatus::Saturated)
            << to_string(f) << " k=" << k << " " << restrictions_to_set(r);
      }
    }
  }
}

TEST(Saturated, InflatedBudgetFindsAnEdge) {
  for (Family f : all_families()) {
    for (int k = 4; k <= 8; ++k) {
      if (!family_accepts(f, k)) continue;
      const unsigned r = family_info(f).styles.front();
      const SaturationVerdict v = check_saturated(generate(f, k), {k + 1, r});
      EXPECT_EQ(v.status, SaturationStatus::Insertable) << to_string(f) << " k=" << k;
      ASSERT_TRUE(v.witness.has_value());
      EXPECT_LE(v.witness->walk.size(), static_cast<size_t>(k + 1));
    }
  }
}

TEST(Saturated, TwoIsolatedVerticesTakeAnUncrossedEdge) {
  for (unsigned r : {0u, unsigned{kS | kI | kM}}) {
    const SaturationVerdict v = check_saturated(t::two_isolated(), {4, r});
    ASSERT_EQ(v.status, SaturationStatus::Insertable);
    EXPECT_TRUE(v.witness->walk.empty());
  }
}

TEST(Saturated, CycleWithoutAnEdgeTakesItBack) {
  const Planarization p = Sketch(remove_edges(gen_cycle(4), {2})).build();
  const StyleSpec s{4, kS | kM};
  const SaturationVerdict v = check_saturated(p, s);
  ASSERT_EQ(v.status, SaturationStatus::Insertable);
  const Planarization q = insert_witness(p, *v.witness);
  EXPECT_EQ(q.num_edges(), p.num_edges() + 1);
  EXPECT_TRUE(check_style(q, s).in_style);
  EXPECT_EQ(oracle::crossings_per_edge(q).back(), static_cast<int>(v.witness->walk.size()));
}

TEST(Saturated, RefusesDrawingsOutsideTheStyle) {
  EXPECT_THROW(check_saturated(gen_star(4), {4, kS}), NotInStyle);
  EXPECT_THROW(check_saturated(gen_spiral(4), {3, 0}), NotInStyle);
}

TEST(Saturated, HomotopyFreeNeedsTheBranchingStyle) {
  EXPECT_THROW(check_saturated(gen_cycle(4), {4, kS | kM | kH}), Unsupported);
}

TEST(Saturated, ParallelUncrossedEdgeUnderH) {
  // u and v are joined twice with a pendant edge at u in each cell of the
  // digon. A third uncrossed uv edge would leave an empty disk against one of
  // the two, so the first witness must join another pair.
  const Planarization d = t::digon(true, true);
  ASSERT_TRUE(check_homotopy_free(d).in_style);
  const SaturationVerdict v = check_saturated(d, {1, kS | kI | kM | kH});
  ASSERT_EQ(v.status, SaturationStatus::Insertable);
  const auto ends = edge_endpoints(d);
  EXPECT_NE(std::minmax(v.witness->u, v.witness->v), std::minmax(ends[0].first, ends[0].second));
  // Without H the parallel edge is fine and (u, v) is the least pair.
  const SaturationVerdict w = check_saturated(d, {1, kS | kI | kM});
  ASSERT_EQ(w.status, SaturationStatus::Insertable);
  EXPECT_EQ(std::minmax(w.witness->u, w.witness->v), std::minmax(ends[0].first, ends[0].second));
}

TEST(Saturated, WitnessesReinsertAndMonotoneInK) {
  std::mt19937 rng(23);
  int inserted = 0;
  for (int i = 0; i < 150; ++i) {
    const StyleSpec s{static_cast<int>(2 + rng() % 4), static_cast<unsigned>(rng() % 8) & (kI | kM)};
    const Planarization p = t::random_in_style(rng, s, 1 + static_cast<int>(rng() % 4));
    const SaturationVerdict v = check_saturated(p, s);
    if (v.status != SaturationStatus::Insertable) continue;
    const SaturationVerdict w = check_saturated(p, {s.k + 1, s.restrictions});
    EXPECT_EQ(w.status, SaturationStatus::Insertable);
    const Planarization q = insert_witness(p, *v.witness);
    EXPECT_TRUE(check_style(q, s).in_style);
    ++inserted;
  }
  EXPECT_GT(inserted, 50);
}

TEST(SaturatedImpliesFilled, TightAndGlued) {
  for (Family f : all_families()) {
    const int k = family_info(f).k_min;
    const StyleSpec s{k, family_info(f).styles.front()};
    const Planarization p = generate(f, k);
    EXPECT_TRUE(verify_saturated_implies_filled(p, s)) << to_string(f);
    const Planarization g = glue_first(p, p);
    EXPECT_TRUE(verify_saturated_implies_filled(g, s)) << to_string(f);
  }
}

TEST(SaturatedImpliesFilled, RefusesUnsaturated) {
  EXPECT_THROW(verify_saturated_implies_filled(t::two_isolated(), {4, 0}), PreconditionFailed);
}

TEST(SaturatedImpliesFilled, EdgeDeletedFamilies) {
  for (Family f : all_families()) {
    const int k = family_info(f).k_min;
    const StyleSpec s{k, family_info(f).styles.front()};
    const Planarization p = generate(f, k);
    for (EdgeId e = 0; e < p.num_edges(); ++e) {
      const Planarization q = remove_edges(p, {e});
      if (check_saturated(q, s).status == SaturationStatus::Saturated) {
        EXPECT_TRUE(is_filled(q).filled) << to_string(f) << " without e" << e;
      }
    }
  }
}
