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

#include "drawings.hpp"
#include "kplanar/core.hpp"
#include "kplanar/error.hpp"
#include "kplanar/families.hpp"
#include "kplanar/styles.hpp"

using namespace kplanar;
namespace t = kplanar::testing;

TEST(Restrictions, ParseAndPrint) {
  EXPECT_EQ(parse_restrictions("s,i,m,h"), unsigned{kS | kI | kM | kH});
  EXPECT_EQ(parse_restrictions("M,S"), unsigned{kS | kM});
  EXPECT_EQ(parse_restrictions("{S, I}"), unsigned{kS | kI});
  EXPECT_EQ(parse_restrictions(""), 0u);
  EXPECT_THROW(parse_restrictions("s,x"), InvalidArgument);
  EXPECT_EQ(restrictions_to_string(kM | kS), "s,m");
  EXPECT_EQ(restrictions_to_set(kS | kI | kM), "{S,I,M}");
  EXPECT_EQ(restrictions_to_set(0), "{}");
}

TEST(KPlanar, SpiralWithinAndBeyondBudget) {
  const Planarization p = gen_spiral(4);
  EXPECT_TRUE(check_k_planar(p, 4).in_style);
  const StyleVerdict v = check_k_planar(p, 3);
  ASSERT_FALSE(v.in_style);
  ASSERT_EQ(v.violations.size(), 1u);
  EXPECT_EQ(v.violations[0].restriction, 'k');
  EXPECT_EQ(v.violations[0].edges, std::vector<EdgeId>{0});
}

TEST(KPlanar, EmptyDrawingForAllK) {
  for (int k = 1; k <= 12; ++k) EXPECT_TRUE(check_k_planar(Planarization{}, k).in_style);
}

TEST(SingleCrossing, Star) { EXPECT_TRUE(check_single_crossing(gen_star(4)).in_style); }

TEST(SingleCrossing, WeaveViolates) {
  const StyleVerdict v = check_single_crossing(gen_weave(4));
  ASSERT_FALSE(v.in_style);
  EXPECT_EQ(v.violations[0].restriction, 'M');
  EXPECT_EQ(v.violations[0].nodes.size(), 4u);
}

TEST(SingleCrossing, UncrossedEdge) { EXPECT_TRUE(check_single_crossing(t::single_edge()).in_style); }

TEST(SingleCrossing, SpiralSelfcrossesTwice) {
  EXPECT_FALSE(check_single_crossing(gen_spiral(4)).in_style);
}

TEST(LocallyStarlike, StarViolates) {
  const StyleVerdict v = check_locally_starlike(gen_star(4));
  ASSERT_FALSE(v.in_style);
  EXPECT_EQ(v.violations[0].restriction, 'I');
  EXPECT_EQ(v.violations[0].edges.size(), 2u);
}

TEST(LocallyStarlike, MatchingIsFine) {
  EXPECT_TRUE(check_locally_starlike(gen_sim_matching(7)).in_style);
}

TEST(LocallyStarlike, SelfcrossingAllowed) {
  EXPECT_TRUE(check_locally_starlike(gen_spiral(4)).in_style);
}

TEST(SelfcrossingFree, Spiral) {
  const StyleVerdict v = check_selfcrossing_free(gen_spiral(4));
  ASSERT_FALSE(v.in_style);
  EXPECT_EQ(v.violations.size(), 2u);
}

TEST(SelfcrossingFree, CycleAndEmpty) {
  EXPECT_TRUE(check_selfcrossing_free(gen_cycle(4)).in_style);
  EXPECT_TRUE(check_selfcrossing_free(Planarization{}).in_style);
}

TEST(HomotopyFree, EmptyDigonIsHomotopic) {
  const StyleVerdict v = check_homotopy_free(t::digon(false, false));
  ASSERT_FALSE(v.in_style);
  EXPECT_EQ(v.violations[0].restriction, 'H');
}

TEST(HomotopyFree, VertexOnEachSide) {
  EXPECT_TRUE(check_homotopy_free(t::digon(true, true)).in_style);
  EXPECT_FALSE(check_homotopy_free(t::digon(true, false)).in_style);
  EXPECT_FALSE(check_homotopy_free(t::digon(false, true)).in_style);
}

TEST(HomotopyFree, MatchingHasNoParallelEdges) {
  EXPECT_TRUE(check_homotopy_free(gen_sim_matching(7)).in_style);
}

TEST(HomotopyFree, UnsupportedOutsideSI) {
  EXPECT_THROW(check_homotopy_free(gen_spiral(4)), Unsupported);
  EXPECT_THROW(check_homotopy_free(gen_star(4)), Unsupported);
  EXPECT_THROW(check_style(gen_star(4), {4, kM | kH}), Unsupported);
}

TEST(CheckStyle, CycleInSM) { EXPECT_TRUE(check_style(gen_cycle(4), {4, kS | kM}).in_style); }

TEST(CheckStyle, CycleNotInSIM) {
  const StyleVerdict v = check_style(gen_cycle(4), {4, kS | kI | kM});
  ASSERT_FALSE(v.in_style);
  for (const StyleViolation& x : v.violations) EXPECT_EQ(x.restriction, 'I');
  EXPECT_FALSE(check_locally_starlike(gen_cycle(4)).in_style);
}

TEST(CheckStyle, EmptyDrawingAnyStyleWithoutH) {
  for (unsigned r = 0; r < 8; ++r) EXPECT_TRUE(check_style(Planarization{}, {4, r}).in_style);
}

TEST(CheckStyle, NoRestrictionsEqualsKPlanar) {
  for (Family f : all_families()) {
    const Planarization p = generate(f, family_info(f).k_min);
    for (int k = 1; k <= 8; ++k) {
      EXPECT_EQ(check_style(p, {k, 0}).in_style, check_k_planar(p, k).in_style);
    }
  }
}

TEST(CheckStyle, FamiliesInTheirStyles) {
  for (Family f : all_families()) {
    for (int k = 4; k <= 9; ++k) {
      if (!family_accepts(f, k)) continue;
      const Planarization p = generate(f, k);
      for (unsigned r : family_info(f).styles) {
        EXPECT_TRUE(check_style(p, {k, r}).in_style) << to_string(f) << " k=" << k << " "
                                                     << restrictions_to_set(r);
      }
    }
  }
}
