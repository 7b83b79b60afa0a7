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

#include <numeric>
#include <random>

#include "drawings.hpp"
#include "kplanar/core.hpp"
#include "kplanar/error.hpp"
#include "kplanar/families.hpp"
#include "kplanar/metrics.hpp"
#include "kplanar/saturation.hpp"
#include "oracles.hpp"

using namespace kplanar;
namespace t = kplanar::testing;

namespace {

std::string precondition_message(const Planarization& p, int k) {
  try {
    verify_lemma32(p, k);
  } catch (const PreconditionFailed& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST(Counts, StarWithIsolatedVertex) {
  const Planarization p = gen_star(4);
  const CountsReport c = counts(p, 4);
  EXPECT_EQ(c.n, 5);
  EXPECT_EQ(c.m, 3);
  EXPECT_EQ(c.m_x, 3);
  EXPECT_EQ(c.m_p, 0);
  EXPECT_EQ(c.cr, 6);
  EXPECT_EQ(c.epsilon, Rational(0));
  // Euler oracle: the crossing count fixes the cell count.
  EXPECT_EQ(c.cells, oracle::euler_cells(p));
  EXPECT_EQ(c.cr, oracle::count_kind(p, NodeKind::Crossing));
}

TEST(Counts, Triangle) {
  const CountsReport c = counts(t::triangle(), 4);
  EXPECT_EQ(c.m_p, 3);
  EXPECT_EQ(c.c[3], 2);
  EXPECT_EQ(c.epsilon, Rational(2));
}

TEST(Counts, SingleIsolatedVertex) {
  const CountsReport c = counts(t::isolated_only(), 4);
  EXPECT_EQ(c.n, 1);
  EXPECT_EQ(c.m, 0);
  EXPECT_EQ(c.c[1], 1);
  EXPECT_EQ(c.iso, 1);
}

TEST(Counts, BasicInvariantsOnRandomDrawings) {
  std::mt19937 rng(5);
  for (int i = 0; i < 200; ++i) {
    const StyleSpec s{static_cast<int>(4 + rng() % 4), static_cast<unsigned>(rng() % 8)};
    const Planarization p = t::random_in_style(rng, s, 1 + static_cast<int>(rng() % 5));
    const CountsReport c = counts(p, s.k);
    EXPECT_EQ(c.n, c.n_real + c.iso);
    EXPECT_EQ(c.m, c.m_p + c.m_x);
    const auto per_edge = oracle::crossings_per_edge(p);
    EXPECT_EQ(2 * c.cr, std::accumulate(per_edge.begin(), per_edge.end(), 0));
    EXPECT_GE(c.epsilon, Rational(0));
    EXPECT_TRUE(verify_euler(p));
  }
}

TEST(AngleIdentity, CycleSingleEdgeTriangle) {
  const CountsReport c = counts(gen_cycle(4), 4);
  EXPECT_EQ(c.iso + 2 * c.m, 12);
  EXPECT_EQ(c.c[1], 12);
  EXPECT_TRUE(verify_angle_identity(gen_cycle(4)));
  const CountsReport e = counts(t::single_edge(), 4);
  EXPECT_EQ(e.c[2], 1);
  EXPECT_TRUE(verify_angle_identity(t::single_edge()));
  EXPECT_TRUE(verify_angle_identity(t::triangle()));
}

TEST(AngleIdentity, RefusesCutVertex) {
  EXPECT_THROW(verify_angle_identity(t::path2()), NotApplicable);
}

TEST(PlanarSideIdentity, TriangleAndCycle) {
  const CountsReport c = counts(t::triangle(), 4);
  EXPECT_EQ(2 * c.m_p, c.c[2] + c.c2_prime + 3 * c.c[3]);
  EXPECT_TRUE(verify_planar_side_identity(t::triangle()));
  EXPECT_TRUE(verify_planar_side_identity(gen_cycle(4)));
}

TEST(PlanarSideIdentity, PathIsNotApplicable) {
  EXPECT_THROW(verify_planar_side_identity(t::path2()), NotApplicable);
}

TEST(EdgeCountIdentity, SpiralTriangleCycle) {
  IdentityReport r = verify_lemma32(gen_spiral(4), 4);
  EXPECT_EQ(r.lhs, Rational(1));
  EXPECT_EQ(r.rhs, Rational(1));
  EXPECT_TRUE(r.equal);
  r = verify_lemma32(t::triangle(), 4);
  EXPECT_EQ(r.rhs, Rational(3));
  EXPECT_TRUE(r.equal);
  r = verify_lemma32(gen_cycle(4), 4);
  EXPECT_EQ(r.lhs, Rational(5));
  EXPECT_TRUE(r.equal);
}

TEST(EdgeCountIdentity, PlanarCasesForLargerK) {
  std::mt19937 rng(17);
  for (int k = 3; k <= 9; ++k) {
    EXPECT_TRUE(verify_lemma32(t::triangle(), k).equal) << "k=" << k;
    for (int i = 0; i < 10; ++i) {
      const Planarization p =
          t::random_triangulation(rng, 3 + static_cast<int>(rng() % 8), static_cast<int>(rng() % 3));
      EXPECT_TRUE(verify_lemma32(p, k).equal) << "k=" << k;
    }
  }
}

TEST(EdgeCountIdentity, NamesTheFailedPrecondition) {
  EXPECT_NE(precondition_message(t::triangle(), 2).find("k > 2"), std::string::npos);
  EXPECT_NE(precondition_message(t::two_isolated(), 4).find("filled"), std::string::npos);
  EXPECT_NE(precondition_message(glue_first(gen_cycle(4), gen_cycle(4)), 4)
                .find("essentially 2-connected"),
            std::string::npos);
  EXPECT_NE(precondition_message(t::single_edge(), 4).find("n >= 3"), std::string::npos);
}

TEST(Alpha, TableValues) {
  EXPECT_EQ(alpha({4, 0}), Rational(1, 2));
  EXPECT_EQ(alpha({7, kS | kI | kM}), Rational(8, 21));
  EXPECT_EQ(alpha({5, kI | kM}), Rational(4, 7));
  EXPECT_EQ(alpha({4, kI | kM}), Rational(4, 5));
  EXPECT_EQ(alpha({5, kI}), Rational(1, 2));
  EXPECT_EQ(alpha({4, kS}), Rational(2, 3));
  EXPECT_EQ(alpha({4, kM}), Rational(3, 4));
  EXPECT_EQ(alpha({4, kS | kM}), Rational(5, 6));
  EXPECT_EQ(alpha({8, kS | kI | kM | kH}), Rational(9, 28));
}

TEST(Alpha, OpenCases) {
  for (int k = 4; k <= 6; ++k) {
    EXPECT_THROW(alpha({k, kS | kI | kM}), Unresolved);
    EXPECT_THROW(alpha({k, kS | kI | kM | kH}), Unresolved);
  }
  EXPECT_THROW(alpha({3, 0}), Unresolved);
  EXPECT_THROW(alpha({8, kH}), Unresolved);
}

TEST(DensityBound, Bound) {
  EXPECT_TRUE(verify_lemma31_bound(t::triangle(), {4, 0}));
  const Planarization g = glue_first(gen_cycle(4), gen_cycle(4));
  const CountsReport c = counts(g, 4);
  EXPECT_EQ(c.m, 10);
  EXPECT_EQ(c.n, 13);
  EXPECT_TRUE(verify_lemma31_bound(g, {4, kS | kM}));
  EXPECT_EQ(Rational(c.m), alpha({4, kS | kM}) * (c.n + c.c[0] - 1));
}
