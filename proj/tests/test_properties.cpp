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
#include "kplanar/families.hpp"
#include "kplanar/metrics.hpp"
#include "kplanar/styles.hpp"
#include "oracles.hpp"

using namespace kplanar;
namespace t = kplanar::testing;

namespace {

// Deletes a random nonempty set of edges, and sometimes a vertex.
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

}  // namespace

TEST(Monotone, DeletionsPreserveStyle) {
  std::mt19937 rng(21);
  for (int i = 0; i < 300; ++i) {
    const StyleSpec s{static_cast<int>(3 + rng() % 4), static_cast<unsigned>(rng() % 8)};
    const Planarization p = t::random_in_style(rng, s, 2 + static_cast<int>(rng() % 4));
    ASSERT_TRUE(check_style(p, s).in_style);
    const Planarization q = random_deletion(rng, p);
    ASSERT_TRUE(validate(q).ok());
    EXPECT_TRUE(check_style(q, s).in_style) << restrictions_to_string(s.restrictions);
    EXPECT_LE(q.num_edges(), p.num_edges());
  }
}

TEST(Monotone, FamilyDeletionsPreserveStyle) {
  std::mt19937 rng(5);
  for (Family f : all_families()) {
    for (int k = 4; k <= 7; ++k) {
      if (!family_accepts(f, k)) continue;
      const Planarization p = generate(f, k);
      const StyleSpec s{k, family_info(f).styles.front() & (kS | kI | kM)};
      for (int i = 0; i < 5; ++i) {
        EXPECT_TRUE(check_style(random_deletion(rng, p), s).in_style) << to_string(f);
      }
    }
  }
}

TEST(Monotone, HomotopyFreeIsNotClosedUnderDeletion) {
  const Planarization p = t::digon(true, true);
  ASSERT_TRUE(check_homotopy_free(p).in_style);
  const auto deg = oracle::degree(p);
  bool witnessed = false;
  for (NodeId v = 0; v < p.num_nodes(); ++v) {
    if (deg[v] != 1) continue;
    const Planarization q = remove_vertex(p, v);
    ASSERT_TRUE(validate(q).ok());
    EXPECT_FALSE(check_homotopy_free(q).in_style);
    witnessed = true;
  }
  EXPECT_TRUE(witnessed);
}

TEST(Metrics, EpsilonIsNonNegative) {
  std::mt19937 rng(9);
  for (int i = 0; i < 300; ++i) {
    const int k = static_cast<int>(4 + rng() % 5);
    const StyleSpec s{k, static_cast<unsigned>(rng() % 8)};
    const Planarization p = t::random_in_style(rng, s, 1 + static_cast<int>(rng() % 5));
    EXPECT_GE(counts(p, k).epsilon, Rational(0));
  }
}

TEST(Metrics, DeletionNeverRaisesCrossings) {
  std::mt19937 rng(13);
  for (int i = 0; i < 200; ++i) {
    const StyleSpec s{6, 0};
    const Planarization p = t::random_in_style(rng, s, 4);
    const Planarization q = random_deletion(rng, p);
    EXPECT_LE(oracle::count_kind(q, NodeKind::Crossing),
              oracle::count_kind(p, NodeKind::Crossing));
  }
}
