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


#include "kplanar/metrics.hpp"

#include <set>

#include "kplanar/core.hpp"
#include "kplanar/error.hpp"
#include "kplanar/saturation.hpp"

namespace kplanar {

namespace {

void require_identity_scope(const Planarization& p, const CountsReport& c) {
  if (!components_and_cuts(p).essentially_2_connected) {
    throw NotApplicable("drawing is not essentially 2-connected");
  }
  if (!is_filled(p).filled || c.c4plus != 0) throw NotApplicable("drawing is not filled");
}

}  // namespace

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

CountsReport counts(const Planarization& p, int k) {
  CountsReport r;
  const std::vector<int> deg = degrees(p);
  for (NodeId v = 0; v < p.num_nodes(); ++v) {
    if (p.nodes[v].kind == NodeKind::Crossing) {
      ++r.cr;
    } else if (deg[v] == 0) {
      ++r.iso;
    } else {
      ++r.n_real;
    }
  }
  r.n = r.n_real + r.iso;
  const std::vector<int> cc = crossing_counts(p);
  r.m = p.num_edges();
  for (int x : cc) (x == 0 ? r.m_p : r.m_x)++;

  const CellMap cm = cells(p);
  r.cells = static_cast<int>(cm.cells.size());
  for (const Cell& cell : cm.cells) {
    const size_t i = cell.incident.size();
    (i < 4 ? r.c[i] : r.c4plus)++;
    std::set<EdgeId> planar;
    for (const auto& walk : cell.boundary_walks) {
      for (DartId d : walk) {
        if (cc[p.darts[d].edge] == 0) planar.insert(p.darts[d].edge);
      }
    }
    if (planar.size() == 2) ++r.c2_prime;
  }
  r.components = static_cast<int>(components_and_cuts(p).components.size());
  // Uncrossed edges enter with (k-4)/2; the Euler count does not close with
  // (k-4)/4 unless k = 4 or m_p = 0.
  r.epsilon = (Rational(k, 2) * r.m_x - r.cr) + Rational(k - 4, 2) * r.m_p +
              r.c2_prime + r.c[3];
  return r;
}

bool verify_angle_identity(const Planarization& p) {
  const CountsReport c = counts(p, 4);
  require_identity_scope(p, c);
  return c.iso + 2 * c.m == c.c[1] + 2 * c.c[2] + 3 * c.c[3];
}

bool verify_planar_side_identity(const Planarization& p) {
  const CountsReport c = counts(p, 4);
  require_identity_scope(p, c);
  if (c.n < 3) throw NotApplicable("fewer than 3 vertices");
  return 2 * c.m_p == c.c[2] + c.c2_prime + 3 * c.c[3];
}

bool verify_euler(const Planarization& p) {
  const CountsReport c = counts(p, 4);
  return p.num_nodes() - p.num_darts() / 2 + c.cells == 1 + c.components;
}

IdentityReport verify_lemma32(const Planarization& p, int k) {
  if (k <= 2) throw PreconditionFailed("k > 2 required");
  const CountsReport c = counts(p, k);
  if (!is_filled(p).filled) throw PreconditionFailed("drawing is not filled");
  if (!components_and_cuts(p).essentially_2_connected) {
    throw PreconditionFailed("drawing is not essentially 2-connected");
  }
  if (c.n < 3) throw PreconditionFailed("n >= 3 required");
  IdentityReport r;
  r.lhs = c.m;
  r.rhs = Rational(2, k - 2) * (c.n + c.c[0] - 2 + c.epsilon);
  r.equal = r.lhs == r.rhs;
  return r;
}

Rational alpha(const StyleSpec& s) {
  const long long k = s.k;
  if (k < 4) throw Unresolved("k < 4 is outside the theorem");
  const unsigned x = s.restrictions & (kS | kI | kM);
  if (s.has(kH) && x != (kS | kI | kM)) {
    throw Unresolved("H is only resolved together with S, I and M");
  }
  const Rational star(2 * (k - 1), (k - 1) * (k - 2) + 2);
  const Rational cycle(2 * (k + 1), k * (k - 1));
  switch (x) {
    case 0:
    case kI:
      return Rational(2, k - k % 2);
    case kS:
    case kS | kI:
      return Rational(2, k - 1);
    case kM:
      return star;
    case kS | kM:
      return cycle;
    case kI | kM:
      return k == 4 ? Rational(4, 5) : star;
    default:
      if (k < 7) throw Unresolved("k = " + std::to_string(k) + " is open for " + restrictions_to_set(s.restrictions));
      return cycle;
  }
}

bool verify_lemma31_bound(const Planarization& p, const StyleSpec& s) {
  if (!is_filled(p).filled) throw PreconditionFailed("drawing is not filled");
  if (!check_style(p, s).in_style) throw PreconditionFailed("drawing is not in style");
  const CountsReport c = counts(p, s.k);
  return Rational(c.m) >= alpha(s) * (c.n + c.c[0] - 1);
}

}  // namespace kplanar
