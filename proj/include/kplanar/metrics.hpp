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


#pragma once

#include <boost/rational.hpp>
#include <string>

#include "kplanar/planarization.hpp"
#include "kplanar/styles.hpp"

namespace kplanar {

using Rational = boost::rational<long long>;

std::string to_string(const Rational& r);

struct CountsReport {
  int n = 0;       // real plus isolated vertices
  int n_real = 0;
  int m = 0;
  int m_p = 0;     // uncrossed edges
  int m_x = 0;     // crossed edges
  int cr = 0;      // crossing points
  int iso = 0;
  int c[4] = {0, 0, 0, 0};  // cells with exactly i incident vertices
  int c4plus = 0;
  int c2_prime = 0;  // cells with exactly two uncrossed edges on the boundary
  int cells = 0;
  int components = 0;
  // (k/2 m_x - cr) + (k-4)/2 m_p + c2_prime + c3
  Rational epsilon;
};

CountsReport counts(const Planarization& p, int k);

// iso + 2m = c1 + 2 c2 + 3 c3. Throws NotApplicable unless p is filled and
// essentially 2-connected.
bool verify_angle_identity(const Planarization& p);
// 2 m_p = c2 + c2' + 3 c3, same preconditions plus n >= 3.
bool verify_planar_side_identity(const Planarization& p);
// V - E + F = 1 + components on the planarization.
bool verify_euler(const Planarization& p);

struct IdentityReport {
  Rational lhs;
  Rational rhs;
  bool equal = false;
};

// m = 2/(k-2) (n + c0 - 2 + epsilon). Throws PreconditionFailed.
IdentityReport verify_lemma32(const Planarization& p, int k);

// Minimum edge density of saturated drawings in the style. Throws Unresolved
// for cases the theorem leaves open.
Rational alpha(const StyleSpec& s);

// m >= alpha (n + c0 - 1). Throws PreconditionFailed unless p is filled and
// in style.
bool verify_lemma31_bound(const Planarization& p, const StyleSpec& s);

}  // namespace kplanar
