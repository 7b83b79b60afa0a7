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

#include <string>
#include <vector>

#include "kplanar/planarization.hpp"

namespace kplanar {

enum Restriction : unsigned {
  kS = 1,  // selfcrossing-free
  kI = 2,  // locally starlike
  kM = 4,  // single-crossing
  kH = 8,  // homotopy-free
};

struct StyleSpec {
  int k = 1;
  unsigned restrictions = 0;

  bool has(Restriction r) const { return (restrictions & r) != 0; }
};

// "s,i,m,h" in any order and case; empty string for no restrictions.
unsigned parse_restrictions(const std::string& text);
std::string restrictions_to_string(unsigned restrictions);
// Set notation such as "{S,I,M}" or "{}".
std::string restrictions_to_set(unsigned restrictions);

struct StyleViolation {
  char restriction = '?';  // 'k', 'S', 'I', 'M' or 'H'
  std::vector<EdgeId> edges;
  std::vector<NodeId> nodes;
  std::string detail;
};

struct StyleVerdict {
  bool in_style = true;
  std::vector<StyleViolation> violations;

  void add(StyleViolation v);
  void merge(const StyleVerdict& other);
};

StyleVerdict check_k_planar(const Planarization& p, int k);
StyleVerdict check_single_crossing(const Planarization& p);
StyleVerdict check_locally_starlike(const Planarization& p);
StyleVerdict check_selfcrossing_free(const Planarization& p);
// Throws Unsupported unless p is selfcrossing-free and locally starlike.
StyleVerdict check_homotopy_free(const Planarization& p);
StyleVerdict check_style(const Planarization& p, const StyleSpec& s);

// Parallel edges e, f are homotopic when one side of the closed curve they
// form holds no vertex. Requires the S and I preconditions above.
bool parallel_edges_homotopic(const Planarization& p, EdgeId e, EdgeId f);

}  // namespace kplanar
