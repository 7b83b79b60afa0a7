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

#include <vector>

#include "kplanar/planarization.hpp"
#include "kplanar/styles.hpp"

namespace kplanar {

struct SearchOptions {
  long long budget = 2'000'000;  // search nodes
  // Cut branches where some edge can no longer reach k crossings with the
  // edges still to come.
  bool capacity_pruning = true;
};

struct SearchResult {
  // Tight in-style drawings, one per sphere symmetry class, in discovery order.
  std::vector<Planarization> drawings;
  // True only if every branch was explored with m_max <= 4. An empty
  // exhaustive result certifies that no tight drawing exists within bounds.
  bool exhaustive = false;
  bool budget_exceeded = false;
  long long nodes = 0;
  long long prefixes = 0;  // distinct partial drawings at edge boundaries
};

// Enumerates connected drawings with at most m_max edges edge by edge, every
// prefix connected, each edge crossed at most s.k times and respecting S, I
// and M while drawing. Prefixes are deduplicated by canonical form. Results
// are filtered by essential 2-connectivity, is_tight and check_style.
SearchResult search_tight(const StyleSpec& s, int m_max, const SearchOptions& opt = {});

}  // namespace kplanar
