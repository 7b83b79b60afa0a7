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

#include <optional>
#include <string>
#include <vector>

#include "kplanar/planarization.hpp"
#include "kplanar/styles.hpp"

namespace kplanar {

enum class Family {
  Spiral,       // one selfcrossing edge, even k
  OddPair,      // two edges, odd k
  Weave,        // two edges crossing each other k times
  Star,         // k-1 edges at a common vertex
  Cycle,        // (k+1)-cycle, edges pairwise crossing once
  IM4,          // four edges, k = 4
  IMMatching,   // (k-1)-matching, k >= 5
  SIMMatching,  // (k+1)-matching, k >= 7
};

const char* to_string(Family f);
// Accepts the names printed by to_string, e.g. "sim-matching".
Family family_from_string(const std::string& name);
std::vector<Family> all_families();

struct FamilyInfo {
  Family family;
  // Styles the tight drawings belong to; the first one is the family's own.
  std::vector<unsigned> styles;
  int k_min = 4;
  int k_max = -1;   // -1: unbounded
  int parity = -1;  // -1: any, 0: even, 1: odd
  const char* source = "";
};

const FamilyInfo& family_info(Family f);
bool family_accepts(Family f, int k);

struct Expected {
  int m = 0;
  int n = 0;
  int cr = 0;
};

Expected expected_counts(Family f, int k);

// Tight drawings including their isolated vertices. Each result is checked
// for tightness, style membership and counts before it is returned.
Planarization gen_spiral(int k);         // BadParity unless k even >= 4
Planarization gen_odd_pair(int k);       // BadParity unless k odd >= 5
Planarization gen_weave(int k);
Planarization gen_star(int k);
Planarization gen_cycle(int k);
Planarization gen_im(int k);             // IM4 for k = 4, IMMatching above
Planarization gen_sim_matching(int k);
Planarization generate(Family f, int k);

// Family whose tight drawings attain alpha for the style; nullopt where the
// theorem leaves the style open or k is out of range.
std::optional<Family> family_for(const StyleSpec& s);

struct CatalogEntry {
  Family family = Family::Spiral;
  int k = 0;
  std::string source;
  Planarization drawing;
  Expected expected;
};

std::string catalog_file_name(Family f, int k);
CatalogEntry load_catalog_entry(const std::string& dir, Family f, int k);
// Every catalog file present in dir, in family then k order.
std::vector<CatalogEntry> load_catalog(const std::string& dir);

// Identifies v1 and v2 and places d2 inside host_cell of d1, which must be
// incident to v1 and to no other vertex. Throws NotIncident otherwise.
Planarization glue(const Planarization& d1, NodeId v1, const Planarization& d2,
                   NodeId v2, int host_cell);

struct GluePoint {
  NodeId vertex = kNone;
  int cell = kNone;
};

// All (vertex, cell) pairs where a cell's only incident vertex is a vertex
// with edges.
std::vector<GluePoint> glue_points(const Planarization& d);
// Glues at the first glue point of d1 and the first vertex with edges of d2.
Planarization glue_first(const Planarization& d1, const Planarization& d2);

}  // namespace kplanar
