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

#include <random>
#include <vector>

#include "kplanar/planarization.hpp"
#include "kplanar/styles.hpp"

namespace kplanar::testing {

Planarization single_edge();
Planarization path2();  // u - v - w, both uncrossed
Planarization triangle();
Planarization two_isolated();
Planarization isolated_only();
// Two uncrossed parallel uv edges; `inside` and `outside` attach a pendant
// edge at u in each of the two cells of the digon.
Planarization digon(bool inside, bool outside);
// The k=4 spiral edge without its isolated vertex.
Planarization bare_spiral4();

// Stacked triangulation on n >= 3 vertices. Each of `crossings` times, a
// random uncrossed edge ab with uncrossed neighbours gets a new edge cd
// between the opposite corners of its two triangles, crossing ab once.
// The result is filled and essentially 2-connected.
Planarization random_triangulation(std::mt19937& rng, int n, int crossings);

// Random drawing with up to `edges` edges, each edge a random pen walk that
// respects s (k, S, I and M). Connected.
Planarization random_in_style(std::mt19937& rng, const StyleSpec& s, int edges);

}  // namespace kplanar::testing
