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

struct Point {
  double x = 0;
  double y = 0;
};

struct Layout {
  std::vector<Point> node_pos;
  // Polyline of each dart from its node to the node of its twin.
  std::vector<std::vector<Point>> dart_path;
  // The barycentric system was singular or produced a flipped triangle; the
  // nodes were put on a circle instead and the picture may not be plane.
  bool degenerate = false;
};

// Barycentric layout of every component after subdividing each segment twice
// and triangulating each face around a hub vertex. Nested components and
// degree-0 nodes are scaled into a disk around the hub of their host face.
Layout layout(const Planarization& p);

// Counterclockwise order of the first polyline leg at every node, each list
// starting at the smallest dart, as in rotations().
std::vector<std::vector<DartId>> extract_rotations(const Planarization& p, const Layout& l);
bool topology_matches(const Planarization& p, const Layout& l);

std::string render_svg(const Planarization& p, const Layout& l);
std::string render_svg(const Planarization& p);

}  // namespace kplanar
