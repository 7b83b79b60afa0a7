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

#include "kplanar/planarization.hpp"

namespace kplanar {

// Text format, one declaration per line, '#' starts a comment:
//
//   kplanar 1                     format version, required first
//   k 4                           optional declared k
//   restrict s,m                  optional declared restrictions
//   node v0 real|crossing|isolated
//   edge e0
//   seg s0 e0 v0 x0               darts s0+ (at v0) and s0- (at x0)
//   rot x0 s0- s1+ s2- s3+        counterclockwise rotation at a node
//   anchor i0 in s3+              node or dart, hosted by a dart's left face
//   anchor s7+ in outer           ... or by the outer face
//   outer s0+                     dart whose left face is unbounded
struct DrawingDocument {
  Planarization drawing;
  std::optional<int> k;
  std::optional<unsigned> restrictions;
};

// Throws SyntaxError (with line and column) or ValidationError.
DrawingDocument parse_document(const std::string& text);
Planarization parse(const std::string& text);

std::string emit(const Planarization& p, std::optional<int> k = std::nullopt,
                 std::optional<unsigned> restrictions = std::nullopt);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace kplanar
