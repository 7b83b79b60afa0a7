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

#include "kplanar/families.hpp"
#include "kplanar/metrics.hpp"
#include "kplanar/styles.hpp"

namespace kplanar {

enum class CellStatus { Pass, Fail, Open };
const char* to_string(CellStatus s);

struct TableCell {
  StyleSpec style;
  CellStatus status = CellStatus::Open;
  std::optional<Family> family;
  std::optional<Rational> alpha;
  int m = 0;
  int n = 0;
  std::string detail;  // first failing step, or why the cell is open
};

// Restriction sets of the overview table, in its row order.
std::vector<unsigned> table_rows();

// Runs generate, validate, style, tight, saturated, the edge count identity and
// m = alpha (n - 1) on the family instance for s.
TableCell table_cell(const StyleSpec& s);

// One line per (row, k). Throws InvalidArgument outside 4 <= k_lo <= k_hi <= 12.
std::string cmd_table(int k_lo, int k_hi);

}  // namespace kplanar
