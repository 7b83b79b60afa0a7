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


#include "kplanar/table.hpp"

#include <cstdio>

#include "kplanar/core.hpp"
#include "kplanar/error.hpp"
#include "kplanar/saturation.hpp"

namespace kplanar {

const char* to_string(CellStatus s) {
  switch (s) {
    case CellStatus::Pass:
      return "PASS";
    case CellStatus::Fail:
      return "FAIL";
    case CellStatus::Open:
      return "OPEN";
  }
  return "?";
}

std::vector<unsigned> table_rows() {
  return {0, kI, kS, kS | kI, kM, kS | kM, kI | kM, kS | kI | kM, kS | kI | kM | kH};
}

TableCell table_cell(const StyleSpec& s) {
  TableCell cell;
  cell.style = s;
  try {
    cell.alpha = alpha(s);
  } catch (const Unresolved& e) {
    cell.detail = e.what();
    return cell;
  }
  cell.family = family_for(s);
  if (!cell.family) {
    cell.detail = "no family for this style";
    return cell;
  }
  auto fail = [&](const std::string& why) {
    cell.status = CellStatus::Fail;
    cell.detail = why;
    return cell;
  };
  try {
    const Planarization p = generate(*cell.family, s.k);
    const CountsReport c = counts(p, s.k);
    cell.m = c.m;
    cell.n = c.n;
    if (!validate(p).ok()) return fail("validate");
    if (!check_style(p, s).in_style) return fail("style");
    if (!is_tight(p, s.k)) return fail("tight");
    if (check_saturated(p, s).status != SaturationStatus::Saturated) return fail("saturated");
    if (!verify_lemma32(p, s.k).equal) return fail("edge count identity");
    if (Rational(c.m) != *cell.alpha * (c.n - 1)) return fail("m = alpha (n - 1)");
  } catch (const Error& e) {
    return fail(e.what());
  }
  cell.status = CellStatus::Pass;
  return cell;
}

std::string cmd_table(int k_lo, int k_hi) {
  if (k_lo < 4 || k_hi > 12 || k_lo > k_hi) {
    throw InvalidArgument("k range must lie within 4..12");
  }
  std::string out;
  char buf[200];
  std::snprintf(buf, sizeof buf, "%-10s %3s %-8s %4s %4s  %-13s %s\n", "X", "k", "alpha", "m",
                "n", "family", "status");
  out += buf;
  for (unsigned r : table_rows()) {
    for (int k = k_lo; k <= k_hi; ++k) {
      const TableCell c = table_cell({k, r});
      if (c.status == CellStatus::Open) {
        std::snprintf(buf, sizeof buf, "%-10s %3d %-8s %4s %4s  %-13s %s\n",
                      restrictions_to_set(r).c_str(), k, "-", "-", "-", "-", "OPEN");
      } else {
        std::snprintf(buf, sizeof buf, "%-10s %3d %-8s %4d %4d  %-13s %s\n",
                      restrictions_to_set(r).c_str(), k, to_string(*c.alpha).c_str(), c.m, c.n,
                      to_string(*c.family), to_string(c.status));
      }
      out += buf;
    }
  }
  return out;
}

}  // namespace kplanar
