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

struct FilledViolation {
  int cell = 0;
  NodeId u = kNone;
  NodeId v = kNone;
};

struct FilledReport {
  bool filled = true;
  std::vector<FilledViolation> violations;
};

FilledReport is_filled(const Planarization& p);
bool is_tight(const Planarization& p, int k);

// One crossed segment: the walk leaves the cell of `dart` for the cell of its
// twin.
struct WalkStep {
  DartId dart = kNone;
  EdgeId edge = kNone;
};

enum class Realization { Simple, NotCheckedSimple };

struct InsertionWitness {
  NodeId u = kNone;
  NodeId v = kNone;
  std::vector<WalkStep> walk;
  int start_cell = kNone;
  int end_cell = kNone;
  bool needs_simple_realization = false;
  Realization realization_status = Realization::Simple;
};

enum class SaturationStatus { Saturated, Insertable, Unknown };

struct SaturationVerdict {
  SaturationStatus status = SaturationStatus::Saturated;
  std::optional<InsertionWitness> witness;
  std::vector<std::string> notes;
};

const char* to_string(SaturationStatus s);
const char* to_string(Realization r);

// Throws NotInStyle if p violates s, Unsupported for H without S, I and M.
SaturationVerdict check_saturated(const Planarization& p, const StyleSpec& s);

// Realizes a witness as a new edge. Supports drawings with one component
// and no degree-0 nodes; throws Unsupported otherwise.
Planarization insert_witness(const Planarization& p, const InsertionWitness& w);

// Throws PreconditionFailed unless check_saturated reports Saturated.
bool verify_saturated_implies_filled(const Planarization& p, const StyleSpec& s);

}  // namespace kplanar
