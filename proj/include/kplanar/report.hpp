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

#include <json.hpp>

#include "kplanar/core.hpp"
#include "kplanar/metrics.hpp"
#include "kplanar/saturation.hpp"
#include "kplanar/search.hpp"
#include "kplanar/styles.hpp"

namespace kplanar {

using Json = nlohmann::ordered_json;

// Field names follow the C++ structs. Rationals are strings such as "5/6".
void to_json(Json& j, const CountsReport& r);
void to_json(Json& j, const StyleViolation& v);
void to_json(Json& j, const StyleVerdict& v);
void to_json(Json& j, const FilledReport& r);
void to_json(Json& j, const IdentityReport& r);
void to_json(Json& j, const WalkStep& s);
void to_json(Json& j, const InsertionWitness& w);
void to_json(Json& j, const SaturationVerdict& v);
void to_json(Json& j, const ConnectivityReport& r);

// Everything the checks know about p under s. Checks that do not apply
// (for example the edge count identity on a drawing that is not filled)
// appear as {"error": message}.
Json drawing_report(const Planarization& p, const StyleSpec& s);

Json search_report(const StyleSpec& s, int m_max, const SearchResult& r);

}  // namespace kplanar
