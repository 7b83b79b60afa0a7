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


#include "kplanar/report.hpp"

#include <functional>

#include "kplanar/core.hpp"
#include "kplanar/error.hpp"

namespace kplanar {

namespace {

Json guarded(const std::function<Json()>& f) {
  try {
    return f();
  } catch (const Error& e) {
    return Json{{"error", e.what()}};
  }
}

}  // namespace

void to_json(Json& j, const CountsReport& r) {
  j = Json{{"n", r.n},
           {"n_real", r.n_real},
           {"m", r.m},
           {"m_p", r.m_p},
           {"m_x", r.m_x},
           {"cr", r.cr},
           {"iso", r.iso},
           {"c", {r.c[0], r.c[1], r.c[2], r.c[3]}},
           {"c4plus", r.c4plus},
           {"c2_prime", r.c2_prime},
           {"cells", r.cells},
           {"components", r.components},
           {"epsilon", to_string(r.epsilon)}};
}

void to_json(Json& j, const StyleViolation& v) {
  j = Json{{"restriction", std::string(1, v.restriction)},
           {"edges", v.edges},
           {"nodes", v.nodes},
           {"detail", v.detail}};
}

void to_json(Json& j, const StyleVerdict& v) {
  j = Json{{"in_style", v.in_style}, {"violations", v.violations}};
}

void to_json(Json& j, const FilledReport& r) {
  Json vs = Json::array();
  for (const FilledViolation& v : r.violations) {
    vs.push_back({{"cell", v.cell}, {"u", v.u}, {"v", v.v}});
  }
  j = Json{{"filled", r.filled}, {"violations", vs}};
}

void to_json(Json& j, const IdentityReport& r) {
  j = Json{{"lhs", to_string(r.lhs)}, {"rhs", to_string(r.rhs)}, {"equal", r.equal}};
}

void to_json(Json& j, const WalkStep& s) { j = Json{{"dart", s.dart}, {"edge", s.edge}}; }

void to_json(Json& j, const InsertionWitness& w) {
  j = Json{{"u", w.u},
           {"v", w.v},
           {"walk", w.walk},
           {"start_cell", w.start_cell},
           {"end_cell", w.end_cell},
           {"needs_simple_realization", w.needs_simple_realization},
           {"realization_status", to_string(w.realization_status)}};
}

void to_json(Json& j, const SaturationVerdict& v) {
  j = Json{{"status", to_string(v.status)},
           {"witness", v.witness ? Json(*v.witness) : Json(nullptr)},
           {"notes", v.notes}};
}

void to_json(Json& j, const ConnectivityReport& r) {
  j = Json{{"components", r.components},
           {"graph_cut_vertices", r.graph_cut_vertices},
           {"planarization_cut_vertices", r.planarization_cut_vertices},
           {"drawing_cut_vertices", r.drawing_cut_vertices},
           {"components_with_edges", r.components_with_edges},
           {"essentially_2_connected", r.essentially_2_connected}};
}

Json drawing_report(const Planarization& p, const StyleSpec& s) {
  Json j;
  j["k"] = s.k;
  j["restrictions"] = restrictions_to_set(s.restrictions);
  j["counts"] = counts(p, s.k);
  j["connectivity"] = components_and_cuts(p);
  j["style"] = guarded([&] { return Json(check_style(p, s)); });
  j["filled"] = is_filled(p);
  j["tight"] = is_tight(p, s.k);
  j["saturation"] = guarded([&] { return Json(check_saturated(p, s)); });
  j["lemma32"] = guarded([&] { return Json(verify_lemma32(p, s.k)); });
  j["euler"] = verify_euler(p);
  j["alpha"] = guarded([&] { return Json(to_string(alpha(s))); });
  return j;
}

Json search_report(const StyleSpec& s, int m_max, const SearchResult& r) {
  Json found = Json::array();
  for (const Planarization& p : r.drawings) {
    found.push_back({{"canonical_form", canonical_form(p)}, {"counts", counts(p, s.k)}});
  }
  return Json{{"k", s.k},
              {"restrictions", restrictions_to_set(s.restrictions)},
              {"m_max", m_max},
              {"exhaustive", r.exhaustive},
              {"budget_exceeded", r.budget_exceeded},
              {"nodes", r.nodes},
              {"prefixes", r.prefixes},
              {"drawings", found}};
}

}  // namespace kplanar
