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


#include "kplanar/seeds.hpp"

#include <map>

#include "kplanar/error.hpp"

namespace kplanar {

namespace {

// Base instances the generators extend. Isolated vertices are added by the
// generators.
const std::map<std::string, std::string>& seeds() {
  static const std::map<std::string, std::string> table = {
      {"cycle_4", R"(kplanar 1
node v0 real
node v1 real
node v2 real
node x0 crossing
node v3 real
node x1 crossing
node x2 crossing
node v4 real
node x3 crossing
node x4 crossing
node x5 crossing
node x6 crossing
node x7 crossing
node x8 crossing
node x9 crossing
edge e0
edge e1
edge e2
edge e3
edge e4
seg s0 e0 v0 x2
seg s1 e1 v1 x0
seg s2 e0 x0 v1
seg s3 e1 x4 x9
seg s4 e2 v2 x1
seg s5 e1 x1 v2
seg s6 e2 x1 x2
seg s7 e0 x8 x5
seg s8 e2 x3 v3
seg s9 e3 v3 x3
seg s10 e2 x3 x7
seg s11 e3 x3 x6
seg s12 e1 x4 x0
seg s13 e3 x4 x5
seg s14 e0 x5 x0
seg s15 e3 x5 v4
seg s16 e4 v4 x6
seg s17 e3 x6 x4
seg s18 e4 x6 x7
seg s19 e2 x7 x2
seg s20 e4 x7 x8
seg s21 e0 x8 x2
seg s22 e4 x8 x9
seg s23 e1 x9 x1
seg s24 e4 x9 v0
rot v0 s0+ s24-
rot v1 s1+ s2-
rot v2 s4+ s5-
rot x0 s1- s14- s12- s2+
rot v3 s8- s9+
rot x1 s4- s23- s6+ s5+
rot x2 s0- s19- s21- s6-
rot v4 s15- s16+
rot x3 s8+ s11+ s10+ s9-
rot x4 s3+ s13+ s12+ s17-
rot x5 s7- s15+ s14+ s13-
rot x6 s11- s18+ s17+ s16-
rot x7 s10- s20+ s19+ s18-
rot x8 s7+ s22+ s21+ s20-
rot x9 s3- s24+ s23+ s22-
)"},
      {"im_4", R"(kplanar 1
node v0 real
node v1 real
node x0 crossing
node v2 real
node v3 real
node x1 crossing
node x2 crossing
node v4 real
node x3 crossing
node x4 crossing
node v5 real
node x5 crossing
node x6 crossing
node x7 crossing
edge e0
edge e1
edge e2
edge e3
seg s0 e0 x0 x7
seg s1 e0 x0 x1
seg s2 e0 x0 v1
seg s3 e1 x3 x2
seg s4 e0 x1 v0
seg s5 e1 x1 x2
seg s6 e1 x2 x1
seg s7 e1 x2 v3
seg s8 e2 v1 x4
seg s9 e1 x3 v2
seg s10 e2 x3 x4
seg s11 e2 x4 x3
seg s12 e2 x5 v4
seg s13 e3 x6 x5
seg s14 e2 x5 x4
seg s15 e3 x5 x6
seg s16 e3 x6 v3
seg s17 e3 x6 x7
seg s18 e0 x7 x0
seg s19 e3 x7 v5
rot v0 s4-
rot v1 s2- s8+
rot x0 s0+ s2+ s1+ s18-
rot v2 s9-
rot v3 s7- s16-
rot x1 s1- s5+ s4+ s6-
rot x2 s3- s7+ s6+ s5-
rot v4 s12-
rot x3 s3+ s10+ s9+ s11-
rot x4 s8- s14- s11+ s10-
rot v5 s19-
rot x5 s12+ s15+ s14+ s13-
rot x6 s13+ s17+ s16+ s15-
rot x7 s0- s19+ s18+ s17-
)"},
      {"imm_5", R"(kplanar 1
node v0 real
node v1 real
node x0 crossing
node v2 real
node v3 real
node x1 crossing
node x2 crossing
node v4 real
node v5 real
node x3 crossing
node x4 crossing
node x5 crossing
node v6 real
node v7 real
node x6 crossing
node x7 crossing
node x8 crossing
node x9 crossing
edge e0
edge e1
edge e2
edge e3
seg s0 e0 x3 x0
seg s1 e0 x0 x6
seg s2 e0 x0 x1
seg s3 e1 v2 x2
seg s4 e0 x1 v1
seg s5 e1 x1 x2
seg s6 e1 x2 x1
seg s7 e1 x4 v3
seg s8 e2 v4 x3
seg s9 e0 x3 x0
seg s10 e2 x5 x4
seg s11 e1 x8 x2
seg s12 e2 x4 x5
seg s13 e2 x9 x3
seg s14 e2 x5 v5
seg s15 e3 v6 x7
seg s16 e0 x6 v0
seg s17 e3 x6 x7
seg s18 e3 x7 x6
seg s19 e3 x7 x8
seg s20 e1 x8 x4
seg s21 e3 x8 x9
seg s22 e2 x9 x5
seg s23 e3 x9 v7
rot v0 s16-
rot v1 s4-
rot x0 s0- s9- s2+ s1+
rot v2 s3+
rot v3 s7-
rot x1 s2- s5+ s4+ s6-
rot x2 s3- s11- s6+ s5-
rot v4 s8+
rot v5 s14-
rot x3 s0+ s13- s9+ s8-
rot x4 s7+ s12+ s20- s10-
rot x5 s10+ s14+ s22- s12-
rot v6 s15+
rot v7 s23-
rot x6 s1- s17+ s16+ s18-
rot x7 s15- s19+ s18+ s17-
rot x8 s11+ s21+ s20+ s19-
rot x9 s13+ s23+ s22+ s21-
)"},
      {"oddpair_5", R"(kplanar 1
node v0 real
node v1 real
node x0 crossing
node x1 crossing
node v2 real
node v3 real
node x2 crossing
node x3 crossing
node x4 crossing
edge e0
edge e1
seg s0 e0 v0 x2
seg s1 e0 x1 x0
seg s2 e0 x0 x1
seg s3 e0 x0 x1
seg s4 e0 x1 v1
seg s5 e1 v2 x3
seg s6 e0 x2 x0
seg s7 e1 x4 x3
seg s8 e1 x3 x2
seg s9 e1 x3 x4
seg s10 e1 x4 x2
seg s11 e1 x4 v3
rot v0 s0+
rot v1 s4-
rot x0 s1- s6- s3+ s2+
rot x1 s1+ s4+ s2- s3-
rot v2 s5+
rot v3 s11-
rot x2 s0- s10- s6+ s8-
rot x3 s5- s9+ s8+ s7-
rot x4 s7+ s11+ s10+ s9-
)"},
      {"simm_7", R"(kplanar 1
node v0 real
node v1 real
node v2 real
node v3 real
node x0 crossing
node v4 real
node v5 real
node x1 crossing
node x2 crossing
node v6 real
node v7 real
node x3 crossing
node x4 crossing
node x5 crossing
node v8 real
node v9 real
node x6 crossing
node x7 crossing
node x8 crossing
node x9 crossing
node v10 real
node v11 real
node x10 crossing
node x11 crossing
node x12 crossing
node x13 crossing
node x14 crossing
node v12 real
node v13 real
node x15 crossing
node x16 crossing
node x17 crossing
node x18 crossing
node x19 crossing
node x20 crossing
node v14 real
node v15 real
node x21 crossing
node x22 crossing
node x23 crossing
node x24 crossing
node x25 crossing
node x26 crossing
node x27 crossing
edge e0
edge e1
edge e2
edge e3
edge e4
edge e5
edge e6
edge e7
seg s0 e0 x0 v1
seg s1 e1 x18 x2
seg s2 e0 x0 x23
seg s3 e1 x9 x24
seg s4 e2 v4 x1
seg s5 e0 x1 x5
seg s6 e2 x21 x2
seg s7 e1 x2 x3
seg s8 e2 x2 v5
seg s9 e3 x22 x3
seg s10 e1 x3 x0
seg s11 e3 x3 x17
seg s12 e2 x13 x1
seg s13 e3 x4 x5
seg s14 e0 x7 v0
seg s15 e3 x5 x12
seg s16 e4 v8 x11
seg s17 e3 x6 v7
seg s18 e4 x6 x7
seg s19 e0 x10 x5
seg s20 e4 x7 x8
seg s21 e2 x8 x4
seg s22 e4 x26 x9
seg s23 e1 x9 x0
seg s24 e4 x9 v9
seg s25 e5 v10 x10
seg s26 e0 x10 x7
seg s27 e5 x10 x11
seg s28 e4 x11 x6
seg s29 e5 x11 x12
seg s30 e3 x12 x6
seg s31 e5 x12 x13
seg s32 e2 x13 x8
seg s33 e5 x13 x14
seg s34 e1 x14 v3
seg s35 e5 x25 v11
seg s36 e6 v12 x15
seg s37 e5 x15 x14
seg s38 e6 x15 x16
seg s39 e4 x16 x8
seg s40 e6 x27 x17
seg s41 e3 x17 x4
seg s42 e6 x17 x18
seg s43 e1 x18 v2
seg s44 e6 x18 x19
seg s45 e2 x19 x4
seg s46 e6 x19 x20
seg s47 e0 x20 x1
seg s48 e6 x20 v13
seg s49 e7 v14 x21
seg s50 e2 x21 x19
seg s51 e7 x21 x22
seg s52 e3 x22 v6
seg s53 e7 x22 x23
seg s54 e0 x23 x20
seg s55 e7 x23 x24
seg s56 e1 x24 x14
seg s57 e7 x24 x25
seg s58 e5 x25 x15
seg s59 e7 x25 x26
seg s60 e4 x26 x16
seg s61 e7 x26 x27
seg s62 e6 x27 x16
seg s63 e7 x27 v15
rot v0 s14-
rot v1 s0-
rot v2 s43-
rot v3 s34-
rot x0 s0+ s23- s2+ s10-
rot v4 s4+
rot v5 s8-
rot x1 s4- s47- s12- s5+
rot x2 s1- s8+ s7+ s6-
rot v6 s52-
rot v7 s17-
rot x3 s7- s11+ s10+ s9-
rot x4 s13+ s21- s41- s45-
rot x5 s5- s15+ s19- s13-
rot v8 s16+
rot v9 s24-
rot x6 s17+ s28- s30- s18+
rot x7 s14+ s20+ s26- s18-
rot x8 s20- s32- s39- s21+
rot x9 s3+ s24+ s23+ s22-
rot v10 s25+
rot v11 s35-
rot x10 s19+ s27+ s26+ s25-
rot x11 s16- s29+ s28+ s27-
rot x12 s15- s31+ s30+ s29-
rot x13 s12+ s33+ s32+ s31-
rot x14 s33- s56- s37- s34+
rot v12 s36+
rot v13 s48-
rot x15 s36- s58- s38+ s37+
rot x16 s38- s60- s62- s39+
rot x17 s11- s42+ s41+ s40-
rot x18 s1+ s44+ s43+ s42-
rot x19 s44- s50- s46+ s45+
rot x20 s46- s54- s48+ s47+
rot v14 s49+
rot v15 s63-
rot x21 s6+ s51+ s50+ s49-
rot x22 s9+ s53+ s52+ s51-
rot x23 s2- s55+ s54+ s53-
rot x24 s3- s57+ s56+ s55-
rot x25 s35+ s59+ s58+ s57-
rot x26 s22+ s61+ s60+ s59-
rot x27 s40+ s63+ s62+ s61-
)"},
      {"star_4", R"(kplanar 1
node v0 real
node v1 real
node x0 crossing
node v2 real
node x1 crossing
node x2 crossing
node v3 real
node x3 crossing
node x4 crossing
node x5 crossing
edge e0
edge e1
edge e2
seg s0 e0 x0 x0
seg s1 e0 x0 x1
seg s2 e0 x0 v1
seg s3 e1 x2 x1
seg s4 e0 x3 v0
seg s5 e1 x1 x2
seg s6 e1 x2 v0
seg s7 e1 x4 v2
seg s8 e2 v0 x3
seg s9 e0 x3 x1
seg s10 e2 x5 x4
seg s11 e1 x4 x2
seg s12 e2 x4 x5
seg s13 e2 x5 x3
seg s14 e2 x5 v3
rot v0 s4- s8+ s6-
rot v1 s2-
rot x0 s0+ s2+ s1+ s0-
rot v2 s7-
rot x1 s1- s5+ s9- s3-
rot x2 s3+ s11- s6+ s5-
rot v3 s14-
rot x3 s4+ s13- s9+ s8-
rot x4 s7+ s12+ s11+ s10-
rot x5 s10+ s14+ s13+ s12-
)"},
      {"weave_4", R"(kplanar 1
node v0 real
node v1 real
node v2 real
node v3 real
node x0 crossing
node x1 crossing
node x2 crossing
node x3 crossing
edge e0
edge e1
seg s0 e0 x3 x1
seg s1 e1 v2 x0
seg s2 e0 x2 v0
seg s3 e1 x0 x1
seg s4 e0 x1 v1
seg s5 e1 x1 x2
seg s6 e0 x2 x0
seg s7 e1 x2 x3
seg s8 e0 x3 x0
seg s9 e1 x3 v3
rot v0 s2-
rot v1 s4-
rot v2 s1+
rot v3 s9-
rot x0 s1- s8- s3+ s6-
rot x1 s0- s5+ s4+ s3-
rot x2 s2+ s7+ s6+ s5-
rot x3 s0+ s9+ s8+ s7-
)"},
      {"weave_5", R"(kplanar 1
node v0 real
node v1 real
node v2 real
node v3 real
node x0 crossing
node x1 crossing
node x2 crossing
node x3 crossing
node x4 crossing
edge e0
edge e1
seg s0 e0 x1 v1
seg s1 e1 v2 x0
seg s2 e0 x0 x3
seg s3 e1 x0 x1
seg s4 e0 x2 x0
seg s5 e1 x1 x2
seg s6 e0 x4 x1
seg s7 e1 x2 x3
seg s8 e0 x3 v0
seg s9 e1 x3 x4
seg s10 e0 x4 x2
seg s11 e1 x4 v3
rot v0 s8-
rot v1 s0-
rot v2 s1+
rot v3 s11-
rot x0 s1- s4- s3+ s2+
rot x1 s0+ s5+ s6- s3-
rot x2 s4+ s7+ s10- s5-
rot x3 s2- s9+ s8+ s7-
rot x4 s6+ s11+ s10+ s9-
)"},
  };
  return table;
}

}  // namespace

std::vector<std::string> seed_names() {
  std::vector<std::string> out;
  for (const auto& [name, text] : seeds()) out.push_back(name);
  return out;
}

const std::string& seed_text(const std::string& name) {
  auto it = seeds().find(name);
  if (it == seeds().end()) throw InvalidArgument("no seed named " + name);
  return it->second;
}

}  // namespace kplanar
