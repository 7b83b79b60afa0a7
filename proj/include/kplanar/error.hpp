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

#include <stdexcept>
#include <string>

namespace kplanar {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define KPLANAR_ERROR(Name)                 \
  class Name : public Error {               \
   public:                                  \
    explicit Name(const std::string& what)  \
        : Error(#Name ": " + what) {}       \
  }

KPLANAR_ERROR(SyntaxError);
KPLANAR_ERROR(ValidationError);
KPLANAR_ERROR(TraceBroken);
KPLANAR_ERROR(AnchorCycle);
KPLANAR_ERROR(Unsupported);
KPLANAR_ERROR(NotApplicable);
KPLANAR_ERROR(PreconditionFailed);
KPLANAR_ERROR(Unresolved);
KPLANAR_ERROR(NotInStyle);
KPLANAR_ERROR(NotIncident);
KPLANAR_ERROR(BadParity);
KPLANAR_ERROR(GeneralizationUnverified);
KPLANAR_ERROR(InvalidArgument);

#undef KPLANAR_ERROR

}  // namespace kplanar
