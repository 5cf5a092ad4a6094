// Copyright 2026 The ccdep Authors
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

// pkg-config style module lists: "glib-2.0 >= 2.56, zlib". Internal header.

#include <string>
#include <string_view>
#include <vector>

#include "ccdep/constraint.hpp"

namespace ccdep::detail {

struct ModuleSpec {
  std::string name;
  VersionConstraint constraint;
};

/// Splits a module list on whitespace and commas. A comparator (possibly
/// glued to the name, as in "zlib>=1.2") applies to the preceding module.
std::vector<ModuleSpec> parse_module_list(std::string_view list);

}  // namespace ccdep::detail
