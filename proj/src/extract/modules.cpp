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

#include "modules.hpp"

#include "text.hpp"

namespace ccdep::detail {
namespace {

bool is_op(char c) { return c == '<' || c == '>' || c == '=' || c == '!'; }
bool is_sep(char c) { return text::is_space(c) || c == ','; }

}  // namespace

std::vector<ModuleSpec> parse_module_list(std::string_view s) {
  std::vector<ModuleSpec> out;
  std::size_t i = 0;
  while (i < s.size()) {
    if (is_sep(s[i])) {
      ++i;
      continue;
    }
    if (is_op(s[i])) {
      std::size_t j = i;
      while (j < s.size() && is_op(s[j])) ++j;
      std::string op(s.substr(i, j - i));
      while (j < s.size() && text::is_space(s[j])) ++j;
      std::size_t k = j;
      while (k < s.size() && !is_sep(s[k])) ++k;
      if (!out.empty() && !out.back().constraint.specified() && out.back().constraint.raw().empty()) {
        out.back().constraint = parse_constraint(op + " " + std::string(s.substr(j, k - j)));
      }
      i = k;
      continue;
    }
    std::size_t j = i;
    while (j < s.size() && !is_sep(s[j]) && !is_op(s[j])) ++j;
    out.push_back({std::string(s.substr(i, j - i)), VersionConstraint::unspecified()});
    i = j;
  }
  return out;
}

}  // namespace ccdep::detail
