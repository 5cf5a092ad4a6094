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

#include <map>

#include "builder.hpp"
#include "modules.hpp"
#include "text.hpp"

namespace ccdep {
namespace {

constexpr int kMaxDepth = 8;

bool is_var_name(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!(text::is_ident_char(c) || c == '.')) return false;
  }
  return true;
}

// Expands ${var}; returns false if some reference stayed unresolved.
bool expand(const std::map<std::string, std::string, std::less<>>& vars, std::string& s) {
  for (int pass = 0; pass < kMaxDepth; ++pass) {
    std::string out;
    bool changed = false;
    bool unresolved = false;
    for (std::size_t i = 0; i < s.size();) {
      if (s[i] == '$' && i + 1 < s.size() && s[i + 1] == '{') {
        const std::size_t close = s.find('}', i + 2);
        if (close != std::string::npos) {
          auto it = vars.find(std::string_view(s).substr(i + 2, close - i - 2));
          if (it != vars.end()) {
            out += it->second;
            changed = true;
          } else {
            out.append(s, i, close + 1 - i);
            unresolved = true;
          }
          i = close + 1;
          continue;
        }
      }
      out += s[i++];
    }
    s = std::move(out);
    if (!changed) return !unresolved;
  }
  return s.find("${") == std::string::npos;
}

}  // namespace

ExtractionResult extract_pkgconfig(std::string_view content, std::string_view path,
                                   const ExtractOptions&) {
  detail::ResultBuilder b(ToolKind::kPkgConfig, path);
  if (!b.begin(content)) return b.finish();
  std::map<std::string, std::string, std::less<>> vars;
  for (const auto& [raw, number] : text::lines(b.content())) {
    std::string_view line = raw;
    if (std::size_t hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = text::trim(line);
    if (line.empty()) continue;
    const std::size_t colon = line.find(':');
    const std::size_t eq = line.find('=');
    if (eq != std::string_view::npos && (colon == std::string_view::npos || eq < colon)) {
      std::string_view name = text::trim(line.substr(0, eq));
      if (is_var_name(name)) {
        std::string value(text::trim(line.substr(eq + 1)));
        expand(vars, value);
        vars[std::string(name)] = std::move(value);
      }
      continue;
    }
    if (colon == std::string_view::npos) continue;
    std::string_view key = text::trim(line.substr(0, colon));
    for (auto k : {"Name", "Version", "Libs", "Cflags", "Description", "Requires"}) {
      if (text::iequals(key, k)) b.recognize();
    }
    if (!text::iequals(key, "Requires") && !text::iequals(key, "Requires.private")) continue;
    std::string value(text::trim(line.substr(colon + 1)));
    if (!expand(vars, value)) {
      b.warn(number, "unresolved variable in " + std::string(key) + ": " + value);
    }
    for (auto& m : detail::parse_module_list(value)) {
      b.add(m.name, NameStyle::kPkgConfigModule, std::move(m.constraint), number);
    }
  }
  return b.finish();
}

}  // namespace ccdep
