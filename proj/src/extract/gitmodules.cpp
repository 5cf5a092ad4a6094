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

#include "builder.hpp"
#include "text.hpp"

namespace ccdep {

ExtractionResult extract_gitsubmodule(std::string_view content, std::string_view path,
                                      const ExtractOptions&) {
  detail::ResultBuilder b(ToolKind::kGitSubmodule, path);
  if (!b.begin(content)) return b.finish();

  struct Section {
    std::string name;
    int line = 0;
    std::optional<std::string> url;
  };
  std::optional<Section> cur;
  auto flush = [&] {
    if (!cur) return;
    if (!cur->url || cur->url->empty()) {
      b.warn(cur->line, "submodule '" + cur->name + "' has no url");
    } else {
      b.add(*cur->url, NameStyle::kRepositoryUrl, VersionConstraint::unspecified(), cur->line,
            *cur->url);
    }
    cur.reset();
  };

  for (const auto& [raw, number] : text::lines(b.content())) {
    std::string_view line = text::trim(raw);
    if (line.empty() || line.front() == '#' || line.front() == ';') continue;
    if (line.front() == '[') {
      flush();
      if (!line.ends_with(']')) {
        b.warn(number, "malformed section header");
        continue;
      }
      std::string_view inner = text::trim(line.substr(1, line.size() - 2));
      if (!text::starts_with_icase(inner, "submodule")) continue;
      b.recognize();
      std::string_view name = text::trim(inner.substr(9));
      if (name.size() >= 2 && name.front() == '"' && name.back() == '"') {
        name = name.substr(1, name.size() - 2);
      }
      cur = Section{std::string(name), number, std::nullopt};
      continue;
    }
    if (!cur) continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) continue;
    if (text::iequals(text::trim(line.substr(0, eq)), "url")) {
      std::string_view v = text::trim(line.substr(eq + 1));
      if (v.size() >= 2 && v.front() == '"' && v.back() == '"') v = v.substr(1, v.size() - 2);
      cur->url = std::string(v);
    }
  }
  flush();
  return b.finish();
}

}  // namespace ccdep
