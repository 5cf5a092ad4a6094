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
namespace {

std::string_view unquote(std::string_view v) {
  v = text::trim(v);
  if (v.size() >= 2 && (v.front() == '"' || v.front() == '\'')) {
    const std::size_t close = v.find(v.front(), 1);
    if (close != std::string_view::npos) return v.substr(1, close - 1);
  }
  if (std::size_t hash = v.find('#'); hash != std::string_view::npos) v = v.substr(0, hash);
  return text::trim(v);
}

VersionConstraint buckaroo_version(std::string_view v) {
  v = text::trim(v);
  if (v.empty()) return {};
  // "branch=master", "revision=a1b2c3", "tag=v1.2.0"
  if (std::size_t eq = v.find('='); eq != std::string_view::npos && eq > 0 &&
                                    text::is_alpha(v.front())) {
    std::string_view kind = v.substr(0, eq);
    std::string_view value = v.substr(eq + 1);
    if (kind == "tag") {
      auto c = detail::pin_constraint(value);
      if (c.specified()) return VersionConstraint::exact(c.lower()->version, std::string(v));
    }
    return VersionConstraint::unspecified(std::string(v));
  }
  return parse_constraint(v);
}

}  // namespace

ExtractionResult extract_buckaroo(std::string_view content, std::string_view path,
                                  const ExtractOptions&) {
  detail::ResultBuilder b(ToolKind::kBuckaroo, path);
  if (!b.begin(content)) return b.finish();
  b.recognize();

  struct Dep {
    int line = 0;
    std::string package;
    std::string version;
  };
  std::optional<Dep> cur;
  auto flush = [&] {
    if (!cur) return;
    if (cur->package.empty()) {
      b.warn(cur->line, "dependency table without a package");
    } else {
      b.add(text::last_path_segment(cur->package), NameStyle::kPlain,
            buckaroo_version(cur->version), cur->line);
    }
    cur.reset();
  };

  for (const auto& [raw, number] : text::lines(b.content())) {
    std::string_view line = text::trim(raw);
    if (line.empty() || line.front() == '#') continue;
    if (line.front() == '[') {
      flush();
      if (line.starts_with("[[") && text::trim(line.substr(2, line.find("]]") - 2)) == "dependency") {
        cur = Dep{number, {}, {}};
      }
      continue;
    }
    if (!cur) continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) continue;
    std::string_view key = text::trim(line.substr(0, eq));
    if (key == "package") {
      cur->package = std::string(unquote(line.substr(eq + 1)));
    } else if (key == "version") {
      cur->version = std::string(unquote(line.substr(eq + 1)));
    }
  }
  flush();
  return b.finish();
}

}  // namespace ccdep
