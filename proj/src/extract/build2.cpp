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

bool is_toolchain_package(std::string_view name) { return name == "build2" || name == "bpkg"; }

// Cuts trailing clauses such as "? ($cxx.target.class == 'windows')" or
// "require {config.foo = true}".
std::string_view strip_clauses(std::string_view s) {
  for (std::string_view marker : {" ?", " require", " prefer", " enable", " reflect"}) {
    if (std::size_t p = s.find(marker); p != std::string_view::npos) s = s.substr(0, p);
  }
  return text::trim(s);
}

void add_alternative(detail::ResultBuilder& b, std::string_view alt, int line) {
  alt = strip_clauses(text::trim(alt));
  if (alt.empty()) return;
  std::vector<std::string_view> names;
  std::string_view constraint;
  if (alt.front() == '{') {
    const std::size_t close = alt.find('}');
    if (close == std::string_view::npos) {
      b.warn(line, "unterminated dependency group");
      return;
    }
    names = text::split_any(alt.substr(1, close - 1), " \t");
    constraint = text::trim(alt.substr(close + 1));
  } else {
    std::size_t end = 0;
    while (end < alt.size() && !text::is_space(alt[end]) && alt[end] != '^' && alt[end] != '~' &&
           alt[end] != '=' && alt[end] != '<' && alt[end] != '>' && alt[end] != '[' &&
           alt[end] != '(') {
      ++end;
    }
    names.push_back(alt.substr(0, end));
    constraint = text::trim(alt.substr(end));
  }
  for (std::string_view name : names) {
    if (name.empty() || is_toolchain_package(name)) continue;
    b.add(name, NameStyle::kBuild2Package,
          constraint.empty() ? VersionConstraint::unspecified() : parse_constraint(constraint),
          line);
  }
}

ExtractionResult extract_manifest(ToolKind tool, std::string_view content, std::string_view path) {
  detail::ResultBuilder b(tool, path);
  if (!b.begin(content)) return b.finish();
  const auto lines = text::lines(b.content());
  bool header = false;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::string_view line = text::trim(lines[i].text);
    if (line.empty() || line.front() == '#') continue;
    if (!header) {
      // A manifest starts with the format version line ": 1".
      if (line.front() != ':' || text::trim(line.substr(1)) != "1") return b.finish();
      header = true;
      b.recognize();
      continue;
    }
    const std::size_t colon = line.find(':');
    if (colon == std::string_view::npos) continue;
    std::string_view key = text::trim(line.substr(0, colon));
    std::string value(text::trim(line.substr(colon + 1)));
    const int number = lines[i].number;
    if (value == "\\") {  // multi-line value
      value.clear();
      for (++i; i < lines.size() && text::trim(lines[i].text) != "\\"; ++i) {
        value += ' ';
        value += lines[i].text;
      }
    }
    if (key != "depends") continue;
    std::string_view v = value;
    if (std::size_t semi = v.find(';'); semi != std::string_view::npos) v = v.substr(0, semi);
    v = text::trim(v);
    while (!v.empty() && (v.front() == '*' || v.front() == '?')) v = text::trim(v.substr(1));
    std::size_t pos = 0;
    while (pos <= v.size()) {
      std::size_t bar = v.find('|', pos);
      if (bar == std::string_view::npos) bar = v.size();
      add_alternative(b, v.substr(pos, bar - pos), number);
      pos = bar + 1;
    }
  }
  return b.finish();
}

}  // namespace

ExtractionResult extract_cppget(std::string_view content, std::string_view path,
                                const ExtractOptions&) {
  return extract_manifest(ToolKind::kCppget, content, path);
}

ExtractionResult extract_build2(std::string_view content, std::string_view path,
                                const ExtractOptions&) {
  return extract_manifest(ToolKind::kBuild2, content, path);
}

}  // namespace ccdep
