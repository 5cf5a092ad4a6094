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

#include <utility>

#include "builder.hpp"
#include "text.hpp"

namespace ccdep {
namespace {

using detail::ResultBuilder;

bool is_dependency_field(std::string_view name) {
  return text::iequals(name, "Depends") || text::iequals(name, "Build-Depends") ||
         text::iequals(name, "Build-Depends-Indep") || text::iequals(name, "Build-Depends-Arch");
}

bool valid_package_name(std::string_view s) {
  if (s.size() < 2 || !text::is_alnum(s[0])) return false;
  for (char c : s) {
    if (!(text::is_alnum(c) || c == '+' || c == '-' || c == '.' || c == ':')) return false;
  }
  return true;
}

struct Field {
  std::string name;
  std::string value;
  std::vector<std::pair<std::size_t, int>> line_at;  // (offset into value, line)

  int line_of(std::size_t offset) const {
    int line = line_at.empty() ? 0 : line_at.front().second;
    for (const auto& [off, l] : line_at) {
      if (off > offset) break;
      line = l;
    }
    return line;
  }
};

void parse_alternative(ResultBuilder& b, std::string_view alt, int line) {
  alt = text::trim(alt);
  std::size_t end = 0;
  while (end < alt.size() && !text::is_space(alt[end]) && alt[end] != '(' && alt[end] != '[' &&
         alt[end] != '<') {
    ++end;
  }
  std::string_view name = alt.substr(0, end);
  if (name.empty()) return;
  if (!valid_package_name(name)) {
    b.warn(line, "malformed package name '" + std::string(name) + "'");
    return;
  }
  VersionConstraint constraint;
  if (std::size_t open = alt.find('(', end); open != std::string_view::npos) {
    std::size_t close = alt.find(')', open);
    if (close == std::string_view::npos) {
      b.warn(line, "unterminated version restriction for '" + std::string(name) + "'");
      return;
    }
    constraint = parse_constraint(text::trim(alt.substr(open + 1, close - open - 1)));
  }
  b.add(name, NameStyle::kDebPackage, std::move(constraint), line);
}

void parse_field(ResultBuilder& b, const Field& f) {
  std::string_view v = f.value;
  std::size_t start = 0;
  while (start <= v.size()) {
    std::size_t comma = v.find(',', start);
    if (comma == std::string_view::npos) comma = v.size();
    std::string_view entry = v.substr(start, comma - start);
    std::size_t lead = 0;
    while (lead < entry.size() && text::is_space(entry[lead])) ++lead;
    const int line = f.line_of(start + lead);
    entry = text::trim(entry);
    if (!entry.empty()) {
      if (entry.find("${") != std::string_view::npos) {
        b.warn(line, "skipping substitution variable in '" + std::string(entry) + "'");
      } else {
        std::size_t pos = 0;
        while (pos <= entry.size()) {
          std::size_t bar = entry.find('|', pos);
          if (bar == std::string_view::npos) bar = entry.size();
          parse_alternative(b, entry.substr(pos, bar - pos), line);
          pos = bar + 1;
        }
      }
    }
    start = comma + 1;
  }
}

}  // namespace

ExtractionResult extract_deb_control(std::string_view content, std::string_view path,
                                     const ExtractOptions&) {
  ResultBuilder b(ToolKind::kDeb, path);
  if (!b.begin(content)) return b.finish();

  std::optional<Field> cur;
  auto flush = [&] {
    if (cur && is_dependency_field(cur->name)) parse_field(b, *cur);
    cur.reset();
  };
  for (const auto& [line, number] : text::lines(b.content())) {
    if (text::trim(line).empty()) {
      flush();
      continue;
    }
    if (line.starts_with('#')) continue;
    if (line.front() == ' ' || line.front() == '\t') {
      if (!cur) {
        b.warn(number, "continuation line without a field");
        continue;
      }
      cur->line_at.emplace_back(cur->value.size() + 1, number);
      cur->value += '\n';
      cur->value += line;
      continue;
    }
    flush();
    const std::size_t colon = line.find(':');
    if (colon == std::string_view::npos || colon == 0) {
      b.warn(number, "malformed control line");
      continue;
    }
    std::string_view name = text::trim(line.substr(0, colon));
    if (text::iequals(name, "Source") || text::iequals(name, "Package")) b.recognize();
    cur = Field{std::string(name), std::string(line.substr(colon + 1)), {{0, number}}};
  }
  flush();
  return b.finish();
}

}  // namespace ccdep
