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

#include "ccdep/error.hpp"
#include "text.hpp"

namespace ccdep::detail {
namespace {

constexpr std::size_t kMaxNameLength = 200;

bool plausible_name(std::string_view s) {
  if (s.size() > kMaxNameLength) return false;
  for (char c : s) {
    const auto u = static_cast<unsigned char>(c);
    if (u < 0x21 || u == 0x7F) return false;
    switch (c) {
      case '$': case '{': case '}': case '(': case ')': case '[': case ']':
      case '"': case '\'': case '<': case '>': case '=': case ',': case ';':
      case '`': case '\\': case '|': case '!': case '*': case '?':
        return false;
      default:
        break;
    }
  }
  return true;
}

}  // namespace

bool ResultBuilder::begin(std::string_view content) {
  if (!text::is_text(content)) {
    warn(0, "content is not UTF-8 text; skipped");
    return false;
  }
  content_ = text::strip_bom(content);
  return true;
}

DependencyRecord* ResultBuilder::add(std::string_view raw_name, NameStyle style,
                                     VersionConstraint constraint, int line,
                                     std::optional<std::string> source_url) {
  std::string_view raw = text::trim(raw_name);
  std::string library;
  try {
    library = normalize_name(raw, style);
  } catch (const Error& e) {
    warn(line, e.what());
    return nullptr;
  }
  if (!plausible_name(library)) {
    warn(line, "ignoring implausible library name '" + std::string(raw) + "'");
    return nullptr;
  }
  DependencyRecord r;
  r.library = std::move(library);
  r.raw_name = std::string(raw);
  r.constraint = std::move(constraint);
  r.tool = tool_;
  r.phase = phase_of(tool_);
  r.evidence = Evidence{path_, line};
  r.source_url = std::move(source_url);
  r.system = is_system_library(r.library);
  result_.recognized = true;
  result_.records.push_back(std::move(r));
  return &result_.records.back();
}

void ResultBuilder::warn(int line, std::string message) {
  result_.warnings.push_back(Warning{path_, line, std::move(message)});
}

ExtractionResult ResultBuilder::finish() {
  canonicalize_records(result_.records);
  return std::move(result_);
}

VersionConstraint pin_constraint(std::string_view t) {
  t = text::trim(t);
  bool bare_number = !t.empty() && t.size() <= 8;
  for (char c : t) bare_number = bare_number && text::is_digit(c);
  if (looks_like_version(t) || bare_number) {
    if (auto v = Version::try_parse(t)) return VersionConstraint::exact(*v, std::string(t));
  }
  return VersionConstraint::unspecified(std::string(t));
}

}  // namespace ccdep::detail
