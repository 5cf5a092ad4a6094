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

#include <set>

#include "builder.hpp"
#include "lexer.hpp"
#include "text.hpp"

namespace ccdep {
namespace {

using detail::ResultBuilder;

constexpr std::string_view kRequireSections[] = {"requires", "build_requires", "tool_requires",
                                                 "test_requires"};

bool is_require_section(std::string_view s) {
  for (auto k : kRequireSections) {
    if (s == k) return true;
  }
  return false;
}

// conaninfo.txt writes semver-mode requirements as "1.2.Z".
VersionConstraint conaninfo_version(std::string_view v) {
  if (v.ends_with(".Z") || v.ends_with(".Y.Z")) {
    std::string_view prefix = v.substr(0, v.find(".Y") != std::string_view::npos ? v.find(".Y")
                                                                                  : v.size() - 2);
    if (auto p = Version::try_parse(prefix)) {
      if (auto w = VersionConstraint::wildcard(*p, std::string(v))) return *w;
    }
  }
  return detail::pin_constraint(v);
}

// "name/version@user/channel#rev", "name/[>=1.0 <2.0]@user/channel".
void add_reference(ResultBuilder& b, std::string_view ref, int line) {
  ref = text::trim(ref);
  if (std::size_t hash = ref.find(" #"); hash != std::string_view::npos) {
    ref = text::trim(ref.substr(0, hash));
  }
  if (ref.empty()) return;
  const std::size_t slash = ref.find('/');
  if (slash == std::string_view::npos || slash == 0) {
    b.warn(line, "malformed requirement '" + std::string(ref) + "'");
    return;
  }
  std::string_view name = ref.substr(0, slash);
  std::string_view rest = ref.substr(slash + 1);
  VersionConstraint c;
  if (rest.starts_with('[')) {
    const std::size_t close = rest.find(']');
    if (close == std::string_view::npos) {
      b.warn(line, "unterminated version range in '" + std::string(ref) + "'");
      return;
    }
    std::string_view inner = rest.substr(1, close - 1);
    // Options such as ", include_prerelease" follow the expression.
    if (std::size_t comma = inner.find(','); comma != std::string_view::npos) {
      std::string_view tail = text::trim(inner.substr(comma + 1));
      if (!tail.empty() && text::is_alpha(tail.front())) inner = inner.substr(0, comma);
    }
    c = parse_constraint(text::trim(inner));
  } else {
    std::size_t end = rest.find_first_of("@#:");
    c = conaninfo_version(text::trim(rest.substr(0, end)));
  }
  b.add(name, NameStyle::kPlain, std::move(c), line);
}

void extract_ini(ResultBuilder& b) {
  bool active = false;
  for (const auto& [raw, number] : text::lines(b.content())) {
    std::string_view line = text::trim(raw);
    if (line.empty() || line.starts_with('#')) continue;
    if (line.starts_with('[')) {
      if (!line.ends_with(']') || line.size() < 3) {
        b.warn(number, "malformed section header; section skipped");
        active = false;
        continue;
      }
      b.recognize();
      active = is_require_section(text::lower(text::trim(line.substr(1, line.size() - 2))));
      continue;
    }
    if (active) add_reference(b, line, number);
  }
}

void extract_python(ResultBuilder& b) {
  detail::LexConfig cfg;
  cfg.hash_comments = true;
  cfg.triple_quotes = true;
  auto ts = detail::tokenize(b.content(), cfg);
  const auto& t = ts.tokens;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i].kind == detail::TokKind::kIdent && t[i].text == "ConanFile") b.recognize();
    if (t[i].kind != detail::TokKind::kIdent || !is_require_section(t[i].text)) continue;
    if (i > 0 && detail::is_punct(t[i - 1], ".")) continue;
    if (i + 1 >= t.size() || !detail::is_punct(t[i + 1], "=")) continue;
    std::size_t k = i + 2;
    if (k < t.size() && (detail::is_punct(t[k], "(") || detail::is_punct(t[k], "["))) {
      const std::size_t close = detail::matching_bracket(t, k);
      if (close == static_cast<std::size_t>(-1)) continue;
      for (const auto* s : detail::strings_in(t, k + 1, close)) add_reference(b, s->text, s->line);
      continue;
    }
    while (k < t.size() && t[k].kind == detail::TokKind::kString) {
      add_reference(b, t[k].text, t[k].line);
      if (k + 1 < t.size() && detail::is_punct(t[k + 1], ",")) {
        k += 2;
      } else {
        break;
      }
    }
  }
  std::vector<detail::LexError> errors;
  for (const auto& call : detail::find_calls(t, errors)) {
    if (!call.name.starts_with("self.") || !is_require_section(call.name.substr(5))) continue;
    if (call.args.empty()) continue;
    if (const auto* s = detail::single_string(t, call.args.front())) {
      add_reference(b, s->text, s->line);
    }
  }
  for (const auto& e : ts.errors) b.warn(e.line, e.message);
  for (const auto& e : errors) b.warn(e.line, e.message);
}

}  // namespace

ExtractionResult extract_conan(std::string_view content, std::string_view path,
                               const ExtractOptions&) {
  ResultBuilder b(ToolKind::kConan, path);
  if (!b.begin(content)) return b.finish();
  if (text::ends_with_icase(path, ".py")) {
    extract_python(b);
  } else {
    extract_ini(b);
  }
  return b.finish();
}

}  // namespace ccdep
