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

using detail::Call;
using detail::Token;

detail::TokenStream lex(std::string_view content) {
  detail::LexConfig cfg;
  cfg.hash_comments = true;
  cfg.triple_quotes = true;
  return detail::tokenize(content, cfg);
}

bool is_deps_key(std::string_view key) { return key == "deps" || key.ends_with("_deps"); }

std::optional<std::string> kwarg_string(const std::vector<Token>& t, const Call& c,
                                        std::string_view key) {
  if (const auto* a = detail::find_kwarg(c, key)) {
    if (const auto* s = detail::single_string(t, *a)) return s->text;
  }
  return std::nullopt;
}

// "@@repo//pkg:target" -> "repo"; empty for main-repository labels.
std::string_view bazel_repo(std::string_view label) {
  if (!label.starts_with('@')) return {};
  while (label.starts_with('@')) label.remove_prefix(1);
  const std::size_t end = label.find_first_of("/:");
  return label.substr(0, end);
}

bool ignored_repo(std::string_view repo) {
  return repo.empty() || repo == "bazel_tools" || repo.starts_with("local_config_") ||
         repo == "platforms";
}

void emit_lex_errors(detail::ResultBuilder& b, const std::vector<detail::LexError>& errors) {
  for (const auto& e : errors) b.warn(e.line, e.message);
}

bool third_party_path(std::string_view path) {
  for (auto seg : text::split_any(path, "/\\")) {
    if (seg == "third-party" || seg == "third_party" || seg == "thirdparty" || seg == "3rdparty") {
      return true;
    }
  }
  return false;
}

}  // namespace

ExtractionResult extract_bazel(std::string_view content, std::string_view path,
                               const ExtractOptions&) {
  detail::ResultBuilder b(ToolKind::kBazel, path);
  if (!b.begin(content)) return b.finish();
  b.recognize();
  auto ts = lex(b.content());
  auto errors = ts.errors;
  const auto& t = ts.tokens;
  std::set<std::string, std::less<>> seen;
  for (const auto& c : detail::find_calls(t, errors)) {
    if (c.name == "http_archive" || c.name == "git_repository" ||
        c.name == "new_git_repository") {
      auto name = kwarg_string(t, c, "name");
      if (!name) {
        b.warn(c.line, c.name + "() without a name");
        continue;
      }
      std::optional<std::string> url = kwarg_string(t, c, "remote");
      if (!url) url = kwarg_string(t, c, "url");
      if (!url) {
        if (const auto* a = detail::find_kwarg(c, "urls")) {
          auto s = detail::strings_in(t, a->begin, a->end);
          if (!s.empty()) url = s.front()->text;
        }
      }
      VersionConstraint constraint;
      if (auto tag = kwarg_string(t, c, "tag")) constraint = detail::pin_constraint(*tag);
      if (seen.insert(*name).second) {
        b.add(*name, NameStyle::kPlain, std::move(constraint), c.line, std::move(url));
      }
    }
    for (const auto& a : c.args) {
      if (!is_deps_key(a.key)) continue;
      for (const auto* s : detail::strings_in(t, a.begin, a.end)) {
        std::string_view repo = bazel_repo(s->text);
        if (ignored_repo(repo) || seen.count(repo)) continue;
        seen.emplace(repo);
        b.add(repo, NameStyle::kPlain, VersionConstraint::unspecified(), s->line);
      }
    }
  }
  emit_lex_errors(b, errors);
  return b.finish();
}

ExtractionResult extract_buck(std::string_view content, std::string_view path,
                              const ExtractOptions&) {
  detail::ResultBuilder b(ToolKind::kBuck, path);
  if (!b.begin(content)) return b.finish();
  b.recognize();
  auto ts = lex(b.content());
  auto errors = ts.errors;
  const auto& t = ts.tokens;
  std::set<std::string, std::less<>> seen;
  const bool vendored = third_party_path(path);
  for (const auto& c : detail::find_calls(t, errors)) {
    if (c.name == "prebuilt_cxx_library" && vendored) {
      if (auto name = kwarg_string(t, c, "name"); name && seen.insert(*name).second) {
        b.add(*name, NameStyle::kPlain, VersionConstraint::unspecified(), c.line);
      }
    }
    for (const auto& a : c.args) {
      if (!is_deps_key(a.key)) continue;
      for (const auto* s : detail::strings_in(t, a.begin, a.end)) {
        std::string_view label = s->text;
        while (label.starts_with('@')) label.remove_prefix(1);
        const std::size_t sep = label.find("//");
        if (sep == std::string_view::npos || sep == 0) continue;
        std::string_view cell = label.substr(0, sep);
        if (seen.count(cell)) continue;
        seen.emplace(cell);
        b.add(cell, NameStyle::kPlain, VersionConstraint::unspecified(), s->line);
      }
    }
  }
  emit_lex_errors(b, errors);
  return b.finish();
}

}  // namespace ccdep
