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

struct Requirement {
  std::string name;
  VersionConstraint constraint;
  int line;
};

// "zlib 1.2.x", "conan::openssl/1.1.1", "vcpkg::boost", "tbox~shared >=1.6".
std::optional<Requirement> parse_requirement(std::string_view spec, int line) {
  spec = text::trim(spec);
  if (spec.empty()) return std::nullopt;
  std::size_t end = 0;
  while (end < spec.size() && !text::is_space(spec[end])) ++end;
  std::string_view name = spec.substr(0, end);
  std::string version(text::trim(spec.substr(end)));
  if (std::size_t pm = name.find("::"); pm != std::string_view::npos) name = name.substr(pm + 2);
  if (std::size_t slash = name.find('/'); slash != std::string_view::npos) {
    if (version.empty()) version = std::string(name.substr(slash + 1));
    name = name.substr(0, slash);
  }
  if (std::size_t alias = name.find('~'); alias != std::string_view::npos && alias > 0) {
    name = name.substr(0, alias);
  }
  if (name.empty()) return std::nullopt;
  return Requirement{std::string(name), parse_constraint(version), line};
}

struct Mined {
  std::vector<Requirement> requires_;
  std::vector<std::pair<std::string, int>> packages;
  std::vector<std::pair<std::string, int>> links;  // add_links/add_syslinks
  std::vector<detail::LexError> errors;
};

Mined mine(std::string_view content) {
  detail::LexConfig cfg;
  cfg.lua_comments = true;
  cfg.lua_long_strings = true;
  auto ts = detail::tokenize(content, cfg);
  Mined m;
  m.errors = ts.errors;
  for (const auto& call : detail::find_calls(ts.tokens, m.errors)) {
    const bool req = call.name == "add_requires";
    const bool link = call.name == "add_links" || call.name == "add_syslinks";
    if (!req && !link && call.name != "add_packages") continue;
    for (const auto& arg : call.args) {
      if (!arg.key.empty()) continue;
      const auto* s = detail::single_string(ts.tokens, arg);
      if (!s) continue;
      if (req) {
        if (auto r = parse_requirement(s->text, s->line)) m.requires_.push_back(std::move(*r));
      } else if (link) {
        m.links.emplace_back(s->text, s->line);
      } else {
        m.packages.emplace_back(s->text, s->line);
      }
    }
  }
  return m;
}

}  // namespace

ExtractionResult extract_xrepo(std::string_view content, std::string_view path,
                               const ExtractOptions&) {
  detail::ResultBuilder b(ToolKind::kXrepo, path);
  if (!b.begin(content)) return b.finish();
  auto m = mine(b.content());
  for (auto& r : m.requires_) b.add(r.name, NameStyle::kPlain, std::move(r.constraint), r.line);
  return b.finish();
}

ExtractionResult extract_xmake(std::string_view content, std::string_view path,
                               const ExtractOptions&) {
  detail::ResultBuilder b(ToolKind::kXmake, path);
  if (!b.begin(content)) return b.finish();
  b.recognize();
  auto m = mine(b.content());
  for (const auto& e : m.errors) b.warn(e.line, e.message);
  std::set<std::string> required;
  for (auto& r : m.requires_) {
    required.insert(r.name);
    b.add(r.name, NameStyle::kPlain, std::move(r.constraint), r.line);
  }
  for (const auto& [name, line] : m.packages) {
    if (required.count(name)) continue;
    required.insert(name);
    b.add(name, NameStyle::kPlain, VersionConstraint::unspecified(), line);
  }
  for (const auto& [name, line] : m.links) {
    if (name.empty()) continue;
    b.add(name, NameStyle::kLibFile, VersionConstraint::unspecified(), line);
  }
  return b.finish();
}

}  // namespace ccdep
