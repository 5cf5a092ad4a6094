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
#include "lexer.hpp"
#include "text.hpp"

namespace ccdep {

ExtractionResult extract_meson(std::string_view content, std::string_view path,
                               const ExtractOptions&) {
  detail::ResultBuilder b(ToolKind::kMeson, path);
  if (!b.begin(content)) return b.finish();
  b.recognize();
  detail::LexConfig cfg;
  cfg.hash_comments = true;
  cfg.triple_quotes = true;
  auto ts = detail::tokenize(b.content(), cfg);
  auto errors = ts.errors;
  const auto& t = ts.tokens;
  for (const auto& c : detail::find_calls(t, errors)) {
    const bool dep = c.name == "dependency";
    const bool sub = c.name == "subproject";
    const bool lib = c.name.ends_with(".find_library");
    if (!dep && !sub && !lib) continue;
    if (c.args.empty() || !c.args.front().key.empty()) continue;
    const auto* name = detail::single_string(t, c.args.front());
    if (!name) continue;  // computed name
    if (name->text.empty()) {
      b.warn(c.line, c.name + "() with an empty name");
      continue;
    }
    VersionConstraint constraint;
    if (dep) {
      if (const auto* v = detail::find_kwarg(c, "version")) {
        std::string expr;
        for (const auto* s : detail::strings_in(t, v->begin, v->end)) {
          if (!expr.empty()) expr += ' ';
          expr += s->text;
        }
        constraint = parse_constraint(expr);
      }
    }
    // dependency() names are pkg-config modules; find_library() takes a
    // bare library name.
    b.add(name->text, dep ? NameStyle::kPkgConfigModule : NameStyle::kPlain, std::move(constraint),
          name->line);
  }
  for (const auto& e : errors) b.warn(e.line, e.message);
  return b.finish();
}

}  // namespace ccdep
