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
namespace {

using detail::is_punct;
using detail::TokKind;

// "fmt@7.0.3", "fmt^7.0.0", "fmt~7.0.0", or a bare name.
void add_spec(detail::ResultBuilder& b, std::string_view spec, int line) {
  spec = text::trim(spec);
  const std::size_t op = spec.find_first_of("@^~=<>");
  if (op == std::string_view::npos) {
    b.add(spec, NameStyle::kPlain, VersionConstraint::unspecified(), line);
    return;
  }
  std::string_view name = text::trim(spec.substr(0, op));
  std::string_view rest = text::trim(spec.substr(op));
  VersionConstraint c;
  if (rest.front() == '@') {
    c = detail::pin_constraint(rest.substr(1));
  } else {
    c = parse_constraint(rest);
  }
  b.add(name, NameStyle::kPlain, std::move(c), line);
}

}  // namespace

ExtractionResult extract_dds(std::string_view content, std::string_view path,
                             const ExtractOptions&) {
  detail::ResultBuilder b(ToolKind::kDds, path);
  if (!b.begin(content)) return b.finish();
  b.recognize();
  detail::LexConfig cfg;
  cfg.c_comments = true;
  auto ts = detail::tokenize(b.content(), cfg);
  const auto& t = ts.tokens;
  for (const auto& e : ts.errors) b.warn(e.line, e.message);
  for (std::size_t i = 0; i + 2 < t.size(); ++i) {
    const bool key = (t[i].kind == TokKind::kIdent || t[i].kind == TokKind::kString) &&
                     t[i].text == "depends";
    if (!key || !is_punct(t[i + 1], ":")) continue;
    const std::size_t open = i + 2;
    if (!is_punct(t[open], "[") && !is_punct(t[open], "{")) {
      b.warn(t[i].line, "'depends' is neither an array nor an object");
      continue;
    }
    const std::size_t close = detail::matching_bracket(t, open);
    if (close == static_cast<std::size_t>(-1)) {
      b.warn(t[i].line, "unterminated 'depends' value");
      break;
    }
    if (is_punct(t[open], "[")) {
      for (const auto* s : detail::strings_in(t, open + 1, close)) add_spec(b, s->text, s->line);
    } else {
      for (std::size_t k = open + 1; k + 2 < close + 1; ++k) {
        const bool name = t[k].kind == TokKind::kString || t[k].kind == TokKind::kIdent;
        if (!name || !is_punct(t[k + 1], ":")) continue;
        VersionConstraint c;
        if (t[k + 2].kind == TokKind::kString) c = parse_constraint(t[k + 2].text);
        b.add(t[k].text, NameStyle::kPlain, std::move(c), t[k].line);
        k += 2;
      }
    }
    i = close;
  }
  return b.finish();
}

}  // namespace ccdep
