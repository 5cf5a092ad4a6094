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
#include "modules.hpp"
#include "text.hpp"

namespace ccdep {
namespace {

// Blanks m4 comments ("dnl ..." and "# ...") outside quotes, keeping
// newlines so offsets still map to lines.
std::string strip_comments(std::string_view s) {
  std::string out(s);
  int quote = 0;
  for (std::size_t i = 0; i < out.size(); ++i) {
    const char c = out[i];
    if (c == '[') {
      ++quote;
    } else if (c == ']') {
      if (quote > 0) --quote;
    } else if (quote == 0) {
      const bool dnl = c == 'd' && out.compare(i, 3, "dnl") == 0 &&
                       (i == 0 || !text::is_ident_char(out[i - 1])) &&
                       (i + 3 >= out.size() || !text::is_ident_char(out[i + 3]));
      if (c == '#' || dnl) {
        while (i < out.size() && out[i] != '\n') out[i++] = ' ';
      }
    }
  }
  return out;
}

std::string_view unquote(std::string_view a) {
  a = text::trim(a);
  while (a.size() >= 2 && a.front() == '[' && a.back() == ']') a = text::trim(a.substr(1, a.size() - 2));
  return a;
}

// Arguments of the macro call whose '(' is at s[open]; nullopt if the call
// never closes.
std::optional<std::vector<std::string_view>> macro_args(std::string_view s, std::size_t open) {
  std::vector<std::string_view> args;
  int quote = 0;
  int paren = 0;
  std::size_t start = open + 1;
  for (std::size_t i = open + 1; i < s.size(); ++i) {
    const char c = s[i];
    if (c == '[') {
      ++quote;
    } else if (c == ']') {
      if (quote > 0) --quote;
    } else if (quote == 0) {
      if (c == '(') {
        ++paren;
      } else if (c == ')') {
        if (paren-- == 0) {
          args.push_back(unquote(s.substr(start, i - start)));
          return args;
        }
      } else if (c == ',' && paren == 0) {
        args.push_back(unquote(s.substr(start, i - start)));
        start = i + 1;
      }
    }
  }
  return std::nullopt;
}

}  // namespace

ExtractionResult extract_autoconf(std::string_view content, std::string_view path,
                                  const ExtractOptions&) {
  detail::ResultBuilder b(ToolKind::kAutoconf, path);
  if (!b.begin(content)) return b.finish();
  const std::string src = strip_comments(b.content());
  if (src.find("AC_") != std::string::npos || src.find("AM_") != std::string::npos) b.recognize();
  text::LineIndex index(src);
  std::size_t i = 0;
  while (i < src.size()) {
    if (!(text::is_alpha(src[i]) || src[i] == '_') ||
        (i > 0 && text::is_ident_char(src[i - 1]))) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < src.size() && text::is_ident_char(src[j])) ++j;
    std::string_view name(src.data() + i, j - i);
    const bool interesting = name == "AC_CHECK_LIB" || name == "AC_SEARCH_LIBS" ||
                             name == "AC_HAVE_LIBRARY" || name == "PKG_CHECK_MODULES" ||
                             name == "PKG_CHECK_MODULES_STATIC" || name.starts_with("AX_BOOST_");
    if (!interesting || j >= src.size() || src[j] != '(') {
      i = j;
      continue;
    }
    const int line = index.line_of(i);
    auto args = macro_args(src, j);
    if (!args) {
      b.warn(line, "unterminated " + std::string(name) + " call");
      i = j + 1;
      continue;
    }
    const auto& a = *args;
    if ((name == "AC_CHECK_LIB" || name == "AC_HAVE_LIBRARY") && !a.empty() && !a[0].empty()) {
      b.add(a[0], NameStyle::kPlain, VersionConstraint::unspecified(), line);
    } else if (name == "AC_SEARCH_LIBS" && a.size() >= 2) {
      for (auto lib : text::split_any(a[1], " \t\n")) {
        b.add(lib, NameStyle::kPlain, VersionConstraint::unspecified(), line);
      }
    } else if (name.starts_with("PKG_CHECK_MODULES") && a.size() >= 2) {
      for (auto& m : detail::parse_module_list(a[1])) {
        b.add(m.name, NameStyle::kPkgConfigModule, std::move(m.constraint), line);
      }
    } else if (name.starts_with("AX_BOOST_")) {
      VersionConstraint c;
      if (name == "AX_BOOST_BASE" && !a.empty() && !a[0].empty()) {
        if (auto v = Version::try_parse(a[0])) {
          c = VersionConstraint::range(Bound{*v, true}, std::nullopt, ">=" + std::string(a[0]));
        }
      }
      b.add("boost", NameStyle::kPlain, std::move(c), line);
    }
    // Continue inside the arguments so nested macros are seen too.
    i = j + 1;
  }
  return b.finish();
}

}  // namespace ccdep
