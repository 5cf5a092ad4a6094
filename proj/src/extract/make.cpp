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
#include "ccdep/error.hpp"
#include "modules.hpp"
#include "text.hpp"

namespace ccdep {
namespace {

struct LogicalLine {
  std::string text;
  int number;
  bool recipe;
};

std::vector<LogicalLine> logical_lines(std::string_view content) {
  std::vector<LogicalLine> out;
  bool continuing = false;
  for (const auto& [raw, number] : text::lines(content)) {
    std::string_view line = raw;
    const bool more = line.ends_with('\\');
    if (more) line.remove_suffix(1);
    if (continuing) {
      out.back().text += ' ';
      out.back().text += line;
    } else {
      out.push_back({std::string(line), number, raw.starts_with('\t')});
    }
    continuing = more;
  }
  return out;
}

std::string_view strip_comment(std::string_view s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '#' && (i == 0 || s[i - 1] != '\\')) return s.substr(0, i);
  }
  return s;
}

bool is_assignment(std::string_view s) {
  s = text::trim(s);
  for (std::string_view prefix : {"export ", "override "}) {
    if (s.starts_with(prefix)) s = text::trim(s.substr(prefix.size()));
  }
  std::size_t i = 0;
  while (i < s.size() && (text::is_ident_char(s[i]) || s[i] == '.' || s[i] == '-')) ++i;
  if (i == 0) return false;
  while (i < s.size() && text::is_space(s[i])) ++i;
  for (std::string_view op : {"=", ":=", "::=", "+=", "?=", "!="}) {
    if (s.substr(i).starts_with(op)) return true;
  }
  return false;
}

bool mentions_linker(std::string_view s) {
  static const std::set<std::string_view> kTools = {"cc",  "gcc", "g++", "c++", "clang",
                                                     "clang++", "ld", "icc", "icpc"};
  for (auto tok : text::split_any(s, " \t;&|@()")) {
    if (kTools.count(tok) || tok.ends_with("-gcc") || tok.ends_with("-g++")) return true;
  }
  for (std::string_view var : {"CC", "CXX", "LD", "CCLD", "CXXLD", "LINK"}) {
    for (std::string_view open : {"$(", "${"}) {
      if (s.find(std::string(open) + std::string(var)) != std::string_view::npos) return true;
    }
  }
  return false;
}

// Names from "-lfoo" tokens.
std::vector<std::string_view> link_flags(std::string_view s) {
  std::vector<std::string_view> out;
  for (std::size_t i = 0; i + 2 < s.size(); ++i) {
    if (s[i] != '-' || s[i + 1] != 'l') continue;
    if (i > 0 && !(text::is_space(s[i - 1]) || std::string_view("'\"=(,`").find(s[i - 1]) !=
                                                   std::string_view::npos)) {
      continue;
    }
    std::size_t j = i + 2;
    if (!text::is_ident_char(s[j])) continue;
    while (j < s.size() && (text::is_ident_char(s[j]) || s[j] == '+' || s[j] == '.' || s[j] == '-')) ++j;
    out.push_back(s.substr(i + 2, j - i - 2));
    i = j - 1;
  }
  return out;
}

constexpr std::string_view kPkgConfigCalls[] = {"pkg-config", "$(PKG_CONFIG)", "${PKG_CONFIG}"};

}  // namespace

ExtractionResult extract_make(std::string_view content, std::string_view path,
                              const ExtractOptions&) {
  detail::ResultBuilder b(ToolKind::kMake, path);
  if (!b.begin(content)) return b.finish();
  b.recognize();
  // One record per library and file, at its first mention.
  std::set<std::string> seen;
  auto add = [&](std::string_view name, NameStyle style, VersionConstraint c, int line) {
    std::string key(name);
    try {
      key = normalize_name(name, style);
    } catch (const Error&) {
    }
    if (!seen.insert(key).second) return;
    b.add(name, style, std::move(c), line);
  };
  for (const auto& ll : logical_lines(b.content())) {
    std::string_view line = strip_comment(ll.text);
    if (text::trim(line).empty()) continue;
    if (is_assignment(line) || (ll.recipe && mentions_linker(line))) {
      for (auto lib : link_flags(line)) {
        add(lib, NameStyle::kPlain, VersionConstraint::unspecified(), ll.number);
      }
    }
    for (std::string_view call : kPkgConfigCalls) {
      for (std::size_t pos = line.find(call); pos != std::string_view::npos;
           pos = line.find(call, pos + call.size())) {
        std::size_t end = line.find_first_of(")`;|&", pos + call.size());
        if (end == std::string_view::npos) end = line.size();
        std::string modules;
        for (auto tok : text::split_any(line.substr(pos + call.size(), end - pos - call.size()),
                                        " \t")) {
          if (tok.starts_with('-')) continue;
          modules += ' ';
          modules += tok;
        }
        for (auto& m : detail::parse_module_list(modules)) {
          add(m.name, NameStyle::kPkgConfigModule, std::move(m.constraint), ll.number);
        }
      }
    }
  }
  return b.finish();
}

}  // namespace ccdep
