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

std::string xml_unescape(std::string_view s) {
  static constexpr std::pair<std::string_view, char> kEntities[] = {
      {"&amp;", '&'}, {"&lt;", '<'}, {"&gt;", '>'}, {"&quot;", '"'}, {"&apos;", '\''}};
  std::string out;
  for (std::size_t i = 0; i < s.size();) {
    bool matched = false;
    for (auto [ent, c] : kEntities) {
      if (s.substr(i).starts_with(ent)) {
        out += c;
        i += ent.size();
        matched = true;
        break;
      }
    }
    if (!matched) out += s[i++];
  }
  return out;
}

}  // namespace

ExtractionResult extract_msbuild(std::string_view content, std::string_view path,
                                 const ExtractOptions& options) {
  detail::ResultBuilder b(ToolKind::kMSBuild, path);
  if (!b.begin(content)) return b.finish();
  const std::string_view src = b.content();
  const std::string low = text::lower(src);
  if (low.find("<project") != std::string::npos) b.recognize();
  text::LineIndex index(src);
  constexpr std::string_view kOpen = "<additionaldependencies";
  constexpr std::string_view kClose = "</additionaldependencies>";
  for (std::size_t pos = low.find(kOpen); pos != std::string::npos; pos = low.find(kOpen, pos + 1)) {
    const std::size_t gt = low.find('>', pos);
    if (gt == std::string::npos) break;
    if (low[gt - 1] == '/') continue;  // <AdditionalDependencies />
    const std::size_t close = low.find(kClose, gt);
    const int line = index.line_of(pos);
    if (close == std::string::npos) {
      b.warn(line, "unterminated AdditionalDependencies element");
      break;
    }
    const std::string body = xml_unescape(src.substr(gt + 1, close - gt - 1));
    for (auto item : text::split_any(body, ";")) {
      item = text::trim(item);
      if (item.empty() || item.find("%(") != std::string_view::npos ||
          item.find("$(") != std::string_view::npos) {
        continue;
      }
      item = text::last_path_segment(item);
      if (text::ends_with_icase(item, ".lib")) item.remove_suffix(4);
      if (item.empty()) continue;
      if (!options.msbuild_include_system) {
        try {
          if (is_windows_system_library(normalize_name(item, NameStyle::kLibFile))) continue;
        } catch (const std::exception&) {
        }
      }
      b.add(item, NameStyle::kLibFile, VersionConstraint::unspecified(), line);
    }
  }
  return b.finish();
}

}  // namespace ccdep
