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

#include <json.hpp>

#include "builder.hpp"
#include "text.hpp"

namespace ccdep {
namespace {

using detail::ResultBuilder;
using nlohmann::json;

// Finds source lines for values pulled out of a parsed document by
// searching for their quoted text after the last seek() anchor.
class LineFinder {
 public:
  explicit LineFinder(std::string_view s) : s_(s), index_(s) {}

  void seek(std::string_view needle) {
    std::size_t p = s_.find(needle, cursor_);
    if (p != std::string_view::npos) cursor_ = p;
  }

  int find(const std::string& value) {
    std::string needle = json(value).dump();
    std::size_t p = s_.find(needle, cursor_);
    if (p == std::string_view::npos) p = s_.find(needle);
    if (p == std::string_view::npos) return index_.line_of(cursor_);
    return index_.line_of(p);
  }

 private:
  std::string_view s_;
  text::LineIndex index_;
  std::size_t cursor_ = 0;
};

std::optional<json> parse_json(ResultBuilder& b) {
  json j = json::parse(b.content(), nullptr, false, true);
  if (j.is_discarded()) {
    b.warn(0, "malformed JSON; file skipped");
    return std::nullopt;
  }
  return j;
}

const std::string* string_member(const json& obj, const char* key) {
  auto it = obj.find(key);
  return it != obj.end() && it->is_string() ? it->get_ptr<const std::string*>() : nullptr;
}

}  // namespace

ExtractionResult extract_vcpkg(std::string_view content, std::string_view path,
                               const ExtractOptions&) {
  ResultBuilder b(ToolKind::kVcpkg, path);
  if (!b.begin(content)) return b.finish();
  b.recognize();
  auto doc = parse_json(b);
  if (!doc) return b.finish();
  if (!doc->is_object()) {
    b.warn(0, "manifest is not a JSON object");
    return b.finish();
  }
  LineFinder lines(b.content());
  if (auto deps = doc->find("dependencies"); deps != doc->end() && deps->is_array()) {
    lines.seek("\"dependencies\"");
    for (const auto& d : *deps) {
      if (d.is_string()) {
        const auto& name = d.get_ref<const std::string&>();
        b.add(name, NameStyle::kPlain, VersionConstraint::unspecified(), lines.find(name));
        continue;
      }
      const std::string* name = d.is_object() ? string_member(d, "name") : nullptr;
      if (!name) {
        b.warn(0, "dependency entry without a name");
        continue;
      }
      const int line = lines.find(*name);
      VersionConstraint c;
      if (const std::string* min = string_member(d, "version>=")) {
        if (auto v = Version::try_parse(*min)) {
          c = VersionConstraint::range(Bound{*v, true}, std::nullopt, ">=" + *min);
        } else {
          c = VersionConstraint::unspecified(">=" + *min);
        }
      }
      b.add(*name, NameStyle::kPlain, std::move(c), line);
    }
  }
  if (auto ov = doc->find("overrides"); ov != doc->end() && ov->is_array()) {
    lines.seek("\"overrides\"");
    for (const auto& o : *ov) {
      const std::string* name = o.is_object() ? string_member(o, "name") : nullptr;
      if (!name) {
        b.warn(0, "override entry without a name");
        continue;
      }
      const int line = lines.find(*name);
      const std::string* v = nullptr;
      for (const char* key : {"version", "version-semver", "version-date", "version-string"}) {
        if ((v = string_member(o, key))) break;
      }
      if (v) {
        auto parsed = Version::try_parse(*v);
        b.add(*name, NameStyle::kPlain,
              parsed ? VersionConstraint::exact(*parsed, *v) : VersionConstraint::unspecified(*v),
              line);
      } else {
        b.add(*name, NameStyle::kPlain, VersionConstraint::unspecified(), line);
      }
    }
  }
  return b.finish();
}

ExtractionResult extract_clib(std::string_view content, std::string_view path,
                              const ExtractOptions&) {
  ResultBuilder b(ToolKind::kClib, path);
  if (!b.begin(content)) return b.finish();
  const bool clib_json = text::iequals(text::last_path_segment(path), "clib.json");
  json doc = json::parse(b.content(), nullptr, false, true);
  if (doc.is_discarded()) {
    // A broken package.json is somebody else's problem.
    if (clib_json) {
      b.recognize();
      b.warn(0, "malformed JSON; file skipped");
    }
    return b.finish();
  }
  if (!doc.is_object()) return b.finish();
  if (!clib_json && !doc.contains("repo") && !doc.contains("install")) return b.finish();
  b.recognize();
  LineFinder lines(b.content());
  for (const char* section : {"dependencies", "development"}) {
    auto deps = doc.find(section);
    if (deps == doc.end() || !deps->is_object()) continue;
    lines.seek("\"" + std::string(section) + "\"");
    for (const auto& [key, value] : deps->items()) {
      const int line = lines.find(key);
      std::string_view name = text::last_path_segment(key);
      VersionConstraint c;
      if (value.is_string()) {
        const auto& v = value.get_ref<const std::string&>();
        c = v.empty() || v == "*" ? VersionConstraint::unspecified(v) : detail::pin_constraint(v);
      }
      b.add(name, NameStyle::kPlain, std::move(c), line);
    }
  }
  return b.finish();
}

}  // namespace ccdep
