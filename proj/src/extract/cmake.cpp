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
#include "ccdep/cmake.hpp"
#include "modules.hpp"
#include "text.hpp"

namespace ccdep {
namespace {

using detail::ResultBuilder;

const std::set<std::string_view>& find_package_keywords() {
  static const std::set<std::string_view> k = {
      "EXACT", "QUIET", "MODULE", "CONFIG", "NO_MODULE", "REQUIRED", "COMPONENTS",
      "OPTIONAL_COMPONENTS", "NO_POLICY_SCOPE", "GLOBAL", "BYPASS_PROVIDER", "NAMES",
      "CONFIGS", "HINTS", "PATHS", "PATH_SUFFIXES", "REGISTRY_VIEW", "NO_DEFAULT_PATH",
      "NO_PACKAGE_ROOT_PATH", "NO_CMAKE_PATH", "NO_CMAKE_ENVIRONMENT_PATH",
      "NO_SYSTEM_ENVIRONMENT_PATH", "NO_CMAKE_PACKAGE_REGISTRY", "NO_CMAKE_BUILDS_PATH",
      "NO_CMAKE_SYSTEM_PATH", "NO_CMAKE_INSTALL_PREFIX", "NO_CMAKE_SYSTEM_PACKAGE_REGISTRY",
      "CMAKE_FIND_ROOT_PATH_BOTH", "ONLY_CMAKE_FIND_ROOT_PATH", "NO_CMAKE_FIND_ROOT_PATH",
      "IMPORTED_TARGET", "NO_CACHE", "DOC", "ENV", "VALIDATOR"};
  return k;
}

bool is_keyword(std::string_view s) { return find_package_keywords().count(s) > 0; }

bool unresolved(std::string_view s) {
  return s.find("${") != std::string_view::npos || s.find("$ENV{") != std::string_view::npos;
}

// Common front half of every CMake-family extractor.
std::vector<ExpandedCommand> expand(ResultBuilder& b) {
  auto parsed = parse_cmake(b.content());
  for (const auto& e : parsed.errors) b.warn(e.line, e.message);
  CMakeEvalContext ctx;
  return evaluate_cmake(parsed.commands, ctx);
}

bool check_name(ResultBuilder& b, const ExpandedCommand& c, std::string_view name) {
  if (name.empty() || is_keyword(name)) return false;
  if (unresolved(name)) {
    b.warn(c.line, c.name + "() name depends on unresolved variable: " + std::string(name));
    return false;
  }
  return true;
}

void find_package(ResultBuilder& b, const ExpandedCommand& c) {
  const auto& a = c.args;
  if (a.empty() || !check_name(b, c, a[0])) return;
  std::string version;
  std::size_t i = 1;
  if (a.size() > 1 && !a[1].empty() && text::is_digit(a[1].front())) {
    version = a[1];
    i = 2;
  }
  bool exact = false;
  bool collecting = false;
  std::vector<std::string> components;
  for (; i < a.size(); ++i) {
    const std::string& s = a[i];
    if (s == "EXACT") exact = true;
    if (s == "COMPONENTS" || s == "OPTIONAL_COMPONENTS" || s == "REQUIRED") {
      collecting = true;
    } else if (is_keyword(s)) {
      collecting = false;
    } else if (collecting && !unresolved(s)) {
      components.push_back(s);
    }
  }
  VersionConstraint constraint;
  if (!version.empty()) {
    if (version.find("...") != std::string::npos) {
      constraint = parse_constraint(version);
    } else if (auto v = Version::try_parse(version)) {
      constraint = exact ? VersionConstraint::exact(*v, "==" + version)
                         : VersionConstraint::range(Bound{*v, true}, std::nullopt, ">=" + version);
    } else {
      constraint = VersionConstraint::unspecified(version);
    }
  }
  if (auto* r = b.add(a[0], NameStyle::kPlain, std::move(constraint), c.line)) {
    r->components = std::move(components);
  }
}

void pkg_check_modules(ResultBuilder& b, const ExpandedCommand& c) {
  std::string list;
  for (std::size_t i = 1; i < c.args.size(); ++i) {
    if (is_keyword(c.args[i])) continue;
    list += ' ';
    list += c.args[i];
  }
  for (auto& m : detail::parse_module_list(list)) {
    if (!check_name(b, c, m.name)) continue;
    b.add(m.name, NameStyle::kPkgConfigModule, std::move(m.constraint), c.line);
  }
}

void find_library(ResultBuilder& b, const ExpandedCommand& c) {
  const auto& a = c.args;
  std::size_t i = 1;
  if (i < a.size() && a[i] == "NAMES") ++i;
  if (i >= a.size() || !check_name(b, c, a[i])) return;
  b.add(a[i], NameStyle::kPlain, VersionConstraint::unspecified(), c.line);
}

std::string value_after(const std::vector<std::string>& a, std::string_view key) {
  for (std::size_t i = 0; i + 1 < a.size(); ++i) {
    if (a[i] == key) return a[i + 1];
  }
  return {};
}

void fetchcontent_declare(ResultBuilder& b, const ExpandedCommand& c) {
  const auto& a = c.args;
  if (a.empty() || !check_name(b, c, a[0])) return;
  std::string url = value_after(a, "GIT_REPOSITORY");
  if (url.empty()) url = value_after(a, "URL");
  const std::string tag = value_after(a, "GIT_TAG");
  std::optional<std::string> source;
  if (!url.empty()) source = url;
  VersionConstraint constraint;
  if (!tag.empty()) constraint = detail::pin_constraint(tag);
  b.add(a[0], NameStyle::kPlain, std::move(constraint), c.line, std::move(source));
}

// --- CPM ---------------------------------------------------------------

struct CpmSpec {
  std::string name;
  std::string version;
  std::string tag;
  std::string url;
};

std::string_view repo_name(std::string_view repo) {
  std::string_view seg = text::last_path_segment(repo);
  while (text::ends_with_icase(seg, ".git")) seg.remove_suffix(4);
  return seg;
}

// "gh:fmtlib/fmt#7.1.3", "gl:x/y@1.0", "https://host/x/y.git@1.2.3".
CpmSpec parse_shorthand(std::string_view s) {
  CpmSpec out;
  std::string host;
  if (s.starts_with("gh:")) {
    host = "https://github.com/";
  } else if (s.starts_with("gl:")) {
    host = "https://gitlab.com/";
  } else if (s.starts_with("bb:")) {
    host = "https://bitbucket.org/";
  }
  if (!host.empty()) s.remove_prefix(3);
  const std::size_t last_slash = s.rfind('/');
  const std::size_t from = last_slash == std::string_view::npos ? 0 : last_slash;
  std::string_view repo = s;
  if (std::size_t hash = s.find('#', from); hash != std::string_view::npos) {
    out.tag = std::string(s.substr(hash + 1));
    repo = s.substr(0, hash);
  }
  if (std::size_t at = repo.find('@', from); at != std::string_view::npos) {
    out.version = std::string(repo.substr(at + 1));
    repo = repo.substr(0, at);
  }
  out.url = host + std::string(repo);
  out.name = std::string(repo_name(repo));
  return out;
}

void cpm_add_package(ResultBuilder& b, const ExpandedCommand& c) {
  const auto& a = c.args;
  if (a.empty()) return;
  static const std::set<std::string_view> kKeys = {
      "NAME", "VERSION", "GIT_TAG", "GITHUB_REPOSITORY", "GITLAB_REPOSITORY",
      "BITBUCKET_REPOSITORY", "GIT_REPOSITORY", "URL", "URI", "OPTIONS", "DOWNLOAD_ONLY",
      "SOURCE_DIR", "EXCLUDE_FROM_ALL", "SYSTEM", "PATCHES", "GIT_SHALLOW", "SOURCE_SUBDIR",
      "DOWNLOAD_COMMAND", "URL_HASH", "FIND_PACKAGE_ARGUMENTS", "NO_CACHE", "CUSTOM_CACHE_KEY"};
  CpmSpec spec;
  if (!kKeys.count(a[0])) {
    spec = parse_shorthand(a[0]);
  } else if (std::string uri = value_after(a, "URI"); !uri.empty()) {
    spec = parse_shorthand(uri);
  }
  auto take = [&](std::string_view key, std::string& field) {
    if (std::string v = value_after(a, key); !v.empty()) field = v;
  };
  take("VERSION", spec.version);
  take("GIT_TAG", spec.tag);
  for (auto [key, host] : {std::pair{"GITHUB_REPOSITORY", "https://github.com/"},
                           std::pair{"GITLAB_REPOSITORY", "https://gitlab.com/"},
                           std::pair{"BITBUCKET_REPOSITORY", "https://bitbucket.org/"}}) {
    if (std::string v = value_after(a, key); !v.empty()) spec.url = host + v;
  }
  take("GIT_REPOSITORY", spec.url);
  take("URL", spec.url);
  take("NAME", spec.name);
  if (spec.name.empty() && !spec.url.empty()) spec.name = std::string(repo_name(spec.url));
  if (!check_name(b, c, spec.name)) {
    if (spec.name.empty()) b.warn(c.line, c.name + "() without a package name");
    return;
  }
  VersionConstraint constraint;
  if (!spec.version.empty()) {
    constraint = detail::pin_constraint(spec.version);
  } else if (!spec.tag.empty()) {
    constraint = detail::pin_constraint(spec.tag);
  }
  std::optional<std::string> source;
  if (!spec.url.empty()) source = spec.url;
  b.add(spec.name, NameStyle::kPlain, std::move(constraint), c.line, std::move(source));
}

bool contains_icase(std::string_view hay, std::string_view needle) {
  return text::lower(hay).find(text::lower(needle)) != std::string::npos;
}

}  // namespace

ExtractionResult extract_cmake(std::string_view content, std::string_view path,
                               const ExtractOptions&) {
  ResultBuilder b(ToolKind::kCMake, path);
  if (!b.begin(content)) return b.finish();
  b.recognize();
  for (const auto& c : expand(b)) {
    if (c.name == "find_package") {
      find_package(b, c);
    } else if (c.name == "pkg_check_modules" || c.name == "pkg_search_module") {
      pkg_check_modules(b, c);
    } else if (c.name == "find_library") {
      find_library(b, c);
    } else if (c.name == "fetchcontent_declare") {
      fetchcontent_declare(b, c);
    }
  }
  return b.finish();
}

ExtractionResult extract_cpm(std::string_view content, std::string_view path,
                             const ExtractOptions&) {
  ResultBuilder b(ToolKind::kCPM, path);
  if (!b.begin(content)) return b.finish();
  if (!contains_icase(b.content(), "cpmaddpackage") && !contains_icase(b.content(), "cpmfindpackage") &&
      !contains_icase(b.content(), "cpm.cmake")) {
    return b.finish();
  }
  b.recognize();
  for (const auto& c : expand(b)) {
    if (c.name == "cpmaddpackage" || c.name == "cpmfindpackage") cpm_add_package(b, c);
  }
  return b.finish();
}

ExtractionResult extract_hunter(std::string_view content, std::string_view path,
                                const ExtractOptions&) {
  ResultBuilder b(ToolKind::kHunter, path);
  if (!b.begin(content)) return b.finish();
  if (!contains_icase(b.content(), "hunter_add_package") && !contains_icase(b.content(), "huntergate")) {
    return b.finish();
  }
  b.recognize();
  for (const auto& c : expand(b)) {
    if (c.name != "hunter_add_package" || c.args.empty() || !check_name(b, c, c.args[0])) continue;
    std::vector<std::string> components;
    bool collecting = false;
    for (std::size_t i = 1; i < c.args.size(); ++i) {
      if (c.args[i] == "COMPONENTS") {
        collecting = true;
      } else if (collecting) {
        components.push_back(c.args[i]);
      }
    }
    if (auto* r = b.add(c.args[0], NameStyle::kPlain, VersionConstraint::unspecified(), c.line)) {
      r->components = std::move(components);
    }
  }
  return b.finish();
}

}  // namespace ccdep
