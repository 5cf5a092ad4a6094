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

#include "ccdep/model.hpp"

#include <algorithm>

namespace ccdep {
namespace {

struct ToolNames {
  ToolKind tool;
  std::string_view id;
  std::string_view display;
};

constexpr std::array<ToolNames, kToolCount> kToolNames = {{
    {ToolKind::kDeb, "deb", "Deb"},
    {ToolKind::kConan, "conan", "Conan"},
    {ToolKind::kVcpkg, "vcpkg", "Vcpkg"},
    {ToolKind::kClib, "clib", "Clib"},
    {ToolKind::kCPM, "cpm", "CPM"},
    {ToolKind::kBuckaroo, "buckaroo", "Buckaroo"},
    {ToolKind::kDds, "dds", "Dds"},
    {ToolKind::kHunter, "hunter", "Hunter"},
    {ToolKind::kCppget, "cppget", "Cppget"},
    {ToolKind::kXrepo, "xrepo", "Xrepo"},
    {ToolKind::kGitSubmodule, "gitsubmodule", "Gitsubmodule"},
    {ToolKind::kPkgConfig, "pkgconfig", "Pkg-config"},
    {ToolKind::kMake, "make", "Make"},
    {ToolKind::kCMake, "cmake", "CMake"},
    {ToolKind::kAutoconf, "autoconf", "Autoconf"},
    {ToolKind::kBazel, "bazel", "Bazel"},
    {ToolKind::kMeson, "meson", "Meson"},
    {ToolKind::kMSBuild, "msbuild", "MSBuild"},
    {ToolKind::kXmake, "xmake", "Xmake"},
    {ToolKind::kBuild2, "build2", "Build2"},
    {ToolKind::kBuck, "buck", "Buck"},
    {ToolKind::kCloneSig, "clonesig", "Code clone"},
}};

}  // namespace

const std::array<ToolKind, kToolCount>& all_tools() {
  static const std::array<ToolKind, kToolCount> tools = [] {
    std::array<ToolKind, kToolCount> out{};
    for (std::size_t i = 0; i < kToolCount; ++i) out[i] = kToolNames[i].tool;
    return out;
  }();
  return tools;
}

std::string_view to_string(ToolKind tool) {
  return kToolNames[static_cast<std::size_t>(tool)].id;
}

std::string_view display_name(ToolKind tool) {
  return kToolNames[static_cast<std::size_t>(tool)].display;
}

std::string_view to_string(Phase phase) {
  switch (phase) {
    case Phase::kInstall: return "install";
    case Phase::kBuild: return "build";
    case Phase::kClone: return "clone";
  }
  return "build";
}

std::optional<ToolKind> tool_from_string(std::string_view s) {
  for (const auto& t : kToolNames) {
    if (t.id == s) return t.tool;
  }
  return std::nullopt;
}

std::optional<Phase> phase_from_string(std::string_view s) {
  for (auto p : {Phase::kInstall, Phase::kBuild, Phase::kClone}) {
    if (to_string(p) == s) return p;
  }
  return std::nullopt;
}

bool record_less(const DependencyRecord& a, const DependencyRecord& b) {
  return std::tie(a.evidence.path, a.evidence.line, a.tool, a.library) <
         std::tie(b.evidence.path, b.evidence.line, b.tool, b.library);
}

void canonicalize_records(std::vector<DependencyRecord>& records) {
  std::stable_sort(records.begin(), records.end(), record_less);
  auto last = std::unique(records.begin(), records.end(),
                          [](const DependencyRecord& a, const DependencyRecord& b) {
                            return record_key(a) == record_key(b);
                          });
  records.erase(last, records.end());
}

}  // namespace ccdep
