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

#include "ccdep/extract.hpp"

namespace ccdep {

ExtractorFn extractor_for(ToolKind tool) {
  switch (tool) {
    case ToolKind::kDeb: return &extract_deb_control;
    case ToolKind::kConan: return &extract_conan;
    case ToolKind::kVcpkg: return &extract_vcpkg;
    case ToolKind::kClib: return &extract_clib;
    case ToolKind::kCPM: return &extract_cpm;
    case ToolKind::kBuckaroo: return &extract_buckaroo;
    case ToolKind::kDds: return &extract_dds;
    case ToolKind::kHunter: return &extract_hunter;
    case ToolKind::kCppget: return &extract_cppget;
    case ToolKind::kXrepo: return &extract_xrepo;
    case ToolKind::kGitSubmodule: return &extract_gitsubmodule;
    case ToolKind::kPkgConfig: return &extract_pkgconfig;
    case ToolKind::kMake: return &extract_make;
    case ToolKind::kCMake: return &extract_cmake;
    case ToolKind::kAutoconf: return &extract_autoconf;
    case ToolKind::kBazel: return &extract_bazel;
    case ToolKind::kMeson: return &extract_meson;
    case ToolKind::kMSBuild: return &extract_msbuild;
    case ToolKind::kXmake: return &extract_xmake;
    case ToolKind::kBuild2: return &extract_build2;
    case ToolKind::kBuck: return &extract_buck;
    case ToolKind::kCloneSig: return nullptr;
  }
  return nullptr;
}

}  // namespace ccdep
