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

#pragma once

#include <string_view>
#include <vector>

#include "ccdep/model.hpp"

namespace ccdep {

/// Output of one extractor run over one file.
struct ExtractionResult {
  std::vector<DependencyRecord> records;  // report order, deduplicated
  std::vector<Warning> warnings;
  /// The file really is a manifest of the tool (e.g. a CMakeLists.txt that
  /// calls CPMAddPackage). Recognized tools enter ScanReport::tools_seen
  /// even when they yield no records.
  bool recognized = false;
};

struct ExtractOptions {
  /// Keep MSBuild records for Windows SDK libraries (kernel32, ws2_32...).
  bool msbuild_include_system = false;
};

// Every extractor is a pure function of (content, path): no I/O, no global
// state, and total over arbitrary bytes. Non-text input yields zero records
// and one warning. `path` is the repository-relative path used as evidence.

// Install phase.
ExtractionResult extract_deb_control(std::string_view content, std::string_view path,
                                     const ExtractOptions& options = {});
ExtractionResult extract_conan(std::string_view content, std::string_view path,
                               const ExtractOptions& options = {});
ExtractionResult extract_vcpkg(std::string_view content, std::string_view path,
                               const ExtractOptions& options = {});
ExtractionResult extract_clib(std::string_view content, std::string_view path,
                              const ExtractOptions& options = {});
ExtractionResult extract_cpm(std::string_view content, std::string_view path,
                             const ExtractOptions& options = {});
ExtractionResult extract_buckaroo(std::string_view content, std::string_view path,
                                  const ExtractOptions& options = {});
ExtractionResult extract_dds(std::string_view content, std::string_view path,
                             const ExtractOptions& options = {});
ExtractionResult extract_hunter(std::string_view content, std::string_view path,
                                const ExtractOptions& options = {});
ExtractionResult extract_cppget(std::string_view content, std::string_view path,
                                const ExtractOptions& options = {});
ExtractionResult extract_xrepo(std::string_view content, std::string_view path,
                               const ExtractOptions& options = {});
ExtractionResult extract_gitsubmodule(std::string_view content, std::string_view path,
                                      const ExtractOptions& options = {});
ExtractionResult extract_pkgconfig(std::string_view content, std::string_view path,
                                   const ExtractOptions& options = {});

// Build phase.
ExtractionResult extract_make(std::string_view content, std::string_view path,
                              const ExtractOptions& options = {});
ExtractionResult extract_cmake(std::string_view content, std::string_view path,
                               const ExtractOptions& options = {});
ExtractionResult extract_autoconf(std::string_view content, std::string_view path,
                                  const ExtractOptions& options = {});
ExtractionResult extract_bazel(std::string_view content, std::string_view path,
                               const ExtractOptions& options = {});
ExtractionResult extract_meson(std::string_view content, std::string_view path,
                               const ExtractOptions& options = {});
ExtractionResult extract_msbuild(std::string_view content, std::string_view path,
                                 const ExtractOptions& options = {});
ExtractionResult extract_xmake(std::string_view content, std::string_view path,
                               const ExtractOptions& options = {});
ExtractionResult extract_build2(std::string_view content, std::string_view path,
                                const ExtractOptions& options = {});
ExtractionResult extract_buck(std::string_view content, std::string_view path,
                              const ExtractOptions& options = {});

using ExtractorFn = ExtractionResult (*)(std::string_view, std::string_view,
                                         const ExtractOptions&);

/// The extractor owning `tool`; nullptr for kCloneSig.
ExtractorFn extractor_for(ToolKind tool);

}  // namespace ccdep
