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

#include <cstdint>
#include <filesystem>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "ccdep/clone.hpp"
#include "ccdep/extract.hpp"
#include "ccdep/model.hpp"

namespace ccdep {

struct ExtractorBinding {
  ToolKind tool;
  std::vector<std::string> patterns;        // filename globs
  std::vector<std::string> extra_patterns;  // conventions not in the base table
  Phase phase;
  ExtractorFn extractor;                    // nullptr for CloneSig
};

/// The 21 manifest-driven tools, plus CloneSig when `clone_db_configured`.
std::vector<ExtractorBinding> list_supported_tools(bool clone_db_configured = false);

/// Tools whose patterns match the file name (last component) of `path`.
std::vector<ToolKind> tools_for_file(std::string_view path);

struct ScanConfig {
  std::filesystem::path root;
  std::set<std::string> ignore_dirs{".git", "build", "out"};
  bool follow_symlinks = false;
  std::set<ToolKind> enabled_tools;  // empty means every tool
  std::uintmax_t max_file_bytes = 8u << 20;
  std::string repo_id;               // defaults to the root directory name
  unsigned jobs = 0;                 // 0: one per hardware thread
  ExtractOptions extract;
  const SignatureDB* clone_db = nullptr;  // enables CloneSig
  double clone_threshold = 0.10;
};

/// Scans one repository. Throws Error(kIo) when root is not a readable
/// directory; every other problem becomes a warning in the report.
ScanReport scan_repository(const ScanConfig& config);

}  // namespace ccdep
