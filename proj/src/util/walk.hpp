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

// Deterministic repository walk shared by discovery and clone detection.
// Internal header.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ccdep/model.hpp"

namespace ccdep::detail {

struct WalkEntry {
  std::string relative;  // '/'-separated
  std::filesystem::path absolute;
  std::uintmax_t size = 0;
};

struct WalkResult {
  std::vector<WalkEntry> files;  // sorted by relative path
  std::vector<Warning> warnings;
};

/// Lists regular files under `root`, pruning directories named in
/// `ignore_dirs`. Throws Error(kIo) when root is not a readable directory.
/// Symlinks are skipped unless `follow_symlinks`; directory cycles are cut.
WalkResult walk_tree(const std::filesystem::path& root, const std::set<std::string>& ignore_dirs,
                     bool follow_symlinks);

/// Reads a whole file; nullopt on I/O failure.
std::optional<std::string> slurp(const std::filesystem::path& path);

}  // namespace ccdep::detail
