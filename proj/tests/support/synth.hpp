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

// Synthetic reports and corpora for analytics and advisory tests.

#include <cstddef>
#include <filesystem>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "ccdep/advisories.hpp"
#include "ccdep/model.hpp"

namespace ccdep::testing {

DependencyRecord make_record(std::string library, ToolKind tool,
                             VersionConstraint constraint = {}, std::string path = "",
                             int line = 1);

/// tools_seen is derived from the records.
ScanReport make_report(std::string repo_id, std::vector<DependencyRecord> records);

/// Small random corpus with shared library names, mixed tools and
/// constraints. Used for oracle and permutation checks.
std::vector<ScanReport> random_corpus(std::mt19937_64& rng, std::size_t repos,
                                      std::size_t max_records = 12);

/// A 200-repo corpus built to hit fixed shares. Targets are counts, so
/// recovered shares are exact.
struct RqCorpus {
  std::vector<ScanReport> reports;
  std::vector<Advisory> advisories;
  std::map<std::string, Version> os_catalog;

  static constexpr std::size_t kRepos = 200;
  static constexpr std::size_t kDeps = 1000;
  static constexpr std::size_t kBuildDeps = 715;      // 71.5%
  static constexpr std::size_t kInstallDeps = 375;    // 37.5%
  static constexpr std::size_t kBothDeps = 90;        // 9%
  static constexpr std::size_t kInstallRepos = 95;    // 47.5%
  static constexpr std::size_t kSpecifiedDeps = 270;  // 27%
  static constexpr std::size_t kVulnerableDeps = 130; // 13%
  static constexpr std::size_t kAffectedRepos = 44;   // 22%
};

RqCorpus build_rq_corpus();

/// Writes `files` (relative path -> content) under `root`.
void write_tree(const std::filesystem::path& root,
                const std::map<std::string, std::string>& files);

/// A fresh directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  explicit TempDir(const std::string& tag);
  ~TempDir();
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

}  // namespace ccdep::testing
