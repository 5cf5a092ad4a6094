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

#include <array>
#include <chrono>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "ccdep/constraint.hpp"

namespace ccdep {

/// Dependency lifecycle phase. kClone is reserved for copied-code matches.
enum class Phase { kInstall, kBuild, kClone };

/// The 21 package-management tools plus the clone-signature detector.
enum class ToolKind {
  // Install phase.
  kDeb,
  kConan,
  kVcpkg,
  kClib,
  kCPM,
  kBuckaroo,
  kDds,
  kHunter,
  kCppget,
  kXrepo,
  kGitSubmodule,
  kPkgConfig,
  // Build phase.
  kMake,
  kCMake,
  kAutoconf,
  kBazel,
  kMeson,
  kMSBuild,
  kXmake,
  kBuild2,
  kBuck,
  // Copied code.
  kCloneSig,
};

inline constexpr std::size_t kToolCount = 22;

/// Every tool in declaration order, CloneSig last.
const std::array<ToolKind, kToolCount>& all_tools();

constexpr Phase phase_of(ToolKind tool) {
  if (tool == ToolKind::kCloneSig) return Phase::kClone;
  return static_cast<int>(tool) <= static_cast<int>(ToolKind::kPkgConfig)
             ? Phase::kInstall
             : Phase::kBuild;
}

std::string_view to_string(ToolKind tool);
std::string_view to_string(Phase phase);
/// Display name as used in tables ("Gitsubmodule", "Pkg-config", ...).
std::string_view display_name(ToolKind tool);
std::optional<ToolKind> tool_from_string(std::string_view s);
std::optional<Phase> phase_from_string(std::string_view s);

struct Evidence {
  std::string path;  // relative to the repository root, '/'-separated
  int line = 0;      // 1-based; 0 when the location has no line

  friend auto operator<=>(const Evidence&, const Evidence&) = default;
};

struct DependencyRecord {
  std::string library;
  std::string raw_name;
  VersionConstraint constraint;
  ToolKind tool = ToolKind::kCMake;
  Phase phase = Phase::kBuild;
  Evidence evidence;
  std::optional<std::string> source_url;
  /// OS-provided library (threads, m, dl, kernel32, ...).
  bool system = false;
  /// Sub-components requested alongside the library (CMake COMPONENTS).
  std::vector<std::string> components;
};

/// Identity used for deduplication: (library, tool, evidence).
inline auto record_key(const DependencyRecord& r) {
  return std::tie(r.library, r.tool, r.evidence);
}

/// Report order: (path, line, tool, library).
bool record_less(const DependencyRecord& a, const DependencyRecord& b);

struct Warning {
  std::string path;
  int line = 0;
  std::string message;

  friend bool operator==(const Warning&, const Warning&) = default;
};

struct ScanMetadata {
  std::vector<Warning> warnings;
  std::size_t skipped_large_files = 0;
  std::size_t unreadable_files = 0;
};

struct ScanReport {
  std::string repo_id;
  std::chrono::system_clock::time_point scanned_at{};
  std::vector<DependencyRecord> records;
  std::set<ToolKind> tools_seen;
  std::size_t file_count = 0;
  ScanMetadata metadata;
};

/// Sorts records into report order and drops duplicates by record_key.
void canonicalize_records(std::vector<DependencyRecord>& records);

}  // namespace ccdep
