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

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ccdep/constraint.hpp"
#include "ccdep/model.hpp"

namespace ccdep {

struct Advisory {
  std::string id;
  std::string library;  // normalized
  VersionConstraint affected;
  bool all_versions = false;
  std::optional<Version> fixed_in;
  std::optional<std::string> severity;
};

struct AdvisoryLoad {
  std::vector<Advisory> advisories;
  std::vector<Warning> warnings;
  std::size_t malformed = 0;
};

/// One JSON object per line:
///   {"id": "CVE-2019-7317", "library": "png",
///    "affected": "<1.6.37" | {"kind": ..., "lower": ..., ...},
///    "all_versions": false, "fixed_in": "1.6.37", "severity": "high"}
/// Blank lines are ignored; bad lines are skipped and counted.
AdvisoryLoad parse_advisories(std::string_view text, std::string_view source = "advisories");
AdvisoryLoad load_advisories(const std::string& path);

/// "library version" per line, '#' comments. Throws Error(kParse).
std::map<std::string, Version> parse_os_catalog(std::string_view text);

enum class MatchMode { kConstraintOverlap, kAssumedLatest };
std::string_view to_string(MatchMode mode);

struct VulnFinding {
  std::string repo_id;
  DependencyRecord record;
  std::string advisory_id;
  MatchMode mode;
};

class AdvisoryIndex {
 public:
  explicit AdvisoryIndex(std::vector<Advisory> advisories);
  /// Advisories for `library`, in id order.
  const std::vector<Advisory>& for_library(const std::string& library) const;
  std::size_t size() const { return size_; }

 private:
  std::map<std::string, std::vector<Advisory>, std::less<>> by_library_;
  std::size_t size_ = 0;
};

/// Requires a specified constraint; a finding per advisory whose affected
/// set intersects it.
std::vector<VulnFinding> match_constrained(const std::string& repo_id, const DependencyRecord& record,
                                           const AdvisoryIndex& index);

/// Requires an unspecified constraint; the version is assumed to be the
/// catalog's. Sets `unmatched` when the library is not in the catalog.
std::vector<VulnFinding> match_unconstrained(const std::string& repo_id,
                                             const DependencyRecord& record,
                                             const AdvisoryIndex& index,
                                             const std::map<std::string, Version>& os_catalog,
                                             bool& unmatched);

struct VulnScan {
  std::vector<VulnFinding> findings;
  std::size_t unmatched_unconstrained = 0;
};

/// Matches every record of every report. Without a catalog, unconstrained
/// records are all counted as unmatched.
VulnScan match_reports(const std::vector<ScanReport>& reports, const AdvisoryIndex& index,
                       const std::map<std::string, Version>* os_catalog);

struct ExposureSummary {
  std::size_t vulnerable_deps = 0;
  std::size_t total_deps = 0;
  std::size_t affected_repos = 0;
  std::size_t total_repos = 0;
  double vulnerable_dep_share = 0.0;
  double affected_repo_share = 0.0;
};

/// Dependencies are distinct (repo, library) pairs, as in analytics.
ExposureSummary exposure_summary(const std::vector<VulnFinding>& findings,
                                 const std::vector<ScanReport>& reports);

std::string findings_to_json(const VulnScan& scan, const ExposureSummary& summary);

}  // namespace ccdep
