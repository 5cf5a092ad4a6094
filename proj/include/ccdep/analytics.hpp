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
#include <set>
#include <span>
#include <string>
#include <vector>

#include "ccdep/model.hpp"
#include "ccdep/names.hpp"

namespace ccdep {

// A "dependency" below is a distinct (repo, normalized library) pair. One
// pair may be reached by several tools and by both phases, so per-tool and
// per-phase shares are not required to sum to 1.

struct ToolShare {
  std::size_t deps = 0;
  std::size_t repos = 0;
  double dep_share = 0.0;
  double repo_share = 0.0;
};

struct ToolCombo {
  std::optional<ToolKind> install;  // nullopt: repo has no Install-phase tool
  ToolKind build;

  friend auto operator<=>(const ToolCombo&, const ToolCombo&) = default;
};

struct EcosystemStats {
  std::size_t repo_count = 0;
  std::size_t record_count = 0;
  std::size_t dep_count = 0;

  std::map<Phase, ToolShare> phases;
  std::map<ToolKind, ToolShare> tool_usage;  // every tool, zeros included
  ToolShare make_only;                       // repos whose only Build tool is Make
  std::map<ToolCombo, std::size_t> toolchain_combos;
  double cross_phase_share = 0.0;            // deps seen in both Install and Build

  std::map<std::string, std::size_t> popularity;  // library -> dependent repos
  double gini = 0.0;
  std::map<int, double> topk_shares;              // k in {1, 5, 10, 20}
  double popularity_mean = 0.0;
  double popularity_median = 0.0;

  std::size_t specified_deps = 0;
  double version_spec_rate = 0.0;
  std::map<Phase, double> phase_version_spec_rate;  // phases with deps only
  std::map<ToolKind, double> tool_version_spec_rate;  // tools with deps only
};

/// Associative fold over reports; merge() of partial accumulators equals
/// adding every report to one accumulator.
class StatsAccumulator {
 public:
  explicit StatsAccumulator(const AliasTable* aliases = nullptr) : aliases_(aliases) {}

  void add(const ScanReport& report);
  void merge(const StatsAccumulator& other);
  /// Throws Error(kEmptyInput) when no report was added.
  EcosystemStats finish() const;

 private:
  struct Counter {
    std::size_t deps = 0;
    std::size_t repos = 0;
    std::size_t specified = 0;
  };
  const AliasTable* aliases_;
  std::size_t repos_ = 0;
  std::size_t records_ = 0;
  std::size_t deps_ = 0;
  std::size_t specified_ = 0;
  std::size_t cross_phase_ = 0;
  std::map<Phase, Counter> phases_;
  std::map<ToolKind, Counter> tools_;
  Counter make_only_;
  std::map<ToolCombo, std::size_t> combos_;
  std::map<std::string, std::size_t> popularity_;
};

EcosystemStats compute_stats(const std::vector<ScanReport>& reports,
                             const AliasTable* aliases = nullptr);

/// Mean absolute difference Gini over counts, via the sorted closed form.
/// Throws Error(kEmptyInput) for an empty vector.
double gini(std::span<const std::size_t> counts);

/// Share of the total contributed by the ceil(k * n / 100) largest counts.
double topk_share(std::span<const std::size_t> counts, double k_percent);

/// Fraction of specified constraints on libraries in `latest` that admit
/// the latest version; nullopt when no record qualifies.
std::optional<double> latest_adoption(const std::vector<ScanReport>& reports,
                                      const std::map<std::string, Version>& latest);

struct CoverageResult {
  std::vector<double> batch_coverage;  // per batch of libraries by popularity
  double covered_dep_share = 0.0;
};

/// Libraries ranked by popularity (ties by name) and cut into batches.
CoverageResult db_coverage(const std::map<std::string, std::size_t>& popularity,
                           const std::set<std::string>& database, std::size_t batch = 100);

std::string stats_to_json(const EcosystemStats& stats);
std::string stats_to_text(const EcosystemStats& stats);
std::string popularity_csv(const EcosystemStats& stats);
std::string combos_csv(const EcosystemStats& stats);

}  // namespace ccdep
