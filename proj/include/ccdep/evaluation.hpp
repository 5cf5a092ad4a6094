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
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "ccdep/model.hpp"
#include "ccdep/names.hpp"

namespace ccdep {

struct TruthLabel {
  std::string library;          // normalized
  std::optional<ToolKind> tool;  // unset: any tool matches

  friend auto operator<=>(const TruthLabel&, const TruthLabel&) = default;
};

struct GroundTruth {
  std::string repo_id;
  std::set<TruthLabel> labeled;
  /// Libraries the scanner claims to support; restricts R2's denominator.
  std::optional<std::set<std::string>> supported;
};

/// {"repos": [{"repo_id": "r", "labels": ["zlib", {"library": "fmt",
/// "tool": "conan"}], "supported": ["zlib"]}]}. Throws Error(kParse).
std::vector<GroundTruth> parse_ground_truth(std::string_view text);

enum class MatchOn { kName, kNameAndTool };
std::optional<MatchOn> match_on_from_string(std::string_view s);

struct EvalResult {
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t fn = 0;
  std::optional<double> precision;         // absent when nothing was detected
  double recall_full = 0.0;                // R1
  std::optional<double> recall_supported;  // R2, when a supported subset is given
  std::optional<double> f1;                // 2PR1/(P+R1), absent with P
};

/// Metrics from raw counts. `supported` is (tp, labels) restricted to the
/// supported subset.
EvalResult metrics_from_counts(std::size_t tp, std::size_t fp, std::size_t fn,
                               std::optional<std::pair<std::size_t, std::size_t>> supported =
                                   std::nullopt);

double f1_score(double precision, double recall);

/// Throws Error(kInvalidInput) when the truth has no labels.
EvalResult evaluate(const ScanReport& report, const GroundTruth& truth,
                    MatchOn match_on = MatchOn::kName, const AliasTable* aliases = nullptr);

/// Pools counts over every truth repo; a repo with no report contributes
/// only false negatives, and reports without truth are ignored.
EvalResult evaluate_corpus(const std::vector<ScanReport>& reports,
                           const std::vector<GroundTruth>& truths,
                           MatchOn match_on = MatchOn::kName, const AliasTable* aliases = nullptr);

std::string eval_to_text(const EvalResult& r);
std::string eval_to_json(const EvalResult& r);

}  // namespace ccdep
