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

#include "support/oracles.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace ccdep::testing {

long double gini_pairwise(const std::vector<std::size_t>& x) {
  const long double n = static_cast<long double>(x.size());
  long double sum = 0, diff = 0;
  for (std::size_t a : x) {
    sum += a;
    for (std::size_t b : x) diff += a > b ? a - b : b - a;
  }
  const long double mean = sum / n;
  return diff / (2 * n * n * mean);
}

double topk_oracle(std::vector<std::size_t> x, int k_percent) {
  std::sort(x.begin(), x.end(), std::greater<>());
  std::size_t m = 0;
  while (100 * m < static_cast<std::size_t>(k_percent) * x.size()) ++m;
  std::size_t top = 0, total = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    total += x[i];
    if (i < m) top += x[i];
  }
  return static_cast<double>(top) / static_cast<double>(total);
}

double f1_oracle(double p, double r) { return 2 * p * r / (p + r); }

BruteStats brute_stats(const std::vector<ScanReport>& reports) {
  BruteStats s;
  for (const auto& rep : reports) {
    std::set<std::string> libs;
    for (const auto& r : rep.records) libs.insert(r.library);
    for (const auto& lib : libs) {
      ++s.deps;
      ++s.popularity[lib];
      bool spec = false, inst = false, bld = false;
      std::set<Phase> ph;
      std::set<ToolKind> tl;
      for (const auto& r : rep.records) {
        if (r.library != lib) continue;
        spec = spec || r.constraint.kind() != ConstraintKind::kUnspecified;
        inst = inst || r.phase == Phase::kInstall;
        bld = bld || r.phase == Phase::kBuild;
        ph.insert(r.phase);
        tl.insert(r.tool);
      }
      s.specified += spec;
      s.cross_phase += inst && bld;
      for (Phase p : ph) ++s.phase_deps[p];
      for (ToolKind t : tl) ++s.tool_deps[t];
    }
    std::set<Phase> ph;
    std::set<ToolKind> tl;
    for (const auto& r : rep.records) {
      ph.insert(r.phase);
      tl.insert(r.tool);
    }
    for (Phase p : ph) ++s.phase_repos[p];
    for (ToolKind t : tl) ++s.tool_repos[t];

    std::set<ToolKind> present = rep.tools_seen;
    present.insert(tl.begin(), tl.end());
    std::vector<ToolKind> install, build;
    for (ToolKind t : present) {
      if (phase_of(t) == Phase::kInstall) install.push_back(t);
      if (phase_of(t) == Phase::kBuild) build.push_back(t);
    }
    for (ToolKind b : build) {
      if (install.empty()) ++s.combos[{std::nullopt, b}];
      for (ToolKind i : install) ++s.combos[{i, b}];
    }
    if (build.size() == 1 && build[0] == ToolKind::kMake) ++s.make_only_repos;
  }
  return s;
}

}  // namespace ccdep::testing
