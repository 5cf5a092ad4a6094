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

#include "ccdep/analytics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <json.hpp>

#include "ccdep/error.hpp"

namespace ccdep {
namespace {

constexpr int kTopK[] = {1, 5, 10, 20};

double ratio(std::size_t num, std::size_t den) {
  return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}

struct Unit {
  std::set<Phase> phases;
  std::set<ToolKind> tools;
  std::set<Phase> specified_phases;
  std::set<ToolKind> specified_tools;
};

std::string percent(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v * 100.0);
  return buf;
}

}  // namespace

void StatsAccumulator::add(const ScanReport& report) {
  std::map<std::string, Unit> units;
  std::set<Phase> phases;
  std::set<ToolKind> tools = report.tools_seen;
  std::set<ToolKind> record_tools;
  for (const auto& r : report.records) {
    Unit& u = units[aliases_ ? aliases_->canonical(r.library) : r.library];
    u.phases.insert(r.phase);
    u.tools.insert(r.tool);
    if (r.constraint.specified()) {
      u.specified_phases.insert(r.phase);
      u.specified_tools.insert(r.tool);
    }
    phases.insert(r.phase);
    tools.insert(r.tool);
    record_tools.insert(r.tool);
  }
  ++repos_;
  records_ += report.records.size();
  deps_ += units.size();

  std::set<ToolKind> install, build;
  for (ToolKind t : tools) {
    if (phase_of(t) == Phase::kInstall) install.insert(t);
    if (phase_of(t) == Phase::kBuild) build.insert(t);
  }
  const bool make_only = build.size() == 1 && *build.begin() == ToolKind::kMake;

  for (const auto& [name, u] : units) {
    ++popularity_[name];
    if (u.phases.count(Phase::kInstall) && u.phases.count(Phase::kBuild)) ++cross_phase_;
    if (!u.specified_phases.empty()) ++specified_;
    for (Phase p : u.phases) {
      ++phases_[p].deps;
      if (u.specified_phases.count(p)) ++phases_[p].specified;
    }
    for (ToolKind t : u.tools) {
      ++tools_[t].deps;
      if (u.specified_tools.count(t)) ++tools_[t].specified;
    }
    if (make_only && u.tools.count(ToolKind::kMake)) {
      ++make_only_.deps;
      if (u.specified_tools.count(ToolKind::kMake)) ++make_only_.specified;
    }
  }
  for (Phase p : phases) ++phases_[p].repos;
  for (ToolKind t : record_tools) ++tools_[t].repos;
  if (make_only) ++make_only_.repos;
  for (ToolKind b : build) {
    if (install.empty()) {
      ++combos_[ToolCombo{std::nullopt, b}];
    } else {
      for (ToolKind i : install) ++combos_[ToolCombo{i, b}];
    }
  }
}

void StatsAccumulator::merge(const StatsAccumulator& o) {
  auto add_counter = [](Counter& a, const Counter& b) {
    a.deps += b.deps;
    a.repos += b.repos;
    a.specified += b.specified;
  };
  repos_ += o.repos_;
  records_ += o.records_;
  deps_ += o.deps_;
  specified_ += o.specified_;
  cross_phase_ += o.cross_phase_;
  for (const auto& [k, v] : o.phases_) add_counter(phases_[k], v);
  for (const auto& [k, v] : o.tools_) add_counter(tools_[k], v);
  add_counter(make_only_, o.make_only_);
  for (const auto& [k, v] : o.combos_) combos_[k] += v;
  for (const auto& [k, v] : o.popularity_) popularity_[k] += v;
}

EcosystemStats StatsAccumulator::finish() const {
  if (repos_ == 0) throw Error(ErrorCode::kEmptyInput, "no reports to analyse");
  EcosystemStats s;
  s.repo_count = repos_;
  s.record_count = records_;
  s.dep_count = deps_;
  auto share = [&](const Counter& c) {
    return ToolShare{c.deps, c.repos, ratio(c.deps, deps_), ratio(c.repos, repos_)};
  };
  for (Phase p : {Phase::kInstall, Phase::kBuild, Phase::kClone}) {
    auto it = phases_.find(p);
    const Counter c = it == phases_.end() ? Counter{} : it->second;
    s.phases[p] = share(c);
    if (c.deps > 0) s.phase_version_spec_rate[p] = ratio(c.specified, c.deps);
  }
  for (ToolKind t : all_tools()) {
    auto it = tools_.find(t);
    const Counter c = it == tools_.end() ? Counter{} : it->second;
    s.tool_usage[t] = share(c);
    if (c.deps > 0) s.tool_version_spec_rate[t] = ratio(c.specified, c.deps);
  }
  s.make_only = share(make_only_);
  s.toolchain_combos = combos_;
  s.cross_phase_share = ratio(cross_phase_, deps_);
  s.popularity = popularity_;
  s.specified_deps = specified_;
  s.version_spec_rate = ratio(specified_, deps_);
  if (!popularity_.empty()) {
    std::vector<std::size_t> counts;
    counts.reserve(popularity_.size());
    for (const auto& [name, n] : popularity_) counts.push_back(n);
    s.gini = gini(counts);
    for (int k : kTopK) s.topk_shares[k] = topk_share(counts, k);
    std::sort(counts.begin(), counts.end());
    const std::size_t n = counts.size();
    s.popularity_mean = ratio(deps_, n);
    s.popularity_median = n % 2 ? static_cast<double>(counts[n / 2])
                                : (static_cast<double>(counts[n / 2 - 1]) + counts[n / 2]) / 2.0;
  }
  return s;
}

EcosystemStats compute_stats(const std::vector<ScanReport>& reports, const AliasTable* aliases) {
  StatsAccumulator acc(aliases);
  for (const auto& r : reports) acc.add(r);
  return acc.finish();
}

double gini(std::span<const std::size_t> counts) {
  if (counts.empty()) throw Error(ErrorCode::kEmptyInput, "gini of an empty vector");
  std::vector<std::size_t> x(counts.begin(), counts.end());
  std::sort(x.begin(), x.end());
  const long double n = static_cast<long double>(x.size());
  long double weighted = 0;
  long double total = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    weighted += (2.0L * static_cast<long double>(i + 1) - n - 1.0L) * static_cast<long double>(x[i]);
    total += static_cast<long double>(x[i]);
  }
  if (total == 0) return 0.0;
  return static_cast<double>(weighted / (n * total));
}

double topk_share(std::span<const std::size_t> counts, double k) {
  if (counts.empty()) throw Error(ErrorCode::kEmptyInput, "top-k share of an empty vector");
  std::vector<std::size_t> x(counts.begin(), counts.end());
  std::sort(x.begin(), x.end(), std::greater<>());
  const std::size_t n = x.size();
  std::size_t m;
  if (k == std::floor(k) && k >= 0) {
    const auto ki = static_cast<std::size_t>(k);
    m = (ki * n + 99) / 100;
  } else {
    m = static_cast<std::size_t>(std::ceil(k * static_cast<double>(n) / 100.0));
  }
  m = std::min(m, n);
  std::size_t top = 0;
  std::size_t total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    total += x[i];
    if (i < m) top += x[i];
  }
  return ratio(top, total);
}

std::optional<double> latest_adoption(const std::vector<ScanReport>& reports,
                                      const std::map<std::string, Version>& latest) {
  std::size_t eligible = 0, adopting = 0;
  for (const auto& rep : reports) {
    for (const auto& r : rep.records) {
      if (!r.constraint.specified()) continue;
      auto it = latest.find(r.library);
      if (it == latest.end()) continue;
      ++eligible;
      adopting += r.constraint.contains(it->second);
    }
  }
  if (eligible == 0) return std::nullopt;
  return ratio(adopting, eligible);
}

CoverageResult db_coverage(const std::map<std::string, std::size_t>& popularity,
                           const std::set<std::string>& database, std::size_t batch) {
  if (batch == 0) throw Error(ErrorCode::kInvalidInput, "batch size must be positive");
  std::vector<std::pair<std::string, std::size_t>> ranked(popularity.begin(), popularity.end());
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const auto& a, const auto& b) { return a.second > b.second; });
  CoverageResult out;
  std::size_t covered_deps = 0, total_deps = 0;
  for (std::size_t start = 0; start < ranked.size(); start += batch) {
    const std::size_t end = std::min(start + batch, ranked.size());
    std::size_t hits = 0;
    for (std::size_t i = start; i < end; ++i) {
      const bool hit = database.count(ranked[i].first) > 0;
      hits += hit;
      if (hit) covered_deps += ranked[i].second;
      total_deps += ranked[i].second;
    }
    out.batch_coverage.push_back(ratio(hits, end - start));
  }
  out.covered_dep_share = ratio(covered_deps, total_deps);
  return out;
}

std::string stats_to_json(const EcosystemStats& s) {
  using nlohmann::ordered_json;
  auto share_json = [](const ToolShare& t) {
    return ordered_json{{"deps", t.deps},
                        {"repos", t.repos},
                        {"dep_share", t.dep_share},
                        {"repo_share", t.repo_share}};
  };
  ordered_json j;
  j["repo_count"] = s.repo_count;
  j["record_count"] = s.record_count;
  j["dep_count"] = s.dep_count;
  j["phases"] = ordered_json::object();
  for (const auto& [p, t] : s.phases) j["phases"][std::string(to_string(p))] = share_json(t);
  j["cross_phase_share"] = s.cross_phase_share;
  j["tool_usage"] = ordered_json::object();
  for (const auto& [tool, t] : s.tool_usage) {
    j["tool_usage"][std::string(to_string(tool))] = share_json(t);
  }
  j["make_only"] = share_json(s.make_only);
  j["toolchain_combos"] = ordered_json::array();
  for (const auto& [c, n] : s.toolchain_combos) {
    j["toolchain_combos"].push_back(
        {{"install", c.install ? ordered_json(std::string(to_string(*c.install))) : ordered_json()},
         {"build", std::string(to_string(c.build))},
         {"repos", n}});
  }
  j["gini"] = s.gini;
  j["topk_shares"] = ordered_json::object();
  for (const auto& [k, v] : s.topk_shares) j["topk_shares"][std::to_string(k)] = v;
  j["popularity_mean"] = s.popularity_mean;
  j["popularity_median"] = s.popularity_median;
  j["specified_deps"] = s.specified_deps;
  j["version_spec_rate"] = s.version_spec_rate;
  j["phase_version_spec_rate"] = ordered_json::object();
  for (const auto& [p, v] : s.phase_version_spec_rate) {
    j["phase_version_spec_rate"][std::string(to_string(p))] = v;
  }
  j["tool_version_spec_rate"] = ordered_json::object();
  for (const auto& [t, v] : s.tool_version_spec_rate) {
    j["tool_version_spec_rate"][std::string(to_string(t))] = v;
  }
  j["popularity"] = ordered_json::object();
  for (const auto& [name, n] : s.popularity) j["popularity"][name] = n;
  return j.dump(2) + "\n";
}

std::string stats_to_text(const EcosystemStats& s) {
  std::vector<std::pair<std::string, ToolShare>> install, build;
  for (const auto& [t, share] : s.tool_usage) {
    if (phase_of(t) == Phase::kInstall) install.emplace_back(display_name(t), share);
    if (phase_of(t) == Phase::kBuild) build.emplace_back(display_name(t), share);
  }
  build.insert(build.begin(), {"Make Only", s.make_only});
  auto by_repo = [](const auto& a, const auto& b) {
    return a.second.repo_share != b.second.repo_share ? a.second.repo_share > b.second.repo_share
                                                      : a.first < b.first;
  };
  std::stable_sort(install.begin(), install.end(), by_repo);
  std::stable_sort(build.begin() + 1, build.end(), by_repo);

  std::string out;
  char buf[160];
  std::snprintf(buf, sizeof buf, "repositories: %zu  dependencies: %zu  records: %zu\n",
                s.repo_count, s.dep_count, s.record_count);
  out += buf;
  for (const auto& [p, t] : s.phases) {
    std::snprintf(buf, sizeof buf, "%-8s dep %6s%%  repo %6s%%\n",
                  std::string(to_string(p)).c_str(), percent(t.dep_share).c_str(),
                  percent(t.repo_share).c_str());
    out += buf;
  }
  out += "both phases: " + percent(s.cross_phase_share) + "%\n\n";
  std::snprintf(buf, sizeof buf, "%-14s %8s %8s   %-14s %8s %8s\n", "Install", "Dep(%)", "Repo(%)",
                "Build", "Dep(%)", "Repo(%)");
  out += buf;
  const std::size_t rows = std::max(install.size(), build.size());
  for (std::size_t i = 0; i < rows; ++i) {
    std::string left(40, ' '), right;
    if (i < install.size()) {
      std::snprintf(buf, sizeof buf, "%-14s %8s %8s", install[i].first.c_str(),
                    percent(install[i].second.dep_share).c_str(),
                    percent(install[i].second.repo_share).c_str());
      left = buf;
      left.resize(32, ' ');
    } else {
      left.resize(32, ' ');
    }
    if (i < build.size()) {
      std::snprintf(buf, sizeof buf, "   %-14s %8s %8s", build[i].first.c_str(),
                    percent(build[i].second.dep_share).c_str(),
                    percent(build[i].second.repo_share).c_str());
      right = buf;
    }
    out += left + right + "\n";
  }
  out += "\n";
  std::snprintf(buf, sizeof buf, "gini: %.4f  mean: %.3f  median: %.1f\n", s.gini, s.popularity_mean,
                s.popularity_median);
  out += buf;
  for (const auto& [k, v] : s.topk_shares) {
    out += "top " + std::to_string(k) + "%: " + percent(v) + "% of dependencies\n";
  }
  out += "version specified: " + percent(s.version_spec_rate) + "%";
  for (const auto& [p, v] : s.phase_version_spec_rate) {
    out += "  " + std::string(to_string(p)) + " " + percent(v) + "%";
  }
  out += "\n";
  return out;
}

std::string popularity_csv(const EcosystemStats& s) {
  std::vector<std::pair<std::string, std::size_t>> rows(s.popularity.begin(), s.popularity.end());
  std::stable_sort(rows.begin(), rows.end(),
                   [](const auto& a, const auto& b) { return a.second > b.second; });
  std::string out = "library,count\n";
  for (const auto& [name, n] : rows) out += name + "," + std::to_string(n) + "\n";
  return out;
}

std::string combos_csv(const EcosystemStats& s) {
  std::string out = "install,build,repos\n";
  for (const auto& [c, n] : s.toolchain_combos) {
    out += (c.install ? std::string(to_string(*c.install)) : std::string("none")) + "," +
           std::string(to_string(c.build)) + "," + std::to_string(n) + "\n";
  }
  return out;
}

}  // namespace ccdep
