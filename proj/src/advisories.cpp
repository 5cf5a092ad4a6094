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

#include "ccdep/advisories.hpp"

#include <algorithm>
#include <set>

#include "ccdep/error.hpp"
#include "ccdep/names.hpp"
#include "ccdep/report_io.hpp"
#include "text.hpp"

namespace ccdep {
namespace {

using nlohmann::json;

Advisory advisory_from_json(const json& j) {
  if (!j.is_object()) throw Error(ErrorCode::kParse, "advisory is not an object");
  auto str = [&](const char* key) -> std::optional<std::string> {
    auto it = j.find(key);
    if (it == j.end() || it->is_null()) return std::nullopt;
    if (!it->is_string()) throw Error(ErrorCode::kParse, std::string(key) + " must be a string");
    return it->get<std::string>();
  };
  Advisory a;
  auto id = str("id");
  auto library = str("library");
  if (!id || id->empty()) throw Error(ErrorCode::kParse, "missing id");
  if (!library || library->empty()) throw Error(ErrorCode::kParse, "missing library");
  a.id = *id;
  a.library = normalize_name(*library, NameStyle::kPlain);
  if (auto it = j.find("all_versions"); it != j.end() && !it->is_null()) {
    if (!it->is_boolean()) throw Error(ErrorCode::kParse, "all_versions must be a boolean");
    a.all_versions = it->get<bool>();
  }
  if (auto it = j.find("affected"); it != j.end() && !it->is_null()) {
    a.affected = constraint_from_json(*it);
  }
  if (!a.all_versions && !a.affected.specified()) {
    throw Error(ErrorCode::kParse, "affected range missing or unspecified");
  }
  if (auto f = str("fixed_in")) a.fixed_in = Version::parse(*f);
  a.severity = str("severity");
  return a;
}

VulnFinding finding(const std::string& repo, const DependencyRecord& r, const Advisory& a,
                    MatchMode mode) {
  return VulnFinding{repo, r, a.id, mode};
}

}  // namespace

AdvisoryLoad parse_advisories(std::string_view content, std::string_view source) {
  AdvisoryLoad out;
  for (const auto& [line, number] : text::lines(content)) {
    if (text::trim(line).empty()) continue;
    try {
      json j = json::parse(line);
      out.advisories.push_back(advisory_from_json(j));
    } catch (const std::exception& e) {
      ++out.malformed;
      out.warnings.push_back({std::string(source), number, std::string("skipping advisory: ") + e.what()});
    }
  }
  return out;
}

AdvisoryLoad load_advisories(const std::string& path) {
  return parse_advisories(read_file(path), path);
}

std::map<std::string, Version> parse_os_catalog(std::string_view content) {
  std::map<std::string, Version> out;
  for (const auto& [raw, number] : text::lines(content)) {
    std::string_view line = raw;
    if (std::size_t hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto parts = text::split_any(line, " \t");
    if (parts.empty()) continue;
    if (parts.size() != 2) {
      throw Error(ErrorCode::kParse, "os catalog line " + std::to_string(number) +
                                         ": expected 'library version'");
    }
    auto v = Version::try_parse(parts[1]);
    if (!v) {
      throw Error(ErrorCode::kParse, "os catalog line " + std::to_string(number) +
                                         ": bad version '" + std::string(parts[1]) + "'");
    }
    out.insert_or_assign(normalize_name(parts[0], NameStyle::kPlain), *v);
  }
  return out;
}

std::string_view to_string(MatchMode mode) {
  return mode == MatchMode::kConstraintOverlap ? "constraint_overlap" : "assumed_latest";
}

AdvisoryIndex::AdvisoryIndex(std::vector<Advisory> advisories) : size_(advisories.size()) {
  for (auto& a : advisories) by_library_[a.library].push_back(std::move(a));
  for (auto& [lib, list] : by_library_) {
    std::stable_sort(list.begin(), list.end(),
                     [](const Advisory& x, const Advisory& y) { return x.id < y.id; });
  }
}

const std::vector<Advisory>& AdvisoryIndex::for_library(const std::string& library) const {
  static const std::vector<Advisory> kNone;
  auto it = by_library_.find(library);
  return it == by_library_.end() ? kNone : it->second;
}

std::vector<VulnFinding> match_constrained(const std::string& repo_id, const DependencyRecord& r,
                                           const AdvisoryIndex& index) {
  if (!r.constraint.specified()) {
    throw Error(ErrorCode::kInvalidInput, "match_constrained needs a specified constraint");
  }
  std::vector<VulnFinding> out;
  for (const auto& a : index.for_library(r.library)) {
    if (a.all_versions || r.constraint.intersects(a.affected)) {
      out.push_back(finding(repo_id, r, a, MatchMode::kConstraintOverlap));
    }
  }
  return out;
}

std::vector<VulnFinding> match_unconstrained(const std::string& repo_id, const DependencyRecord& r,
                                             const AdvisoryIndex& index,
                                             const std::map<std::string, Version>& os_catalog,
                                             bool& unmatched) {
  if (r.constraint.specified()) {
    throw Error(ErrorCode::kInvalidInput, "match_unconstrained needs an unspecified constraint");
  }
  std::vector<VulnFinding> out;
  auto it = os_catalog.find(r.library);
  unmatched = it == os_catalog.end();
  if (unmatched) return out;
  for (const auto& a : index.for_library(r.library)) {
    if (a.all_versions || a.affected.contains(it->second)) {
      out.push_back(finding(repo_id, r, a, MatchMode::kAssumedLatest));
    }
  }
  return out;
}

VulnScan match_reports(const std::vector<ScanReport>& reports, const AdvisoryIndex& index,
                       const std::map<std::string, Version>* os_catalog) {
  static const std::map<std::string, Version> kEmpty;
  VulnScan out;
  for (const auto& rep : reports) {
    for (const auto& r : rep.records) {
      std::vector<VulnFinding> f;
      if (r.constraint.specified()) {
        f = match_constrained(rep.repo_id, r, index);
      } else {
        bool unmatched = false;
        f = match_unconstrained(rep.repo_id, r, index, os_catalog ? *os_catalog : kEmpty, unmatched);
        out.unmatched_unconstrained += unmatched;
      }
      for (auto& x : f) out.findings.push_back(std::move(x));
    }
  }
  return out;
}

ExposureSummary exposure_summary(const std::vector<VulnFinding>& findings,
                                 const std::vector<ScanReport>& reports) {
  ExposureSummary s;
  std::set<std::pair<std::string, std::string>> all, vulnerable;
  std::set<std::string> repos, affected;
  for (const auto& rep : reports) {
    repos.insert(rep.repo_id);
    for (const auto& r : rep.records) all.emplace(rep.repo_id, r.library);
  }
  for (const auto& f : findings) {
    if (!all.count({f.repo_id, f.record.library})) continue;
    vulnerable.emplace(f.repo_id, f.record.library);
    affected.insert(f.repo_id);
  }
  s.total_deps = all.size();
  s.vulnerable_deps = vulnerable.size();
  s.total_repos = repos.size();
  s.affected_repos = affected.size();
  s.vulnerable_dep_share = s.total_deps ? static_cast<double>(s.vulnerable_deps) / s.total_deps : 0.0;
  s.affected_repo_share = s.total_repos ? static_cast<double>(s.affected_repos) / s.total_repos : 0.0;
  return s;
}

std::string findings_to_json(const VulnScan& scan, const ExposureSummary& s) {
  nlohmann::ordered_json j;
  j["findings"] = nlohmann::ordered_json::array();
  for (const auto& f : scan.findings) {
    j["findings"].push_back({{"repo_id", f.repo_id},
                             {"advisory", f.advisory_id},
                             {"mode", std::string(to_string(f.mode))},
                             {"record", record_to_json(f.record)}});
  }
  j["summary"] = {{"vulnerable_deps", s.vulnerable_deps},
                  {"total_deps", s.total_deps},
                  {"vulnerable_dep_share", s.vulnerable_dep_share},
                  {"affected_repos", s.affected_repos},
                  {"total_repos", s.total_repos},
                  {"affected_repo_share", s.affected_repo_share},
                  {"unmatched_unconstrained", scan.unmatched_unconstrained}};
  return j.dump(2) + "\n";
}

}  // namespace ccdep
