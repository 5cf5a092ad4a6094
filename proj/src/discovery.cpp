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

#include "ccdep/discovery.hpp"

#include <fnmatch.h>

#include <algorithm>

#include "ccdep/error.hpp"
#include "text.hpp"
#include "util/parallel.hpp"
#include "util/walk.hpp"

namespace ccdep {
namespace {

struct PatternRow {
  ToolKind tool;
  std::vector<std::string> patterns;
  std::vector<std::string> extra;
};

const std::vector<PatternRow>& pattern_table() {
  static const std::vector<PatternRow> rows = {
      {ToolKind::kDeb, {"control"}, {}},
      {ToolKind::kConan, {"conanfile.*", "conaninfo.txt"}, {}},
      {ToolKind::kVcpkg, {"vcpkg.json"}, {}},
      {ToolKind::kClib, {"package.json", "clib.json"}, {}},
      {ToolKind::kCPM, {"CMakeLists.txt"}, {}},
      {ToolKind::kBuckaroo, {"buckaroo.toml"}, {}},
      {ToolKind::kDds, {"package.json5"}, {}},
      {ToolKind::kHunter, {"CMakeLists.txt"}, {}},
      {ToolKind::kCppget, {"manifest"}, {}},
      {ToolKind::kXrepo, {"xmake.lua"}, {}},
      {ToolKind::kGitSubmodule, {".gitmodules"}, {}},
      {ToolKind::kPkgConfig, {"*.pc"}, {}},
      {ToolKind::kMake, {"Makefile"}, {}},
      {ToolKind::kCMake, {"CMakeLists.txt", "*.cmake"}, {}},
      {ToolKind::kAutoconf, {"configure", "configure.*"}, {}},
      {ToolKind::kBazel,
       {"bazel.build", "BUILD"},
       {"BUILD.bazel", "WORKSPACE", "WORKSPACE.bazel"}},
      {ToolKind::kMeson, {"meson.build"}, {}},
      {ToolKind::kMSBuild, {"*.vcxproj", "*.vbproj", "*.props"}, {}},
      {ToolKind::kXmake, {"xmake.lua"}, {}},
      {ToolKind::kBuild2, {"manifest"}, {}},
      {ToolKind::kBuck, {"BUCK"}, {}},
  };
  return rows;
}

bool case_folded(ToolKind tool) { return tool == ToolKind::kMake || tool == ToolKind::kBazel; }

bool glob_match(const std::string& pattern, const std::string& name, bool fold) {
  return fnmatch(pattern.c_str(), name.c_str(), fold ? FNM_CASEFOLD : 0) == 0;
}

bool enabled(const ScanConfig& c, ToolKind t) {
  return c.enabled_tools.empty() || c.enabled_tools.count(t) > 0;
}

struct FileOutput {
  std::vector<DependencyRecord> records;
  std::vector<Warning> warnings;
  std::set<ToolKind> recognized;
  bool skipped_large = false;
  bool unreadable = false;
};

}  // namespace

std::vector<ExtractorBinding> list_supported_tools(bool clone_db_configured) {
  std::vector<ExtractorBinding> out;
  for (const auto& row : pattern_table()) {
    out.push_back({row.tool, row.patterns, row.extra, phase_of(row.tool), extractor_for(row.tool)});
  }
  if (clone_db_configured) {
    out.push_back({ToolKind::kCloneSig, {"*.c", "*.cc", "*.cpp", "*.h", "*.hpp"}, {},
                   Phase::kClone, nullptr});
  }
  return out;
}

std::vector<ToolKind> tools_for_file(std::string_view path) {
  const std::string name(text::last_path_segment(path));
  std::vector<ToolKind> out;
  for (const auto& row : pattern_table()) {
    const bool fold = case_folded(row.tool);
    auto hit = [&](const std::string& p) { return glob_match(p, name, fold); };
    if (std::any_of(row.patterns.begin(), row.patterns.end(), hit) ||
        std::any_of(row.extra.begin(), row.extra.end(), hit)) {
      out.push_back(row.tool);
    }
  }
  return out;
}

ScanReport scan_repository(const ScanConfig& config) {
  ScanReport report;
  report.repo_id = config.repo_id;
  if (report.repo_id.empty()) {
    std::filesystem::path p = config.root;
    if (!p.has_filename()) p = p.parent_path();
    std::error_code ec;
    auto abs = std::filesystem::weakly_canonical(p, ec);
    report.repo_id = (ec ? p : abs).filename().string();
  }
  report.scanned_at = std::chrono::time_point_cast<std::chrono::seconds>(std::chrono::system_clock::now());

  auto walk = detail::walk_tree(config.root, config.ignore_dirs, config.follow_symlinks);
  report.file_count = walk.files.size();
  report.metadata.warnings = std::move(walk.warnings);

  struct Job {
    std::size_t file;
    std::vector<ToolKind> tools;
  };
  std::vector<Job> jobs;
  for (std::size_t i = 0; i < walk.files.size(); ++i) {
    std::vector<ToolKind> tools;
    for (ToolKind t : tools_for_file(walk.files[i].relative)) {
      if (enabled(config, t)) tools.push_back(t);
    }
    if (!tools.empty()) jobs.push_back({i, std::move(tools)});
  }

  std::vector<FileOutput> outputs(jobs.size());
  detail::parallel_for(jobs.size(), config.jobs, [&](std::size_t k) {
    const auto& file = walk.files[jobs[k].file];
    FileOutput& out = outputs[k];
    if (file.size > config.max_file_bytes) {
      out.skipped_large = true;
      out.warnings.push_back({file.relative, 0, "larger than max_file_bytes; skipped"});
      return;
    }
    auto content = detail::slurp(file.absolute);
    if (!content) {
      out.unreadable = true;
      out.warnings.push_back({file.relative, 0, "cannot read file"});
      return;
    }
    for (ToolKind t : jobs[k].tools) {
      auto r = extractor_for(t)(*content, file.relative, config.extract);
      if (r.recognized) out.recognized.insert(t);
      out.records.insert(out.records.end(), std::make_move_iterator(r.records.begin()),
                         std::make_move_iterator(r.records.end()));
      out.warnings.insert(out.warnings.end(), r.warnings.begin(), r.warnings.end());
    }
  });

  for (auto& out : outputs) {
    report.metadata.skipped_large_files += out.skipped_large;
    report.metadata.unreadable_files += out.unreadable;
    report.tools_seen.insert(out.recognized.begin(), out.recognized.end());
    report.records.insert(report.records.end(), std::make_move_iterator(out.records.begin()),
                          std::make_move_iterator(out.records.end()));
    report.metadata.warnings.insert(report.metadata.warnings.end(), out.warnings.begin(),
                                    out.warnings.end());
  }

  if (config.clone_db && !config.clone_db->empty() && enabled(config, ToolKind::kCloneSig)) {
    CloneOptions opt;
    opt.threshold = config.clone_threshold;
    opt.ignore_dirs = config.ignore_dirs;
    opt.follow_symlinks = config.follow_symlinks;
    opt.max_file_bytes = config.max_file_bytes;
    opt.jobs = config.jobs;
    auto clones = clone_records(detect_clones(config.root, *config.clone_db, opt));
    report.records.insert(report.records.end(), clones.begin(), clones.end());
  }

  canonicalize_records(report.records);
  for (const auto& r : report.records) report.tools_seen.insert(r.tool);
  return report;
}

}  // namespace ccdep
