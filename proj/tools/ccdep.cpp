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

// ccdep: dependency scanner command line.
//
//   ccdep scan ROOT... [-o PATH] [--clone-db DB] [--tools LIST] ...
//   ccdep stats REPORTS... [--format text|csv|json] [--aliases FILE]
//   ccdep vuln REPORTS... --advisories FILE [--os-catalog FILE]
//   ccdep eval REPORTS... --truth FILE [--match name|name+tool]
//   ccdep build-clone-db --manifest FILE -o DB
//   ccdep tools
//
// Exit status: 0 success, 1 runtime failure, 2 usage error.

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>

#include "ccdep/advisories.hpp"
#include "ccdep/analytics.hpp"
#include "ccdep/clone.hpp"
#include "ccdep/discovery.hpp"
#include "ccdep/error.hpp"
#include "ccdep/evaluation.hpp"
#include "ccdep/report_io.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty() || out_path == "-") {
    std::cout << content;
  } else {
    ccdep::write_file(out_path, content);
  }
}

std::vector<ccdep::ScanReport> load_all(const std::vector<std::string>& paths) {
  std::vector<ccdep::ScanReport> reports;
  for (const auto& p : paths) {
    if (!fs::exists(p)) throw UsageError("no such report path: " + p);
    for (auto& r : ccdep::load_reports(p)) reports.push_back(std::move(r));
  }
  if (reports.empty()) throw UsageError("no reports found");
  return reports;
}

std::optional<ccdep::AliasTable> load_aliases(const std::string& path) {
  if (path.empty()) return std::nullopt;
  if (!fs::exists(path)) throw UsageError("no such alias file: " + path);
  return ccdep::AliasTable::parse(ccdep::read_file(path));
}

std::set<ccdep::ToolKind> parse_tool_list(const std::string& list) {
  std::set<ccdep::ToolKind> out;
  std::stringstream ss(list);
  for (std::string item; std::getline(ss, item, ',');) {
    if (item.empty()) continue;
    auto t = ccdep::tool_from_string(item);
    if (!t) throw UsageError("unknown tool '" + item + "' (see `ccdep tools`)");
    out.insert(*t);
  }
  return out;
}

void report_warnings(const ccdep::ScanReport& r, bool verbose) {
  const auto& w = r.metadata.warnings;
  if (verbose) {
    for (const auto& x : w) std::cerr << r.repo_id << ": " << x.path << ":" << x.line << ": " << x.message << "\n";
  } else if (!w.empty()) {
    std::cerr << r.repo_id << ": " << w.size() << " warning(s); see report metadata\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dependency scanner for C/C++ repositories"};
  app.require_subcommand(1);
  bool verbose = false;
  app.add_flag("-v,--verbose", verbose, "Print every warning to stderr")->envname("CCDEP_VERBOSE");

  // scan
  auto* scan = app.add_subcommand("scan", "Scan repositories and write reports");
  std::vector<std::string> roots;
  std::string scan_out, clone_db, tools_list, repo_id;
  std::uintmax_t max_bytes = 8u << 20;
  unsigned jobs = 0;
  double clone_threshold = 0.10;
  bool follow = false, msbuild_system = false;
  std::vector<std::string> ignores;
  scan->add_option("roots", roots, "Repository roots")->required();
  scan->add_option("-o,--output", scan_out, "Report file, or directory for one report per repo")
      ->envname("CCDEP_OUTPUT");
  scan->add_option("--clone-db", clone_db, "Signature database enabling clone detection")
      ->envname("CCDEP_CLONE_DB");
  scan->add_option("--clone-threshold", clone_threshold, "Minimum matched/total ratio")
      ->envname("CCDEP_CLONE_THRESHOLD");
  scan->add_option("--tools", tools_list, "Comma-separated tool ids to enable")->envname("CCDEP_TOOLS");
  scan->add_option("--max-file-bytes", max_bytes, "Skip larger files")->envname("CCDEP_MAX_FILE_BYTES");
  scan->add_option("--repo-id", repo_id, "Repository id (single root only)")->envname("CCDEP_REPO_ID");
  scan->add_option("-j,--jobs", jobs, "Worker threads (0: all cores)")->envname("CCDEP_JOBS");
  scan->add_option("--ignore", ignores, "Directory names to skip (replaces the defaults)")
      ->envname("CCDEP_IGNORE");
  scan->add_flag("--follow-symlinks", follow, "Follow symbolic links")->envname("CCDEP_FOLLOW_SYMLINKS");
  scan->add_flag("--msbuild-system", msbuild_system, "Keep Windows SDK libraries from MSBuild")
      ->envname("CCDEP_MSBUILD_SYSTEM");

  // stats
  auto* stats = app.add_subcommand("stats", "Ecosystem statistics over reports");
  std::vector<std::string> stats_in;
  std::string format = "text", aliases_path, stats_out, csv_table = "popularity";
  stats->add_option("reports", stats_in, "Report files or directories")->required();
  stats->add_option("--format", format, "text, csv or json")
      ->check(CLI::IsMember({"text", "csv", "json"}))
      ->envname("CCDEP_FORMAT");
  stats->add_option("--csv-table", csv_table, "CSV table: popularity or combos")
      ->check(CLI::IsMember({"popularity", "combos"}))
      ->envname("CCDEP_CSV_TABLE");
  stats->add_option("--aliases", aliases_path, "Alias table (alias canonical per line)")
      ->envname("CCDEP_ALIASES");
  stats->add_option("-o,--output", stats_out, "Output file")->envname("CCDEP_OUTPUT");

  // vuln
  auto* vuln = app.add_subcommand("vuln", "Match reports against advisories");
  std::vector<std::string> vuln_in;
  std::string advisories_path, catalog_path, vuln_out;
  vuln->add_option("reports", vuln_in, "Report files or directories")->required();
  vuln->add_option("--advisories", advisories_path, "Line-delimited advisory file")
      ->required()
      ->envname("CCDEP_ADVISORIES");
  vuln->add_option("--os-catalog", catalog_path, "OS catalog (library version per line)")
      ->envname("CCDEP_OS_CATALOG");
  vuln->add_option("-o,--output", vuln_out, "Output file")->envname("CCDEP_OUTPUT");

  // eval
  auto* eval = app.add_subcommand("eval", "Precision and recall against ground truth");
  std::vector<std::string> eval_in;
  std::string truth_path, match = "name", eval_format = "text", eval_out, eval_aliases;
  eval->add_option("reports", eval_in, "Report files or directories")->required();
  eval->add_option("--truth", truth_path, "Ground-truth file")->required()->envname("CCDEP_TRUTH");
  eval->add_option("--match", match, "name or name+tool")
      ->check(CLI::IsMember({"name", "name+tool"}))
      ->envname("CCDEP_MATCH");
  eval->add_option("--format", eval_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->envname("CCDEP_FORMAT");
  eval->add_option("--aliases", eval_aliases, "Alias table")->envname("CCDEP_ALIASES");
  eval->add_option("-o,--output", eval_out, "Output file")->envname("CCDEP_OUTPUT");

  // build-clone-db
  auto* build_db = app.add_subcommand("build-clone-db", "Build a clone signature database");
  std::string manifest_path, db_out;
  build_db->add_option("--manifest", manifest_path, "Lines of 'name source-dir'")
      ->required()
      ->envname("CCDEP_MANIFEST");
  build_db->add_option("-o,--output", db_out, "Database file")->required()->envname("CCDEP_OUTPUT");

  // tools
  auto* tools = app.add_subcommand("tools", "List supported tools and manifest patterns");
  bool with_clone = false;
  tools->add_flag("--with-clone", with_clone, "Include the clone-signature detector");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) return app.exit(e);
    app.exit(e);
    return kUsage;
  }

  try {
    if (*scan) {
      for (const auto& r : roots) {
        if (!fs::is_directory(r)) throw UsageError("not a directory: " + r);
      }
      if (!repo_id.empty() && roots.size() > 1) throw UsageError("--repo-id needs a single root");
      const bool to_dir = roots.size() > 1 || (!scan_out.empty() && fs::is_directory(scan_out)) ||
                          (!scan_out.empty() && scan_out.back() == '/');
      if (roots.size() > 1 && scan_out.empty()) throw UsageError("several roots need -o DIR");
      if (to_dir) fs::create_directories(scan_out);
      std::optional<ccdep::SignatureDB> db;
      if (!clone_db.empty()) {
        if (!fs::exists(clone_db)) throw UsageError("no such clone db: " + clone_db);
        db = ccdep::SignatureDB::load(clone_db);
      }
      for (const auto& root : roots) {
        ccdep::ScanConfig cfg;
        cfg.root = root;
        cfg.repo_id = repo_id;
        cfg.max_file_bytes = max_bytes;
        cfg.jobs = jobs;
        cfg.follow_symlinks = follow;
        cfg.extract.msbuild_include_system = msbuild_system;
        cfg.enabled_tools = parse_tool_list(tools_list);
        if (!ignores.empty()) cfg.ignore_dirs = {ignores.begin(), ignores.end()};
        if (db && !db->empty()) cfg.clone_db = &*db;
        cfg.clone_threshold = clone_threshold;
        auto report = ccdep::scan_repository(cfg);
        report_warnings(report, verbose);
        const std::string text = ccdep::serialize_report(report);
        emit(to_dir ? (fs::path(scan_out) / (report.repo_id + ".json")).string() : scan_out, text);
      }
      return kOk;
    }
    if (*stats) {
      auto reports = load_all(stats_in);
      auto aliases = load_aliases(aliases_path);
      auto s = ccdep::compute_stats(reports, aliases ? &*aliases : nullptr);
      std::string out;
      if (format == "json") {
        out = ccdep::stats_to_json(s);
      } else if (format == "csv") {
        out = csv_table == "combos" ? ccdep::combos_csv(s) : ccdep::popularity_csv(s);
      } else {
        out = ccdep::stats_to_text(s);
      }
      emit(stats_out, out);
      return kOk;
    }
    if (*vuln) {
      if (!fs::exists(advisories_path)) throw UsageError("no such advisory file: " + advisories_path);
      auto reports = load_all(vuln_in);
      auto adv = ccdep::load_advisories(advisories_path);
      for (const auto& w : adv.warnings) std::cerr << w.path << ":" << w.line << ": " << w.message << "\n";
      std::optional<std::map<std::string, ccdep::Version>> catalog;
      if (!catalog_path.empty()) {
        if (!fs::exists(catalog_path)) throw UsageError("no such os catalog: " + catalog_path);
        catalog = ccdep::parse_os_catalog(ccdep::read_file(catalog_path));
      }
      ccdep::AdvisoryIndex index(std::move(adv.advisories));
      auto result = ccdep::match_reports(reports, index, catalog ? &*catalog : nullptr);
      auto summary = ccdep::exposure_summary(result.findings, reports);
      emit(vuln_out, ccdep::findings_to_json(result, summary));
      return kOk;
    }
    if (*eval) {
      if (!fs::exists(truth_path)) throw UsageError("no such ground-truth file: " + truth_path);
      auto reports = load_all(eval_in);
      auto truth = ccdep::parse_ground_truth(ccdep::read_file(truth_path));
      auto aliases = load_aliases(eval_aliases);
      auto r = ccdep::evaluate_corpus(reports, truth, *ccdep::match_on_from_string(match),
                                      aliases ? &*aliases : nullptr);
      emit(eval_out, eval_format == "json" ? ccdep::eval_to_json(r) : ccdep::eval_to_text(r));
      return kOk;
    }
    if (*build_db) {
      if (!fs::exists(manifest_path)) throw UsageError("no such manifest: " + manifest_path);
      std::vector<ccdep::LibrarySource> sources;
      std::istringstream in(ccdep::read_file(manifest_path));
      const fs::path base = fs::path(manifest_path).parent_path();
      for (std::string line; std::getline(in, line);) {
        std::istringstream ls(line);
        std::string name, dir;
        if (!(ls >> name) || name.front() == '#') continue;
        if (!(ls >> dir)) throw UsageError("manifest line without a source directory: " + line);
        fs::path p(dir);
        if (p.is_relative()) p = base / p;
        sources.push_back({name, p});
      }
      if (sources.empty()) throw UsageError("manifest lists no libraries");
      auto built = ccdep::build_signature_db(sources);
      for (const auto& w : built.warnings) std::cerr << w.path << ": " << w.message << "\n";
      if (built.db.empty()) throw ccdep::Error(ccdep::ErrorCode::kEmptyInput, "no signatures extracted");
      built.db.save(db_out);
      return kOk;
    }
    if (*tools) {
      for (const auto& b : ccdep::list_supported_tools(with_clone)) {
        std::string patterns;
        for (const auto& p : b.patterns) patterns += (patterns.empty() ? "" : " ") + p;
        if (!b.extra_patterns.empty()) {
          patterns += "  (also:";
          for (const auto& p : b.extra_patterns) patterns += " " + p;
          patterns += ")";
        }
        std::cout << ccdep::to_string(b.tool) << "\t" << ccdep::to_string(b.phase) << "\t"
                  << patterns << "\n";
      }
      return kOk;
    }
  } catch (const UsageError& e) {
    std::cerr << "ccdep: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "ccdep: " << e.what() << "\n";
    return kFailure;
  }
  return kUsage;
}
