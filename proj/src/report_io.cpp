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

#include "ccdep/report_io.hpp"

#include <algorithm>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "ccdep/error.hpp"
#include "text.hpp"

namespace ccdep {
namespace {

using ojson = nlohmann::ordered_json;
using json = nlohmann::json;

[[noreturn]] void schema_error(const std::string& what) {
  throw Error(ErrorCode::kParse, "report schema: " + what);
}

const json& require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) schema_error(std::string("missing '") + key + "'");
  return j.at(key);
}

std::string require_string(const json& j, const char* key) {
  const json& v = require(j, key);
  if (!v.is_string()) schema_error(std::string("'") + key + "' must be a string");
  return v.get<std::string>();
}

std::optional<std::string> optional_string(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  if (!j.at(key).is_string()) schema_error(std::string("'") + key + "' must be a string");
  return j.at(key).get<std::string>();
}

bool optional_bool(const json& j, const char* key, bool fallback) {
  if (!j.contains(key) || j.at(key).is_null()) return fallback;
  if (!j.at(key).is_boolean()) schema_error(std::string("'") + key + "' must be a boolean");
  return j.at(key).get<bool>();
}

std::size_t require_count(const json& j, const char* key) {
  const json& v = require(j, key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
    schema_error(std::string("'") + key + "' must be a non-negative integer");
  }
  return v.get<std::size_t>();
}

}  // namespace

ojson constraint_to_json(const VersionConstraint& c) {
  ojson j;
  j["kind"] = std::string(to_string(c.kind()));
  j["lower"] = c.lower() ? ojson(c.lower()->version.str()) : ojson(nullptr);
  j["lower_inclusive"] = c.lower() ? c.lower()->inclusive : false;
  j["upper"] = c.upper() ? ojson(c.upper()->version.str()) : ojson(nullptr);
  j["upper_inclusive"] = c.upper() ? c.upper()->inclusive : false;
  j["raw"] = c.raw();
  return j;
}

VersionConstraint constraint_from_json(const json& j) {
  if (j.is_string()) return parse_constraint(j.get<std::string>());
  auto kind = constraint_kind_from_string(require_string(j, "kind"));
  if (!kind) schema_error("unknown constraint kind");
  std::string raw = optional_string(j, "raw").value_or("");
  auto bound = [&](const char* key, const char* incl) -> std::optional<Bound> {
    auto text = optional_string(j, key);
    if (!text) return std::nullopt;
    auto v = Version::try_parse(*text);
    if (!v) schema_error(std::string("bad version in '") + key + "'");
    return Bound{*v, optional_bool(j, incl, true)};
  };
  auto lower = bound("lower", "lower_inclusive");
  auto upper = bound("upper", "upper_inclusive");
  try {
    return VersionConstraint::from_parts(*kind, std::move(lower), std::move(upper), raw);
  } catch (const Error& e) {
    schema_error(e.what());
  }
}

ojson record_to_json(const DependencyRecord& r) {
  ojson j;
  j["library"] = r.library;
  j["raw_name"] = r.raw_name;
  j["constraint"] = constraint_to_json(r.constraint);
  j["tool"] = std::string(to_string(r.tool));
  j["phase"] = std::string(to_string(r.phase));
  j["evidence"] = ojson{{"path", r.evidence.path}, {"line", r.evidence.line}};
  j["source_url"] = r.source_url ? ojson(*r.source_url) : ojson(nullptr);
  j["system"] = r.system;
  j["components"] = r.components;
  return j;
}

DependencyRecord record_from_json(const json& j) {
  DependencyRecord r;
  r.library = require_string(j, "library");
  if (r.library.empty()) schema_error("empty library");
  for (char c : r.library) {
    if (text::is_space(c) || (c >= 'A' && c <= 'Z')) {
      schema_error("library must be lowercase without whitespace");
    }
  }
  r.raw_name = optional_string(j, "raw_name").value_or(r.library);
  r.constraint = j.contains("constraint") && !j.at("constraint").is_null()
                     ? constraint_from_json(j.at("constraint"))
                     : VersionConstraint::unspecified();
  auto tool = tool_from_string(require_string(j, "tool"));
  if (!tool) schema_error("unknown tool");
  r.tool = *tool;
  r.phase = phase_of(r.tool);
  if (auto phase = optional_string(j, "phase")) {
    auto p = phase_from_string(*phase);
    if (!p || *p != r.phase) schema_error("phase disagrees with tool");
  }
  const json& ev = require(j, "evidence");
  r.evidence.path = require_string(ev, "path");
  if (r.evidence.path.starts_with('/') || r.evidence.path.starts_with("../") ||
      r.evidence.path == "..") {
    schema_error("evidence path must be relative to the repository root");
  }
  if (ev.contains("line") && ev.at("line").is_number_integer()) {
    r.evidence.line = ev.at("line").get<int>();
  }
  r.source_url = optional_string(j, "source_url");
  r.system = optional_bool(j, "system", false);
  if (j.contains("components") && j.at("components").is_array()) {
    for (const auto& c : j.at("components")) {
      if (c.is_string()) r.components.push_back(c.get<std::string>());
    }
  }
  return r;
}

ojson report_to_json(const ScanReport& report) {
  ojson j;
  j["format"] = "ccdep-report";
  j["format_version"] = kReportFormatVersion;
  j["repo_id"] = report.repo_id;
  j["scanned_at"] = format_timestamp(report.scanned_at);
  j["file_count"] = report.file_count;
  ojson tools = ojson::array();
  for (ToolKind t : report.tools_seen) tools.push_back(std::string(to_string(t)));
  j["tools_seen"] = std::move(tools);
  ojson records = ojson::array();
  for (const auto& r : report.records) records.push_back(record_to_json(r));
  j["records"] = std::move(records);
  ojson warnings = ojson::array();
  for (const auto& w : report.metadata.warnings) {
    warnings.push_back(ojson{{"path", w.path}, {"line", w.line}, {"message", w.message}});
  }
  j["metadata"] = ojson{{"warnings", std::move(warnings)},
                        {"skipped_large_files", report.metadata.skipped_large_files},
                        {"unreadable_files", report.metadata.unreadable_files}};
  return j;
}

ScanReport report_from_json(const json& j) {
  if (!j.is_object()) schema_error("top level must be an object");
  if (j.contains("format_version") && j.at("format_version") != kReportFormatVersion) {
    schema_error("unsupported format_version");
  }
  ScanReport report;
  report.repo_id = require_string(j, "repo_id");
  if (auto ts = optional_string(j, "scanned_at")) report.scanned_at = parse_timestamp(*ts);
  report.file_count = require_count(j, "file_count");
  const json& records = require(j, "records");
  if (!records.is_array()) schema_error("'records' must be an array");
  for (const auto& r : records) report.records.push_back(record_from_json(r));
  if (j.contains("tools_seen")) {
    for (const auto& t : j.at("tools_seen")) {
      auto tool = t.is_string() ? tool_from_string(t.get<std::string>()) : std::nullopt;
      if (!tool) schema_error("unknown tool in tools_seen");
      report.tools_seen.insert(*tool);
    }
  }
  for (const auto& r : report.records) report.tools_seen.insert(r.tool);
  if (j.contains("metadata") && j.at("metadata").is_object()) {
    const json& m = j.at("metadata");
    if (m.contains("warnings") && m.at("warnings").is_array()) {
      for (const auto& w : m.at("warnings")) {
        report.metadata.warnings.push_back(
            Warning{optional_string(w, "path").value_or(""),
                    w.contains("line") && w.at("line").is_number_integer() ? w.at("line").get<int>() : 0,
                    optional_string(w, "message").value_or("")});
      }
    }
    if (m.contains("skipped_large_files")) {
      report.metadata.skipped_large_files = require_count(m, "skipped_large_files");
    }
    if (m.contains("unreadable_files")) {
      report.metadata.unreadable_files = require_count(m, "unreadable_files");
    }
  }
  return report;
}

std::string serialize_report(const ScanReport& report) {
  return report_to_json(report).dump(2) + "\n";
}

ScanReport parse_report(std::string_view text) {
  json j = json::parse(text.begin(), text.end(), nullptr, false);
  if (j.is_discarded()) throw Error(ErrorCode::kParse, "report is not well-formed JSON");
  return report_from_json(j);
}

std::string format_timestamp(std::chrono::system_clock::time_point t) {
  std::time_t tt = std::chrono::system_clock::to_time_t(t);
  std::tm tm{};
  gmtime_r(&tt, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

std::chrono::system_clock::time_point parse_timestamp(std::string_view s) {
  std::tm tm{};
  std::istringstream is{std::string(s)};
  is >> std::get_time(&tm, "%Y-%m-%dT%H:%M:%S");
  if (is.fail()) throw Error(ErrorCode::kParse, "bad timestamp '" + std::string(s) + "'");
  return std::chrono::system_clock::from_time_t(timegm(&tm));
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot read " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::kIo, "read failed for " + path.string());
  return os.str();
}

void write_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path.string());
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw Error(ErrorCode::kIo, "write failed for " + path.string());
}

std::vector<ScanReport> load_reports(const std::filesystem::path& path) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (fs::is_directory(path, ec)) {
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(path, ec)) {
      if (entry.is_regular_file() && entry.path().extension() == ".json") {
        files.push_back(entry.path());
      }
    }
    if (ec) throw Error(ErrorCode::kIo, "cannot list " + path.string());
    std::sort(files.begin(), files.end());
    std::vector<ScanReport> out;
    for (const auto& f : files) out.push_back(parse_report(read_file(f)));
    return out;
  }
  return {parse_report(read_file(path))};
}

}  // namespace ccdep
