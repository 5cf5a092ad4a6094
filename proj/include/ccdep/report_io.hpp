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

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ccdep/model.hpp"

namespace ccdep {

// Reports are JSON documents. Field names follow the ScanReport layout:
//
//   {"format": "ccdep-report", "format_version": 1,
//    "repo_id": ..., "scanned_at": "2026-01-01T00:00:00Z",
//    "file_count": N, "tools_seen": ["cmake", ...],
//    "records": [{"library", "raw_name",
//                 "constraint": {"kind", "lower", "lower_inclusive",
//                                "upper", "upper_inclusive", "raw"},
//                 "tool", "phase", "evidence": {"path", "line"},
//                 "source_url", "system", "components"}, ...],
//    "metadata": {"warnings": [{"path", "line", "message"}],
//                 "skipped_large_files": N, "unreadable_files": N}}
//
// Absent optionals serialize as null. Output is deterministic: records in
// report order, tools in enum order, keys in the order above.

inline constexpr int kReportFormatVersion = 1;

nlohmann::ordered_json constraint_to_json(const VersionConstraint& c);
/// Throws Error(kParse) on schema violations.
VersionConstraint constraint_from_json(const nlohmann::json& j);

nlohmann::ordered_json record_to_json(const DependencyRecord& r);
DependencyRecord record_from_json(const nlohmann::json& j);

nlohmann::ordered_json report_to_json(const ScanReport& report);
ScanReport report_from_json(const nlohmann::json& j);

std::string serialize_report(const ScanReport& report);
ScanReport parse_report(std::string_view text);

std::string format_timestamp(std::chrono::system_clock::time_point t);
std::chrono::system_clock::time_point parse_timestamp(std::string_view s);

/// Reads one report file, or every "*.json" file directly inside a
/// directory (sorted by name). Throws Error(kIo) / Error(kParse).
std::vector<ScanReport> load_reports(const std::filesystem::path& path);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view content);

}  // namespace ccdep
