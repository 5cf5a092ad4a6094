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

// Shared bookkeeping for extractors. Internal header.

#include <optional>
#include <string>
#include <string_view>

#include "ccdep/extract.hpp"
#include "ccdep/names.hpp"

namespace ccdep::detail {

class ResultBuilder {
 public:
  ResultBuilder(ToolKind tool, std::string_view path) : tool_(tool), path_(path) {}

  /// Validates and stores the input. Returns false (with a warning) for
  /// binary or non-UTF-8 content, in which case the caller returns finish().
  bool begin(std::string_view content);
  std::string_view content() const { return content_; }

  /// Normalizes and appends a record; on a bad name records a warning and
  /// returns nullptr.
  DependencyRecord* add(std::string_view raw_name, NameStyle style,
                        VersionConstraint constraint, int line,
                        std::optional<std::string> source_url = std::nullopt);

  void warn(int line, std::string message);
  void recognize() { result_.recognized = true; }
  ToolKind tool() const { return tool_; }
  const std::string& path() const { return path_; }

  ExtractionResult finish();

 private:
  ToolKind tool_;
  std::string path_;
  std::string_view content_;
  ExtractionResult result_;
};

/// `text` as an exact pin when it looks like a version, else unspecified
/// with `text` kept as raw.
VersionConstraint pin_constraint(std::string_view text);

}  // namespace ccdep::detail
