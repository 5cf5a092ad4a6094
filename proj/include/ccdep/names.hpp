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

#include <map>
#include <string>
#include <string_view>

#include "ccdep/model.hpp"

namespace ccdep {

/// Naming convention of the text a library name was read from.
enum class NameStyle {
  kPlain,            // case folding only
  kDebPackage,       // "libpng-dev" -> "png"
  kPkgConfigModule,  // "libcurl" -> "curl"
  kLibFile,          // MSBuild link inputs, "libcurl" (".lib" already removed)
  kBuild2Package,    // "libhello" -> "hello"
  kRepositoryUrl,    // "https://host/owner/name.git" -> "name"
};

NameStyle name_style_for(ToolKind tool);

/// Canonical library name: trimmed, lowercase, convention prefixes and
/// suffixes removed. Idempotent for a fixed style. Throws
/// Error(kInvalidInput) for empty input, embedded whitespace or a result
/// that is empty.
std::string normalize_name(std::string_view raw, NameStyle style);
std::string normalize_name(std::string_view raw, ToolKind tool);

/// OS-default libraries: threads, pthread, m, dl, rt, nsl, socket and the
/// Windows SDK import libraries.
bool is_system_library(std::string_view normalized);
bool is_windows_system_library(std::string_view normalized);

/// Optional many-to-one renaming applied after normalization, e.g.
/// "zlib1g" -> "zlib" or "gtest" -> "googletest".
class AliasTable {
 public:
  AliasTable() = default;

  void add(std::string_view alias, std::string_view canonical);
  std::string canonical(std::string_view name) const;
  bool empty() const { return aliases_.empty(); }

  /// Lines "alias canonical"; '#' starts a comment. Throws Error(kParse).
  static AliasTable parse(std::string_view text);

 private:
  std::map<std::string, std::string, std::less<>> aliases_;
};

}  // namespace ccdep
