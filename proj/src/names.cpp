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

#include "ccdep/names.hpp"

#include <algorithm>
#include <array>

#include "ccdep/error.hpp"
#include "text.hpp"

namespace ccdep {
namespace {

constexpr std::array<std::string_view, 7> kUnixSystem = {
    "threads", "pthread", "m", "dl", "rt", "nsl", "socket"};

constexpr std::array<std::string_view, 35> kWindowsSystem = {
    "advapi32", "bcrypt",   "comctl32", "comdlg32", "crypt32",  "dbghelp",
    "dwmapi",   "gdi32",    "imm32",    "iphlpapi", "kernel32", "mswsock",
    "netapi32", "ntdll",    "odbc32",   "odbccp32", "ole32",    "oleaut32",
    "psapi",    "rpcrt4",   "secur32",  "setupapi", "shell32",  "shlwapi",
    "user32",   "userenv",  "uuid",     "uxtheme",  "version",  "winmm",
    "winspool", "ws2_32",   "wsock32",  "wtsapi32", "wininet"};

bool strip_suffix(std::string& s, std::string_view suffix) {
  if (s.size() > suffix.size() && s.ends_with(suffix)) {
    s.resize(s.size() - suffix.size());
    return true;
  }
  return false;
}

// "lib" is removed only when at least two characters remain, so libm,
// librt and libc survive.
bool strip_lib_prefix(std::string& s) {
  if (s.size() >= 5 && s.starts_with("lib")) {
    s.erase(0, 3);
    return true;
  }
  return false;
}

}  // namespace

NameStyle name_style_for(ToolKind tool) {
  switch (tool) {
    case ToolKind::kDeb: return NameStyle::kDebPackage;
    case ToolKind::kPkgConfig: return NameStyle::kPkgConfigModule;
    case ToolKind::kMSBuild: return NameStyle::kLibFile;
    case ToolKind::kBuild2:
    case ToolKind::kCppget: return NameStyle::kBuild2Package;
    case ToolKind::kGitSubmodule: return NameStyle::kRepositoryUrl;
    default: return NameStyle::kPlain;
  }
}

std::string normalize_name(std::string_view raw, NameStyle style) {
  std::string_view t = text::trim(raw);
  if (t.empty()) throw Error(ErrorCode::kInvalidInput, "empty library name");
  for (char c : t) {
    if (text::is_space(c) || static_cast<unsigned char>(c) < 0x20) {
      throw Error(ErrorCode::kInvalidInput,
                  "library name contains whitespace: '" + std::string(t) + "'");
    }
  }
  std::string s = text::lower(t);

  switch (style) {
    case NameStyle::kPlain:
      break;
    case NameStyle::kRepositoryUrl:
      s = std::string(text::last_path_segment(s));
      while (strip_suffix(s, ".git")) {
      }
      break;
    case NameStyle::kDebPackage: {
      if (std::size_t colon = s.find(':'); colon != std::string::npos) s.resize(colon);
      bool had_suffix = false;
      while (strip_suffix(s, "-dev") || strip_suffix(s, "-dbg")) had_suffix = true;
      if (had_suffix) strip_lib_prefix(s);
      break;
    }
    case NameStyle::kPkgConfigModule:
    case NameStyle::kLibFile:
    case NameStyle::kBuild2Package:
      while (strip_lib_prefix(s)) {
      }
      break;
  }
  if (s.empty()) {
    throw Error(ErrorCode::kInvalidInput,
                "library name normalizes to empty: '" + std::string(t) + "'");
  }
  return s;
}

std::string normalize_name(std::string_view raw, ToolKind tool) {
  return normalize_name(raw, name_style_for(tool));
}

bool is_system_library(std::string_view name) {
  return std::find(kUnixSystem.begin(), kUnixSystem.end(), name) != kUnixSystem.end() ||
         is_windows_system_library(name);
}

bool is_windows_system_library(std::string_view name) {
  return std::find(kWindowsSystem.begin(), kWindowsSystem.end(), name) !=
         kWindowsSystem.end();
}

void AliasTable::add(std::string_view alias, std::string_view canonical) {
  aliases_[normalize_name(alias, NameStyle::kPlain)] =
      normalize_name(canonical, NameStyle::kPlain);
}

std::string AliasTable::canonical(std::string_view name) const {
  auto it = aliases_.find(name);
  return it == aliases_.end() ? std::string(name) : it->second;
}

AliasTable AliasTable::parse(std::string_view content) {
  AliasTable table;
  for (const auto& line : text::lines(content)) {
    std::string_view t = text::trim(line.text);
    if (t.empty() || t.front() == '#') continue;
    auto parts = text::split_any(t, " \t");
    if (parts.size() != 2) {
      throw Error(ErrorCode::kParse,
                  "alias line " + std::to_string(line.number) + ": expected 'alias canonical'");
    }
    table.add(parts[0], parts[1]);
  }
  return table;
}

}  // namespace ccdep
