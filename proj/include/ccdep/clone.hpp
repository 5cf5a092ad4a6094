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

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ccdep/model.hpp"

namespace ccdep {

/// Strips comments, replaces string and character literals with "" and ''
/// and collapses whitespace. A single space survives only between two
/// identifier characters. Identifiers keep their case.
std::string normalize_function(std::string_view source);

/// Lowercase hex SHA-256 of `normalized`.
std::string function_signature(std::string_view normalized);

/// Bodies shorter than this (after normalization) are ignored as noise.
inline constexpr std::size_t kMinFunctionBytes = 64;

struct FunctionSpan {
  std::string name;
  int line = 0;           // line of the function name
  std::string normalized;
};

/// Function definitions found by brace matching after a header of the form
/// `name(...) [qualifiers] {`. Output is in source order; definitions nested
/// in another function are not reported separately.
std::vector<FunctionSpan> extract_functions(std::string_view source);

bool is_clone_source_file(std::string_view path);

class SignatureDB {
 public:
  struct Entry {
    std::set<std::string> signatures;
    std::size_t total() const { return signatures.size(); }
  };

  /// Throws Error(kInvalidInput) for an empty set or a malformed digest.
  void add(std::string name, std::set<std::string> signatures);
  const std::map<std::string, Entry>& libraries() const { return libraries_; }
  bool empty() const { return libraries_.empty(); }

  /// Flat text format:
  ///   ccdep-sigdb 1
  ///   library <name> <total>
  ///   <digest>            (total lines, ascending)
  ///   end
  std::string serialize() const;
  /// Throws Error(kParse) on any deviation from the format.
  static SignatureDB parse(std::string_view text);

  static SignatureDB load(const std::filesystem::path& path);
  void save(const std::filesystem::path& path) const;

 private:
  std::map<std::string, Entry> libraries_;
};

struct LibrarySource {
  std::string name;
  std::filesystem::path root;
};

struct SignatureBuild {
  SignatureDB db;
  std::vector<Warning> warnings;  // one per library skipped for lack of functions
};

SignatureBuild build_signature_db(const std::vector<LibrarySource>& sources, unsigned jobs = 0);

struct CloneMatch {
  std::string library;
  std::size_t matched = 0;
  std::size_t total = 0;
  double ratio = 0.0;
  Evidence first;  // first matching file, in path order
};

struct CloneOptions {
  double threshold = 0.10;
  std::set<std::string> ignore_dirs{".git", "build", "out"};
  bool follow_symlinks = false;
  std::uintmax_t max_file_bytes = 8u << 20;
  unsigned jobs = 0;
};

/// Matches every function under `root` against `db`. A library is reported
/// when matched/total >= threshold. Throws Error(kInvalidInput) for an empty
/// db and Error(kIo) for an unreadable root.
std::vector<CloneMatch> detect_clones(const std::filesystem::path& root, const SignatureDB& db,
                                      const CloneOptions& options = {});

/// CloneSig records: one per match, Unspecified constraint.
std::vector<DependencyRecord> clone_records(const std::vector<CloneMatch>& matches);

}  // namespace ccdep
