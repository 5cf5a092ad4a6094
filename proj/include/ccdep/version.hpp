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

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ccdep {

/// A package version in Debian layout: `[epoch:]upstream[-revision]`.
///
/// Plain semantic versions are the subset with epoch 0 and no revision.
/// Ordering compares the epoch numerically, then the dot-separated upstream
/// segments (missing trailing segments count as "0"), then the revision,
/// where an absent revision sorts below any present one. Within a segment,
/// runs of digits compare numerically, other runs compare as byte strings,
/// and a digit run sorts below a non-digit run.
///
/// Equivalent spellings such as "1.6" and "1.6.0" compare equal but keep
/// their own text, so the ordering is a weak ordering.
class Version {
 public:
  /// Parses `text`; throws Error(kInvalidInput) when it is not a version.
  static Version parse(std::string_view text);
  /// Returns nullopt instead of throwing.
  static std::optional<Version> try_parse(std::string_view text);

  Version(std::uint64_t epoch, std::vector<std::string> release,
          std::optional<std::string> revision = std::nullopt);

  std::uint64_t epoch() const noexcept { return epoch_; }
  const std::vector<std::string>& release() const noexcept { return release_; }
  const std::optional<std::string>& revision() const noexcept {
    return revision_;
  }

  /// Canonical text; `parse(v.str())` compares equal to `v`.
  std::string str() const;

  friend std::weak_ordering operator<=>(const Version& a, const Version& b);
  friend bool operator==(const Version& a, const Version& b) {
    return (a <=> b) == 0;
  }

 private:
  std::uint64_t epoch_ = 0;
  std::vector<std::string> release_;
  std::optional<std::string> revision_;
};

std::weak_ordering compare_versions(const Version& a, const Version& b);

/// True for pin-like strings ("1.2", "v3.0.1", "2:1.0-3") and false for
/// branch names or commit hashes. Used where a tool field may hold either.
bool looks_like_version(std::string_view text);

}  // namespace ccdep
