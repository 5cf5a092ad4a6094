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

#include <optional>
#include <string>
#include <string_view>

#include "ccdep/version.hpp"

namespace ccdep {

enum class ConstraintKind { kUnspecified, kExact, kRange, kCaret, kTilde, kWildcard };

std::string_view to_string(ConstraintKind kind);
std::optional<ConstraintKind> constraint_kind_from_string(std::string_view s);

struct Bound {
  Version version;
  bool inclusive = true;

  friend bool operator==(const Bound&, const Bound&) = default;
};

/// The unified constraint language every extractor maps into.
///
/// Every kind except kUnspecified is represented as an interval; the kind
/// records which surface syntax produced it. Unknown syntax becomes
/// kUnspecified with the text kept in `raw`.
class VersionConstraint {
 public:
  VersionConstraint() = default;

  static VersionConstraint unspecified(std::string raw = {});
  static VersionConstraint exact(Version v, std::string raw = {});
  /// Throws Error(kInvalidInput) when lower > upper.
  static VersionConstraint range(std::optional<Bound> lower,
                                 std::optional<Bound> upper, std::string raw = {});
  /// ^x.y.z: [x.y.z, (x+1).0.0)
  static std::optional<VersionConstraint> caret(const Version& v, std::string raw = {});
  /// ~x.y.z: [x.y.z, x.(y+1).0)
  static std::optional<VersionConstraint> tilde(const Version& v, std::string raw = {});
  /// `prefix` is the fixed part of "x.y.*": [x.y.0, x.(y+1).0)
  static std::optional<VersionConstraint> wildcard(const Version& prefix,
                                                   std::string raw = {});
  /// Rebuilds a deserialized constraint. Throws Error(kInvalidInput) when
  /// the bounds violate the invariants of `kind`.
  static VersionConstraint from_parts(ConstraintKind kind, std::optional<Bound> lower,
                                      std::optional<Bound> upper, std::string raw);

  ConstraintKind kind() const noexcept { return kind_; }
  const std::optional<Bound>& lower() const noexcept { return lower_; }
  const std::optional<Bound>& upper() const noexcept { return upper_; }
  const std::string& raw() const noexcept { return raw_; }
  bool specified() const noexcept { return kind_ != ConstraintKind::kUnspecified; }

  bool contains(const Version& v) const;
  /// True when some version satisfies both constraints. Version space is
  /// treated as dense, so (a, b) with a < b is never empty.
  bool intersects(const VersionConstraint& other) const;

  /// Same kind and same bounds; `raw` is ignored.
  bool same_interval(const VersionConstraint& other) const;

 private:
  ConstraintKind kind_ = ConstraintKind::kUnspecified;
  std::optional<Bound> lower_;
  std::optional<Bound> upper_;
  std::string raw_;
};

/// Parses comparator syntax used across the supported tools:
///   "1.2.3", "=1.2", "==1.2"          exact
///   ">=1.0 <2.0", ">= 1.0, < 2.0"     range (clauses are intersected)
///   "<<2.0", ">>1.0"                  Debian strict comparators
///   "[1.0 2.0)", "(1.0,2.0]"          interval notation
///   "1.0...<2.0", "1.0...2.0"         CMake version ranges
///   "^1.2.3", "~1.2.3", "1.2.*", "1.2.x"
/// A surrounding "[...]" (Conan) is unwrapped. Anything else, and empty
/// text or "*", yields kUnspecified with `raw` preserved.
VersionConstraint parse_constraint(std::string_view text);

bool constraint_contains(const VersionConstraint& c, const Version& v);

}  // namespace ccdep
