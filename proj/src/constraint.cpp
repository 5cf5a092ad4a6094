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

#include "ccdep/constraint.hpp"

#include <charconv>
#include <vector>

#include "ccdep/error.hpp"
#include "text.hpp"

namespace ccdep {
namespace {

std::optional<std::string> increment(std::string_view segment) {
  std::uint64_t n = 0;
  if (segment.empty()) return std::nullopt;
  auto [ptr, ec] = std::from_chars(segment.data(), segment.data() + segment.size(), n);
  if (ec != std::errc() || ptr != segment.data() + segment.size()) return std::nullopt;
  if (n == UINT64_MAX) return std::nullopt;
  return std::to_string(n + 1);
}

// Copies `v.release()[0..keep)`, bumps the last kept segment and pads with
// zeros up to `width` segments.
std::optional<Version> bumped(const Version& v, std::size_t keep, std::size_t width) {
  const auto& rel = v.release();
  std::vector<std::string> out(rel.begin(), rel.begin() + static_cast<long>(keep));
  auto next = increment(out.back());
  if (!next) return std::nullopt;
  out.back() = *next;
  while (out.size() < width) out.emplace_back("0");
  return Version(v.epoch(), std::move(out));
}

const Bound& tighter_lower(const Bound& a, const Bound& b) {
  auto c = a.version <=> b.version;
  if (c > 0) return a;
  if (c < 0) return b;
  return a.inclusive ? b : a;
}

const Bound& tighter_upper(const Bound& a, const Bound& b) {
  auto c = a.version <=> b.version;
  if (c < 0) return a;
  if (c > 0) return b;
  return a.inclusive ? b : a;
}

std::optional<Bound> tighter(const std::optional<Bound>& a,
                             const std::optional<Bound>& b, bool lower) {
  if (!a) return b;
  if (!b) return a;
  return lower ? tighter_lower(*a, *b) : tighter_upper(*a, *b);
}

bool is_wildcard_token(std::string_view s) {
  return s == "*" || s == "x" || s == "X";
}

// "1.2.*" -> "1.2"; nullopt when `s` has no wildcard tail.
std::optional<std::string_view> wildcard_prefix(std::string_view s) {
  std::size_t dot = s.rfind('.');
  if (dot == std::string_view::npos || !is_wildcard_token(s.substr(dot + 1))) {
    return std::nullopt;
  }
  std::string_view prefix = s.substr(0, dot);
  // "1.*.*" collapses to the shortest fixed prefix.
  while (true) {
    std::size_t d = prefix.rfind('.');
    if (d == std::string_view::npos || !is_wildcard_token(prefix.substr(d + 1))) break;
    prefix = prefix.substr(0, d);
  }
  return prefix;
}

struct Clause {
  std::string op;
  std::string operand;
};

bool is_op_char(char c) {
  return c == '<' || c == '>' || c == '=' || c == '!' || c == '^' || c == '~';
}

std::vector<Clause> split_clauses(std::string_view s) {
  std::vector<Clause> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (text::is_space(s[i]) || s[i] == ',')) ++i;
    if (i >= s.size()) break;
    Clause c;
    while (i < s.size() && is_op_char(s[i])) c.op += s[i++];
    while (i < s.size() && text::is_space(s[i])) ++i;
    while (i < s.size() && !text::is_space(s[i]) && s[i] != ',') c.operand += s[i++];
    out.push_back(std::move(c));
  }
  return out;
}

std::optional<VersionConstraint> single_clause(const Clause& c, const std::string& raw) {
  if (c.operand.empty()) return std::nullopt;
  const std::string& op = c.op;
  if (op.empty() || op == "=" || op == "==") {
    if (auto prefix = wildcard_prefix(c.operand)) {
      auto v = Version::try_parse(*prefix);
      if (!v) return std::nullopt;
      return VersionConstraint::wildcard(*v, raw);
    }
    auto v = Version::try_parse(c.operand);
    if (!v) return std::nullopt;
    return VersionConstraint::exact(*v, raw);
  }
  auto v = Version::try_parse(c.operand);
  if (!v) return std::nullopt;
  if (op == "^") return VersionConstraint::caret(*v, raw);
  if (op == "~") return VersionConstraint::tilde(*v, raw);
  if (op == ">=") return VersionConstraint::range(Bound{*v, true}, std::nullopt, raw);
  if (op == ">" || op == ">>") {
    return VersionConstraint::range(Bound{*v, false}, std::nullopt, raw);
  }
  if (op == "<=") return VersionConstraint::range(std::nullopt, Bound{*v, true}, raw);
  if (op == "<" || op == "<<") {
    return VersionConstraint::range(std::nullopt, Bound{*v, false}, raw);
  }
  return std::nullopt;
}

std::optional<VersionConstraint> parse_impl(std::string_view s, const std::string& raw) {
  if (s.empty() || s.find("||") != std::string_view::npos) return std::nullopt;

  if ((s.front() == '[' || s.front() == '(') && (s.back() == ']' || s.back() == ')')) {
    std::string_view inner = s.substr(1, s.size() - 2);
    auto pieces = text::split_any(inner, " \t,");
    if (pieces.size() == 2) {
      auto lo = Version::try_parse(pieces[0]);
      auto hi = Version::try_parse(pieces[1]);
      if (lo && hi) {
        return VersionConstraint::range(Bound{*lo, s.front() == '['},
                                        Bound{*hi, s.back() == ']'}, raw);
      }
    }
    if (s.front() == '[' && s.back() == ']') return parse_impl(text::trim(inner), raw);
    return std::nullopt;
  }

  if (std::size_t dots = s.find("..."); dots != std::string_view::npos) {
    auto lo = Version::try_parse(s.substr(0, dots));
    std::string_view hi_text = s.substr(dots + 3);
    bool inclusive = true;
    if (!hi_text.empty() && hi_text.front() == '<') {
      inclusive = false;
      hi_text.remove_prefix(1);
    }
    auto hi = Version::try_parse(hi_text);
    if (!lo || !hi) return std::nullopt;
    return VersionConstraint::range(Bound{*lo, true}, Bound{*hi, inclusive}, raw);
  }

  auto clauses = split_clauses(s);
  if (clauses.empty()) return std::nullopt;
  if (clauses.size() == 1) return single_clause(clauses[0], raw);

  std::optional<Bound> lower;
  std::optional<Bound> upper;
  for (const auto& c : clauses) {
    if (c.op == "^" || c.op == "~" || c.op.empty()) return std::nullopt;
    auto part = single_clause(c, raw);
    if (!part || part->kind() == ConstraintKind::kWildcard) return std::nullopt;
    lower = tighter(lower, part->lower(), true);
    upper = tighter(upper, part->upper(), false);
  }
  if (lower && upper && lower->version == upper->version && lower->inclusive &&
      upper->inclusive) {
    return VersionConstraint::exact(lower->version, raw);
  }
  return VersionConstraint::range(lower, upper, raw);
}

}  // namespace

std::string_view to_string(ConstraintKind kind) {
  switch (kind) {
    case ConstraintKind::kUnspecified: return "unspecified";
    case ConstraintKind::kExact: return "exact";
    case ConstraintKind::kRange: return "range";
    case ConstraintKind::kCaret: return "caret";
    case ConstraintKind::kTilde: return "tilde";
    case ConstraintKind::kWildcard: return "wildcard";
  }
  return "unspecified";
}

std::optional<ConstraintKind> constraint_kind_from_string(std::string_view s) {
  for (auto k : {ConstraintKind::kUnspecified, ConstraintKind::kExact,
                 ConstraintKind::kRange, ConstraintKind::kCaret,
                 ConstraintKind::kTilde, ConstraintKind::kWildcard}) {
    if (to_string(k) == s) return k;
  }
  return std::nullopt;
}

VersionConstraint VersionConstraint::unspecified(std::string raw) {
  VersionConstraint c;
  c.raw_ = std::move(raw);
  return c;
}

VersionConstraint VersionConstraint::exact(Version v, std::string raw) {
  VersionConstraint c;
  c.kind_ = ConstraintKind::kExact;
  c.lower_ = Bound{v, true};
  c.upper_ = Bound{std::move(v), true};
  c.raw_ = std::move(raw);
  return c;
}

VersionConstraint VersionConstraint::range(std::optional<Bound> lower,
                                           std::optional<Bound> upper,
                                           std::string raw) {
  if (!lower && !upper) return unspecified(std::move(raw));
  if (lower && upper && (lower->version <=> upper->version) > 0) {
    throw Error(ErrorCode::kInvalidInput, "range lower bound exceeds upper bound");
  }
  VersionConstraint c;
  c.kind_ = ConstraintKind::kRange;
  c.lower_ = std::move(lower);
  c.upper_ = std::move(upper);
  c.raw_ = std::move(raw);
  return c;
}

std::optional<VersionConstraint> VersionConstraint::caret(const Version& v,
                                                          std::string raw) {
  auto hi = bumped(v, 1, std::max<std::size_t>(v.release().size(), 1));
  if (!hi) return std::nullopt;
  VersionConstraint c;
  c.kind_ = ConstraintKind::kCaret;
  c.lower_ = Bound{v, true};
  c.upper_ = Bound{*std::move(hi), false};
  c.raw_ = std::move(raw);
  return c;
}

std::optional<VersionConstraint> VersionConstraint::tilde(const Version& v,
                                                          std::string raw) {
  const std::size_t n = v.release().size();
  auto hi = bumped(v, n == 1 ? 1 : 2, n);
  if (!hi) return std::nullopt;
  VersionConstraint c;
  c.kind_ = ConstraintKind::kTilde;
  c.lower_ = Bound{v, true};
  c.upper_ = Bound{*std::move(hi), false};
  c.raw_ = std::move(raw);
  return c;
}

std::optional<VersionConstraint> VersionConstraint::wildcard(const Version& prefix,
                                                             std::string raw) {
  const std::size_t n = prefix.release().size();
  auto hi = bumped(prefix, n, n + 1);
  if (!hi) return std::nullopt;
  std::vector<std::string> lo = prefix.release();
  lo.emplace_back("0");
  VersionConstraint c;
  c.kind_ = ConstraintKind::kWildcard;
  c.lower_ = Bound{Version(prefix.epoch(), std::move(lo)), true};
  c.upper_ = Bound{*std::move(hi), false};
  c.raw_ = std::move(raw);
  return c;
}

VersionConstraint VersionConstraint::from_parts(ConstraintKind kind,
                                              std::optional<Bound> lower,
                                              std::optional<Bound> upper,
                                              std::string raw) {
  switch (kind) {
    case ConstraintKind::kUnspecified:
      if (lower || upper) {
        throw Error(ErrorCode::kInvalidInput, "unspecified constraint cannot have bounds");
      }
      return unspecified(std::move(raw));
    case ConstraintKind::kExact:
      if (!lower || !upper || !(lower->version == upper->version) || !lower->inclusive ||
          !upper->inclusive) {
        throw Error(ErrorCode::kInvalidInput, "exact constraint needs equal inclusive bounds");
      }
      return exact(lower->version, std::move(raw));
    case ConstraintKind::kRange:
      return range(std::move(lower), std::move(upper), std::move(raw));
    case ConstraintKind::kCaret:
    case ConstraintKind::kTilde:
    case ConstraintKind::kWildcard: {
      if (!lower || !upper) {
        throw Error(ErrorCode::kInvalidInput, "derived constraint needs both bounds");
      }
      VersionConstraint c = range(std::move(lower), std::move(upper), std::move(raw));
      c.kind_ = kind;
      return c;
    }
  }
  return unspecified(std::move(raw));
}

bool VersionConstraint::contains(const Version& v) const {
  if (kind_ == ConstraintKind::kUnspecified) return true;
  if (lower_) {
    auto c = v <=> lower_->version;
    if (c < 0 || (c == 0 && !lower_->inclusive)) return false;
  }
  if (upper_) {
    auto c = v <=> upper_->version;
    if (c > 0 || (c == 0 && !upper_->inclusive)) return false;
  }
  return true;
}

bool VersionConstraint::intersects(const VersionConstraint& other) const {
  auto lo = tighter(lower_, other.lower_, true);
  auto hi = tighter(upper_, other.upper_, false);
  if (!lo || !hi) return true;
  auto c = lo->version <=> hi->version;
  if (c < 0) return true;
  if (c > 0) return false;
  return lo->inclusive && hi->inclusive;
}

bool VersionConstraint::same_interval(const VersionConstraint& other) const {
  return kind_ == other.kind_ && lower_ == other.lower_ && upper_ == other.upper_;
}

VersionConstraint parse_constraint(std::string_view input) {
  std::string raw(text::trim(input));
  std::string_view s = raw;
  if (s.empty() || s == "*" || text::iequals(s, "latest") || text::iequals(s, "any")) {
    return VersionConstraint::unspecified(raw);
  }
  try {
    if (auto c = parse_impl(s, raw)) return *std::move(c);
  } catch (const Error&) {
    // Inverted bounds fall through to unspecified.
  }
  return VersionConstraint::unspecified(raw);
}

bool constraint_contains(const VersionConstraint& c, const Version& v) {
  return c.contains(v);
}

}  // namespace ccdep
