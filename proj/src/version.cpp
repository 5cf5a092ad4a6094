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

#include "ccdep/version.hpp"

#include <charconv>
#include <regex>

#include "ccdep/error.hpp"
#include "text.hpp"

namespace ccdep {
namespace {

bool valid_chars(std::string_view s, std::string_view extra) {
  for (char c : s) {
    if (!text::is_alnum(c) && extra.find(c) == std::string_view::npos) {
      return false;
    }
  }
  return true;
}

std::string_view strip_leading_zeros(std::string_view s) {
  std::size_t i = 0;
  while (i + 1 < s.size() && s[i] == '0') ++i;
  return s.substr(i);
}

int compare_numeric(std::string_view a, std::string_view b) {
  a = strip_leading_zeros(a);
  b = strip_leading_zeros(b);
  if (a.empty()) a = "0";
  if (b.empty()) b = "0";
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  int c = a.compare(b);
  return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

std::string_view next_run(std::string_view s, std::size_t& pos) {
  const std::size_t start = pos;
  const bool digits = text::is_digit(s[pos]);
  while (pos < s.size() && text::is_digit(s[pos]) == digits) ++pos;
  return s.substr(start, pos - start);
}

// Compares two segments run by run; see the class comment for the rules.
int compare_segment(std::string_view a, std::string_view b) {
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    std::string_view ra = next_run(a, i);
    std::string_view rb = next_run(b, j);
    const bool da = text::is_digit(ra[0]);
    const bool db = text::is_digit(rb[0]);
    if (da != db) return da ? -1 : 1;
    int c = da ? compare_numeric(ra, rb) : ra.compare(rb);
    if (c != 0) return c < 0 ? -1 : 1;
  }
  if (i < a.size()) return 1;
  if (j < b.size()) return -1;
  return 0;
}

std::weak_ordering to_ordering(int c) {
  if (c < 0) return std::weak_ordering::less;
  if (c > 0) return std::weak_ordering::greater;
  return std::weak_ordering::equivalent;
}

}  // namespace

Version::Version(std::uint64_t epoch, std::vector<std::string> release,
                 std::optional<std::string> revision)
    : epoch_(epoch), release_(std::move(release)), revision_(std::move(revision)) {
  if (release_.empty()) {
    throw Error(ErrorCode::kInvalidInput, "version release must be non-empty");
  }
}

std::optional<Version> Version::try_parse(std::string_view input) {
  std::string_view s = text::trim(input);
  if (s.size() >= 2 && (s[0] == 'v' || s[0] == 'V') && text::is_digit(s[1])) {
    s.remove_prefix(1);
  }
  if (s.empty()) return std::nullopt;

  std::uint64_t epoch = 0;
  if (std::size_t colon = s.find(':'); colon != std::string_view::npos) {
    std::string_view e = s.substr(0, colon);
    if (e.empty() || !valid_chars(e, "")) return std::nullopt;
    for (char c : e) {
      if (!text::is_digit(c)) return std::nullopt;
    }
    auto [ptr, ec] = std::from_chars(e.data(), e.data() + e.size(), epoch);
    if (ec != std::errc() || ptr != e.data() + e.size()) return std::nullopt;
    s.remove_prefix(colon + 1);
  }

  std::optional<std::string> revision;
  if (std::size_t dash = s.rfind('-'); dash != std::string_view::npos) {
    std::string_view rev = s.substr(dash + 1);
    if (rev.empty() || !valid_chars(rev, ".+~_")) return std::nullopt;
    revision = std::string(rev);
    s = s.substr(0, dash);
  }

  if (s.empty() || !text::is_digit(s[0]) || !valid_chars(s, ".+~_-")) {
    return std::nullopt;
  }
  std::vector<std::string> release;
  std::size_t start = 0;
  while (true) {
    std::size_t dot = s.find('.', start);
    std::string_view seg = s.substr(start, dot == std::string_view::npos
                                               ? std::string_view::npos
                                               : dot - start);
    if (seg.empty()) return std::nullopt;
    release.emplace_back(seg);
    if (dot == std::string_view::npos) break;
    start = dot + 1;
  }
  return Version(epoch, std::move(release), std::move(revision));
}

Version Version::parse(std::string_view text) {
  auto v = try_parse(text);
  if (!v) {
    throw Error(ErrorCode::kInvalidInput,
                "not a version: '" + std::string(text) + "'");
  }
  return *std::move(v);
}

std::string Version::str() const {
  std::string out;
  if (epoch_ != 0) out += std::to_string(epoch_) + ":";
  for (std::size_t i = 0; i < release_.size(); ++i) {
    if (i) out += '.';
    out += release_[i];
  }
  if (revision_) out += "-" + *revision_;
  return out;
}

std::weak_ordering operator<=>(const Version& a, const Version& b) {
  if (a.epoch_ != b.epoch_) {
    return a.epoch_ < b.epoch_ ? std::weak_ordering::less
                               : std::weak_ordering::greater;
  }
  const std::size_t n = std::max(a.release_.size(), b.release_.size());
  for (std::size_t i = 0; i < n; ++i) {
    const std::string_view sa =
        i < a.release_.size() ? std::string_view(a.release_[i]) : std::string_view("0");
    const std::string_view sb =
        i < b.release_.size() ? std::string_view(b.release_[i]) : std::string_view("0");
    if (int c = compare_segment(sa, sb); c != 0) return to_ordering(c);
  }
  if (a.revision_.has_value() != b.revision_.has_value()) {
    return a.revision_ ? std::weak_ordering::greater : std::weak_ordering::less;
  }
  if (a.revision_) return to_ordering(compare_segment(*a.revision_, *b.revision_));
  return std::weak_ordering::equivalent;
}

std::weak_ordering compare_versions(const Version& a, const Version& b) {
  return a <=> b;
}

bool looks_like_version(std::string_view s) {
  static const std::regex kPin(
      R"(^(\d+:)?[vV]?\d+(\.[0-9A-Za-z]+)+([-+~][0-9A-Za-z.+~]+)?$)");
  s = text::trim(s);
  if (s.empty() || s.size() > 64) return false;
  return std::regex_match(s.begin(), s.end(), kPin) &&
         Version::try_parse(s).has_value();
}

}  // namespace ccdep
