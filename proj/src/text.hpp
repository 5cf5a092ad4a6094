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

// Small string helpers shared by the extractors. Internal header.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace ccdep::text {

inline bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}
inline bool is_digit(char c) { return c >= '0' && c <= '9'; }
inline bool is_alpha(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}
inline bool is_alnum(char c) { return is_digit(c) || is_alpha(c); }
inline bool is_ident_char(char c) { return is_alnum(c) || c == '_'; }
inline char to_lower(char c) {
  return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
}

std::string_view trim(std::string_view s);
std::string lower(std::string_view s);
bool iequals(std::string_view a, std::string_view b);
bool starts_with_icase(std::string_view s, std::string_view prefix);
bool ends_with_icase(std::string_view s, std::string_view suffix);

/// Splits on any of `seps`, dropping empty pieces.
std::vector<std::string_view> split_any(std::string_view s,
                                        std::string_view seps);

/// Last component of a path or URL, ignoring trailing slashes.
std::string_view last_path_segment(std::string_view s);

/// Returns false for content that is not UTF-8 text or contains NUL bytes.
bool is_text(std::string_view bytes);

/// Strips a UTF-8 byte-order mark.
std::string_view strip_bom(std::string_view s);

/// Maps byte offsets to 1-based line numbers.
class LineIndex {
 public:
  explicit LineIndex(std::string_view s);
  int line_of(std::size_t offset) const;

 private:
  std::vector<std::size_t> starts_;
};

struct Line {
  std::string_view text;
  int number;
};

/// Splits into lines, dropping the terminator ("\n" or "\r\n").
std::vector<Line> lines(std::string_view s);

}  // namespace ccdep::text
