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

// A forgiving tokenizer and call finder for the script-like manifest
// languages (Python, Starlark, Meson, Lua, JSON5). Internal header.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace ccdep::detail {

enum class TokKind { kIdent, kString, kNumber, kPunct };

struct Token {
  TokKind kind;
  std::string text;  // string tokens hold the unquoted value
  int line;
};

struct LexConfig {
  bool hash_comments = false;      // '#' to end of line
  bool lua_comments = false;       // "--" and "--[[ ... ]]"
  bool c_comments = false;         // "//" and "/* */"
  bool triple_quotes = false;      // Python ''' and """
  bool lua_long_strings = false;   // [[ ... ]]
};

struct LexError {
  int line;
  std::string message;
};

struct TokenStream {
  std::vector<Token> tokens;
  std::vector<LexError> errors;
};

TokenStream tokenize(std::string_view src, const LexConfig& config);

struct CallArg {
  std::string key;            // empty for positional arguments
  std::size_t begin = 0;      // value token range [begin, end)
  std::size_t end = 0;
};

struct Call {
  std::string name;  // dotted callee, e.g. "self.requires"
  int line = 0;
  std::size_t open = 0;   // index of '('
  std::size_t close = 0;  // index of matching ')'
  std::vector<CallArg> args;
};

/// Every `callee(...)` in the stream, outer calls before the calls nested
/// in their arguments. Calls whose parenthesis never closes are reported
/// in `errors` and skipped. Keyword arguments are `key = value` or
/// `key : value`.
std::vector<Call> find_calls(const std::vector<Token>& tokens,
                             std::vector<LexError>& errors);

/// Index of the bracket matching tokens[open], or npos.
std::size_t matching_bracket(const std::vector<Token>& tokens, std::size_t open);

/// The value of an argument consisting of exactly one string token, or
/// nullptr.
const Token* single_string(const std::vector<Token>& tokens, const CallArg& arg);

/// String tokens in [begin, end), skipping dictionary keys (a string
/// directly followed by ':').
std::vector<const Token*> strings_in(const std::vector<Token>& tokens, std::size_t begin,
                                     std::size_t end);

const CallArg* find_kwarg(const Call& call, std::string_view key);

inline bool is_punct(const Token& t, std::string_view p) {
  return t.kind == TokKind::kPunct && t.text == p;
}

}  // namespace ccdep::detail
