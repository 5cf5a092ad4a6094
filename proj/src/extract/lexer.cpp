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

#include "lexer.hpp"

#include "text.hpp"

namespace ccdep::detail {
namespace {

constexpr std::string_view kMultiPunct[] = {"...", "==", "!=", ">=", "<=", "::", "->", "**", ".."};

bool is_open(const Token& t) {
  return t.kind == TokKind::kPunct && (t.text == "(" || t.text == "[" || t.text == "{");
}
bool is_close(const Token& t) {
  return t.kind == TokKind::kPunct && (t.text == ")" || t.text == "]" || t.text == "}");
}
char closer_for(char open) { return open == '(' ? ')' : open == '[' ? ']' : '}'; }

std::vector<std::size_t> match_all(const std::vector<Token>& tokens) {
  constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::vector<std::size_t> match(tokens.size(), npos);
  std::vector<std::size_t> stack;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (is_open(tokens[i])) {
      stack.push_back(i);
    } else if (is_close(tokens[i])) {
      // Pop through mismatched openers; they stay unmatched.
      for (std::size_t k = stack.size(); k-- > 0;) {
        if (closer_for(tokens[stack[k]].text[0]) == tokens[i].text[0]) {
          match[stack[k]] = i;
          match[i] = stack[k];
          stack.resize(k);
          break;
        }
      }
    }
  }
  return match;
}

}  // namespace

TokenStream tokenize(std::string_view src, const LexConfig& cfg) {
  TokenStream out;
  int line = 1;
  std::size_t i = 0;
  const std::size_t n = src.size();
  auto peek = [&](std::size_t k) { return i + k < n ? src[i + k] : '\0'; };

  while (i < n) {
    const char c = src[i];
    if (c == '\n') {
      ++line;
      ++i;
      continue;
    }
    if (text::is_space(c)) {
      ++i;
      continue;
    }
    if ((cfg.hash_comments && c == '#') || (cfg.c_comments && c == '/' && peek(1) == '/')) {
      while (i < n && src[i] != '\n') ++i;
      continue;
    }
    if (cfg.c_comments && c == '/' && peek(1) == '*') {
      const int start = line;
      i += 2;
      while (i < n && !(src[i] == '*' && peek(1) == '/')) {
        if (src[i] == '\n') ++line;
        ++i;
      }
      if (i >= n) {
        out.errors.push_back({start, "unterminated block comment"});
        break;
      }
      i += 2;
      continue;
    }
    if (cfg.lua_comments && c == '-' && peek(1) == '-') {
      if (peek(2) == '[' && peek(3) == '[') {
        const int start = line;
        std::size_t end = src.find("]]", i + 4);
        if (end == std::string_view::npos) {
          out.errors.push_back({start, "unterminated block comment"});
          break;
        }
        for (std::size_t k = i; k < end; ++k) line += src[k] == '\n';
        i = end + 2;
      } else {
        while (i < n && src[i] != '\n') ++i;
      }
      continue;
    }
    if (cfg.lua_long_strings && c == '[' && peek(1) == '[') {
      const int start = line;
      std::size_t end = src.find("]]", i + 2);
      if (end == std::string_view::npos) {
        out.errors.push_back({start, "unterminated long string"});
        break;
      }
      std::string value(src.substr(i + 2, end - i - 2));
      for (char ch : value) line += ch == '\n';
      out.tokens.push_back({TokKind::kString, std::move(value), start});
      i = end + 2;
      continue;
    }
    if (c == '"' || c == '\'') {
      const int start = line;
      const bool triple = cfg.triple_quotes && peek(1) == c && peek(2) == c;
      std::string value;
      i += triple ? 3 : 1;
      bool closed = false;
      while (i < n) {
        const char ch = src[i];
        if (ch == '\\' && i + 1 < n) {
          if (src[i + 1] == '\n') ++line;
          value += src[i + 1];
          i += 2;
          continue;
        }
        if (triple) {
          if (ch == c && peek(1) == c && peek(2) == c) {
            i += 3;
            closed = true;
            break;
          }
        } else if (ch == c) {
          ++i;
          closed = true;
          break;
        } else if (ch == '\n') {
          break;
        }
        if (ch == '\n') ++line;
        value += ch;
        ++i;
      }
      if (!closed) out.errors.push_back({start, "unterminated string literal"});
      out.tokens.push_back({TokKind::kString, std::move(value), start});
      continue;
    }
    if (text::is_alpha(c) || c == '_') {
      std::size_t j = i;
      while (j < n && text::is_ident_char(src[j])) ++j;
      out.tokens.push_back({TokKind::kIdent, std::string(src.substr(i, j - i)), line});
      i = j;
      continue;
    }
    if (text::is_digit(c)) {
      std::size_t j = i;
      while (j < n && (text::is_alnum(src[j]) || src[j] == '.' || src[j] == '_')) ++j;
      out.tokens.push_back({TokKind::kNumber, std::string(src.substr(i, j - i)), line});
      i = j;
      continue;
    }
    std::string_view rest = src.substr(i);
    std::size_t len = 1;
    for (std::string_view p : kMultiPunct) {
      if (rest.starts_with(p)) {
        len = p.size();
        break;
      }
    }
    out.tokens.push_back({TokKind::kPunct, std::string(rest.substr(0, len)), line});
    i += len;
  }
  return out;
}

std::size_t matching_bracket(const std::vector<Token>& tokens, std::size_t open) {
  constexpr std::size_t npos = static_cast<std::size_t>(-1);
  if (open >= tokens.size() || !is_open(tokens[open])) return npos;
  std::vector<char> stack;
  for (std::size_t i = open; i < tokens.size(); ++i) {
    if (is_open(tokens[i])) {
      stack.push_back(closer_for(tokens[i].text[0]));
    } else if (is_close(tokens[i])) {
      const char c = tokens[i].text[0];
      while (!stack.empty() && stack.back() != c) stack.pop_back();
      if (stack.empty()) return npos;
      stack.pop_back();
      if (stack.empty()) return i;
    }
  }
  return npos;
}

std::vector<Call> find_calls(const std::vector<Token>& tokens, std::vector<LexError>& errors) {
  constexpr std::size_t npos = static_cast<std::size_t>(-1);
  const auto match = match_all(tokens);
  std::vector<Call> calls;
  for (std::size_t i = 0; i + 1 < tokens.size(); ++i) {
    if (tokens[i].kind != TokKind::kIdent || !is_punct(tokens[i + 1], "(")) continue;
    Call call;
    call.name = tokens[i].text;
    for (std::size_t k = i; k >= 2 && is_punct(tokens[k - 1], ".") &&
                            tokens[k - 2].kind == TokKind::kIdent;
         k -= 2) {
      call.name = tokens[k - 2].text + "." + call.name;
    }
    call.line = tokens[i].line;
    call.open = i + 1;
    call.close = match[i + 1];
    if (call.close == npos) {
      errors.push_back({call.line, "unbalanced parentheses in call to " + call.name});
      continue;
    }
    std::size_t start = call.open + 1;
    std::size_t k = start;
    auto push_arg = [&](std::size_t b, std::size_t e) {
      if (b >= e) return;
      CallArg arg;
      if (e - b >= 2 && tokens[b].kind == TokKind::kIdent &&
          (is_punct(tokens[b + 1], "=") || is_punct(tokens[b + 1], ":"))) {
        arg.key = tokens[b].text;
        b += 2;
      }
      arg.begin = b;
      arg.end = e;
      call.args.push_back(std::move(arg));
    };
    while (k < call.close) {
      if (is_open(tokens[k]) && match[k] != npos && match[k] < call.close) {
        k = match[k] + 1;
        continue;
      }
      if (is_punct(tokens[k], ",")) {
        push_arg(start, k);
        start = k + 1;
      }
      ++k;
    }
    push_arg(start, call.close);
    calls.push_back(std::move(call));
  }
  return calls;
}

const Token* single_string(const std::vector<Token>& tokens, const CallArg& arg) {
  if (arg.end != arg.begin + 1) return nullptr;
  const Token& t = tokens[arg.begin];
  return t.kind == TokKind::kString ? &t : nullptr;
}

std::vector<const Token*> strings_in(const std::vector<Token>& tokens, std::size_t begin,
                                     std::size_t end) {
  std::vector<const Token*> out;
  for (std::size_t i = begin; i < end && i < tokens.size(); ++i) {
    if (tokens[i].kind != TokKind::kString) continue;
    if (i + 1 < end && is_punct(tokens[i + 1], ":")) continue;
    out.push_back(&tokens[i]);
  }
  return out;
}

const CallArg* find_kwarg(const Call& call, std::string_view key) {
  for (const auto& a : call.args) {
    if (a.key == key) return &a;
  }
  return nullptr;
}

}  // namespace ccdep::detail
