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

#include "ccdep/cmake.hpp"

#include "text.hpp"

namespace ccdep {
namespace {

constexpr std::size_t kMaxExpansion = 1 << 20;

bool is_var_char(char c) {
  return text::is_alnum(c) || c == '_' || c == '/' || c == '.' || c == '+' || c == '-';
}

// Length of "[==[" at s[i] (the number of '=' plus two), or 0.
std::size_t bracket_open(std::string_view s, std::size_t i, std::size_t& level) {
  if (i >= s.size() || s[i] != '[') return 0;
  std::size_t j = i + 1;
  while (j < s.size() && s[j] == '=') ++j;
  if (j >= s.size() || s[j] != '[') return 0;
  level = j - i - 1;
  return j - i + 1;
}

std::string bracket_close(std::size_t level) {
  return "]" + std::string(level, '=') + "]";
}

class Lexer {
 public:
  explicit Lexer(std::string_view s) : s_(s) {}

  CMakeParse run() {
    while (i_ < s_.size()) {
      const char c = s_[i_];
      if (c == '\n') {
        ++line_;
        ++i_;
      } else if (text::is_space(c)) {
        ++i_;
      } else if (c == '#') {
        skip_comment();
      } else if (text::is_alpha(c) || c == '_') {
        command();
      } else {
        ++i_;
      }
    }
    return std::move(out_);
  }

 private:
  void advance_to(std::size_t j) {
    for (; i_ < j && i_ < s_.size(); ++i_) line_ += s_[i_] == '\n';
  }

  void skip_comment() {
    std::size_t level = 0;
    if (std::size_t len = bracket_open(s_, i_ + 1, level)) {
      const std::size_t end = s_.find(bracket_close(level), i_ + 1 + len);
      advance_to(end == std::string_view::npos ? s_.size() : end + level + 2);
      return;
    }
    while (i_ < s_.size() && s_[i_] != '\n') ++i_;
  }

  void command() {
    const std::size_t name_start = i_;
    while (i_ < s_.size() && text::is_ident_char(s_[i_])) ++i_;
    CMakeCommand cmd;
    cmd.name = text::lower(s_.substr(name_start, i_ - name_start));
    cmd.line = line_;
    while (i_ < s_.size() && (s_[i_] == ' ' || s_[i_] == '\t')) ++i_;
    if (i_ >= s_.size() || s_[i_] != '(') return;  // not an invocation
    const int resume_line = line_;
    ++i_;
    int depth = 1;
    while (i_ < s_.size()) {
      const char c = s_[i_];
      if (c == '\n') {
        ++line_;
        ++i_;
      } else if (text::is_space(c)) {
        ++i_;
      } else if (c == '(') {
        ++depth;
        ++i_;
      } else if (c == ')') {
        ++i_;
        if (--depth == 0) {
          out_.commands.push_back(std::move(cmd));
          return;
        }
      } else if (c == '#') {
        skip_comment();
      } else if (c == '"') {
        if (!quoted(cmd)) break;
      } else if (std::size_t level = 0, len = bracket_open(s_, i_, level); len) {
        const std::size_t end = s_.find(bracket_close(level), i_ + len);
        if (end == std::string_view::npos) break;
        std::string_view body = s_.substr(i_ + len, end - i_ - len);
        if (body.starts_with('\n')) body.remove_prefix(1);
        cmd.args.push_back({std::string(body), false, true});
        advance_to(end + level + 2);
      } else {
        unquoted(cmd);
      }
    }
    out_.errors.push_back({cmd.line, "unbalanced parentheses in " + cmd.name + "()"});
    // Resynchronize at the line after the command name.
    std::size_t pos = name_start;
    const std::size_t nl = s_.find('\n', pos);
    i_ = nl == std::string_view::npos ? s_.size() : nl + 1;
    line_ = resume_line + 1;
  }

  bool quoted(CMakeCommand& cmd) {
    std::string value;
    ++i_;
    while (i_ < s_.size()) {
      const char c = s_[i_];
      if (c == '\\' && i_ + 1 < s_.size()) {
        const char e = s_[i_ + 1];
        if (e == '\n') {
          ++line_;
        } else if (e == 'n') {
          value += '\n';
        } else if (e == 't') {
          value += '\t';
        } else if (e == ';') {
          value += "\\;";
        } else {
          value += e;
        }
        i_ += 2;
        continue;
      }
      if (c == '"') {
        ++i_;
        cmd.args.push_back({std::move(value), true, false});
        return true;
      }
      if (c == '\n') ++line_;
      value += c;
      ++i_;
    }
    return false;
  }

  void unquoted(CMakeCommand& cmd) {
    std::string value;
    while (i_ < s_.size()) {
      const char c = s_[i_];
      if (text::is_space(c) || c == '(' || c == ')' || c == '#' || c == '"') break;
      if (c == '\\' && i_ + 1 < s_.size()) {
        const char e = s_[i_ + 1];
        if (e == ';') {
          value += "\\;";
        } else if (e != '\n') {
          value += e;
        }
        i_ += 2;
        continue;
      }
      value += c;
      ++i_;
    }
    if (!value.empty()) cmd.args.push_back({std::move(value), false, false});
  }

  std::string_view s_;
  std::size_t i_ = 0;
  int line_ = 1;
  CMakeParse out_;
};

std::vector<std::string> split_list(std::string_view s) {
  std::vector<std::string> out;
  std::string cur;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '\\' && i + 1 < s.size() && s[i + 1] == ';') {
      cur += ';';
      ++i;
    } else if (s[i] == ';') {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += s[i];
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

std::string unescape_semicolons(std::string s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '\\' && i + 1 < s.size() && s[i + 1] == ';') continue;
    out += s[i];
  }
  return out;
}

std::string join(const std::vector<std::string>& v, std::size_t from, std::size_t to) {
  std::string out;
  for (std::size_t i = from; i < to && i < v.size(); ++i) {
    if (!out.empty()) out += ';';
    out += v[i];
  }
  return out;
}

}  // namespace

std::string CMakeEvalContext::substitute(std::string_view input) const {
  std::string cur(input);
  for (int pass = 0; pass < max_substitution_depth; ++pass) {
    std::string next;
    bool changed = false;
    std::size_t i = 0;
    while (i < cur.size()) {
      if (cur[i] == '$' && i + 1 < cur.size() && cur[i + 1] == '{') {
        std::size_t j = i + 2;
        while (j < cur.size() && is_var_char(cur[j])) ++j;
        if (j < cur.size() && cur[j] == '}') {
          auto it = variables.find(std::string_view(cur).substr(i + 2, j - i - 2));
          if (it != variables.end()) {
            next += it->second;
            changed = true;
          } else {
            next.append(cur, i, j + 1 - i);
          }
          i = j + 1;
          continue;
        }
      }
      next += cur[i++];
    }
    cur = std::move(next);
    if (!changed || cur.size() > kMaxExpansion) break;
  }
  return cur;
}

CMakeParse parse_cmake(std::string_view source) { return Lexer(source).run(); }

std::vector<ExpandedCommand> evaluate_cmake(const std::vector<CMakeCommand>& commands,
                                            CMakeEvalContext& ctx) {
  std::vector<ExpandedCommand> out;
  out.reserve(commands.size());
  for (const auto& cmd : commands) {
    ExpandedCommand e;
    e.name = cmd.name;
    e.line = cmd.line;
    for (const auto& a : cmd.args) {
      if (a.bracket) {
        e.args.push_back(a.value);
      } else if (a.quoted) {
        e.args.push_back(unescape_semicolons(ctx.substitute(a.value)));
      } else {
        for (auto& piece : split_list(ctx.substitute(a.value))) e.args.push_back(std::move(piece));
      }
    }
    const auto& args = e.args;
    if (e.name == "set" && !args.empty()) {
      std::size_t end = args.size();
      for (std::size_t k = 1; k < args.size(); ++k) {
        if (args[k] == "CACHE") {
          end = k;
          break;
        }
      }
      if (end > 1 && args[end - 1] == "PARENT_SCOPE") --end;
      if (end <= 1) {
        ctx.variables.erase(args[0]);
      } else {
        ctx.variables[args[0]] = join(args, 1, end);
      }
    } else if (e.name == "list" && args.size() >= 2 && args[0] == "APPEND") {
      std::string& v = ctx.variables[args[1]];
      for (std::size_t k = 2; k < args.size(); ++k) {
        if (!v.empty()) v += ';';
        v += args[k];
      }
    } else if (e.name == "project" && !args.empty()) {
      ctx.variables["PROJECT_NAME"] = args[0];
      ctx.variables.try_emplace("CMAKE_PROJECT_NAME", args[0]);
      for (std::size_t k = 1; k + 1 < args.size(); ++k) {
        if (args[k] == "VERSION") {
          ctx.variables["PROJECT_VERSION"] = args[k + 1];
          ctx.variables[args[0] + "_VERSION"] = args[k + 1];
        }
      }
    }
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace ccdep
