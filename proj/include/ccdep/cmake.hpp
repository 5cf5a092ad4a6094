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

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace ccdep {

/// Variables collected from set()/list(APPEND) while mining one CMake file.
/// Never shared between files.
struct CMakeEvalContext {
  std::map<std::string, std::string, std::less<>> variables;
  int max_substitution_depth = 8;

  /// Expands ${NAME} references, innermost first, for at most
  /// max_substitution_depth passes. Unknown names stay literal.
  std::string substitute(std::string_view text) const;
};

struct CMakeArgument {
  std::string value;
  bool quoted = false;   // "..."
  bool bracket = false;  // [[...]], never substituted
};

struct CMakeCommand {
  std::string name;  // lowercase
  int line = 0;
  std::vector<CMakeArgument> args;
};

struct CMakeSyntaxError {
  int line;
  std::string message;
};

struct CMakeParse {
  std::vector<CMakeCommand> commands;
  std::vector<CMakeSyntaxError> errors;
};

/// Lexes CMake source into command invocations. An invocation whose
/// parentheses never balance is reported and lexing resumes at the next
/// line.
CMakeParse parse_cmake(std::string_view source);

/// A command with its arguments expanded: variables substituted and
/// unquoted arguments split on ';'.
struct ExpandedCommand {
  std::string name;
  int line = 0;
  std::vector<std::string> args;
};

/// Runs the commands in order, updating `context` from set(), list(APPEND)
/// and project(), and returns every command expanded against the context
/// as it stood at that point. Conditionals are not evaluated: both
/// branches of if()/else() are visited.
std::vector<ExpandedCommand> evaluate_cmake(const std::vector<CMakeCommand>& commands,
                                            CMakeEvalContext& context);

}  // namespace ccdep
