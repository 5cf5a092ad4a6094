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

#include "ccdep/clone.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <fstream>
#include <unordered_map>

#include "ccdep/error.hpp"
#include "ccdep/names.hpp"
#include "text.hpp"
#include "util/parallel.hpp"
#include "util/walk.hpp"

namespace ccdep {
namespace {

constexpr std::string_view kHeader = "ccdep-sigdb 1";

// Length of the literal or comment starting at s[i], or 0. Sets `kind` to
// the placeholder to emit ("" or '') or empty for comments.
std::size_t skip_token(std::string_view s, std::size_t i, std::string_view& kind) {
  const char c = s[i];
  const char d = i + 1 < s.size() ? s[i + 1] : '\0';
  if (c == '/' && d == '/') {
    std::size_t j = i;
    while (j < s.size() && s[j] != '\n') ++j;
    kind = {};
    return j - i;
  }
  if (c == '/' && d == '*') {
    std::size_t end = s.find("*/", i + 2);
    kind = {};
    return end == std::string_view::npos ? s.size() - i : end + 2 - i;
  }
  if (c == 'R' && d == '"' && (i == 0 || !text::is_ident_char(s[i - 1]))) {
    const std::size_t paren = s.find('(', i + 2);
    if (paren != std::string_view::npos && paren - i - 2 <= 16) {
      std::string close = ")" + std::string(s.substr(i + 2, paren - i - 2)) + "\"";
      std::size_t end = s.find(close, paren);
      kind = "\"\"";
      return end == std::string_view::npos ? s.size() - i : end + close.size() - i;
    }
  }
  if (c == '"' || c == '\'') {
    // A quote after an alnum is a digit separator (1'000), not a literal.
    if (c == '\'' && i > 0 && text::is_alnum(s[i - 1])) return 0;
    std::size_t j = i + 1;
    while (j < s.size() && s[j] != c && s[j] != '\n') j += s[j] == '\\' ? 2 : 1;
    kind = c == '"' ? "\"\"" : "''";
    return std::min(j + 1, s.size()) - i;
  }
  return 0;
}

// Same length as `s`; comments, literals and preprocessor lines blanked.
std::string mask(std::string_view s) {
  std::string out(s);
  bool line_start = true;
  for (std::size_t i = 0; i < s.size();) {
    if (line_start && s[i] == '#') {
      while (i < s.size() && (s[i] != '\n' || (i > 0 && s[i - 1] == '\\'))) out[i++] = ' ';
      continue;
    }
    if (s[i] == '\n') {
      line_start = true;
      ++i;
      continue;
    }
    if (!text::is_space(s[i])) line_start = false;
    std::string_view kind;
    if (std::size_t len = skip_token(s, i, kind)) {
      for (std::size_t k = i; k < i + len; ++k) {
        if (out[k] != '\n') out[k] = ' ';
      }
      i += len;
      continue;
    }
    ++i;
  }
  return out;
}

bool is_control_word(std::string_view w) {
  static constexpr std::string_view kWords[] = {
      "if", "for", "while", "switch", "catch", "return", "sizeof", "alignof", "decltype",
      "static_assert", "__attribute__", "else", "do", "new", "delete", "throw", "typeid",
      "noexcept", "alignas", "defined"};
  return std::find(std::begin(kWords), std::end(kWords), w) != std::end(kWords);
}

bool is_qualifier(std::string_view w) {
  return w == "const" || w == "noexcept" || w == "override" || w == "final" || w == "mutable" ||
         w == "volatile";
}

std::string to_hex(const unsigned char* data, unsigned len) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(len * 2);
  for (unsigned i = 0; i < len; ++i) {
    out += kDigits[data[i] >> 4];
    out += kDigits[data[i] & 0xF];
  }
  return out;
}

bool is_digest(std::string_view s) {
  if (s.size() != 64) return false;
  return std::all_of(s.begin(), s.end(),
                     [](char c) { return text::is_digit(c) || (c >= 'a' && c <= 'f'); });
}

std::vector<std::string> file_signatures(std::string_view content,
                                         std::vector<int>* lines = nullptr) {
  std::vector<std::string> out;
  if (!text::is_text(content)) return out;
  for (const auto& f : extract_functions(text::strip_bom(content))) {
    if (f.normalized.size() < kMinFunctionBytes) continue;
    out.push_back(function_signature(f.normalized));
    if (lines) lines->push_back(f.line);
  }
  return out;
}

}  // namespace

std::string normalize_function(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  bool gap = false;
  auto emit = [&](std::string_view piece) {
    if (gap && !out.empty() && text::is_ident_char(out.back()) &&
        text::is_ident_char(piece.front())) {
      out += ' ';
    }
    gap = false;
    out += piece;
  };
  for (std::size_t i = 0; i < s.size();) {
    if (text::is_space(s[i])) {
      gap = true;
      ++i;
      continue;
    }
    std::string_view kind;
    if (std::size_t len = skip_token(s, i, kind)) {
      if (kind.empty()) {
        gap = true;
      } else {
        emit(kind);
      }
      i += len;
      continue;
    }
    emit(s.substr(i, 1));
    ++i;
  }
  return out;
}

std::string function_signature(std::string_view normalized) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned len = 0;
  if (EVP_Digest(normalized.data(), normalized.size(), md, &len, EVP_sha256(), nullptr) != 1) {
    throw Error(ErrorCode::kIo, "SHA-256 digest failed");
  }
  return to_hex(md, len);
}

std::vector<FunctionSpan> extract_functions(std::string_view src) {
  const std::string m = mask(src);
  const text::LineIndex index(src);
  std::vector<FunctionSpan> out;
  const std::size_t n = m.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i] != '{') continue;
    // Walk back over "name(...) qualifiers".
    std::size_t j = i;
    auto skip_ws = [&] {
      while (j > 0 && text::is_space(m[j - 1])) --j;
    };
    skip_ws();
    for (int q = 0; q < 4 && j > 0 && text::is_ident_char(m[j - 1]); ++q) {
      std::size_t w = j;
      while (w > 0 && text::is_ident_char(m[w - 1])) --w;
      if (!is_qualifier(std::string_view(m).substr(w, j - w))) break;
      j = w;
      skip_ws();
    }
    // "name(...)", walking past a constructor's member-initializer list.
    std::string_view name;
    bool found = false;
    for (int hops = 0; hops < 64; ++hops) {
      if (j == 0 || m[j - 1] != ')') break;
      int depth = 0;
      std::size_t open = j - 1;
      for (;; --open) {
        if (m[open] == ')') ++depth;
        if (m[open] == '(' && --depth == 0) break;
        if (open == 0) break;
      }
      if (depth != 0) break;
      j = open;
      skip_ws();
      std::size_t name_end = j;
      while (j > 0 && (text::is_ident_char(m[j - 1]) || m[j - 1] == ':' || m[j - 1] == '~')) --j;
      while (j < name_end && m[j] == ':') ++j;
      name = std::string_view(m).substr(j, name_end - j);
      std::size_t k = j;
      while (k > 0 && text::is_space(m[k - 1])) --k;
      const bool member_init = !name.empty() && k > 0 &&
                               (m[k - 1] == ',' || (m[k - 1] == ':' && (k < 2 || m[k - 2] != ':')));
      if (!member_init) {
        found = true;
        break;
      }
      j = k - 1;
      skip_ws();
    }
    if (!found) continue;
    if (name.empty() || text::is_digit(name.front())) continue;
    std::string_view last = name.substr(name.rfind(':') == std::string_view::npos ? 0 : name.rfind(':') + 1);
    if (is_control_word(last)) continue;
    std::size_t close = i;
    for (int d = 0; close < n; ++close) {
      if (m[close] == '{') ++d;
      if (m[close] == '}' && --d == 0) break;
    }
    if (close >= n) break;  // unbalanced to end of file
    out.push_back({std::string(name), index.line_of(j),
                   normalize_function(src.substr(j, close + 1 - j))});
    i = close;
  }
  return out;
}

bool is_clone_source_file(std::string_view path) {
  for (std::string_view ext : {".c", ".cc", ".cpp", ".h", ".hpp"}) {
    if (text::ends_with_icase(path, ext)) return true;
  }
  return false;
}

void SignatureDB::add(std::string name, std::set<std::string> signatures) {
  if (signatures.empty()) throw Error(ErrorCode::kInvalidInput, "empty signature set for " + name);
  for (const auto& s : signatures) {
    if (!is_digest(s)) throw Error(ErrorCode::kInvalidInput, "malformed digest '" + s + "'");
  }
  name = normalize_name(name, NameStyle::kPlain);
  auto& entry = libraries_[name];
  entry.signatures.merge(signatures);
}

std::string SignatureDB::serialize() const {
  std::string out(kHeader);
  out += '\n';
  for (const auto& [name, entry] : libraries_) {
    out += "library " + name + " " + std::to_string(entry.total()) + "\n";
    for (const auto& s : entry.signatures) out += s + "\n";
    out += "end\n";
  }
  return out;
}

SignatureDB SignatureDB::parse(std::string_view textdb) {
  const auto lines = text::lines(textdb);
  auto fail = [](int line, const std::string& msg) {
    return Error(ErrorCode::kParse, "signature db line " + std::to_string(line) + ": " + msg);
  };
  if (lines.empty() || lines[0].text != kHeader) throw fail(1, "missing 'ccdep-sigdb 1' header");
  SignatureDB db;
  std::size_t i = 1;
  while (i < lines.size()) {
    const auto& head = lines[i];
    auto parts = text::split_any(head.text, " ");
    if (parts.size() != 3 || parts[0] != "library") throw fail(head.number, "expected 'library <name> <total>'");
    std::size_t total = 0;
    try {
      std::size_t used = 0;
      total = std::stoul(std::string(parts[2]), &used);
      if (used != parts[2].size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw fail(head.number, "bad total");
    }
    const std::string name(parts[1]);
    if (db.libraries_.count(name)) throw fail(head.number, "duplicate library " + name);
    Entry entry;
    std::string prev;
    ++i;
    for (; i < lines.size() && lines[i].text != "end"; ++i) {
      const std::string_view d = lines[i].text;
      if (!is_digest(d)) throw fail(lines[i].number, "malformed digest");
      if (!prev.empty() && d <= prev) throw fail(lines[i].number, "digests not strictly ascending");
      prev = std::string(d);
      entry.signatures.insert(prev);
    }
    if (i >= lines.size()) throw fail(head.number, "library block without 'end'");
    if (entry.total() != total || total == 0) throw fail(head.number, "digest count does not match total");
    db.libraries_.emplace(name, std::move(entry));
    ++i;
  }
  return db;
}

SignatureDB SignatureDB::load(const std::filesystem::path& path) {
  auto content = detail::slurp(path);
  if (!content) throw Error(ErrorCode::kIo, "cannot read " + path.string());
  return parse(*content);
}

void SignatureDB::save(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << serialize();
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path.string());
}

SignatureBuild build_signature_db(const std::vector<LibrarySource>& sources, unsigned jobs) {
  SignatureBuild out;
  for (const auto& src : sources) {
    auto walk = detail::walk_tree(src.root, {".git"}, false);
    std::vector<std::vector<std::string>> per_file(walk.files.size());
    detail::parallel_for(walk.files.size(), jobs, [&](std::size_t k) {
      if (!is_clone_source_file(walk.files[k].relative)) return;
      if (auto content = detail::slurp(walk.files[k].absolute)) per_file[k] = file_signatures(*content);
    });
    std::set<std::string> sigs;
    for (auto& v : per_file) sigs.insert(v.begin(), v.end());
    if (sigs.empty()) {
      out.warnings.push_back({src.root.string(), 0, "no extractable functions for " + src.name + "; skipped"});
      continue;
    }
    out.db.add(src.name, std::move(sigs));
  }
  return out;
}

std::vector<CloneMatch> detect_clones(const std::filesystem::path& root, const SignatureDB& db,
                                      const CloneOptions& opt) {
  if (db.empty()) throw Error(ErrorCode::kInvalidInput, "signature db is empty");
  std::unordered_map<std::string, std::vector<const std::string*>> owners;
  for (const auto& [name, entry] : db.libraries()) {
    for (const auto& s : entry.signatures) owners[s].push_back(&name);
  }
  auto walk = detail::walk_tree(root, opt.ignore_dirs, opt.follow_symlinks);
  struct FileSigs {
    std::vector<std::string> sigs;
    std::vector<int> lines;
  };
  std::vector<FileSigs> per_file(walk.files.size());
  detail::parallel_for(walk.files.size(), opt.jobs, [&](std::size_t k) {
    const auto& f = walk.files[k];
    if (!is_clone_source_file(f.relative) || f.size > opt.max_file_bytes) return;
    if (auto content = detail::slurp(f.absolute)) {
      per_file[k].sigs = file_signatures(*content, &per_file[k].lines);
    }
  });
  struct Acc {
    std::set<std::string> matched;
    std::optional<Evidence> first;
  };
  std::map<std::string, Acc> acc;
  for (std::size_t k = 0; k < per_file.size(); ++k) {
    for (std::size_t s = 0; s < per_file[k].sigs.size(); ++s) {
      auto it = owners.find(per_file[k].sigs[s]);
      if (it == owners.end()) continue;
      for (const std::string* lib : it->second) {
        Acc& a = acc[*lib];
        a.matched.insert(it->first);
        if (!a.first) a.first = Evidence{walk.files[k].relative, per_file[k].lines[s]};
      }
    }
  }
  std::vector<CloneMatch> out;
  constexpr double kEpsilon = 1e-9;
  for (auto& [name, a] : acc) {
    const std::size_t total = db.libraries().at(name).total();
    const double ratio = static_cast<double>(a.matched.size()) / static_cast<double>(total);
    if (ratio + kEpsilon < opt.threshold) continue;
    out.push_back({name, a.matched.size(), total, ratio, *a.first});
  }
  return out;
}

std::vector<DependencyRecord> clone_records(const std::vector<CloneMatch>& matches) {
  std::vector<DependencyRecord> out;
  for (const auto& m : matches) {
    DependencyRecord r;
    r.library = m.library;
    r.raw_name = m.library;
    r.tool = ToolKind::kCloneSig;
    r.phase = Phase::kClone;
    r.evidence = m.first;
    r.system = is_system_library(r.library);
    out.push_back(std::move(r));
  }
  canonicalize_records(out);
  return out;
}

}  // namespace ccdep
