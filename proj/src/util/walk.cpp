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

#include "util/walk.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "ccdep/error.hpp"

namespace ccdep::detail {
namespace fs = std::filesystem;

namespace {

class Walker {
 public:
  Walker(const std::set<std::string>& ignore, bool follow) : ignore_(ignore), follow_(follow) {}

  void visit(const fs::path& dir, const std::string& rel, WalkResult& out) {
    std::error_code ec;
    if (follow_) {
      fs::path canon = fs::canonical(dir, ec);
      if (!ec && !seen_.insert(canon.string()).second) return;  // cycle
    }
    fs::directory_iterator it(dir, fs::directory_options::skip_permission_denied, ec);
    if (ec) {
      out.warnings.push_back({rel, 0, "cannot read directory: " + ec.message()});
      return;
    }
    std::vector<fs::directory_entry> entries;
    for (fs::directory_iterator end; it != end; it.increment(ec)) {
      if (ec) {
        out.warnings.push_back({rel, 0, "error while listing directory: " + ec.message()});
        break;
      }
      entries.push_back(*it);
    }
    std::sort(entries.begin(), entries.end(),
              [](const auto& a, const auto& b) { return a.path().filename() < b.path().filename(); });
    for (const auto& e : entries) {
      const std::string name = e.path().filename().string();
      const std::string child = rel.empty() ? name : rel + "/" + name;
      std::error_code sec;
      const bool link = e.is_symlink(sec);
      if (link && !follow_) continue;
      const auto status = follow_ ? e.status(sec) : e.symlink_status(sec);
      if (sec) {
        out.warnings.push_back({child, 0, "cannot stat: " + sec.message()});
        continue;
      }
      if (fs::is_directory(status)) {
        if (ignore_.count(name)) continue;
        visit(e.path(), child, out);
      } else if (fs::is_regular_file(status)) {
        std::error_code zec;
        const auto size = fs::file_size(e.path(), zec);
        out.files.push_back({child, e.path(), zec ? 0 : size});
      }
    }
  }

 private:
  const std::set<std::string>& ignore_;
  bool follow_;
  std::set<std::string> seen_;
};

}  // namespace

WalkResult walk_tree(const fs::path& root, const std::set<std::string>& ignore_dirs,
                     bool follow_symlinks) {
  std::error_code ec;
  if (!fs::is_directory(root, ec)) {
    throw Error(ErrorCode::kIo, "not a directory: " + root.string());
  }
  fs::directory_iterator probe(root, ec);
  if (ec) throw Error(ErrorCode::kIo, "cannot read " + root.string() + ": " + ec.message());
  WalkResult out;
  Walker(ignore_dirs, follow_symlinks).visit(root, "", out);
  // Children are visited in name order, but "a/b" vs "a.b" ordering needs
  // a final sort on the full relative path.
  std::sort(out.files.begin(), out.files.end(),
            [](const auto& a, const auto& b) { return a.relative < b.relative; });
  return out;
}

std::optional<std::string> slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) return std::nullopt;
  return std::move(ss).str();
}

}  // namespace ccdep::detail
