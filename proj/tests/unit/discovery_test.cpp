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

#include "ccdep/discovery.hpp"

#include <algorithm>
#include <filesystem>

#include <gtest/gtest.h>

#include "ccdep/error.hpp"
#include "ccdep/report_io.hpp"
#include "support/synth.hpp"

namespace ccdep {
namespace {

namespace fs = std::filesystem;
using testing::TempDir;
using testing::write_tree;

bool has(const std::vector<ToolKind>& v, ToolKind t) {
  return std::find(v.begin(), v.end(), t) != v.end();
}

TEST(DiscoveryTest, SupportedToolCounts) {
  const auto tools = list_supported_tools();
  EXPECT_EQ(tools.size(), 21u);
  for (const auto& b : tools) {
    EXPECT_NE(b.extractor, nullptr) << to_string(b.tool);
    EXPECT_EQ(b.phase, phase_of(b.tool));
    EXPECT_FALSE(b.patterns.empty());
  }
  const auto with_clone = list_supported_tools(true);
  EXPECT_EQ(with_clone.size(), 22u);
  EXPECT_EQ(with_clone.back().tool, ToolKind::kCloneSig);
  EXPECT_EQ(with_clone.back().phase, Phase::kClone);
}

TEST(DiscoveryTest, PatternTableMatchesFileNames) {
  EXPECT_EQ(tools_for_file("debian/control"), std::vector<ToolKind>{ToolKind::kDeb});
  EXPECT_EQ(tools_for_file("conanfile.py"), std::vector<ToolKind>{ToolKind::kConan});
  EXPECT_EQ(tools_for_file("a/conaninfo.txt"), std::vector<ToolKind>{ToolKind::kConan});
  EXPECT_EQ(tools_for_file("x/package.json"), std::vector<ToolKind>{ToolKind::kClib});
  EXPECT_EQ(tools_for_file("package.json5"), std::vector<ToolKind>{ToolKind::kDds});
  EXPECT_EQ(tools_for_file("libfoo.pc"), std::vector<ToolKind>{ToolKind::kPkgConfig});
  EXPECT_EQ(tools_for_file("cmake/FindFoo.cmake"), std::vector<ToolKind>{ToolKind::kCMake});
  EXPECT_EQ(tools_for_file("configure.ac"), std::vector<ToolKind>{ToolKind::kAutoconf});
  EXPECT_EQ(tools_for_file("configure"), std::vector<ToolKind>{ToolKind::kAutoconf});
  EXPECT_EQ(tools_for_file("app.vcxproj"), std::vector<ToolKind>{ToolKind::kMSBuild});
  EXPECT_EQ(tools_for_file("x.props"), std::vector<ToolKind>{ToolKind::kMSBuild});
  EXPECT_EQ(tools_for_file("BUCK"), std::vector<ToolKind>{ToolKind::kBuck});
  EXPECT_EQ(tools_for_file("meson.build"), std::vector<ToolKind>{ToolKind::kMeson});

  const auto cml = tools_for_file("src/CMakeLists.txt");
  EXPECT_EQ(cml.size(), 3u);
  EXPECT_TRUE(has(cml, ToolKind::kCMake) && has(cml, ToolKind::kCPM) && has(cml, ToolKind::kHunter));
  const auto manifest = tools_for_file("manifest");
  EXPECT_TRUE(has(manifest, ToolKind::kCppget) && has(manifest, ToolKind::kBuild2));
  const auto lua = tools_for_file("xmake.lua");
  EXPECT_TRUE(has(lua, ToolKind::kXrepo) && has(lua, ToolKind::kXmake));

  for (const char* n : {"Makefile", "makefile", "BUILD", "BUILD.bazel", "WORKSPACE",
                        "bazel.build"}) {
    EXPECT_FALSE(tools_for_file(n).empty()) << n;
  }
  for (const char* n : {"README.md", "main.cpp", "Makefile.am", "cmakelists.txt", "vcpkg.json.bak"}) {
    EXPECT_TRUE(tools_for_file(n).empty()) << n;
  }
}

TEST(DiscoveryTest, VcpkgOnlyRepo) {
  TempDir dir("disc");
  write_tree(dir.path(), {{"vcpkg.json", R"({"dependencies":["fmt"]})"}});
  ScanConfig cfg;
  cfg.root = dir.path();
  const auto rep = scan_repository(cfg);
  ASSERT_EQ(rep.records.size(), 1u);
  EXPECT_EQ(rep.records[0].library, "fmt");
  EXPECT_EQ(rep.records[0].tool, ToolKind::kVcpkg);
  EXPECT_EQ(rep.records[0].phase, Phase::kInstall);
  EXPECT_EQ(rep.file_count, 1u);
  EXPECT_EQ(rep.repo_id, dir.path().filename().string());
}

TEST(DiscoveryTest, EmptyDirectory) {
  TempDir dir("disc");
  ScanConfig cfg;
  cfg.root = dir.path();
  const auto rep = scan_repository(cfg);
  EXPECT_TRUE(rep.records.empty());
  EXPECT_EQ(rep.file_count, 0u);
  EXPECT_TRUE(rep.tools_seen.empty());
}

TEST(DiscoveryTest, OneFileSeveralTools) {
  TempDir dir("disc");
  write_tree(dir.path(), {{"CMakeLists.txt",
                           "include(cmake/CPM.cmake)\nCPMAddPackage(\"gh:fmtlib/fmt@9.1.0\")\n"
                           "find_package(ZLIB)\n"}});
  ScanConfig cfg;
  cfg.root = dir.path();
  const auto rep = scan_repository(cfg);
  ASSERT_EQ(rep.records.size(), 2u);
  std::set<ToolKind> tools;
  for (const auto& r : rep.records) tools.insert(r.tool);
  EXPECT_EQ(tools, (std::set<ToolKind>{ToolKind::kCPM, ToolKind::kCMake}));
  EXPECT_EQ(rep.tools_seen, (std::set<ToolKind>{ToolKind::kCPM, ToolKind::kCMake}));
}

TEST(DiscoveryTest, EnabledToolsFilter) {
  TempDir dir("disc");
  write_tree(dir.path(), {{"CMakeLists.txt", "CPMAddPackage(\"gh:a/b@1.0\")\nfind_package(Z)\n"},
                          {"vcpkg.json", R"({"dependencies":["fmt"]})"}});
  ScanConfig cfg;
  cfg.root = dir.path();
  cfg.enabled_tools = {ToolKind::kCMake};
  const auto rep = scan_repository(cfg);
  ASSERT_EQ(rep.records.size(), 1u);
  EXPECT_EQ(rep.records[0].tool, ToolKind::kCMake);
}

TEST(DiscoveryTest, ToolsSeenIncludesEmptyManifests) {
  TempDir dir("disc");
  write_tree(dir.path(), {{"conanfile.txt", "[generators]\ncmake\n"},
                          {"vcpkg.json", R"({"name":"x"})"},
                          {"package.json", R"({"name":"web","dependencies":{}})"}});
  ScanConfig cfg;
  cfg.root = dir.path();
  const auto rep = scan_repository(cfg);
  EXPECT_TRUE(rep.records.empty());
  EXPECT_TRUE(rep.tools_seen.count(ToolKind::kConan));
  EXPECT_TRUE(rep.tools_seen.count(ToolKind::kVcpkg));
  EXPECT_FALSE(rep.tools_seen.count(ToolKind::kClib));
}

TEST(DiscoveryTest, IgnoresSizeCapsAndNesting) {
  TempDir dir("disc");
  write_tree(dir.path(),
             {{".git/config", "x"},
              {"build/CMakeLists.txt", "find_package(Generated)\n"},
              {"big/vcpkg.json", R"({"dependencies":["huge"]})" + std::string(5000, ' ')},
              {"third_party/vendored/CMakeLists.txt", "find_package(Inner)\n"},
              {"Makefile", "LIBS = -lz\n"}});
  ScanConfig cfg;
  cfg.root = dir.path();
  cfg.max_file_bytes = 1000;
  const auto rep = scan_repository(cfg);
  std::vector<std::string> libs;
  for (const auto& r : rep.records) libs.push_back(r.library);
  EXPECT_EQ(libs, (std::vector<std::string>{"z", "inner"}));
  EXPECT_EQ(rep.records[1].evidence.path, "third_party/vendored/CMakeLists.txt");
  EXPECT_EQ(rep.metadata.skipped_large_files, 1u);
  EXPECT_EQ(rep.file_count, 3u);
}

TEST(DiscoveryTest, SymlinksSkippedByDefault) {
  TempDir dir("disc");
  TempDir outside("disc-out");
  write_tree(outside.path(), {{"vcpkg.json", R"({"dependencies":["linked"]})"}});
  fs::create_directory_symlink(outside.path(), dir.path() / "link");
  fs::create_directory_symlink(dir.path(), dir.path() / "loop");
  ScanConfig cfg;
  cfg.root = dir.path();
  EXPECT_TRUE(scan_repository(cfg).records.empty());
  cfg.follow_symlinks = true;
  const auto rep = scan_repository(cfg);
  ASSERT_EQ(rep.records.size(), 1u);
  EXPECT_EQ(rep.records[0].evidence.path, "link/vcpkg.json");
}

TEST(DiscoveryTest, MissingRootIsFatal) {
  ScanConfig cfg;
  cfg.root = "/nonexistent/ccdep/root";
  try {
    scan_repository(cfg);
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kIo);
  }
}

TEST(DiscoveryTest, DeterministicAndMonotonic) {
  TempDir dir("disc");
  std::map<std::string, std::string> files;
  for (int i = 0; i < 40; ++i) {
    files["m" + std::to_string(i) + "/CMakeLists.txt"] =
        "find_package(L" + std::to_string(i % 7) + ")\n";
  }
  write_tree(dir.path(), files);
  ScanConfig cfg;
  cfg.root = dir.path();
  cfg.jobs = 4;
  auto a = scan_repository(cfg);
  auto b = scan_repository(cfg);
  a.scanned_at = b.scanned_at = {};
  EXPECT_EQ(serialize_report(a), serialize_report(b));

  write_tree(dir.path(), {{"m0/vcpkg.json", R"({"dependencies":["extra"]})"}});
  auto c = scan_repository(cfg);
  std::set<std::string> before, after;
  for (const auto& r : a.records) before.insert(r.library + r.evidence.path);
  for (const auto& r : c.records) after.insert(r.library + r.evidence.path);
  EXPECT_TRUE(std::includes(after.begin(), after.end(), before.begin(), before.end()));
  EXPECT_EQ(after.size(), before.size() + 1);
}

}  // namespace
}  // namespace ccdep
