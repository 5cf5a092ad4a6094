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

#include <gtest/gtest.h>

#include "ccdep/extract.hpp"

namespace ccdep {
namespace {

const DependencyRecord* find(const ExtractionResult& r, std::string_view library) {
  for (const auto& rec : r.records) {
    if (rec.library == library) return &rec;
  }
  return nullptr;
}

void expect_range(const DependencyRecord* r, const char* lo, bool lo_inc, const char* hi,
                  bool hi_inc) {
  ASSERT_NE(r, nullptr);
  const auto& c = r->constraint;
  if (lo) {
    ASSERT_TRUE(c.lower()) << r->library;
    EXPECT_EQ(c.lower()->version.str(), lo);
    EXPECT_EQ(c.lower()->inclusive, lo_inc);
  } else {
    EXPECT_FALSE(c.lower());
  }
  if (hi) {
    ASSERT_TRUE(c.upper()) << r->library;
    EXPECT_EQ(c.upper()->version.str(), hi);
    EXPECT_EQ(c.upper()->inclusive, hi_inc);
  } else {
    EXPECT_FALSE(c.upper());
  }
}

void expect_exact(const DependencyRecord* r, const char* v) {
  ASSERT_NE(r, nullptr);
  EXPECT_EQ(r->constraint.kind(), ConstraintKind::kExact) << r->library;
  expect_range(r, v, true, v, true);
}

void expect_unspecified(const DependencyRecord* r) {
  ASSERT_NE(r, nullptr);
  EXPECT_EQ(r->constraint.kind(), ConstraintKind::kUnspecified) << r->library;
}

// Conan

TEST(ConanTest, RequiresExact) {
  const auto r = extract_conan("[requires]\npoco/1.9.4\n", "conanfile.txt");
  ASSERT_EQ(r.records.size(), 1u);
  expect_exact(find(r, "poco"), "1.9.4");
  EXPECT_EQ(r.records[0].tool, ToolKind::kConan);
  EXPECT_EQ(r.records[0].phase, Phase::kInstall);
  EXPECT_EQ(r.records[0].evidence, (Evidence{"conanfile.txt", 2}));
}

TEST(ConanTest, VersionRange) {
  const auto r = extract_conan("[requires]\nzlib/[>=1.2.11 <1.3]\n", "conanfile.txt");
  const auto* z = find(r, "zlib");
  ASSERT_NE(z, nullptr);
  EXPECT_EQ(z->constraint.kind(), ConstraintKind::kRange);
  expect_range(z, "1.2.11", true, "1.3", false);
}

TEST(ConanTest, EmptyFile) {
  const auto r = extract_conan("", "conanfile.txt");
  EXPECT_TRUE(r.records.empty());
  EXPECT_TRUE(r.warnings.empty());
}

TEST(ConanTest, BuildAndToolRequiresAndReferences) {
  const auto r = extract_conan(
      "[requires]\n"
      "boost/1.80.0@conan/stable # pinned\n"
      "fmt/[~9.1]\n"
      "\n[generators]\ncmake\n"
      "[build_requires]\ncmake/3.25.0\n"
      "[tool_requires]\nninja/1.11.1\n"
      "[options]\nboost:shared=True\n",
      "conanfile.txt");
  EXPECT_EQ(r.records.size(), 4u);
  expect_exact(find(r, "boost"), "1.80.0");
  EXPECT_EQ(find(r, "fmt")->constraint.kind(), ConstraintKind::kTilde);
  expect_exact(find(r, "cmake"), "3.25.0");
  expect_exact(find(r, "ninja"), "1.11.1");
  EXPECT_EQ(find(r, "shared=true"), nullptr);
}

TEST(ConanTest, MalformedHeaderSkipsSection) {
  const auto r = extract_conan("[requires\nbad/1.0\n[requires]\ngood/2.0\n", "conanfile.txt");
  EXPECT_EQ(find(r, "bad"), nullptr);
  expect_exact(find(r, "good"), "2.0");
  EXPECT_EQ(r.warnings.size(), 1u);
}

TEST(ConanTest, PythonRecipeLexically) {
  const auto r = extract_conan(
      "from conan import ConanFile\n"
      "class App(ConanFile):\n"
      "    requires = (\"openssl/3.0.7\", \"zlib/[>=1.2 <2]\")\n"
      "    tool_requires = \"cmake/3.24.0\"\n"
      "    def requirements(self):\n"
      "        self.requires(\"fmt/9.1.0\")\n"
      "        self.requires(f\"spdlog/{self.v}\")\n",
      "conanfile.py");
  expect_exact(find(r, "openssl"), "3.0.7");
  expect_range(find(r, "zlib"), "1.2", true, "2", false);
  expect_exact(find(r, "cmake"), "3.24.0");
  expect_exact(find(r, "fmt"), "9.1.0");
  EXPECT_EQ(find(r, "fmt")->evidence.line, 6);
}

TEST(ConanTest, ConaninfoRequires) {
  const auto r = extract_conan(
      "[settings]\nos=Linux\n[requires]\nzlib/1.Y.Z\nbzip2/1.0.8\n[full_requires]\n"
      "zlib/1.2.13:abc\n",
      "conaninfo.txt");
  EXPECT_EQ(find(r, "zlib")->constraint.kind(), ConstraintKind::kWildcard);
  expect_range(find(r, "zlib"), "1.0", true, "2.0", false);
  expect_exact(find(r, "bzip2"), "1.0.8");
  EXPECT_EQ(r.records.size(), 2u);
}

// Vcpkg

TEST(VcpkgTest, StringEntryUnspecified) {
  const auto r = extract_vcpkg(R"({"name":"app","dependencies":["fmt"]})", "vcpkg.json");
  ASSERT_EQ(r.records.size(), 1u);
  expect_unspecified(find(r, "fmt"));
}

TEST(VcpkgTest, MinimumVersion) {
  const auto r = extract_vcpkg(
      R"({"dependencies":[{"name":"openssl","version>=":"1.1.1"}]})", "vcpkg.json");
  const auto* o = find(r, "openssl");
  ASSERT_NE(o, nullptr);
  EXPECT_EQ(o->constraint.kind(), ConstraintKind::kRange);
  expect_range(o, "1.1.1", true, nullptr, false);
}

TEST(VcpkgTest, EmptyDependencies) {
  EXPECT_TRUE(extract_vcpkg(R"({"dependencies":[]})", "vcpkg.json").records.empty());
}

TEST(VcpkgTest, OverridesAreExactAndLinesPointAtEntries) {
  const auto r = extract_vcpkg(
      "{\n"
      "  \"dependencies\": [\n"
      "    \"fmt\",\n"
      "    { \"name\": \"boost-asio\", \"features\": [\"ssl\"] }\n"
      "  ],\n"
      "  \"overrides\": [\n"
      "    { \"name\": \"fmt\", \"version\": \"9.1.0\" }\n"
      "  ]\n"
      "}\n",
      "vcpkg.json");
  ASSERT_EQ(r.records.size(), 3u);
  expect_unspecified(&r.records[0]);
  EXPECT_EQ(r.records[0].evidence.line, 3);
  EXPECT_EQ(r.records[1].library, "boost-asio");
  EXPECT_EQ(r.records[1].evidence.line, 4);
  expect_exact(&r.records[2], "9.1.0");
  EXPECT_EQ(r.records[2].evidence.line, 7);
}

TEST(VcpkgTest, MalformedDocument) {
  const auto r = extract_vcpkg("{\"dependencies\": [\"fmt\"", "vcpkg.json");
  EXPECT_TRUE(r.records.empty());
  EXPECT_EQ(r.warnings.size(), 1u);
}

// Git submodules

TEST(GitSubmoduleTest, UrlGivesName) {
  const auto r = extract_gitsubmodule(
      "[submodule \"third_party/googletest\"]\n"
      "\tpath = third_party/googletest\n"
      "\turl = https://github.com/google/googletest.git\n",
      ".gitmodules");
  ASSERT_EQ(r.records.size(), 1u);
  const auto& g = r.records[0];
  EXPECT_EQ(g.library, "googletest");
  EXPECT_EQ(g.tool, ToolKind::kGitSubmodule);
  expect_unspecified(&g);
  EXPECT_EQ(g.source_url, "https://github.com/google/googletest.git");
  EXPECT_EQ(g.evidence.line, 1);
}

TEST(GitSubmoduleTest, EmptyFile) {
  EXPECT_TRUE(extract_gitsubmodule("", ".gitmodules").records.empty());
}

TEST(GitSubmoduleTest, SameUrlTwiceGivesTwoRecords) {
  const auto r = extract_gitsubmodule(
      "[submodule \"a\"]\n path = a\n url = https://x.org/o/lib.git\n"
      "[submodule \"b\"]\n path = b\n url = https://x.org/o/lib.git\n",
      ".gitmodules");
  ASSERT_EQ(r.records.size(), 2u);
  EXPECT_NE(r.records[0].evidence, r.records[1].evidence);
}

TEST(GitSubmoduleTest, MissingUrlWarns) {
  const auto r = extract_gitsubmodule("[submodule \"x\"]\n path = x\n", ".gitmodules");
  EXPECT_TRUE(r.records.empty());
  ASSERT_EQ(r.warnings.size(), 1u);
  EXPECT_NE(r.warnings[0].message.find("no url"), std::string::npos);
}

// pkg-config

TEST(PkgConfigTest, RequiresWithComparator) {
  const auto r = extract_pkgconfig("Name: foo\nRequires: zlib >= 1.2.11\n", "foo.pc");
  expect_range(find(r, "zlib"), "1.2.11", true, nullptr, false);
}

TEST(PkgConfigTest, NoRequires) {
  EXPECT_TRUE(extract_pkgconfig("Name: foo\nLibs: -lfoo\n", "foo.pc").records.empty());
}

TEST(PkgConfigTest, PrivateRequiresStripLib) {
  const auto r = extract_pkgconfig("Name: foo\nRequires.private: libssl\n", "foo.pc");
  ASSERT_EQ(r.records.size(), 1u);
  EXPECT_EQ(r.records[0].library, "ssl");
  EXPECT_EQ(r.records[0].raw_name, "libssl");
}

TEST(PkgConfigTest, VariablesAndLists) {
  const auto r = extract_pkgconfig(
      "glib_ver=2.56\nName: foo\nRequires: glib-2.0 >= ${glib_ver}, gio-2.0, libpng16 = 1.6.37\n"
      "Requires.private: ${missing}\n",
      "foo.pc");
  expect_range(find(r, "glib-2.0"), "2.56", true, nullptr, false);
  expect_unspecified(find(r, "gio-2.0"));
  expect_exact(find(r, "png16"), "1.6.37");
  EXPECT_FALSE(r.warnings.empty());
}

// Debian control

TEST(DebControlTest, BuildDepends) {
  const auto r = extract_deb_control(
      "Source: demo\nBuild-Depends: libssl-dev (>= 1.1), zlib1g-dev\n", "debian/control");
  ASSERT_EQ(r.records.size(), 2u);
  expect_range(find(r, "ssl"), "1.1", true, nullptr, false);
  expect_unspecified(find(r, "zlib1g"));
}

TEST(DebControlTest, AlternativesAllEmitted) {
  const auto r = extract_deb_control("Package: demo\nDepends: foo | bar\n", "debian/control");
  EXPECT_NE(find(r, "foo"), nullptr);
  EXPECT_NE(find(r, "bar"), nullptr);
}

TEST(DebControlTest, NoDependencyFields) {
  EXPECT_TRUE(extract_deb_control("Source: demo\nMaintainer: x\n", "debian/control")
                  .records.empty());
}

TEST(DebControlTest, ContinuationsArchQualifiersAndSubstvars) {
  const auto r = extract_deb_control(
      "Source: demo\n"
      "Build-Depends: debhelper-compat (= 13),\n"
      " libpng-dev (<< 1.7) [amd64 arm64] <!nocheck>,\n"
      " libfoo-dev:native\n"
      "\n"
      "Package: demo\n"
      "Depends: ${shlibs:Depends}, ${misc:Depends}, libc6 (>= 2.34)\n"
      "Build-Depends-Indep: doxygen\n",
      "debian/control");
  expect_exact(find(r, "debhelper-compat"), "13");
  const auto* png = find(r, "png");
  expect_range(png, nullptr, false, "1.7", false);
  EXPECT_EQ(png->evidence.line, 3);
  EXPECT_NE(find(r, "foo"), nullptr);
  expect_range(find(r, "libc6"), "2.34", true, nullptr, false);
  EXPECT_NE(find(r, "doxygen"), nullptr);
  EXPECT_EQ(r.warnings.size(), 2u);
}

// CPM and Hunter

TEST(CpmTest, Shorthand) {
  const auto r = extract_cpm("CPMAddPackage(\"gh:fmtlib/fmt@9.1.0\")\n", "CMakeLists.txt");
  ASSERT_EQ(r.records.size(), 1u);
  expect_exact(find(r, "fmt"), "9.1.0");
  EXPECT_EQ(r.records[0].tool, ToolKind::kCPM);
}

TEST(CpmTest, KeywordForm) {
  const auto r = extract_cpm(
      "CPMAddPackage(\n  NAME Catch2\n  GITHUB_REPOSITORY catchorg/Catch2\n  VERSION 3.3.2\n)\n"
      "CPMAddPackage(NAME json GIT_REPOSITORY https://github.com/nlohmann/json GIT_TAG v3.11.2)\n"
      "CPMAddPackage(\"gh:gabime/spdlog#v1.11.0\")\n",
      "CMakeLists.txt");
  expect_exact(find(r, "catch2"), "3.3.2");
  expect_exact(find(r, "json"), "3.11.2");
  expect_exact(find(r, "spdlog"), "1.11.0");
  EXPECT_EQ(find(r, "catch2")->evidence.line, 1);
}

TEST(CpmTest, UnbalancedCallWarns) {
  const auto r = extract_cpm("CPMAddPackage(NAME x VERSION 1.0\n", "CMakeLists.txt");
  EXPECT_TRUE(r.records.empty());
  EXPECT_FALSE(r.warnings.empty());
}

TEST(HunterTest, AddPackage) {
  const auto r = extract_hunter("HunterGate(URL x SHA1 y)\nhunter_add_package(Boost COMPONENTS system)\n",
                                "CMakeLists.txt");
  ASSERT_EQ(r.records.size(), 1u);
  expect_unspecified(find(r, "boost"));
  EXPECT_EQ(r.records[0].tool, ToolKind::kHunter);
}

TEST(CpmHunterTest, PlainCMakeYieldsNothing) {
  const char* src = "project(x)\nfind_package(ZLIB)\n";
  EXPECT_TRUE(extract_cpm(src, "CMakeLists.txt").records.empty());
  EXPECT_TRUE(extract_hunter(src, "CMakeLists.txt").records.empty());
  EXPECT_FALSE(extract_cpm(src, "CMakeLists.txt").recognized);
}

// Buckaroo, dds, clib, cppget, xrepo

TEST(BuckarooTest, DependencyTables) {
  const auto r = extract_buckaroo(
      "[[dependency]]\npackage = \"github.com/buckaroo-pm/boost\"\nversion = \"1.70.0\"\n"
      "[[dependency]]\npackage = \"github.com/buckaroo-pm/fmt\"\nversion = \"branch=master\"\n",
      "buckaroo.toml");
  expect_exact(find(r, "boost"), "1.70.0");
  expect_unspecified(find(r, "fmt"));
}

TEST(DdsTest, DependsArray) {
  const auto r = extract_dds(
      "{\n  name: 'app',\n  // comment\n  depends: [\n    'fmt@9.1.0',\n    'spdlog^1.11.0',\n"
      "    'range-v3~0.12.0',\n  ],\n}\n",
      "package.json5");
  expect_exact(find(r, "fmt"), "9.1.0");
  EXPECT_EQ(find(r, "fmt")->evidence.line, 5);
  EXPECT_EQ(find(r, "spdlog")->constraint.kind(), ConstraintKind::kCaret);
  expect_range(find(r, "spdlog"), "1.11.0", true, "2.0.0", false);
  EXPECT_EQ(find(r, "range-v3")->constraint.kind(), ConstraintKind::kTilde);
}

TEST(ClibTest, DependencyMap) {
  const auto r = extract_clib(
      R"({"name":"x","dependencies":{"clibs/buffer":"0.4.1","stephenmathieson/trim.c":"*"},
          "development":{"jwerle/fs.c":"0.2.0"}})",
      "clib.json");
  expect_exact(find(r, "buffer"), "0.4.1");
  expect_unspecified(find(r, "trim.c"));
  expect_exact(find(r, "fs.c"), "0.2.0");
}

TEST(ClibTest, NpmPackageJsonIsNotClib) {
  const auto r = extract_clib(R"({"name":"web","dependencies":{"react":"^18.0.0"}})",
                              "package.json");
  EXPECT_TRUE(r.records.empty());
  EXPECT_FALSE(r.recognized);
}

TEST(CppgetTest, ManifestDepends) {
  const auto r = extract_cppget(
      ": 1\nname: hello\nversion: 1.0.0\ndepends: * build2 >= 0.15.0\n"
      "depends: libhello ^1.0.0\ndepends: libasio >= 1.28.0 ; networking\n",
      "manifest");
  ASSERT_EQ(r.records.size(), 2u);
  EXPECT_EQ(find(r, "hello")->constraint.kind(), ConstraintKind::kCaret);
  EXPECT_EQ(find(r, "hello")->tool, ToolKind::kCppget);
  expect_range(find(r, "asio"), "1.28.0", true, nullptr, false);
}

TEST(CppgetTest, RejectsNonManifest) {
  const auto r = extract_cppget("depends: x\n", "manifest");
  EXPECT_TRUE(r.records.empty());
  EXPECT_FALSE(r.recognized);
}

TEST(XrepoTest, AddRequires) {
  const auto r = extract_xrepo(
      "add_requires(\"zlib 1.2.x\", \"openssl >=1.1.1\")\nadd_requires(\"conan::fmt 9.1.0\",\n"
      "  {alias = \"fmt\"})\nadd_packages(\"zlib\")\n",
      "xmake.lua");
  EXPECT_EQ(find(r, "zlib")->constraint.kind(), ConstraintKind::kWildcard);
  EXPECT_EQ(find(r, "zlib")->tool, ToolKind::kXrepo);
  expect_range(find(r, "openssl"), "1.1.1", true, nullptr, false);
  expect_exact(find(r, "fmt"), "9.1.0");
  EXPECT_EQ(r.records.size(), 3u);
}

TEST(InstallExtractorsTest, PhaseIsInstallAndRawReparses) {
  struct Input {
    ExtractorFn fn;
    const char* content;
    const char* path;
  };
  const Input inputs[] = {
      {extract_conan, "[requires]\na/1.0\nb/[>=1 <2]\n", "conanfile.txt"},
      {extract_vcpkg, R"({"dependencies":[{"name":"a","version>=":"1.0"}]})", "vcpkg.json"},
      {extract_pkgconfig, "Name: x\nRequires: a >= 1, b < 3\n", "x.pc"},
      {extract_deb_control, "Source: x\nDepends: aa (>= 1.0), bb (<< 2)\n", "control"},
      {extract_dds, "{depends: ['a@1.0', 'b^2.0.0']}", "package.json5"},
      {extract_cppget, ": 1\ndepends: liba >= 1.0\n", "manifest"},
      {extract_xrepo, "add_requires(\"a >=1.0 <2.0\")", "xmake.lua"},
  };
  for (const auto& in : inputs) {
    const auto r = in.fn(in.content, in.path, {});
    ASSERT_FALSE(r.records.empty()) << in.path;
    for (const auto& rec : r.records) {
      EXPECT_EQ(rec.phase, Phase::kInstall);
      if (rec.constraint.kind() == ConstraintKind::kRange ||
          rec.constraint.kind() == ConstraintKind::kExact) {
        EXPECT_TRUE(parse_constraint(rec.constraint.raw()).same_interval(rec.constraint))
            << in.path << " raw '" << rec.constraint.raw() << "'";
      }
    }
  }
}

}  // namespace
}  // namespace ccdep
