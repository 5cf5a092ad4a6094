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

std::vector<std::string> libs(const ExtractionResult& r) {
  std::vector<std::string> out;
  for (const auto& rec : r.records) out.push_back(rec.library);
  return out;
}

void expect_min(const DependencyRecord* r, const char* v) {
  ASSERT_NE(r, nullptr);
  EXPECT_EQ(r->constraint.kind(), ConstraintKind::kRange) << r->library;
  ASSERT_TRUE(r->constraint.lower());
  EXPECT_EQ(r->constraint.lower()->version.str(), v);
  EXPECT_TRUE(r->constraint.lower()->inclusive);
  EXPECT_FALSE(r->constraint.upper());
}

void expect_exact(const DependencyRecord* r, const char* v) {
  ASSERT_NE(r, nullptr);
  ASSERT_EQ(r->constraint.kind(), ConstraintKind::kExact) << r->library;
  EXPECT_EQ(r->constraint.lower()->version.str(), v);
}

void expect_unspecified(const DependencyRecord* r) {
  ASSERT_NE(r, nullptr);
  EXPECT_EQ(r->constraint.kind(), ConstraintKind::kUnspecified) << r->library;
}

// CMake

TEST(CMakeExtractTest, FindPackageVersionIsMinimum) {
  const auto r = extract_cmake("find_package(OpenSSL 1.1 REQUIRED)\n", "CMakeLists.txt");
  ASSERT_EQ(r.records.size(), 1u);
  expect_min(find(r, "openssl"), "1.1");
  EXPECT_EQ(r.records[0].tool, ToolKind::kCMake);
  EXPECT_EQ(r.records[0].phase, Phase::kBuild);
}

TEST(CMakeExtractTest, VariableSubstitution) {
  const auto r = extract_cmake("set(DEP zlib)\nfind_package(${DEP})\n", "CMakeLists.txt");
  ASSERT_EQ(r.records.size(), 1u);
  expect_unspecified(find(r, "zlib"));
  EXPECT_EQ(r.records[0].evidence.line, 2);
}

TEST(CMakeExtractTest, Threads) {
  const auto r = extract_cmake("find_package(Threads REQUIRED)\n", "CMakeLists.txt");
  ASSERT_EQ(r.records.size(), 1u);
  expect_unspecified(find(r, "threads"));
  EXPECT_TRUE(r.records[0].system);
}

TEST(CMakeExtractTest, ExactRangesAndComponents) {
  const auto r = extract_cmake(
      "find_package(Boost 1.71 EXACT REQUIRED COMPONENTS system filesystem)\n"
      "find_package(Qt6 COMPONENTS Core Widgets)\n"
      "find_package(fmt 8.0...<10 CONFIG QUIET)\n",
      "CMakeLists.txt");
  EXPECT_EQ(libs(r), (std::vector<std::string>{"boost", "qt6", "fmt"}));
  expect_exact(find(r, "boost"), "1.71");
  EXPECT_EQ(find(r, "boost")->components, (std::vector<std::string>{"system", "filesystem"}));
  EXPECT_EQ(find(r, "qt6")->components, (std::vector<std::string>{"Core", "Widgets"}));
  const auto* fmt = find(r, "fmt");
  ASSERT_NE(fmt, nullptr);
  EXPECT_EQ(fmt->constraint.upper()->version.str(), "10");
  EXPECT_FALSE(fmt->constraint.upper()->inclusive);
}

TEST(CMakeExtractTest, KeywordTokensNeverBecomeNames) {
  const auto r = extract_cmake(
      "find_package(REQUIRED)\nfind_package(Foo REQUIRED QUIET CONFIG MODULE NO_MODULE "
      "NO_POLICY_SCOPE EXACT COMPONENTS a)\n",
      "CMakeLists.txt");
  for (const auto& rec : r.records) {
    for (const char* kw : {"required", "quiet", "components", "exact", "config", "module",
                           "no_module", "no_policy_scope"}) {
      EXPECT_NE(rec.library, kw);
    }
  }
  EXPECT_EQ(libs(r), std::vector<std::string>{"foo"});
}

TEST(CMakeExtractTest, PkgCheckModulesFindLibraryFetchContent) {
  const auto r = extract_cmake(
      "find_package(PkgConfig)\n"
      "pkg_check_modules(DEPS REQUIRED IMPORTED_TARGET libpng>=1.6 glib-2.0)\n"
      "find_library(MATH_LIB NAMES m libm)\n"
      "find_library(DL_LIB dl)\n"
      "include(FetchContent)\n"
      "FetchContent_Declare(googletest\n"
      "  GIT_REPOSITORY https://github.com/google/googletest.git\n"
      "  GIT_TAG v1.13.0)\n"
      "FetchContent_Declare(json URL https://x.org/json.tar.xz)\n",
      "CMakeLists.txt");
  expect_min(find(r, "png"), "1.6");
  expect_unspecified(find(r, "glib-2.0"));
  expect_unspecified(find(r, "m"));
  expect_unspecified(find(r, "dl"));
  const auto* gt = find(r, "googletest");
  expect_exact(gt, "1.13.0");
  EXPECT_EQ(gt->source_url, "https://github.com/google/googletest.git");
  EXPECT_EQ(gt->evidence.line, 6);
  EXPECT_EQ(find(r, "json")->source_url, "https://x.org/json.tar.xz");
  EXPECT_NE(find(r, "pkgconfig"), nullptr);
  EXPECT_EQ(find(r, "libm"), nullptr);
}

TEST(CMakeExtractTest, BothConditionalBranchesMined) {
  const auto r = extract_cmake(
      "if(USE_SSL)\n find_package(OpenSSL)\nelse()\n find_package(MbedTLS)\nendif()\n",
      "CMakeLists.txt");
  EXPECT_NE(find(r, "openssl"), nullptr);
  EXPECT_NE(find(r, "mbedtls"), nullptr);
}

TEST(CMakeExtractTest, UnbalancedParensWarnAndResync) {
  const auto r = extract_cmake("find_package(Broken\nfind_package(ZLIB)\n", "CMakeLists.txt");
  EXPECT_FALSE(r.warnings.empty());
  EXPECT_NE(find(r, "zlib"), nullptr);
}

TEST(CMakeExtractTest, SelfReferentialSetTerminates) {
  const auto r = extract_cmake(
      "set(A \"${A}x\")\nset(A \"${A}${A}\")\nset(A \"${A}${A}\")\nfind_package(${A})\n",
      "CMakeLists.txt");
  for (const auto& rec : r.records) EXPECT_EQ(rec.library.find("${"), std::string::npos);
}

// Autoconf

TEST(AutoconfTest, CheckLib) {
  const auto r = extract_autoconf("AC_INIT([x],[1])\nAC_CHECK_LIB([m],[cos])\n", "configure.ac");
  ASSERT_EQ(r.records.size(), 1u);
  expect_unspecified(find(r, "m"));
  EXPECT_EQ(r.records[0].tool, ToolKind::kAutoconf);
}

TEST(AutoconfTest, PkgCheckModules) {
  const auto r = extract_autoconf("PKG_CHECK_MODULES([PNG],[libpng >= 1.6])\n", "configure.ac");
  ASSERT_EQ(r.records.size(), 1u);
  expect_min(find(r, "png"), "1.6");
}

TEST(AutoconfTest, NoMacros) {
  EXPECT_TRUE(extract_autoconf("#!/bin/sh\necho hi\n", "configure").records.empty());
}

TEST(AutoconfTest, SearchLibsBoostAndComments) {
  const auto r = extract_autoconf(
      "dnl AC_CHECK_LIB([commented],[x])\n"
      "# AC_CHECK_LIB([hashcomment],[x])\n"
      "AC_SEARCH_LIBS([dlopen], [dl dld], [], [AC_MSG_ERROR([no dl])])\n"
      "AX_BOOST_BASE([1.65],, [AC_MSG_ERROR([boost])])\n"
      "AX_BOOST_SYSTEM\n"
      "AC_CHECK_LIB(z, inflate)\n",
      "configure.ac");
  EXPECT_EQ(find(r, "commented"), nullptr);
  EXPECT_EQ(find(r, "hashcomment"), nullptr);
  EXPECT_NE(find(r, "dl"), nullptr);
  EXPECT_NE(find(r, "dld"), nullptr);
  expect_min(find(r, "boost"), "1.65");
  EXPECT_NE(find(r, "z"), nullptr);
}

TEST(AutoconfTest, UnterminatedMacroWarns) {
  const auto r = extract_autoconf("AC_CHECK_LIB([m],[cos]\n", "configure.ac");
  EXPECT_FALSE(r.warnings.empty());
}

// Make

TEST(MakeTest, LinkFlags) {
  const auto r = extract_make("LDLIBS = -lpthread -lm\n", "Makefile");
  EXPECT_EQ(libs(r), (std::vector<std::string>{"m", "pthread"}));
  for (const auto& rec : r.records) EXPECT_TRUE(rec.system);
}

TEST(MakeTest, PkgConfigSubstitution) {
  const auto r = extract_make("LIBS += $(shell pkg-config --libs libcurl)\n", "Makefile");
  ASSERT_EQ(r.records.size(), 1u);
  EXPECT_EQ(r.records[0].library, "curl");
}

TEST(MakeTest, NoLinkFlags) {
  EXPECT_TRUE(extract_make("all:\n\techo -lnot_a_link_line\n", "Makefile").records.empty());
}

TEST(MakeTest, RecipesContinuationsAndDedup) {
  const auto r = extract_make(
      "# -lcomment\n"
      "LDFLAGS = -L/usr/lib \\\n"
      "   -lssl -lcrypto\n"
      "app: main.o\n"
      "\t$(CC) -o $@ $^ -lssl -lz\n"
      "\tg++ -o x x.o `pkg-config --cflags --libs gtk+-3.0`\n",
      "Makefile");
  EXPECT_EQ(find(r, "comment"), nullptr);
  EXPECT_NE(find(r, "crypto"), nullptr);
  EXPECT_NE(find(r, "z"), nullptr);
  EXPECT_NE(find(r, "gtk+-3.0"), nullptr);
  int ssl = 0;
  for (const auto& rec : r.records) ssl += rec.library == "ssl";
  EXPECT_EQ(ssl, 1);
  EXPECT_EQ(find(r, "ssl")->evidence.line, 2);
}

// Bazel

TEST(BazelTest, HttpArchive) {
  const auto r = extract_bazel(
      "load(\"@bazel_tools//tools/build_defs/repo:http.bzl\", \"http_archive\")\n"
      "http_archive(\n    name = \"com_google_absl\",\n"
      "    urls = [\"https://github.com/abseil/abseil-cpp/archive/x.zip\"],\n)\n",
      "WORKSPACE");
  ASSERT_EQ(r.records.size(), 1u);
  expect_unspecified(find(r, "com_google_absl"));
  EXPECT_EQ(r.records[0].source_url, "https://github.com/abseil/abseil-cpp/archive/x.zip");
}

TEST(BazelTest, ExternalDeps) {
  const auto r = extract_bazel("cc_library(name = \"x\", deps = [\"@boost//:asio\"])\n", "BUILD");
  ASSERT_EQ(r.records.size(), 1u);
  EXPECT_EQ(r.records[0].library, "boost");
}

TEST(BazelTest, InternalDepsIgnored) {
  EXPECT_TRUE(extract_bazel("cc_library(name = \"x\", deps = [\"//internal:lib\", \":y\"])\n",
                            "BUILD")
                  .records.empty());
}

TEST(BazelTest, GitRepositoryAndDedup) {
  const auto r = extract_bazel(
      "git_repository(name = \"rules_cc\", remote = \"https://github.com/bazelbuild/rules_cc\","
      " tag = \"0.0.9\")\n"
      "cc_test(name = \"t\", deps = [\"@com_google_googletest//:gtest_main\","
      " \"@com_google_googletest//:gtest\", \"@bazel_tools//x\"], implementation_deps ="
      " [\"@@zlib//:z\"])\n",
      "BUILD.bazel");
  expect_exact(find(r, "rules_cc"), "0.0.9");
  EXPECT_EQ(find(r, "rules_cc")->source_url, "https://github.com/bazelbuild/rules_cc");
  EXPECT_NE(find(r, "com_google_googletest"), nullptr);
  EXPECT_NE(find(r, "zlib"), nullptr);
  EXPECT_EQ(find(r, "bazel_tools"), nullptr);
  EXPECT_EQ(r.records.size(), 3u);
}

// Meson

TEST(MesonTest, DependencyWithVersion) {
  const auto r = extract_meson("zdep = dependency('zlib', version: '>=1.2.8')\n", "meson.build");
  ASSERT_EQ(r.records.size(), 1u);
  expect_min(find(r, "zlib"), "1.2.8");
}

TEST(MesonTest, EmptyNameWarns) {
  const auto r = extract_meson("dependency('')\n", "meson.build");
  EXPECT_TRUE(r.records.empty());
  EXPECT_EQ(r.warnings.size(), 1u);
}

TEST(MesonTest, SubprojectAndOptional) {
  const auto r = extract_meson(
      "fmt_proj = subproject('fmt')\n"
      "dependency('threads')\n"
      "dependency('openssl', required: false, version: ['>=1.1', '<4'])\n"
      "cc = meson.get_compiler('c')\nm = cc.find_library('m')\n",
      "meson.build");
  EXPECT_NE(find(r, "fmt"), nullptr);
  EXPECT_NE(find(r, "threads"), nullptr);
  const auto* ssl = find(r, "openssl");
  ASSERT_NE(ssl, nullptr);
  EXPECT_EQ(ssl->constraint.upper()->version.str(), "4");
  EXPECT_NE(find(r, "m"), nullptr);
}

// MSBuild

TEST(MsBuildTest, AdditionalDependencies) {
  const char* src =
      "<Project><ItemDefinitionGroup><Link>\n"
      "<AdditionalDependencies>zlib.lib;ws2_32.lib;%(AdditionalDependencies)"
      "</AdditionalDependencies>\n</Link></ItemDefinitionGroup></Project>\n";
  const auto r = extract_msbuild(src, "app.vcxproj");
  EXPECT_EQ(libs(r), std::vector<std::string>{"zlib"});
  ExtractOptions keep;
  keep.msbuild_include_system = true;
  const auto all = extract_msbuild(src, "app.vcxproj", keep);
  ASSERT_NE(find(all, "ws2_32"), nullptr);
  EXPECT_TRUE(find(all, "ws2_32")->system);
}

TEST(MsBuildTest, EmptyElement) {
  EXPECT_TRUE(extract_msbuild("<Project><AdditionalDependencies></AdditionalDependencies>"
                              "</Project>",
                              "a.vcxproj")
                  .records.empty());
}

TEST(MsBuildTest, LibPrefixStripped) {
  const auto r = extract_msbuild(
      "<Project><AdditionalDependencies>libcurl.lib;$(OutDir)x.lib;..\\deps\\Foo.LIB"
      "</AdditionalDependencies></Project>",
      "a.props");
  EXPECT_EQ(libs(r), (std::vector<std::string>{"curl", "foo"}));
}

// Xmake, Build2, Buck

TEST(XmakeTest, WildcardRequires) {
  const auto r = extract_xmake("add_requires(\"zlib 1.2.x\", {system = false})\n", "xmake.lua");
  ASSERT_EQ(r.records.size(), 1u);
  const auto* z = find(r, "zlib");
  EXPECT_EQ(z->tool, ToolKind::kXmake);
  EXPECT_EQ(z->constraint.kind(), ConstraintKind::kWildcard);
  EXPECT_EQ(z->constraint.lower()->version.str(), "1.2.0");
  EXPECT_EQ(z->constraint.upper()->version.str(), "1.3.0");
}

TEST(XmakeTest, AddPackagesOnlyWhenNotRequired) {
  const auto r = extract_xmake(
      "-- add_requires(\"commented\")\nadd_requires(\"fmt\")\ntarget(\"app\")\n"
      "  add_packages(\"fmt\", \"sqlite3\")\n",
      "xmake.lua");
  EXPECT_EQ(libs(r), (std::vector<std::string>{"fmt", "sqlite3"}));
}

TEST(XmakeTest, LinksAndSyslinks) {
  const auto r = extract_xmake(
      "target(\"app\")\n  add_links(\"libfoo\", \"bar\")\n  add_syslinks(\"pthread\")\n"
      "  add_xrepo_links(\"ignored\")\n",
      "xmake.lua");
  EXPECT_EQ(libs(r), (std::vector<std::string>{"bar", "foo", "pthread"}));
  EXPECT_TRUE(find(r, "pthread")->system);
  EXPECT_EQ(find(r, "pthread")->evidence.line, 3);
  EXPECT_TRUE(extract_xrepo("add_links(\"z\")\n", "xmake.lua").records.empty());
}

TEST(Build2Test, CaretDepends) {
  const auto r = extract_build2(": 1\nname: app\ndepends: libhello ^1.0.0\n", "manifest");
  ASSERT_EQ(r.records.size(), 1u);
  EXPECT_EQ(r.records[0].library, "hello");
  EXPECT_EQ(r.records[0].tool, ToolKind::kBuild2);
  EXPECT_EQ(r.records[0].constraint.kind(), ConstraintKind::kCaret);
}

TEST(Build2Test, AlternativesGroupsAndIntervals) {
  const auto r = extract_build2(
      ": 1\ndepends: libfoo [1.2.0 1.3.0) | libbar >= 2.0\n"
      "depends: { libxx libyy } ~1.2.0\n"
      "depends: libzz == 1.2.13 ? ($cxx.target.class != 'windows')\n",
      "manifest");
  const auto* foo = find(r, "foo");
  ASSERT_NE(foo, nullptr);
  EXPECT_EQ(foo->constraint.upper()->version.str(), "1.3.0");
  expect_min(find(r, "bar"), "2.0");
  ASSERT_NE(find(r, "xx"), nullptr);
  ASSERT_NE(find(r, "yy"), nullptr);
  EXPECT_EQ(find(r, "xx")->constraint.kind(), ConstraintKind::kTilde);
  EXPECT_EQ(find(r, "yy")->constraint.kind(), ConstraintKind::kTilde);
  expect_exact(find(r, "zz"), "1.2.13");
}

TEST(BuckTest, LocalTargetsIgnored) {
  EXPECT_TRUE(extract_buck("cxx_library(name = \"a\", deps = [\":local\"])\n", "BUCK")
                  .records.empty());
}

TEST(BuckTest, CellsAndPrebuilt) {
  const auto r = extract_buck(
      "cxx_binary(name = \"app\", deps = [\"fmt//:fmt\", \"//lib:x\", \"folly//folly:core\"])\n",
      "BUCK");
  EXPECT_EQ(libs(r), (std::vector<std::string>{"fmt", "folly"}));
  const auto p = extract_buck("prebuilt_cxx_library(name = \"openssl\", static_lib = \"x.a\")\n",
                              "third-party/openssl/BUCK");
  EXPECT_EQ(libs(p), std::vector<std::string>{"openssl"});
  const auto q = extract_buck("prebuilt_cxx_library(name = \"own\")\n", "src/BUCK");
  EXPECT_TRUE(q.records.empty());
}

TEST(BuildExtractorsTest, PhaseIsBuild) {
  struct Input {
    ExtractorFn fn;
    const char* content;
    const char* path;
  };
  const Input inputs[] = {
      {extract_cmake, "find_package(A 1.0)\n", "CMakeLists.txt"},
      {extract_autoconf, "AC_CHECK_LIB([a],[f])\n", "configure.ac"},
      {extract_make, "LIBS = -la\n", "Makefile"},
      {extract_bazel, "cc_library(deps = [\"@a//:x\"])\n", "BUILD"},
      {extract_meson, "dependency('a', version: '>=1.0')\n", "meson.build"},
      {extract_msbuild, "<Project><AdditionalDependencies>a.lib</AdditionalDependencies>"
                        "</Project>", "x.vcxproj"},
      {extract_xmake, "add_requires(\"a >=1.0\")\n", "xmake.lua"},
      {extract_build2, ": 1\ndepends: a >= 1.0\n", "manifest"},
      {extract_buck, "cxx_library(deps = [\"a//:x\"])\n", "BUCK"},
  };
  for (const auto& in : inputs) {
    const auto r = in.fn(in.content, in.path, {});
    ASSERT_EQ(r.records.size(), 1u) << in.path;
    EXPECT_EQ(r.records[0].phase, Phase::kBuild) << in.path;
    EXPECT_EQ(r.records[0].library, "a") << in.path;
    const auto& c = r.records[0].constraint;
    if (c.kind() == ConstraintKind::kRange || c.kind() == ConstraintKind::kExact) {
      EXPECT_TRUE(parse_constraint(c.raw()).same_interval(c)) << in.path << " '" << c.raw() << "'";
    }
  }
}

}  // namespace
}  // namespace ccdep
