// Copyright 2026 The kplanar Authors
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

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <string>

#include "kplanar/core.hpp"
#include "kplanar/dsl.hpp"
#include "kplanar/families.hpp"

using namespace kplanar;
namespace fs = std::filesystem;

namespace {

const std::string kCatalog = KPLANAR_CATALOG_DIR;

int run(const std::string& args) {
  const std::string cmd = std::string(KPLANAR_CLI) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string temp_path(const std::string& name) {
  return (fs::temp_directory_path() / ("kplanar_cli_" + name)).string();
}

}  // namespace

TEST(Cli, Table) { EXPECT_EQ(run("table --k-min 4 --k-max 5"), 0); }

TEST(Cli, TableRangeIsAUsageError) { EXPECT_EQ(run("table --k-min 3 --k-max 5"), 2); }

TEST(Cli, UnknownFamilyIsAUsageError) { EXPECT_EQ(run("generate --family hexagon --k 4"), 2); }

TEST(Cli, BadParityFails) { EXPECT_NE(run("generate --family spiral --k 5"), 0); }

TEST(Cli, MissingSubcommand) { EXPECT_EQ(run(""), 2); }

TEST(Cli, ChecksOnCatalogFile) {
  const std::string f = kCatalog + "/cycle_4.kpd";
  EXPECT_EQ(run("validate " + f), 0);
  EXPECT_EQ(run("stats " + f), 0);
  EXPECT_EQ(run("check-style " + f + " --k 4 --restrict s,m"), 0);
  EXPECT_EQ(run("check-filled " + f), 0);
  EXPECT_EQ(run("check-tight " + f + " --k 4"), 0);
  EXPECT_EQ(run("check-tight " + f + " --k 5"), 1);
  EXPECT_EQ(run("check-saturated " + f + " --k 4 --restrict s,m"), 0);
  EXPECT_EQ(run("check-saturated " + f + " --k 5 --expect insertable"), 0);
  EXPECT_EQ(run("check-saturated " + f + " --k 5"), 1);
  EXPECT_EQ(run("check-style " + f + " --k 3"), 1);
}

TEST(Cli, SyntaxErrorIsAUsageError) {
  const std::string f = temp_path("bad.kpd");
  write_file(f, "kplanar 1\nrot nowhere s0+\n");
  EXPECT_EQ(run("validate " + f), 2);
  fs::remove(f);
}

TEST(Cli, GenerateRoundTripsThroughFiles) {
  const std::string f = temp_path("spiral.kpd");
  ASSERT_EQ(run("generate --family spiral --k 6 --out " + f), 0);
  EXPECT_EQ(canonical_code(parse(read_file(f))), canonical_code(gen_spiral(6)));
  EXPECT_EQ(run("check-tight " + f), 0);  // k comes from the header
  const std::string svg = temp_path("spiral.svg");
  EXPECT_EQ(run("render " + f + " --out " + svg), 0);
  EXPECT_NE(read_file(svg).find("<svg"), std::string::npos);
  fs::remove(f);
  fs::remove(svg);
}

TEST(Cli, Glue) {
  const std::string f = kCatalog + "/cycle_4.kpd";
  const std::string out = temp_path("glued.kpd");
  ASSERT_EQ(run("glue " + f + " " + f + " --out " + out), 0);
  EXPECT_EQ(parse(read_file(out)).num_edges(), 10);
  fs::remove(out);
}

TEST(Cli, Search) { EXPECT_EQ(run("search --k 4 --restrict s --m-max 2"), 0); }
