// Copyright 2026 The PLT Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "plt/net.hpp"
#include "plt/store.hpp"
#include "support.hpp"

namespace plt {
namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun plt_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "plt");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return CliRun{code, out.str(), err.str()};
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

TEST(Cli, BoundsTable) {
  const CliRun a = plt_cli({"bounds", "--K", "24", "--D", "9", "--L", "2"});
  EXPECT_EQ(a.code, 0);
  EXPECT_TRUE(contains(a.out, "upper  1/3 (0.333333)")) << a.out;
  EXPECT_TRUE(contains(a.out, "lower  1/4 (0.250000)")) << a.out;
  EXPECT_TRUE(contains(a.out, "exact  none")) << a.out;
  EXPECT_TRUE(contains(a.out, "jplt   2/17")) << a.out;

  const CliRun b = plt_cli({"bounds", "--K", "24", "--D", "8", "--L", "2"});
  EXPECT_TRUE(contains(b.out, "upper  1/3") && contains(b.out, "lower  1/3") && contains(b.out, "exact  1/3"))
      << b.out;
  const CliRun c = plt_cli({"bounds", "--K", "10", "--D", "10", "--L", "3"});
  EXPECT_TRUE(contains(c.out, "exact  1 (1.000000)")) << c.out;

  const CliRun bad = plt_cli({"bounds", "--K", "3", "--D", "5", "--L", "2"});
  EXPECT_EQ(bad.code, 2);
  EXPECT_TRUE(contains(bad.err, "BadShape")) << bad.err;
  EXPECT_TRUE(contains(bad.err, "--K")) << bad.err;
}

TEST(Cli, DemoIlpAndAudit) {
  const CliRun demo = plt_cli({"demo", "--K", "24", "--D", "9", "--L", "2", "--q", "17", "--seed", "7"});
  EXPECT_EQ(demo.code, 0) << demo.err;
  EXPECT_TRUE(contains(demo.out, "recovered: OK, rate 1/4")) << demo.out;

  const CliRun ilp = plt_cli({"ilp", "--max-K", "20"});
  EXPECT_EQ(ilp.code, 0);
  EXPECT_TRUE(contains(ilp.out, "0 mismatches")) << ilp.out;

  const CliRun audit = plt_cli({"audit", "--K", "12", "--D", "5", "--L", "2", "--q", "17", "--trials", "50"});
  EXPECT_EQ(audit.code, 0);
  EXPECT_TRUE(contains(audit.out, "posterior D/K for all indices in all trials")) << audit.out;
}

TEST(Cli, SeedFromFlagOrEnvironment) {
  const std::vector<std::string> args{"demo", "--K", "20", "--D", "6", "--L", "3", "--q", "17", "--N", "2"};
  auto with_seed = args;
  with_seed.insert(with_seed.end(), {"--seed", "11"});
  const CliRun a = plt_cli(with_seed);
  const CliRun b = plt_cli(with_seed);
  EXPECT_EQ(a.out, b.out);
  ::setenv("PLT_SEED", "11", 1);
  const CliRun c = plt_cli(args);
  ::unsetenv("PLT_SEED");
  EXPECT_EQ(a.out, c.out);
  const CliRun d = plt_cli(args);
  EXPECT_EQ(d.code, 0);
}

TEST(Cli, ExampleAndSweep) {
  const CliRun ex = plt_cli({"example", "2"});
  EXPECT_EQ(ex.code, 0) << ex.out;
  EXPECT_TRUE(contains(ex.out, "example 2: PASS"));
  EXPECT_EQ(plt_cli({"example", "5"}).code, 2);

  const auto csv_path = std::filesystem::temp_directory_path() / "plt_cli_sweep.csv";
  const CliRun sw = plt_cli({"sweep", "--K", "1000", "--ratio", "0.6", "--dstep", "250", "--out", csv_path.string()});
  EXPECT_EQ(sw.code, 0) << sw.err;
  std::ifstream in(csv_path);
  std::stringstream body;
  body << in.rdbuf();
  EXPECT_TRUE(contains(body.str(), "250,150,0.250000,0.250000,0.166667,0.250000")) << body.str();
  std::filesystem::remove(csv_path);
}

TEST(Cli, DemandFileAndFetch) {
  const auto dir = std::filesystem::temp_directory_path();
  const auto demand = dir / "plt_cli_demand.txt";
  {
    std::ofstream f(demand);
    f << "W: 2,4,5,7,8,10,11,18\n2 15 3 6 1 4 11 13\n6 9 4 3 11 15 13 8\n";
  }
  const CliRun demo = plt_cli({"demo", "--K", "24", "--q", "17", "--demand", demand.string()});
  EXPECT_EQ(demo.code, 0) << demo.err;
  EXPECT_TRUE(contains(demo.out, "recovered: OK, rate 1/3")) << demo.out;
  EXPECT_EQ(plt_cli({"demo", "--K", "24", "--q", "17", "--D", "7", "--demand", demand.string()}).code, 2);
  EXPECT_EQ(plt_cli({"demo", "--K", "24", "--q", "17"}).code, 2);

  const auto store_path = dir / "plt_cli_store.plts";
  const CliRun mk = plt_cli({"make-store", "--K", "24", "--N", "2", "--q", "17", "--out", store_path.string()});
  EXPECT_EQ(mk.code, 0) << mk.err;
  Server server(store_load(store_path.string()), Endpoint{"127.0.0.1", 0});
  server.start();
  const CliRun fetched = plt_cli({"fetch", "--connect", server.endpoint().to_string(), "--K", "24", "--q", "17",
                               "--demand", demand.string(), "--verify-store", store_path.string(), "--json"});
  EXPECT_EQ(fetched.code, 0) << fetched.err;
  EXPECT_TRUE(contains(fetched.out, "recovered: OK, rate 1/3")) << fetched.out;
  EXPECT_TRUE(contains(fetched.out, "\"pi\":[")) << fetched.out;
  server.stop();
  const CliRun refused = plt_cli({"fetch", "--connect", server.endpoint().to_string(), "--K", "24", "--q", "17",
                               "--D", "3", "--L", "1"});
  EXPECT_EQ(refused.code, 1);
  EXPECT_TRUE(contains(refused.err, "ConnectionRefused")) << refused.err;
  std::filesystem::remove(store_path);
  std::filesystem::remove(demand);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(plt_cli({}).code != 0, true);
  EXPECT_NE(plt_cli({"nonsense"}).code, 0);
  EXPECT_NE(plt_cli({"bounds", "--K", "24"}).code, 0);
  EXPECT_EQ(plt_cli({"--help"}).code, 0);
}

}  // namespace
}  // namespace plt
