#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Result run(const std::string& args, const std::string& env = "") {
  const std::string err_path = ::testing::TempDir() + "rmf_cli_stderr.txt";
  const std::string cmd = env + " '" + RMF_CLI_PATH + "' " + args + " 2>'" + err_path + "'";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed");
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out, slurp(err_path)};
}

}  // namespace

TEST(Cli, ChiN) {
  const auto r = run("chi-n '1,3,0|1'");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "value=1 route=GRAPH_COUNT_NONSEP graphs=1\n");
}

TEST(Cli, ChiNReportsBothGammaModes) {
  const auto r = run("chi-n '1,4,0|'");
  EXPECT_EQ(r.out, "value=3 route=GRAPH_COUNT_NONSEP graphs=3 graphs_existence=2\n");
  const auto j = nlohmann::json::parse(run("chi-n '1,4,0|' --json").out);
  EXPECT_EQ(j["value"], 3);
  EXPECT_EQ(j["graph_count_existence"], 2);
}

TEST(Cli, ChiHJson) {
  const auto j = nlohmann::json::parse(run("chi-h '0,2,1|2' --json").out);
  EXPECT_EQ(j["value"], 1);
  EXPECT_EQ(j["route"], "COMPONENT_G0");
  EXPECT_TRUE(j["graph_count"].is_null());
}

TEST(Cli, ValidateReportsClause) {
  const auto r = run("validate '0,3,0|1'");
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.err.find("N1: k <= g"), std::string::npos);
  EXPECT_EQ(run("validate '1,3,0|1'").status, 0);
}

TEST(Cli, ValidateGraph) {
  const std::string path = ::testing::TempDir() + "rmf_cli_graph.json";
  {
    std::ofstream f(path);
    f << R"({"vertices":[{"id":0,"color":"w","weight":0,"root":false},
                         {"id":1,"color":"b","weight":0,"root":false}],
             "edges":[{"id":0,"u":0,"v":1,"weight":3}],"gamma":[1,0]})";
  }
  const auto r = run("validate '0,2,0|' --graph '" + path + "'");
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.err.find("degree-equation"), std::string::npos);
  EXPECT_NE(r.err.find("gamma-even-fixed-edge"), std::string::npos);
}

TEST(Cli, Dim) {
  EXPECT_EQ(run("dim '3,6,1|-1,3;1'").out, "16\n");
  EXPECT_EQ(run("dim '3,6,1|1,1;1'").status, 1);
  EXPECT_EQ(run("dim '0,3,0|1'").status, 1);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("").status, 2);
  EXPECT_EQ(run("frobnicate").status, 2);
  EXPECT_EQ(run("chi-n").status, 2);
  const auto r = run("chi-n '1,3,0|-1'");
  EXPECT_EQ(r.status, 2);
  EXPECT_NE(r.err.find("position 6"), std::string::npos);
  EXPECT_EQ(run("chi-n '1,3,0|1'", "RMF_WORK_LIMIT=abc").status, 2);
}

TEST(Cli, DomainErrors) {
  EXPECT_EQ(run("graphs '3,6,1|-1,3;1'").status, 1);
  EXPECT_EQ(run("graphs '0,2,1|2'").status, 1);  // closed form unless --no-shortcircuit
  EXPECT_EQ(run("chi-n '2,6,1|0,2;0'").status, 1);  // g - k + 1 odd
}

TEST(Cli, WorkLimit) {
  const auto r = run("graphs '2,5,1|1'", "RMF_WORK_LIMIT=3");
  EXPECT_EQ(r.status, 3);
  EXPECT_TRUE(r.out.empty());
  EXPECT_NE(r.err.find("work limit"), std::string::npos);
}

TEST(Cli, GraphsJson) {
  const auto r = run("graphs '1,3,1|1,2' --no-shortcircuit");
  EXPECT_EQ(r.status, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["count"], 1);
  EXPECT_EQ(j["graphs"].size(), 1u);
  EXPECT_TRUE(j["graphs"][0]["gamma"].is_null());
  const auto naive = nlohmann::json::parse(run("graphs '2,5,1|1' --naive").out);
  EXPECT_EQ(naive["count"], 8);
}

TEST(Cli, GraphsDot) {
  const auto r = run("graphs '1,3,0|1' --format dot");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out.rfind("// count=1\ngraph G0 {", 0), 0u);
}

TEST(Cli, Strata) {
  EXPECT_EQ(run("strata 2").out, "P=[] Q=[1] dim=2\nP=[2] Q=[] dim=1\nP=[1,1] Q=[] dim=2\n");
  const auto j = nlohmann::json::parse(run("strata 2 --json").out);
  EXPECT_EQ(j.size(), 3u);
  EXPECT_EQ(j[1]["P"], (std::vector<int>{2}));
  EXPECT_EQ(j[1]["dim"], 1);
  EXPECT_EQ(run("strata 0").status, 1);
}

TEST(Cli, VerifyCells) {
  const auto r = run("verify-cells --max-s 12");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
  EXPECT_NE(r.out.find("chi_w_lambda 12 value=0 expected=0 PASS"), std::string::npos);
}

TEST(Cli, CatalogMatchesGolden) {
  const std::string out = ::testing::TempDir() + "rmf_cli_catalog.jsonl";
  const auto r = run("catalog --g-max 1 --n-max 3 --abs-i-max 2 --out '" + out + "'");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(slurp(out), slurp(std::string(RMF_TEST_DATA) + "/catalog_g1_n3_i2.jsonl"));
  const auto jobs = run("catalog --g-max 1 --n-max 3 --abs-i-max 2 --jobs 3");
  EXPECT_EQ(jobs.out, slurp(out));
}

TEST(Cli, CatalogFlagsWorkLimit) {
  const auto r = run("catalog --g-max 2 --n-max 5 --abs-i-max 1", "RMF_WORK_LIMIT=3");
  EXPECT_EQ(r.status, 3);
  EXPECT_NE(r.out.find("\"error\":\"work limit"), std::string::npos);
}
