#include "uzg/cli.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace {

struct CliResult {
  int code = -1;
  std::string out;
  std::string err;
};

CliResult run(const std::vector<std::string>& args) {
  std::vector<const char*> argv{"uzg"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  CliResult r;
  r.code = uzg::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string temp_path(const std::string& name) {
  return testing::TempDir() + name;
}

TEST(Cli, Version) {
  CliResult r = run({"--version"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "uzg 0.1.0\n");
}

TEST(Cli, RequiresSubcommand) {
  CliResult r = run({});
  EXPECT_EQ(r.code, 2);
  EXPECT_FALSE(r.err.empty());
}

TEST(Cli, UnknownFlagIsUsageError) {
  EXPECT_EQ(run({"analyze", "zn:6", "--bogus"}).code, 2);
  EXPECT_EQ(run({"analyze", "zn:6", "--format", "yaml"}).code, 2);
}

TEST(Cli, InfoReportsRingFacts) {
  CliResult r = run({"info", "zn:12"});
  ASSERT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["ring"], "zn:12");
  EXPECT_EQ(j["kind"], "zn");
  EXPECT_EQ(j["order"], 12);
  EXPECT_EQ(j["unit_count"], 4);
  EXPECT_EQ(j["zero_divisor_count"], 8);
  EXPECT_EQ(j["units"], (std::vector<int>{1, 5, 7, 11}));
  EXPECT_EQ(j["jacobson_radical"], (std::vector<int>{0, 6}));
  EXPECT_EQ(j["maximal_ideal_count"], 2);
  EXPECT_EQ(j["is_local"], false);
  EXPECT_EQ(j["is_field"], false);
  ASSERT_EQ(j["ideals"].size(), 6u);
  EXPECT_EQ(j["ideals"][1]["members"], (std::vector<int>{0, 6}));
  EXPECT_EQ(j["ideals"][1]["proper"], true);
}

TEST(Cli, BuildDotGolden) {
  CliResult r = run({"build", "zn:4"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            "graph G {\n"
            "  0;\n"
            "  1;\n"
            "  2;\n"
            "  3;\n"
            "  0 -- 1;\n"
            "  0 -- 3;\n"
            "  1 -- 2;\n"
            "  2 -- 3;\n"
            "}\n");
}

TEST(Cli, BuildCsvGolden) {
  CliResult r = run({"build", "zn:6", "--format", "csv"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "0,1\n0,5\n1,4\n2,3\n2,5\n3,4\n");
}

TEST(Cli, BuildResidueLabels) {
  CliResult r =
      run({"build", "prod:zn:2,zn:2", "--label", "residues"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("0 [label=\"(0,0)\"];"), std::string::npos);
  EXPECT_NE(r.out.find("3 [label=\"(1,1)\"];"), std::string::npos);
  CliResult c = run({"build", "zn:6", "--format", "csv", "--label",
                     "residues"});
  EXPECT_EQ(c.out.substr(0, 4), "0,1\n");
}

TEST(Cli, BuildJsonAdjacency) {
  CliResult r = run({"build", "zn:4", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["vertex_count"], 4);
  EXPECT_EQ(j["edge_count"], 4);
  EXPECT_EQ(j["adjacency"][0], (std::vector<int>{1, 3}));
}

TEST(Cli, AnalyzeJson) {
  CliResult r = run({"analyze", "zn:12"});
  ASSERT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["ring"], "zn:12");
  EXPECT_EQ(j["vertex_count"], 12);
  EXPECT_EQ(j["edge_count"], 24);
  EXPECT_EQ(j["diameter"], 3);
  EXPECT_EQ(j["girth"], 4);
  EXPECT_EQ(j["bipartite"], true);
  EXPECT_EQ(j["planar"], false);
  EXPECT_EQ(j["hamiltonian"], true);
  EXPECT_EQ(j["hamiltonian_skipped"], false);
  EXPECT_EQ(j["clique_number"], 2);
}

TEST(Cli, AnalyzeCsvAndMd) {
  CliResult csv = run({"analyze", "zn:6", "--format", "csv"});
  ASSERT_EQ(csv.code, 0);
  EXPECT_EQ(csv.out.substr(0, 5), "ring,");
  EXPECT_NE(csv.out.find("\nzn:6,6,6,2,2,true,true,3,6,"), std::string::npos);
  CliResult md = run({"analyze", "zn:6", "--format", "md"});
  ASSERT_EQ(md.code, 0);
  EXPECT_NE(md.out.find("| invariant | value |"), std::string::npos);
}

TEST(Cli, VerifyPassesAndReportsCounts) {
  CliResult md = run({"verify", "zn:12"});
  ASSERT_EQ(md.code, 0);
  EXPECT_NE(md.out.find("# Checks for zn:12"), std::string::npos);
  EXPECT_NE(md.out.find("- passed 20, failed 0, skipped 8"),
            std::string::npos);
  CliResult js = run({"verify", "zn:12", "--format", "json"});
  ASSERT_EQ(js.code, 0);
  auto j = nlohmann::json::parse(js.out);
  EXPECT_EQ(j["passed"], 20);
  EXPECT_EQ(j["failed"], 0);
  EXPECT_EQ(j["skipped"], 8);
  ASSERT_EQ(j["checks"].size(), 28u);
  EXPECT_EQ(j["checks"][0]["id"], "T01-max-degree");
  EXPECT_EQ(j["checks"][0]["status"], "pass");
}

TEST(Cli, LimitFlagSkipsExactSearch) {
  CliResult r = run({"analyze", "zn:12", "--limit-hamiltonian", "4"});
  ASSERT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j["hamiltonian"].is_null());
  EXPECT_EQ(j["hamiltonian_skipped"], true);
}

TEST(Cli, EnvironmentOverrides) {
  setenv("UZG_FORMAT", "csv", 1);
  CliResult r = run({"analyze", "zn:6"});
  unsetenv("UZG_FORMAT");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, 5), "ring,");
  setenv("UZG_LIMIT_HAMILTONIAN", "4", 1);
  CliResult h = run({"analyze", "zn:12"});
  unsetenv("UZG_LIMIT_HAMILTONIAN");
  ASSERT_EQ(h.code, 0);
  EXPECT_TRUE(nlohmann::json::parse(h.out)["hamiltonian"].is_null());
}

TEST(Cli, ExitCodeThreeOnLimit) {
  CliResult r = run({"info", "zn:600"});
  EXPECT_EQ(r.code, 3);
  EXPECT_EQ(r.err.substr(0, 7), "error: ");
  EXPECT_NE(r.err.find("enumeration limit"), std::string::npos);
  EXPECT_EQ(run({"sweep", "zn", "2", "600"}).code, 3);
}

TEST(Cli, ExitCodeTwoOnBadSpec) {
  CliResult r = run({"info", "zn:abc"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("parse error at position 3"), std::string::npos);
  EXPECT_EQ(run({"sweep", "nosuch", "1", "2"}).code, 2);
  EXPECT_EQ(run({"sweep", "zn", "2"}).code, 2);
  EXPECT_EQ(run({"sweep", "zn", "two", "9"}).code, 2);
}

TEST(Cli, SweepCsvShapeAndExit) {
  CliResult r = run({"sweep", "zn", "2", "30", "--format", "csv"});
  ASSERT_EQ(r.code, 0);
  std::istringstream is(r.out);
  std::string line;
  ASSERT_TRUE(std::getline(is, line));
  EXPECT_EQ(line,
            "ring,order,units,zero_divisors,maximal_ideals,regular,bipartite,"
            "planar,eulerian,hamiltonian,diameter,girth,has_c3,has_c4,"
            "checks_passed,checks_failed,checks_skipped");
  std::size_t rows = 0;
  while (std::getline(is, line)) {
    ++rows;
    EXPECT_NE(line.find(",0,"), std::string::npos) << line;
  }
  EXPECT_EQ(rows, 29u);
}

TEST(Cli, SweepDeterministicAcrossJobs) {
  CliResult serial = run({"sweep", "zn", "2", "40", "--format", "csv"});
  CliResult again = run({"sweep", "zn", "2", "40", "--format", "csv"});
  CliResult parallel =
      run({"sweep", "zn", "2", "40", "--format", "csv", "--jobs", "4"});
  ASSERT_EQ(serial.code, 0);
  EXPECT_EQ(serial.out, again.out);
  EXPECT_EQ(serial.out, parallel.out);
}

TEST(Cli, SweepFamilies) {
  CliResult pp =
      run({"sweep", "prime-powers", "2", "27", "--format", "csv"});
  ASSERT_EQ(pp.code, 0);
  EXPECT_NE(pp.out.find("zn:27,27,"), std::string::npos);
  EXPECT_EQ(pp.out.find("zn:6,"), std::string::npos);
  CliResult pr = run({"sweep", "products", "4", "15", "--format", "csv"});
  ASSERT_EQ(pr.code, 0);
  EXPECT_NE(pr.out.find("\"prod:zn:2,zn:2\",4,"), std::string::npos);
  EXPECT_NE(pr.out.find("\"prod:zn:3,zn:5\",15,"), std::string::npos);
  CliResult pq = run({"sweep", "polyq", "2", "2", "--format", "csv"});
  ASSERT_EQ(pq.code, 0);
  EXPECT_NE(pq.out.find("polyq:2:x^2+x+1,4,"), std::string::npos);
}

TEST(Cli, SweepJsonlRows) {
  CliResult r = run({"sweep", "zn", "2", "5", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  std::istringstream is(r.out);
  std::string line;
  std::size_t rows = 0;
  while (std::getline(is, line)) {
    auto j = nlohmann::json::parse(line);
    EXPECT_EQ(j["checks_failed"], 0);
    ++rows;
  }
  EXPECT_EQ(rows, 4u);
}

TEST(Cli, SweepTableFamily) {
  std::string path = temp_path("uzg_cli_tables.json");
  {
    std::ofstream f(path);
    f << R"([
      {"label": "bool2", "add": [[0,1],[1,0]], "mul": [[0,0],[0,1]]},
      {"label": "three", "names": ["z", "e", "t"],
       "add": [[0,1,2],[1,2,0],[2,0,1]], "mul": [[0,0,0],[0,1,2],[0,2,1]]}
    ])";
  }
  CliResult r = run({"sweep", "table", path, "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("bool2,2,"), std::string::npos);
  EXPECT_NE(r.out.find("three,3,"), std::string::npos);
  std::remove(path.c_str());
}

TEST(Cli, SweepTableFileErrors) {
  EXPECT_EQ(run({"sweep", "table", "/nonexistent/rings.json"}).code, 2);
  std::string path = temp_path("uzg_cli_bad.json");
  {
    std::ofstream f(path);
    f << "{not json";
  }
  EXPECT_EQ(run({"sweep", "table", path}).code, 2);
  std::remove(path.c_str());
}

TEST(Cli, OutFileMatchesStdout) {
  std::string path = temp_path("uzg_cli_out.csv");
  CliResult direct = run({"build", "zn:6", "--format", "csv"});
  CliResult filed =
      run({"build", "zn:6", "--format", "csv", "--out", path});
  ASSERT_EQ(filed.code, 0);
  EXPECT_TRUE(filed.out.empty());
  std::ifstream f(path, std::ios::binary);
  std::stringstream content;
  content << f.rdbuf();
  EXPECT_EQ(content.str(), direct.out);
  std::remove(path.c_str());
}

TEST(Cli, MetaLinesAreDeterministic) {
  CliResult a = run({"build", "zn:6", "--format", "csv", "--meta"});
  CliResult b = run({"build", "zn:6", "--format", "csv", "--meta"});
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out.substr(0, 12), "# tool: uzg ");
  EXPECT_NE(a.out.find("# invocation: uzg build zn:6 --format csv --meta\n"),
            std::string::npos);
  EXPECT_NE(a.out.find("# limits: enumeration=512,"), std::string::npos);
  CliResult j = run({"analyze", "zn:6", "--meta"});
  auto parsed = nlohmann::json::parse(j.out);
  EXPECT_EQ(parsed["meta"]["tool"], "uzg");
  EXPECT_EQ(parsed["meta"]["limits"]["enumeration"], 512);
}

TEST(Cli, InfoQuotientSpec) {
  CliResult r = run({"info", "quot:zn:12/jacobson"});
  ASSERT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["ring"], "quot:zn:12/jacobson");
  EXPECT_EQ(j["order"], 6);
  EXPECT_EQ(j["kind"], "table");
}

}  // namespace
