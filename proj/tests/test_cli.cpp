#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sys/wait.h>

#include "kdiam/io.hpp"

using kdiam::Json;

namespace {

struct Run {
  int status;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(KDIAM_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  std::string out;
  std::array<char, 4096> buf;
  while (auto n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  int st = pclose(pipe);
  return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

std::string temp(const std::string& name) { return testing::TempDir() + "kdiam_cli_" + name; }

std::string write(const std::string& name, const std::string& text) {
  auto path = temp(name);
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST(Cli, ConstructThenVerifyCube) {
  auto c = run("construct cube 2 3");
  ASSERT_EQ(c.status, 0);
  auto j = Json::parse(c.out);
  EXPECT_EQ(j["points"].size(), 8u);
  EXPECT_EQ(j["expectation"]["expected_count"], 8);
  EXPECT_EQ(j["expectation"]["norm"], "linf");
  auto path = write("cube.json", c.out);
  auto v = run("verify --k 3 --norm linf --in " + path);
  ASSERT_EQ(v.status, 0);
  auto r = Json::parse(v.out);
  EXPECT_EQ(r["verdict"], true);
  EXPECT_EQ(r["mode"], "exact");
  auto ext = Json::parse(run("verify --property cube-extremal --k 3 --in " + path).out);
  EXPECT_EQ(ext["verdict"], true);
}

TEST(Cli, GraphOfPentagon) {
  auto path = write("pent.json", run("construct polygon 5").out);
  auto g = run("graph --kind diameter --in " + path);
  ASSERT_EQ(g.status, 0);
  EXPECT_EQ(Json::parse(g.out)["edges"], Json::parse("[[0,2],[0,3],[1,3],[1,4],[2,4]]"));
}

TEST(Cli, FloatModeOnRationalInput) {
  auto path = write("sq.json", R"({"dim":2,"points":[["0","0"],["1","0"],["1","1"],["0","1"]]})");
  auto r = Json::parse(run("verify --k 3 --mode float --tol 1e-12 --in " + path).out);
  EXPECT_EQ(r["mode"], "numerical");
  EXPECT_EQ(r["tolerance"], 1e-12);
  auto f = write("f.json", R"({"dim":1,"scalar":"float","points":[[0],[1]]})");
  auto e = run("verify --mode exact --in " + f);
  EXPECT_NE(e.status, 0);
  EXPECT_TRUE(Json::parse(e.out).contains("error"));
}

TEST(Cli, GaugeNormFile) {
  auto norm = write("norm.json", R"({"type":"gauge","vertices":[["1","1"],["-1","1"],["1","-1"],["-1","-1"]]})");
  auto path = write("sq2.json", R"({"dim":2,"points":[["0","0"],["1","0"],["1","1"],["0","1"]]})");
  auto r = Json::parse(run("verify --k 2 --norm " + norm + " --in " + path).out);
  EXPECT_EQ(r["verdict"], true);
  EXPECT_EQ(r["norm"], "gauge");
}

TEST(Cli, SearchExitCodeFollowsExhaustiveness) {
  auto path = write("nine.json", run("construct polygon 9").out);
  auto s = run("search --k 3 --in " + path);
  EXPECT_EQ(s.status, 0);
  auto j = Json::parse(s.out);
  EXPECT_EQ(j["best_size"], 4);
  EXPECT_EQ(j["exhaustive"], true);
  EXPECT_EQ(j["witness"]["points"].size(), 4u);
  auto cut = run("search --k 3 --max-nodes 2 --in " + path);
  EXPECT_NE(cut.status, 0);
  EXPECT_EQ(Json::parse(cut.out)["exhaustive"], false);
}

TEST(Cli, Tiling) {
  auto path = write("tile.json", R"({"dim":2,"body":[["0","0"],["1","0"],["1","1"],["0","1"]],
    "centers":[["0","0"],["1","0"],["1","1"],["0","1"]]})");
  EXPECT_EQ(Json::parse(run("tiling --check packing --k 2 --in " + path).out)["verdict"], true);
  auto t = Json::parse(run("tiling --check tiling --k 2 --seed 5 --in " + path).out);
  EXPECT_EQ(t["verdict"], true);
  EXPECT_EQ(t["details"]["seed"], "5");
}

TEST(Cli, PlotWritesSvg) {
  auto path = write("a.json", run("construct realization 2-a").out);
  auto out = temp("a.svg");
  ASSERT_EQ(run("plot --in " + path + " --out " + out).status, 0);
  std::ifstream f(out);
  std::string svg((std::istreambuf_iterator<char>(f)), {});
  EXPECT_NE(svg.find("<svg"), std::string::npos);
  auto cube = write("c4.json", run("construct cube 4 2").out);
  auto e = run("plot --in " + cube + " --out " + out);
  EXPECT_NE(e.status, 0);
  EXPECT_EQ(Json::parse(e.out)["error"]["kind"], "unsupported-dimension");
}

TEST(Cli, StructuredErrors) {
  auto bad = write("bad.json", "{\"dim\": 2,\n \"points\": [[\"0\" \"1\"]]}");
  auto r = run("verify --in " + bad);
  EXPECT_NE(r.status, 0);
  auto j = Json::parse(r.out);
  EXPECT_EQ(j["error"]["kind"], "parse-error");
  EXPECT_NE(j["error"]["message"].get<std::string>().find("line 2"), std::string::npos);
  EXPECT_NE(run("construct nothing").status, 0);
  EXPECT_NE(run("construct sided-polygon 2 3 3 2").status, 0);
  EXPECT_NE(run("").status, 0);
}
