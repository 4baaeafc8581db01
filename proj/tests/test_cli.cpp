#include <gtest/gtest.h>

#include <sstream>

#include "cli_app.hpp"
#include "support.hpp"

using gspline::testing::data_path;

namespace {

struct Run {
  int status;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int status = gspline::cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST(Cli, VerifyTriangle) {
  auto r = run({"verify", data_path("fig2.json"), "--spline", "3,15,5"});
  EXPECT_EQ(r.status, 0);
  EXPECT_TRUE(contains(r.out, "SPLINE: yes"));
  auto text = run({"verify", data_path("fig2-text.json"), "--spline", "3,15,5"});
  EXPECT_EQ(text.status, 0);
  auto bad = run({"verify", data_path("fig2.json"), "--spline", "0,1,0"});
  EXPECT_EQ(bad.status, 1);
  EXPECT_TRUE(contains(bad.out, "SPLINE: no"));
  EXPECT_TRUE(contains(bad.out, "v1-v2: 4 does not divide -1"));
  EXPECT_TRUE(contains(bad.out, "v2-v3: 5 does not divide 1"));
}

TEST(Cli, FlowupAndQ) {
  auto r = run({"flowup", data_path("fig2.json")});
  EXPECT_EQ(r.status, 0);
  EXPECT_TRUE(contains(r.out, "diagonal: (1, 4, 10)"));
  EXPECT_TRUE(contains(r.out, "det: 40"));
  auto q = run({"q", data_path("fig2.json"), "--json"});
  auto j = nlohmann::json::parse(q.out);
  EXPECT_EQ(j["q"], "40");
  EXPECT_EQ(j["provenance"], "PID_DIAGONAL");
  EXPECT_EQ(j["lcm"], "20");
  auto w = run({"flowup", data_path("xy.json")});
  EXPECT_EQ(w.status, 0);
  EXPECT_TRUE(contains(w.out, "(0, 0, x*y + y^2)"));
}

TEST(Cli, CheckBasis) {
  auto ok = run({"check-basis", data_path("fig2.json"), "--basis", "1,1,1;0,4,4;0,0,10"});
  EXPECT_EQ(ok.status, 0);
  EXPECT_TRUE(contains(ok.out, "BASIS: ACCEPTED"));
  auto no = run({"check-basis", data_path("fig2.json"), "--basis", "1,1,1;0,4,4;0,0,20", "--json"});
  EXPECT_EQ(no.status, 1);
  EXPECT_EQ(nlohmann::json::parse(no.out)["verdict"], "REJECTED");
  auto notspline = run({"check-basis", data_path("fig2.json"), "--basis", "1,1,1;0,1,0;0,0,10"});
  EXPECT_EQ(notspline.status, 2);
}

TEST(Cli, Search) {
  auto xy = run({"search", data_path("xy.json"), "--factors", "x;y;x+y", "--degree", "2"});
  EXPECT_EQ(xy.status, 0);
  EXPECT_TRUE(contains(xy.out, "SEARCH: FOUND"));
  EXPECT_TRUE(contains(xy.out, "det = x^2*y + x*y^2"));
  auto sq = run({"search", data_path("squares.json"), "--factors", "x;x;y;y;x+y;x+y", "--degree", "6"});
  EXPECT_EQ(sq.status, 1);
  EXPECT_TRUE(contains(sq.out, "NONEXISTENT(6)"));
  auto zz = run({"search", data_path("fig2.json"), "--factors", "2"});
  EXPECT_EQ(zz.status, 2);
}

TEST(Cli, Obstruct) {
  auto r = run({"obstruct", data_path("zx-obstruction.json"), "--ideal", "even-constant"});
  EXPECT_EQ(r.status, 0);
  EXPECT_TRUE(contains(r.out, "OBSTRUCTED: yes"));
  auto need = run({"obstruct", data_path("zx-obstruction.json")});
  EXPECT_EQ(need.status, 2);
  auto pid = run({"obstruct", data_path("fig2-text.json")});
  EXPECT_EQ(pid.status, 1);
  EXPECT_TRUE(contains(pid.out, "OBSTRUCTED: no"));
  auto bad = run({"obstruct", data_path("zx-obstruction.json"), "--ideal", "maximal"});
  EXPECT_EQ(bad.status, 2);
}

TEST(Cli, Probe) {
  auto r40 = run({"probe", data_path("fig2.json"), "--q", "40"});
  EXPECT_EQ(r40.status, 0);
  auto r80 = run({"probe", data_path("fig2.json"), "--q", "80", "--json"});
  EXPECT_EQ(r80.status, 1);
  auto j = nlohmann::json::parse(r80.out);
  EXPECT_EQ(j["counterexample_det"], "40");
  auto lcm = run({"probe", data_path("squares.json"), "--trials", "50"});
  EXPECT_EQ(lcm.status, 0);
}

TEST(Cli, DeterministicAndConsistentAcrossFormats) {
  std::vector<std::string> args{"probe", data_path("k4.json"), "--trials", "100", "--seed", "5"};
  EXPECT_EQ(run(args).out, run(args).out);
  auto text = run({"check-basis", data_path("fig2.json"), "--basis", "1,1,1;0,4,4;0,0,10"});
  auto json = run({"check-basis", data_path("fig2.json"), "--basis", "1,1,1;0,4,4;0,0,10", "--json"});
  EXPECT_EQ(text.status, json.status);
  EXPECT_TRUE(contains(text.out, nlohmann::json::parse(json.out)["verdict"].get<std::string>()));
}

TEST(Cli, VertexOrder) {
  auto r = run({"verify", data_path("fig2.json"), "--vertex-order", "v3,v1,v2", "--spline", "5,3,15"});
  EXPECT_EQ(r.status, 0);
  auto f = run({"flowup", data_path("fig2.json"), "--vertex-order", "3,1,2"});
  EXPECT_EQ(f.status, 0);
  EXPECT_TRUE(contains(f.out, "det: 40"));
  auto bad = run({"flowup", data_path("fig2.json"), "--vertex-order", "v1,v9,v2"});
  EXPECT_EQ(bad.status, 2);
}

TEST(Cli, Errors) {
  EXPECT_EQ(run({}).status, 2);
  EXPECT_EQ(run({"frobnicate"}).status, 2);
  EXPECT_EQ(run({"q", "/nonexistent/graph.json"}).status, 2);
  auto pe = run({"verify", data_path("fig2.json"), "--spline", "1,2,x"});
  EXPECT_EQ(pe.status, 2);
  EXPECT_TRUE(contains(pe.err, "position 4"));
  EXPECT_EQ(run({"verify", data_path("fig2.json")}).status, 2);
}
