#include "plucker/cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace plucker;
using Json = nlohmann::json;

namespace {

cli::Response run(const std::string& command, const std::string& polygon, const std::string& format = "",
                  bool advisory = false) {
  cli::Request r;
  r.command = command;
  r.polygon_source = polygon;
  r.format = format;
  r.advisory = advisory;
  std::istringstream in;
  return cli::run(r, in);
}

}  // namespace

TEST_CASE("report") {
  const auto res = run("report", "[[0,0],[5,0],[0,5]]");
  CHECK(res.exit_code == 0);
  const auto j = Json::parse(res.output);
  CHECK(j["inflections"] == 45);
  CHECK(j["bitangents"] == 120);
  CHECK(j["vol"] == "25/2");
  CHECK(j["vertical_tangents"] == 20);
  CHECK(j["polygon"] == Json::parse("[[0,0],[5,0],[0,5]]"));

  const auto small = Json::parse(run("report", "[[0,0],[1,0],[0,2]]").output);
  CHECK(small["bitangents"].is_number_integer());
  CHECK(small["dual_vol"].is_string());
}

TEST_CASE("report round-trips through its own polygon") {
  for (const char* p : {"[[0,0],[3,0],[3,4],[0,4]]", "[[2,1],[0,0],[5,3],[1,4]]", "[[0,0],[0,1],[1,1]]"}) {
    const auto first = run("report", p);
    const auto again = run("report", Json::parse(first.output)["polygon"].dump());
    CHECK(first.output == again.output);
  }
}

TEST_CASE("dual") {
  const auto j = Json::parse(run("dual", "[[0,0],[0,1],[1,1]]").output);
  const auto fan = Json::parse(R"j({"(0,-1)":2,"(1,1)":1,"(-1,1)":1})j");
  CHECK(j["dual_fan"] == fan);
  CHECK(j["dual_polygon"] == Json::parse("[[0,0],[2,0],[1,1]]"));
}

TEST_CASE("assumptions") {
  const auto j = Json::parse(run("assumptions", "[[0,3],[1,0],[2,0]]").output);
  CHECK(j["a2"] == "FailsKnown");
  CHECK(j["thin_triangle"]["k"] == 1);
  CHECK_FALSE(j["evidence"].empty());
  CHECK(Json::parse(run("assumptions", "[[0,0],[5,0],[0,5]]").output)["all_verified"] == true);
}

TEST_CASE("verify") {
  const auto ok = run("verify", "[[0,0],[3,0],[3,4],[0,4]]");
  CHECK(ok.exit_code == 0);
  const auto j = Json::parse(ok.output);
  CHECK(j["status"] == "pass");
  CHECK(j["checks"][0]["formula"] == 51);
  CHECK(j["checks"][0]["oracle"] == 51);

  // Unverified assumptions: the oracle only runs on request.
  const auto skipped = run("verify", "[[0,0],[2,0],[0,2]]");
  CHECK(skipped.exit_code == 0);
  CHECK(Json::parse(skipped.output)["status"] == "skipped");
  const auto advisory = run("verify", "[[0,0],[2,0],[0,2]]", "json", true);
  CHECK(advisory.exit_code == 0);
  CHECK(Json::parse(advisory.output)["advisory"] == true);

  // A thin triangle has an inflection point at infinity, so the torus count
  // falls short of the formula.
  const auto thin = run("verify", "[[0,3],[1,0],[2,0]]", "json", true);
  CHECK(thin.exit_code == 3);
  CHECK(Json::parse(thin.output)["status"] == "mismatch");

  // Every sample of a line has a Hessian sharing its component.
  const auto line = run("verify", "[[1,0],[2,0],[1,1]]", "json", true);
  CHECK(line.exit_code == 4);
  CHECK(Json::parse(line.output).contains("error"));
}

TEST_CASE("implicitize") {
  const auto res = run("implicitize", "[[0,0],[0,1],[1,1]]");
  CHECK(res.exit_code == 0);
  const auto j = Json::parse(res.output);
  CHECK(j["matches"] == true);
  CHECK(j["kernel_dimension"] == 1);
  CHECK(j["coefficients"].size() == 4);
}

TEST_CASE("render") {
  const auto res = run("render", "[[0,0],[0,1],[1,1]]");
  CHECK(res.exit_code == 0);
  CHECK(res.output.rfind("<svg", 0) == 0);
  CHECK(res.output.find("<polygon") != std::string::npos);
  CHECK(res.output.find("w=2") != std::string::npos);
  CHECK(run("render", "[[0,0],[0,1],[1,1]]", "json").exit_code == 2);
  CHECK(run("report", "[[0,0],[0,1],[1,1]]", "svg").exit_code == 2);
}

TEST_CASE("polygon sources") {
  const std::string path = "test_cli_polygon.json";
  {
    std::ofstream f(path);
    f << "[[0,0],[5,0],[0,5]]\n";
  }
  CHECK(Json::parse(run("report", path).output)["inflections"] == 45);
  std::remove(path.c_str());

  cli::Request r;
  r.command = "report";
  r.polygon_source = "-";
  std::istringstream in("[[0,0],[3,0],[0,3]]");
  CHECK(Json::parse(cli::run(r, in).output)["inflections"] == 9);
}

TEST_CASE("input errors") {
  for (const char* bad : {"[[0,0],[1", "[[0,0],[1.5,2]]", "[]", "no/such/file.json"}) {
    const auto res = run("report", bad);
    CHECK(res.exit_code == 2);
    CHECK(Json::parse(res.output).contains("error"));
  }
  // One-dimensional polygons have no curve counts.
  CHECK(run("report", "[[0,0],[3,0]]").exit_code == 2);
  CHECK(run("frobnicate", "[[0,0],[1,0],[0,1]]").exit_code == 2);
  const auto text = run("report", "[[0,0],[1", "text");
  CHECK(text.output.rfind("error: ", 0) == 0);
}

TEST_CASE("text format") {
  const auto res = run("report", "[[0,0],[5,0],[0,5]]", "text");
  CHECK(res.output.find("inflections: 45\n") != std::string::npos);
  CHECK(res.output.find("vol: 25/2\n") != std::string::npos);
}
