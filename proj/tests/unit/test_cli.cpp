#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "tuvote/cli.hpp"

using Json = nlohmann::json;

namespace {

const std::string kFixtures = TUVOTE_FIXTURE_DIR;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = tuvote::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return kFixtures + "/" + name; }

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("tuvote_test_" + name)).string();
}

}  // namespace

TEST_CASE("solve with audit on E1") {
  Run r = run({"solve", "--rule", "cc", "--k", "1", "--weights", "borda", "--input", fixture("E1.prof"), "--audit"});
  REQUIRE(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["objective"] == "7");
  CHECK(j["committee"] == Json::array({"b"}));
  CHECK(j["lp_integral"] == true);
  CHECK(j["oracle"]["match"] == true);
  CHECK(j["oracle"]["value"] == "7");
  CHECK(j["input"]["digest"].get<std::string>().rfind("fnv1a64:", 0) == 0);
  CHECK(j.contains("timings"));
}

TEST_CASE("oracle fields appear only with --audit") {
  Run r = run({"solve", "--rule", "cc", "--input", fixture("E1.prof")});
  REQUIRE(r.code == 0);
  CHECK_FALSE(Json::parse(r.out).contains("oracle"));
}

TEST_CASE("Young on E3 reports the formulation gap") {
  Run r = run({"young", "--candidate", "a", "--input", fixture("E3.prof"), "--audit"});
  REQUIRE(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["ip_objective"] == "2");
  CHECK(j["oracle"]["score"] == 0);
  CHECK(j["oracle"]["match"] == false);
  REQUIRE(j["warnings"].size() == 1);
  CHECK(j["warnings"][0].get<std::string>().rfind("formulation gap", 0) == 0);

  Run strict = run({"young", "--candidate", "a", "--input", fixture("E3.prof"), "--audit", "--strict"});
  CHECK(strict.code == tuvote::cli::kExitMismatch);
}

TEST_CASE("Young on E5 agrees with the oracle") {
  Run r = run({"young", "--candidate", "a", "--input", fixture("E5.prof"), "--audit", "--strict"});
  REQUIRE(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["ip_objective"] == "4");
  CHECK(j["score"] == 1);
  CHECK(j["oracle"]["match"] == true);
  CHECK(j["warnings"].empty());
}

TEST_CASE("infeasible Young program follows the zero convention") {
  std::string path = temp_path("unbeatable.prof");
  std::ofstream(path) << "2\na b\n1: b > a\n1: {a,b}\n";
  Run r = run({"young", "--candidate", "a", "--input", path, "--audit"});
  REQUIRE(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["score"] == 0);
  CHECK(j["note"] == "score undefined; by convention 0");
  CHECK(j["ip_objective"].is_null());
  CHECK(j["oracle"]["match"] == true);
  std::remove(path.c_str());
}

TEST_CASE("recognize the 3-cycle") {
  Run r = run({"recognize", "--input", fixture("cycle3.prof")});
  REQUIRE(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["single_peaked"].is_null());
  CHECK(j["single_crossing"].is_null());
}

TEST_CASE("recognize structured inputs") {
  Json sp = Json::parse(run({"recognize", "--input", fixture("E1.prof")}).out);
  CHECK(sp["single_peaked"] == Json::array({"a", "b", "c"}));
  Json ci = Json::parse(run({"recognize", "--input", fixture("E2.prof")}).out);
  CHECK(ci["input"]["format"] == "approval");
  CHECK(ci["candidate_interval"] == Json::array({"a", "b", "c", "d"}));
}

TEST_CASE("PAV on approvals and the rational encoding") {
  Run r = run({"solve", "--rule", "pav", "--k", "2", "--owa", "1,1/2", "--input", fixture("E2.prof"), "--audit"});
  REQUIRE(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["objective"] == "7/2");
  CHECK(j["rule"]["owa"] == Json::array({"1", "1/2"}));
  CHECK(j["committee"] == Json::array({"b", "c"}));
}

TEST_CASE("egal subcommand") {
  Run r = run({"egal", "--rule", "cc", "--k", "1", "--input", fixture("E1.prof"), "--audit"});
  REQUIRE(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["level"] == "2");
  CHECK(j["committee"] == Json::array({"b"}));
  CHECK(j["oracle"]["match"] == true);
  CHECK(j["relaxations_integral"] == true);
}

TEST_CASE("malformed input and bad flags exit with 2") {
  std::string path = temp_path("broken.prof");
  std::ofstream(path) << "3\na b c\n1: a > b > a\n";
  Run bad = run({"solve", "--rule", "cc", "--input", path});
  CHECK(bad.code == tuvote::cli::kExitUsage);
  CHECK(bad.err.find("line 3") != std::string::npos);
  std::remove(path.c_str());

  CHECK(run({"solve", "--rule", "cc", "--input", fixture("E1.prof"), "--frobnicate"}).code == 2);
  CHECK(run({"solve", "--rule", "pav", "--input", fixture("E1.prof")}).code == 2);
  CHECK(run({"solve", "--rule", "cc", "--k", "9", "--input", fixture("E1.prof")}).code == 2);
  CHECK(run({"solve", "--rule", "cc", "--input", "/nonexistent/file"}).code == 2);
  CHECK(run({"young", "--candidate", "z", "--input", fixture("E1.prof")}).code == 2);
  CHECK(run({"solve", "--rule", "cc", "--strict", "--input", fixture("E1.prof")}).code == 2);
  CHECK(run({"nonsense"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("reports are reproducible modulo timings") {
  std::vector<std::string> args{"solve", "--rule", "owa", "--k", "2", "--owa", "constant", "--input",
                                fixture("E5.prof"), "--audit", "--recognize"};
  Json a = Json::parse(run(args).out), b = Json::parse(run(args).out);
  a.erase("timings");
  b.erase("timings");
  CHECK(a.dump() == b.dump());

  args.push_back("--no-timings");
  CHECK(run(args).out == run(args).out);
}

TEST_CASE("gen is reproducible and records its seed") {
  Run a = run({"gen", "--kind", "sp", "--m", "5", "--n", "7", "--seed", "9"});
  Run b = run({"gen", "--kind", "sp", "--m", "5", "--n", "7", "--seed", "9"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);

  std::string path = temp_path("gen.prof");
  Run g = run({"gen", "--kind", "ci", "--m", "5", "--n", "7", "--seed", "9", "--output", path});
  REQUIRE(g.code == 0);
  Json j = Json::parse(g.out);
  CHECK(j["seed"] == 9);
  CHECK(j["axis"].size() == 5);
  Json rec = Json::parse(run({"recognize", "--input", path}).out);
  CHECK_FALSE(rec["candidate_interval"].is_null());
  std::remove(path.c_str());
}

TEST_CASE("bench emits one CSV row per trial") {
  Run r = run({"bench", "--kind", "sp", "--rule", "cc", "--k", "2", "--m", "5", "--n", "8", "--trials", "6"});
  REQUIRE(r.code == 0);
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "m,n,k,rule,lp_integral,pivots,branch_nodes,micros");
  int rows = 0;
  while (std::getline(lines, line)) {
    CHECK(line.rfind("5,8,2,cc,true,", 0) == 0);
    ++rows;
  }
  CHECK(rows == 6);

  Run y = run({"bench", "--kind", "sc", "--rule", "young", "--m", "4", "--n", "6", "--trials", "3"});
  CHECK(y.code == 0);
  CHECK(y.out.find(",young,true,") != std::string::npos);
  CHECK(run({"bench", "--kind", "sp", "--rule", "pav"}).code == 2);
}

TEST_CASE("matrix subcommands") {
  std::string path = temp_path("cycle.mat");
  std::ofstream(path) << "3 3\n1 1 0\n0 1 1\n1 0 1\n";
  Json tu = Json::parse(run({"matrix", "tu", "--input", path}).out);
  CHECK(tu["verdict"] == "not_tu");
  CHECK(std::abs(tu["witness"]["det"].get<int>()) == 2);
  Json c1p = Json::parse(run({"matrix", "c1p", "--input", path}).out);
  CHECK(c1p["c1p"] == false);
  std::remove(path.c_str());

  Run sp = run({"matrix", "sp", "--input", fixture("E1.prof"), "--ones-row"});
  REQUIRE(sp.code == 0);
  CHECK(sp.out.rfind("10 3\n1 0 0\n", 0) == 0);

  std::string mat = temp_path("sp.mat");
  std::ofstream(mat) << sp.out;
  Json verdict = Json::parse(run({"matrix", "tu", "--input", mat, "--reduce"}).out);
  CHECK(verdict["verdict"] == "tu");
  std::remove(mat.c_str());

  Run ip = run({"matrix", "ip", "--input", fixture("E3.prof"), "--candidate", "a"});
  CHECK(ip.out == "2 3\n0 0 1\n1 1 0\n");
  CHECK(run({"matrix", "sc", "--input", fixture("E3.prof")}).code == 0);
}

TEST_CASE("LP export") {
  std::string path = temp_path("e2.lp");
  Run r = run({"solve", "--rule", "pav", "--k", "2", "--input", fixture("E2.prof"), "--emit-lp", path});
  REQUIRE(r.code == 0);
  std::ifstream in(path);
  std::stringstream text;
  text << in.rdbuf();
  CHECK(text.str().find("Maximize") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("input digest") {
  CHECK(tuvote::cli::input_digest("") == "cbf29ce484222325");
  CHECK(tuvote::cli::input_digest("a") == "af63dc4c8601ec8c");
}
