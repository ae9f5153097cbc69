#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <regex>
#include <string>
#include <sys/wait.h>

namespace {

struct RunResult {
  int exitCode = -1;
  std::string output;
};

RunResult run_cli(const std::string& args, bool muteStderr = true) {
  std::string cmd = std::string(PTGEOM_CLI_PATH) + " " + args;
  cmd += muteStderr ? " 2>/dev/null" : " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  while (std::size_t got = fread(buf, 1, sizeof buf, pipe)) r.output.append(buf, got);
  int status = pclose(pipe);
  r.exitCode = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string write_temp(const std::string& name, const std::string& content) {
  std::string path = "/tmp/" + name;
  std::ofstream out(path);
  REQUIRE(out.good());
  out << content;
  return path;
}

std::string strip_wall_millis(std::string text) {
  static const std::regex pattern("\"wallMillis\": [0-9]+");
  return std::regex_replace(text, pattern, "\"wallMillis\": 0");
}

}  // namespace

TEST_CASE("single-case verify emits a one-entry json report") {
  RunResult r = run_cli("verify pt-sum --case six-ordered-pairs --format json");
  CHECK(r.exitCode == 0);
  auto j = nlohmann::json::parse(r.output);
  REQUIRE(j.at("entries").size() == 1);
  CHECK(j["entries"][0]["name"] == "pt-sum/six-ordered-pairs");
  CHECK(j["entries"][0]["status"] == "pass");
  CHECK(j["entries"][0].contains("wallMillis"));
  CHECK(j.at("toolVersion") == "0.1.0");
  CHECK(j.at("inputDigest").get<std::string>().size() > 0);
}

TEST_CASE("identical invocations are byte-identical modulo wallMillis") {
  RunResult a = run_cli("verify relations --format json");
  RunResult b = run_cli("verify relations --format json");
  CHECK(a.exitCode == 0);
  CHECK(b.exitCode == 0);
  CHECK(strip_wall_millis(a.output) == strip_wall_millis(b.output));
  auto ja = nlohmann::json::parse(a.output);
  auto jb = nlohmann::json::parse(b.output);
  CHECK(ja.at("inputDigest") == jb.at("inputDigest"));
}

TEST_CASE("suite reports carry every declared case in registry order") {
  RunResult r = run_cli("verify plate --format json");
  CHECK(r.exitCode == 0);
  auto j = nlohmann::json::parse(r.output);
  REQUIRE(j.at("entries").size() == 3);
  CHECK(j["entries"][0]["name"] == "plate/extreme-rays");
  CHECK(j["entries"][1]["name"] == "plate/redundancy");
  CHECK(j["entries"][2]["name"] == "plate/cone-descriptions");
  // Both cone description forms are printed with the plate suite.
  std::string witness = j["entries"][2]["witness"];
  CHECK(witness.find("\"ineq\"") != std::string::npos);
  CHECK(witness.find("\"eq\"") != std::string::npos);
  CHECK(witness.find("\"rays\"") != std::string::npos);
}

TEST_CASE("text format prints one line per check") {
  RunResult r = run_cli("verify corollary");
  CHECK(r.exitCode == 0);
  CHECK(r.output.find("[pass] corollary/edge-directions") != std::string::npos);
  CHECK(r.output.find("[pass] corollary/weight-perm-growth") != std::string::npos);
  CHECK(r.output.find("2 checks, 2 passed, 0 failed") != std::string::npos);
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run_cli("verify bogus-suite").exitCode == 2);
  CHECK(run_cli("verify relations --case no-such-case").exitCode == 2);
  CHECK(run_cli("frobnicate").exitCode == 2);
  CHECK(run_cli("").exitCode == 2);
  CHECK(run_cli("sum nine").exitCode == 2);
  CHECK(run_cli("sum nine --constraints /tmp/definitely-missing.json").exitCode == 2);
  CHECK(run_cli("polytope edges --target unknown-polytope").exitCode == 2);
}

TEST_CASE("polytope edges writes the dot file") {
  std::string dot = "/tmp/ptgeom_cli_weightperm.dot";
  std::remove(dot.c_str());
  RunResult r = run_cli("polytope edges --target weight-perm --dot " + dot +
                        " --format json");
  CHECK(r.exitCode == 0);
  auto j = nlohmann::json::parse(r.output);
  CHECK(j.at("vertexCount") == 90);
  CHECK(j.at("edgeCount") == 360);
  std::ifstream in(dot);
  REQUIRE(in.good());
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  CHECK(text.rfind("graph G {", 0) == 0);
  std::size_t links = 0;
  for (std::size_t pos = text.find(" -- "); pos != std::string::npos;
       pos = text.find(" -- ", pos + 1))
    ++links;
  CHECK(links == 360);
}

TEST_CASE("polytope growth and support and lumping reports") {
  RunResult hex = run_cli("polytope growth --target hexagon --format json");
  CHECK(hex.exitCode == 0);
  auto jh = nlohmann::json::parse(hex.output);
  CHECK(jh.at("counts") == nlohmann::json({1, 6, 12, 18, 24, 30, 36, 42, 48}));
  CHECK(jh.at("numeratorAtRank") == nlohmann::json({1, 4, 1}));

  RunResult dil = run_cli("polytope growth --target dilation --format json");
  CHECK(dil.exitCode == 0);
  auto jd = nlohmann::json::parse(dil.output);
  CHECK(jd.at("numerator") == nlohmann::json({1, 6, 16, 6, 1}));
  CHECK(jd.at("numeratorReproducesCounts") == true);

  RunResult sup = run_cli("polytope support --target newton-c --format json");
  CHECK(sup.exitCode == 0);
  CHECK(nlohmann::json::parse(sup.output).at("supportEqualsOrbit") == true);

  RunResult ctl = run_cli("polytope support --target control --format json");
  CHECK(ctl.exitCode == 0);
  CHECK(nlohmann::json::parse(ctl.output).at("supportEqualsOrbit") == false);

  RunResult lump = run_cli("polytope lumping --target newton-c --format json");
  CHECK(lump.exitCode == 0);
  CHECK(nlohmann::json::parse(lump.output).at("imagePoints").size() == 6);
}

TEST_CASE("nine-particle sum over a constraint file") {
  std::string path = write_temp(
      "ptgeom_cli_embedded.json",
      R"({"n": 9, "positionPairs": [[1,2],[1,4],[6,2],[6,4],[2,3],[2,5],[4,3],[4,5]]})");
  RunResult r = run_cli("sum nine --constraints " + path + " --format json");
  CHECK(r.exitCode == 0);
  auto j = nlohmann::json::parse(r.output);
  CHECK(j.at("termCount") == 4032);
  CHECK(j.at("distinctCycles") == 2688);
  CHECK(j.at("groupCount") == 2688);
  CHECK(j.at("survivingGroups") == 2688);
  CHECK(j.at("folded") == false);

  std::string triples = write_temp(
      "ptgeom_cli_triples.json",
      R"({"n": 9, "tripleCycles": [[1,2,3],[2,5,6],[3,4,6],[4,5,1]]})");
  RunResult t = run_cli("sum nine --constraints " + triples + " --format json");
  CHECK(t.exitCode == 0);
  auto jt = nlohmann::json::parse(t.output);
  CHECK(jt.at("termCount") == jt.at("distinctCycles"));
  CHECK(jt.at("termCount").get<long long>() > 0);
  CHECK(jt.at("survivingGroups").get<long long>() <= jt.at("groupCount").get<long long>());

  std::string wrongN =
      write_temp("ptgeom_cli_wrongn.json", R"({"n": 6, "positionPairs": []})");
  CHECK(run_cli("sum nine --constraints " + wrongN).exitCode == 2);
}

TEST_CASE("jacobian seed points can come from a file") {
  std::string path = write_temp(
      "ptgeom_cli_seeds.json",
      R"([[1,2,3,5,7,11],[1,2,4,8,16,32],[0,1,3,7,12,20],[2,3,5,7,11,13],[1,-1,2,-2,3,-3]])");
  RunResult r = run_cli("verify jacobian --seed-points " + path + " --format json");
  CHECK(r.exitCode == 0);
  auto j = nlohmann::json::parse(r.output);
  CHECK(j.at("entries").size() == 3);
  for (const auto& e : j["entries"]) CHECK(e.at("status") == "pass");

  std::string bad = write_temp("ptgeom_cli_badseeds.json", R"([[1,2,3]])");
  CHECK(run_cli("verify jacobian --seed-points " + bad).exitCode == 2);
}

TEST_CASE("verify all passes end to end") {
  RunResult r = run_cli("verify all --format json");
  CHECK(r.exitCode == 0);
  auto j = nlohmann::json::parse(r.output);
  CHECK(j.at("entries").size() == 26);
  for (const auto& e : j["entries"]) CHECK(e.at("status") == "pass");
}
