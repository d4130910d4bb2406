// Drives the installed binary end to end: output shapes, exit codes,
// malformed input handling.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include <nlohmann/json.hpp>

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(HOPFIT_TOOL_PATH) + " " + args + " 2>&1";
  std::array<char, 4096> buffer{};
  RunResult r{-1, {}};
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  while (fgets(buffer.data(), buffer.size(), pipe)) {
    r.out += buffer.data();
  }
  const int status = pclose(pipe);
  r.exit_code = WEXITSTATUS(status);
  return r;
}

std::string data(const std::string& name) {
  return std::string(HOPFIT_DATA_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("validate reports act shape") {
  const RunResult r = run("validate " + data("e7_act.txt"));
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("valid act: size 3") != std::string::npos);
}

TEST_CASE("check fitting prints the per-endomorphism table") {
  const RunResult r = run("check fitting " + data("e7_act.txt"));
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("fitting: holds") != std::string::npos);
  CHECK(r.out.find("per-endomorphism") != std::string::npos);
}

TEST_CASE("check torsion-free fails with exit code 1 and a witness") {
  const RunResult r = run("check torsion-free " + data("t2_act.txt") + " --json");
  CHECK(r.exit_code == 1);
  const auto v = nlohmann::json::parse(r.out);
  CHECK(v["status"] == "fails");
  CHECK(v["witness"]["a"] == 0);
  CHECK(v["witness"]["b"] == 1);
  CHECK(v["witness"]["s"] == 1);
}

TEST_CASE("stab reproduces the chain indices") {
  const RunResult r =
      run("stab " + data("chain3.txt") + " --endo \"2:1 1:0 0:0\"");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("ker_index: 2") != std::string::npos);
  CHECK(r.out.find("im_index: 2") != std::string::npos);
  CHECK(r.out.find("fitting_n: 2") != std::string::npos);
}

TEST_CASE("symbolic witnesses stream as JSON") {
  const RunResult r =
      run("symbolic bicyclic right-hopfian --max-norm 3 --json");
  CHECK(r.exit_code == 1);
  const auto v = nlohmann::json::parse(r.out);
  CHECK(v["status"] == "fails");
  CHECK(v["witness"]["x"] == "b");
}

TEST_CASE("malformed files exit 2 with a position-annotated message") {
  const RunResult r = run("validate /dev/null");
  CHECK(r.exit_code == 2);
  const RunResult bad = run("check hopfian /nonexistent/act.txt");
  CHECK(bad.exit_code == 2);
}

TEST_CASE("cap violations exit 3 naming the flag to raise") {
  const RunResult r = run("census --max-monoid-order 9");
  CHECK(r.exit_code == 3);
  CHECK(r.out.find("--max-monoid-order") != std::string::npos);
}

TEST_CASE("unknown property exits 2 listing the choices") {
  const RunResult r = run("check sparkly " + data("t2_act.txt"));
  CHECK(r.exit_code == 2);
  CHECK(r.out.find("hopfian") != std::string::npos);
}

TEST_CASE("endos and con listings") {
  const RunResult endos = run("endos " + data("t2_act.txt"));
  CHECK(endos.exit_code == 0);
  CHECK(endos.out.find("hom 2 : 0 1") != std::string::npos);
  CHECK(endos.out.find("hom 2 : 1 1") != std::string::npos);
  const RunResult con = run("con " + data("t2_act.txt"));
  CHECK(con.out.find("cong 0 0") != std::string::npos);
  CHECK(con.out.find("cong 0 1") != std::string::npos);
}

TEST_CASE("quotient prints the natural surjection") {
  const RunResult r =
      run("quotient " + data("e7_act.txt") + " --cong \"0 0 1\"");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("act 2") != std::string::npos);
  CHECK(r.out.find("natural surjection") != std::string::npos);
}

TEST_CASE("catalog suite run is green and deterministic") {
  const RunResult a = run("suite --catalog --json --no-timing");
  const RunResult b = run("suite --catalog --json --no-timing");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  const auto report = nlohmann::json::parse(a.out);
  CHECK(report["schema"] == 1);
  CHECK(report["summary"]["passed"] == true);
}
