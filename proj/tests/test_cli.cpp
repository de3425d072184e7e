#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "fixtures.hpp"
#include "ncnodal/cli.hpp"

using namespace ncnodal;

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run(const std::vector<std::string>& args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  int code = run_cli(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
  auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream f(path);
  f << text;
  return path.string();
}

}  // namespace

TEST_CASE("usage errors exit 64") {
  CHECK(run({}).code == 64);
  CHECK(run({"frobnicate"}).code == 64);
  CHECK(run({"ag"}).code == 64);
  CHECK(run({"modify", "three", "-", "--at", "v"}).code == 64);
  CHECK(run({"eliminate-redundant", "-", "--wrong", "a"}).code == 64);
}

TEST_CASE("parse errors exit 2") {
  RunResult r = run({"ag", "-"}, "quiver Q\nvertex !\n");
  CHECK(r.code == 2);
  CHECK(r.err.find("parse error") != std::string::npos);
  CHECK(run({"validate", "-"}, "garbage\n").code == 2);
}

TEST_CASE("gentle-gated commands exit 1 on non-gentle input") {
  RunResult fixture = run({"fixture", "gamma22q", "1"});
  REQUIRE(fixture.code == 0);
  CHECK(run({"ag", "-"}, fixture.out).code == 1);
  CHECK(run({"surface", "-"}, fixture.out).code == 1);
}

TEST_CASE("ag of upsilon_1 pipes through stdin") {
  RunResult fixture = run({"fixture", "upsilon", "1"});
  REQUIRE(fixture.code == 0);
  RunResult ag = run({"ag", "-"}, fixture.out);
  CHECK(ag.code == 0);
  CHECK(ag.out == "phi 1 3 2\nthreads 2 arrows 6\n");
}

TEST_CASE("surface of the transcribed AG example 2") {
  std::string path = write_temp("ag2.quiver", fixtures::kAgExample2);
  RunResult r = run({"surface", path});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "genus 1\nboundary 2\neuler -2\ncomponent 1 -1\ncomponent 3 -3\n");
  RunResult ag = run({"ag", path});
  CHECK(ag.code == 0);
  CHECK(ag.out == "phi 1 2 1\nphi 3 6 1\nthreads 4 arrows 8\n");
}

TEST_CASE("output bytes are deterministic") {
  std::string path = write_temp("intro1.quiver", fixtures::kIntroExample1);
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"ag", path},
        std::vector<std::string>{"gentle", path},
        std::vector<std::string>{"surface", path},
        std::vector<std::string>{"validate", path}}) {
    RunResult a = run(args);
    RunResult b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("build-lambda | ag equals cross-validate") {
  std::string curve =
      "curve\ncomponent 1 p 3 2\ntie x:1:1:+ ~ x:1:1:-\n"
      "tie x:1:3:+ ~ x:1:2:-\n";
  std::string path = write_temp("intro1.curve", curve);
  RunResult lambda = run({"build-lambda", path});
  REQUIRE(lambda.code == 0);
  RunResult piped = run({"ag", "-"}, lambda.out);
  RunResult cross = run({"cross-validate", path});
  CHECK(piped.code == 0);
  CHECK(cross.code == 0);
  CHECK(piped.out == cross.out);
}

TEST_CASE("validate reports each document kind") {
  RunResult q = run({"validate", "-"}, fixtures::kKronecker);
  CHECK(q.code == 0);
  CHECK(q.out.find("kind quiver") == 0);
  RunResult c = run({"validate", "-"}, "curve\ncomponent 1 p 2 2\n");
  CHECK(c.code == 0);
  CHECK(c.out.find("kind curve") == 0);
  RunResult n = run({"validate", "-"}, "nodal\nomega 1 2\ntie 1 ~ 2\n");
  CHECK(n.code == 0);
  CHECK(n.out.find("kind nodal") == 0);
  RunResult bad = run({"validate", "-"}, "curve\ncomponent 1 p 1 1\n"
                                         "tie x:1:1:+ ~ x:1:2:-\n");
  CHECK(bad.code == 1);
}

TEST_CASE("gentle report on a non-gentle fixture exits 0") {
  RunResult fixture = run({"fixture", "deg_tubular"});
  RunResult r = run({"gentle", "-"}, fixture.out);
  CHECK(r.code == 0);
  CHECK(r.out.find("gentle no") == 0);
  CHECK(r.out.find("non-monomial-relation") != std::string::npos);
}

TEST_CASE("nodal-report of the Zhelobenko order") {
  RunResult r = run({"nodal-report", "-"},
                    "nodal\nomega 1 2 3\nsigma 1 -> 1 2 -> 3 3 -> 2\n"
                    "tie 1 ~ 2\n");
  CHECK(r.code == 0);
  CHECK(r.out.find("cover 1 : 1\n") != std::string::npos);
  CHECK(r.out.find("cover 2 : 1 1\n") != std::string::npos);
  CHECK(r.out.find("connected yes\n") != std::string::npos);
  CHECK(r.out.find("center t 2\n") != std::string::npos);
}

TEST_CASE("admissible reports weights or rejection") {
  RunResult yes = run({"admissible", "-"},
                      "curve\ncomponent 1 p 3 2\ntie x:1:1:+ ~ x:1:1:-\n");
  CHECK(yes.code == 0);
  CHECK(yes.out.find("admissible yes\n") == 0);
  CHECK(yes.out.find("total p1 ") != std::string::npos);
  RunResult no = run({"admissible", "-"},
                     "curve\ncomponent 1 p 2 1\ntie x:1:1:+ ~ x:1:1:-\n");
  CHECK(no.code == 0);
  CHECK(no.out == "admissible no\n");
}

TEST_CASE("modify and eliminate-redundant rewrite through the CLI") {
  std::string path = write_temp("modone.quiver", fixtures::kModOneInput);
  RunResult r = run({"modify", "one", path, "--at", "j1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("arrow x1_1 : s -> j1") != std::string::npos);
  RunResult missing = run({"modify", "one", path, "--at", "s"});
  CHECK(missing.code == 1);

  std::string degtub = run({"build-lambda", "-"},
                           "curve\ncomponent 1 q 1\nrefl w:1:1\n")
                           .out;
  std::string dpath = write_temp("degtub.quiver", degtub);
  RunResult blow = run({"modify", "two", dpath, "--at", "bw1_1_p"});
  CHECK(blow.code == 0);
  // either vertex of the blow-up pair addresses the site
  RunResult blow2 = run({"modify", "two", dpath, "--at", "bw1_1_m"});
  CHECK(blow2.code == 0);
  CHECK(blow2.out == blow.out);
  RunResult elim = run({"eliminate-redundant", dpath, "--arrow", "w1_1"});
  CHECK(elim.code == 0);
  CHECK(elim.out.find("arrow w1_1 ") == std::string::npos);
}

TEST_CASE("fixture errors") {
  CHECK(run({"fixture", "unknown_name"}).code == 1);
  CHECK(run({"fixture", "tubular", "1"}).code == 1);
  CHECK(run({"fixture", "upsilon", "0"}).code == 1);
}

TEST_CASE("missing file is a domain error") {
  CHECK(run({"ag", "/nonexistent/file.quiver"}).code == 1);
}
