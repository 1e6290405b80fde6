#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "support/procutil.hpp"

namespace {

using tgftest::CommandResult;
using tgftest::run_command;

std::string cli_path() {
  const char* path = std::getenv("TGF_CLI");
  REQUIRE(path != nullptr);
  return std::string(path);
}

// Single-quote for the shell; our JSON never contains single quotes.
std::string shq(const std::string& s) {
  REQUIRE(s.find('\'') == std::string::npos);
  return "'" + s + "'";
}

CommandResult cli(const std::string& args) {
  return run_command(shq(cli_path()) + " " + args);
}

// Same invocation but capturing stderr instead of stdout.
CommandResult cli_stderr(const std::string& args) {
  return run_command(shq(cli_path()) + " " + args + " 2>&1 1>/dev/null");
}

const std::string kDoubler =
    R"({"type":"F","l":0,"r":1,"breaks":[{"x":"0","y":"0"},{"x":"1","y":"2"}]})";
const std::string kHalfShift =
    R"({"type":"TLike","L":"0","R":"0","core":[{"x":"-1","y":"-1/2^1"},{"x":"1","y":"3/2^1"}]})";
const std::string kTranslate1 =
    R"({"type":"F","l":1,"r":1,"breaks":[{"x":"0","y":"1"}]})";
const std::string kRevWord = R"({"factors":[{"kind":"rev"}]})";
const std::string kMatrixM = "[[0,-1],[-1,0]]";

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("validate echoes canonical form") {
  CommandResult r = cli("validate --element " + shq(kDoubler));
  CHECK(r.exit_code == 0);
  CHECK(r.out == kDoubler + "\n");

  r = cli("validate --element " + shq(kHalfShift));
  CHECK(r.exit_code == 0);
  CHECK(r.out == kHalfShift + "\n");

  // Lenient input: non-canonical dyadic text and a collinear break.
  const std::string loose =
      R"({"type":"F","l":0,"r":1,"breaks":[{"x":"0","y":"0"},{"x":"2/2^2","y":"1"},{"x":"1","y":"2"}]})";
  r = cli("validate --element " + shq(loose));
  CHECK(r.exit_code == 0);
  CHECK(r.out == kDoubler + "\n");
}

TEST_CASE("eval in both output modes") {
  CommandResult r = cli("eval --element " + shq(kDoubler) + " --x 1/2^1");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "1\n");

  r = cli("--output json eval --element " + shq(kDoubler) + " --x 3/2^2");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "{\"y\":\"3/2^1\"}\n");

  r = cli("eval --element " + shq(kHalfShift) + " --x -100");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "-199/2^1\n");
}

TEST_CASE("compose, invert, and the @file convention") {
  const std::filesystem::path tmp =
      std::filesystem::temp_directory_path() / "tgf_cli_test_doubler.json";
  {
    std::ofstream out(tmp);
    out << kDoubler;
  }

  CommandResult r = cli("compose --f @" + tmp.string() + " --h " + shq(kDoubler));
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        R"({"type":"F","l":0,"r":2,"breaks":[{"x":"0","y":"0"},{"x":"1/2^1","y":"2"},{"x":"1","y":"3"}]})"
        "\n");
  std::filesystem::remove(tmp);

  r = cli("invert --element " + shq(kDoubler));
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        R"({"type":"F","l":0,"r":-1,"breaks":[{"x":"0","y":"0"},{"x":"2","y":"1"}]})"
        "\n");

  r = cli("invert --element " + shq(kHalfShift));
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        R"({"type":"TLike","L":"0","R":"1/2^1","core":[{"x":"-1","y":"-3/2^1"},{"x":"3/2^1","y":"1"}]})"
        "\n");
}

TEST_CASE("ab, rev, conjugate, aut-apply") {
  CommandResult r = cli("ab --element " + shq(kTranslate1));
  CHECK(r.exit_code == 0);
  CHECK(r.out == "(1,1)\n");

  r = cli("--output json ab --element " + shq(kTranslate1));
  CHECK(r.exit_code == 0);
  CHECK(r.out == "{\"l\":1,\"r\":1}\n");

  r = cli("rev --element " + shq(kTranslate1));
  CHECK(r.exit_code == 0);
  CHECK(r.out == R"({"type":"F","l":-1,"r":-1,"breaks":[]})"
                     "\n");

  r = cli("conjugate --f " + shq(kDoubler) + " --g " + shq(kHalfShift));
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        R"({"type":"F","l":0,"r":1,"breaks":[{"x":"1/2^1","y":"1/2^1"},{"x":"3/2^1","y":"5/2^1"}]})"
        "\n");

  // A plain F conjugator is embedded automatically.
  r = cli("conjugate --f " + shq(kDoubler) + " --g " + shq(kTranslate1));
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        R"({"type":"F","l":0,"r":1,"breaks":[{"x":"1","y":"1"},{"x":"2","y":"3"}]})"
        "\n");

  r = cli("aut-apply --word " + shq(kRevWord) + " --element " + shq(kTranslate1));
  CHECK(r.exit_code == 0);
  CHECK(r.out == R"({"type":"F","l":-1,"r":-1,"breaks":[]})"
                     "\n");
}

TEST_CASE("linear algebra subcommands") {
  CommandResult r = cli("h1-matrix --word " + shq(kRevWord));
  CHECK(r.exit_code == 0);
  CHECK(r.out == "[[0,-1],[-1,0]]\n");

  r = cli("--output json h1-matrix --word " + shq(kRevWord));
  CHECK(r.exit_code == 0);
  CHECK(r.out == R"({"rows":2,"cols":2,"entries":["0","-1","-1","0"]})"
                     "\n");

  r = cli("snf --matrix " + shq("[[1,1],[1,1]]"));
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        "u = [[1,0],[-1,1]]\n"
        "d = [[1,0],[0,0]]\n"
        "v = [[1,-1],[0,1]]\n");

  r = cli("reidemeister --matrix " + shq(kMatrixM));
  CHECK(r.exit_code == 0);
  CHECK(r.out == "INFINITE\n");

  r = cli("--output json reidemeister --matrix " + shq(kMatrixM));
  CHECK(r.exit_code == 0);
  CHECK(r.out == "{\"infinite\":true}\n");

  r = cli("reidemeister --matrix " + shq("[[0,-1],[1,0]]"));
  CHECK(r.exit_code == 0);
  CHECK(r.out == "2\n");

  r = cli("--output json reidemeister --matrix " + shq("[[0,-1],[1,0]]"));
  CHECK(r.exit_code == 0);
  CHECK(r.out == "{\"infinite\":false,\"count\":\"2\"}\n");

  r = cli("twisted-equiv --matrix " + shq(kMatrixM) + " --u [0,3] --v [0,5]");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "false\n");

  r = cli("twisted-equiv --matrix " + shq(kMatrixM) + " --u [0,3] --v [0,3]");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "true\n");

  r = cli("class-rep --matrix " + shq(kMatrixM) + " --v [0,3]");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "(0,3)\n");

  r = cli("--output json class-rep --matrix " + shq(kMatrixM) + " --v [0,3]");
  CHECK(r.exit_code == 0);
  CHECK(r.out == R"(["0","3"])"
                     "\n");
}

TEST_CASE("exit codes and machine-readable errors") {
  const std::string bad_slope =
      R"({"type":"F","l":0,"r":2,"breaks":[{"x":"0","y":"0"},{"x":"1","y":"3"}]})";
  CommandResult r = cli("validate --element " + shq(bad_slope));
  CHECK(r.exit_code == 1);
  CHECK(r.out.empty());

  r = cli_stderr("validate --element " + shq(bad_slope));
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("\"error\":\"bad_slope\"") != std::string::npos);
  CHECK(r.out.find("\"detail\":") != std::string::npos);

  r = cli_stderr("validate --element " + shq("{broken"));
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("\"error\":\"parse_error\"") != std::string::npos);

  r = cli_stderr("no-such-command");
  CHECK(r.exit_code == 2);
  CHECK(r.out.find("\"error\":\"usage\"") != std::string::npos);

  r = cli_stderr("eval --element " + shq(kDoubler));  // missing --x
  CHECK(r.exit_code == 2);
  CHECK(r.out.find("\"error\":\"usage\"") != std::string::npos);

  r = cli("--help");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("demo-theorem") != std::string::npos);
}

TEST_CASE("demo is deterministic for a fixed seed") {
  const std::string base = "THOMPSON_TWIST_SEED=2026 " + shq(cli_path()) +
                           " demo-theorem --gamma-bound 8 --spot-checks 3";
  CommandResult first = run_command(base);
  CommandResult second = run_command(base);
  CHECK(first.exit_code == 0);
  CHECK(second.exit_code == 0);
  CHECK(first.out == second.out);
  CHECK(first.out.find("M = [[0,-1],[-1,0]]") != std::string::npos);
  CHECK(first.out.find("reidemeister(M) = INFINITE") != std::string::npos);
  CHECK(first.out.find("verdict:") != std::string::npos);

  CommandResult other =
      run_command("THOMPSON_TWIST_SEED=7 " + shq(cli_path()) +
                  " demo-theorem --gamma-bound 8 --spot-checks 3");
  CHECK(other.exit_code == 0);
  CHECK(other.out != first.out);
  CHECK(other.out.find("seed 7") != std::string::npos);
}

}  // TEST_SUITE
