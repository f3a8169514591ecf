// End-to-end tests of the command line tool. KFLAG_CLI_PATH is injected by
// the build as the path to the built binary.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#ifndef KFLAG_CLI_PATH
#error "KFLAG_CLI_PATH must be defined"
#endif

#ifdef _WIN32
#error "these tests assume a POSIX shell"
#endif
#include <sys/wait.h>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout and stderr combined
};

RunResult run_cli(const std::string& args) {
  static int counter = 0;
  std::string path = std::string("cli_out_") + std::to_string(counter++) + ".txt";
  std::string cmd = std::string(KFLAG_CLI_PATH) + " " + args + " >" + path + " 2>&1";
  int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(path);
  std::ostringstream os;
  os << in.rdbuf();
  r.output = os.str();
  std::remove(path.c_str());
  return r;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("basis values over the command line") {
  auto r = run_cli("psi --type A3 --w '3 2' --v '2 3 2 1 2'");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output,
                 R"({"terms":[{"exp":[1,3,2],"coeff":-1},{"exp":[1,2,1],"coeff":1},)"
                 R"({"exp":[2,4,3],"coeff":1},{"exp":[2,3,2],"coeff":-1}]})"));

  auto zero = run_cli("psi --type A2 --w 1 --v 2");
  CHECK(zero.exit_code == 0);
  CHECK(contains(zero.output, R"({"terms":[]})"));

  auto text = run_cli("psi --type A1 --w 1 --v 1 --output text");
  CHECK(text.exit_code == 0);
  CHECK(contains(text.output, "1 - e^{a1}"));

  auto fund = run_cli("psi --type A1 --w 1 --v 1 --coords fundamental");
  CHECK(fund.exit_code == 0);
  CHECK(contains(fund.output, R"({"exp":[2],"coeff":-1})"));
}

TEST_CASE("graded values over the command line") {
  auto r = run_cli("xi --type A2 --w '1 2' --v '1 2'");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, R"({"terms":[{"exp":[1,1],"coeff":"1"},{"exp":[2,0],"coeff":"1"}]})"));
  auto t = run_cli("xi --type A2 --w '1 2' --v '1 2' --output text");
  CHECK(t.exit_code == 0);
  CHECK(contains(t.output, "a1*a2 + a1^2"));
}

TEST_CASE("structure sheaf tables and coefficients") {
  auto s = run_cli("sigma --type A1 --w 1 --output text");
  CHECK(s.exit_code == 0);
  CHECK(contains(s.output, "e: 1"));
  CHECK(contains(s.output, "1: 1"));

  auto b = run_cli("bcoeff --type A2 --v '1 2'");
  CHECK(b.exit_code == 0);
  CHECK(contains(b.output, R"({"terms":[{"exp":[-1,-1],"coeff":-1},{"exp":[0,0],"coeff":1}]})"));

  auto bw0 = run_cli("bcoeff --type A2 --v '1 2 1' --output text");
  CHECK(bw0.exit_code == 0);
  CHECK(contains(bw0.output, "1"));
}

TEST_CASE("cube basis values") {
  auto r = run_cli("mu --type A2 --word '1 2' --eps 00 --eps-prime 11");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, R"({"terms":[{"exp":[-2,-1],"coeff":1}]})"));
  auto diag = run_cli("mu --type A2 --word '1 2' --eps 11 --eps-prime 01 --output text");
  CHECK(diag.exit_code == 0);
  CHECK(contains(diag.output, "0"));
}

TEST_CASE("root listings") {
  auto r = run_cli("roots --type B2");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, R"("rank":2)"));
  CHECK(contains(r.output, R"("cartan":[[2,-1],[-2,2]])"));
  CHECK(contains(r.output, R"({"root":[1,2],"fundamental":[0,2]})"));

  auto custom = run_cli("roots --matrix '[[2,-2],[-2,2]]'");
  CHECK(custom.exit_code == 0);
  CHECK(contains(custom.output, R"("finite":false)"));

  auto text = run_cli("roots --type A2 --output text");
  CHECK(text.exit_code == 0);
  CHECK(contains(text.output, "3 positive roots"));
}

TEST_CASE("verification suites") {
  auto one = run_cli("verify --type A2 --suite prop1");
  CHECK(one.exit_code == 0);
  CHECK(contains(one.output, "prop1"));
  CHECK(contains(one.output, "PASS"));

  auto js = run_cli("verify --type A2 --suite qw-oracle --output json");
  CHECK(js.exit_code == 0);
  CHECK(contains(js.output, R"("passed":true)"));

  auto relations = run_cli("verify --suite prop2-relations --trials 5");
  CHECK(relations.exit_code == 0);
  CHECK(contains(relations.output, "PASS"));

  auto thm5 = run_cli("theorem5 --type A2");
  CHECK(thm5.exit_code == 0);
  CHECK(contains(thm5.output, "PASS"));

  auto bsv = run_cli("bs-verify --type A2 --word '1 2'");
  CHECK(bsv.exit_code == 0);
  CHECK(contains(bsv.output, "PASS"));
}

TEST_CASE("bad input exits with code 2") {
  CHECK(run_cli("psi --type A2 --w 1").exit_code == 2);          // missing --v
  CHECK(run_cli("psi --w 1 --v 1").exit_code == 2);              // no system
  CHECK(run_cli("psi --type A2 --matrix '[[2]]' --w 1 --v 1").exit_code == 2);
  CHECK(run_cli("roots --type Q7").exit_code == 2);
  CHECK(run_cli("roots --matrix '[[2,-1]]'").exit_code == 2);    // not square
  CHECK(run_cli("roots --matrix 'nonsense'").exit_code == 2);
  CHECK(run_cli("verify --type A2 --suite nope").exit_code == 2);
  CHECK(run_cli("verify --suite prop1").exit_code == 2);         // suite needs a system
  CHECK(run_cli("psi --type A2 --w 9 --v 1").exit_code == 2);    // letter out of range
  CHECK(run_cli("psi --type A2 --w x --v 1").exit_code == 2);
  CHECK(run_cli("mu --type A2 --word '1 2' --eps 0 --eps-prime 11").exit_code == 2);
  CHECK(run_cli("nonsense").exit_code == 2);
  // Infinite type: root listing is fine, but basis values need finite type.
  CHECK(run_cli("bcoeff --matrix '[[2,-2],[-2,2]]' --v 1").exit_code == 2);
}

TEST_CASE("help exits zero") {
  CHECK(run_cli("--help").exit_code == 0);
  CHECK(run_cli("psi --help").exit_code == 0);
}
