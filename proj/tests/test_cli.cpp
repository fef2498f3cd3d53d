#include "doctest.h"

#include <algorithm>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
  std::string out;
  int code = -1;
};

Run run(const std::string& args) {
  Run r;
  FILE* p = popen((std::string("'") + COCENTER_CLI + "' " + args + " 2>&1").c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

bool has(const Run& r, const std::string& s) { return r.out.find(s) != std::string::npos; }

}  // namespace

TEST_CASE("newton point of the GL5 element") {
  auto r = run("newton \"t[1,1,0,1,0]*s2*s1*s4\" --group GL5");
  CHECK(r.code == 0);
  CHECK(has(r, "nu = (2/3,2/3,2/3,1/2,1/2)"));
}

TEST_CASE("verify newton on SL2") {
  auto r = run("verify newton --group A1 --length 4");
  CHECK(r.code == 0);
  CHECK(has(r, "strata_sizes=5/2/2"));
  CHECK(has(r, "verify newton: PASS"));
}

TEST_CASE("reduce ends at S0") {
  auto r = run("reduce \"S1*S0*S1\"");
  CHECK(r.code == 0);
  CHECK(has(r, "end t[1]*s1  [S0]"));
}

TEST_CASE("json lines") {
  auto r = run("newton t[1] t[0]*s1 --json");
  CHECK(r.code == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 2);
  CHECK(r.out.front() == '{');
}

TEST_CASE("exit codes") {
  auto parse = run("newton \"t[1,,\"");
  CHECK(parse.code == 2);
  CHECK(has(parse, "<elem>"));
  CHECK(run("describe --group Z3").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("positivity \"t[-1]\" --v \"(1)\"").code == 2);
  CHECK(run("levi describe").code == 2);
  CHECK(run("--help").code == 0);
}
