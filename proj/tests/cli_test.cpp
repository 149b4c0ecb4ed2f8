#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cstdio>
#include <string>

namespace {

struct RunResult {
  int exit_code;
  std::string output;  // stdout + stderr
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(GARSIDE_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("reduce") {
  RunResult r = run_cli("reduce --monoid H \"g1 g2 g4\"");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "g2 g1 g2\n");
  r = run_cli("reduce --monoid F --trace \"g1 g3\"");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "pos 0: g1 g3 -> g2 g1\ng2 g1\n");
}

TEST_CASE("equal") {
  RunResult r = run_cli("equal --monoid H \"g2 g1\" \"g1 g3\"");
  CHECK(r.exit_code == 1);
  CHECK(r.output == "false\n");
  r = run_cli("equal --monoid F \"g2 g1\" \"g1 g3\"");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "true\n");
  r = run_cli("equal --monoid H --method reversing \"g1 g2 g4\" \"g2 g1 g2\"");
  CHECK(r.exit_code == 0);
  r = run_cli("equal --monoid H --method oracle \"g1 g2 g4\" \"g2 g1 g2\"");
  CHECK(r.exit_code == 0);
  r = run_cli(
      "equal --monoid H --json \"g2 g1\" \"g1 g3\"");
  CHECK(r.exit_code == 1);
  CHECK(r.output ==
        "{\"command\":\"equal\",\"monoid\":\"H\",\"u\":\"g2 g1\",\"v\":\"g1 g3\","
        "\"method\":\"nf\",\"result\":false,\"status\":\"ok\"}\n");
}

TEST_CASE("divides") {
  RunResult r = run_cli("divides --monoid H g2 \"g1 g2 g4\"");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "true quotient: g1 g2\n");
  r = run_cli("divides --monoid H g3 \"g1 g2 g4\"");
  CHECK(r.exit_code == 1);
  CHECK(r.output == "false\n");
  r = run_cli("divides --monoid H --json g2 \"g1 g2 g4\"");
  CHECK(r.output ==
        "{\"command\":\"divides\",\"monoid\":\"H\",\"a\":\"g2\",\"b\":\"g1 g2 g4\","
        "\"result\":true,\"quotient\":\"g1 g2\",\"status\":\"ok\"}\n");
}

TEST_CASE("lcm") {
  RunResult r = run_cli("lcm --monoid H g1 g2");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "g1 g2 g4\n");
  r = run_cli("lcm --monoid F --left g1 g2");
  CHECK(r.exit_code == 1);
  CHECK(r.output == "none\n");
  r = run_cli("lcm --monoid F --left g1 g4");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "g3 g1\n");
  r = run_cli("lcm --monoid H --left g1 g2");
  CHECK(r.exit_code == 2);
}

TEST_CASE("reverse") {
  RunResult r = run_cli("reverse --monoid F g2 \"g1 g3\"");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "status: complete\nu1: e\nv1: g1\ncells: 2\n");
  r = run_cli("reverse --monoid H g2 g1 --render ascii");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("status: complete") != std::string::npos);
  CHECK(r.output.find("g4") != std::string::npos);
  r = run_cli("reverse --monoid H g2 g1 --render tikz");
  CHECK(r.output.find("tikzpicture") != std::string::npos);
  r = run_cli("reverse --monoid H --left g6 \"g1 g2 g4\"");
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("status: stuck") != std::string::npos);
  r = run_cli("reverse --monoid F --left g1 g4");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "status: complete\nu1: g1\nv1: g3\ncells: 1\n");
  r = run_cli("reverse --monoid H --budget 1 \"g1 g2 g4\" \"g2 g1 g2\"");
  CHECK(r.exit_code == 3);
}

TEST_CASE("class") {
  RunResult r = run_cli("class --monoid H \"g1 g2 g4\"");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "g1 g2 g4\ng2 g1 g2\n");
  r = run_cli("class --monoid F --budget 2 \"g1 g3 g5\"");
  CHECK(r.exit_code == 3);
}

TEST_CASE("simples") {
  RunResult r = run_cli("simples --monoid H --n 3");
  CHECK(r.exit_code == 0);
  CHECK(r.output ==
        "e  index=1 type=0\n"
        "g1  index=2 type=0\n"
        "g2  index=3 type=I\n"
        "g1 g2  index=3 type=II1\n"
        "g2 g1  index=3 type=I\n"
        "g2 g1 g2  index=3 type=II2\n");
  r = run_cli("simples --monoid H --n 3 --json");
  CHECK(r.exit_code == 0);
  CHECK(r.output ==
        "{\"command\":\"simples\",\"monoid\":\"H\",\"n\":\"3\",\"method\":\"forbidden-factors\","
        "\"result\":[{\"nf\":\"e\",\"length\":0,\"index\":1,\"type\":\"0\"},"
        "{\"nf\":\"g1\",\"length\":1,\"index\":2,\"type\":\"0\"},"
        "{\"nf\":\"g2\",\"length\":1,\"index\":3,\"type\":\"I\"},"
        "{\"nf\":\"g1 g2\",\"length\":2,\"index\":3,\"type\":\"II1\"},"
        "{\"nf\":\"g2 g1\",\"length\":2,\"index\":3,\"type\":\"I\"},"
        "{\"nf\":\"g2 g1 g2\",\"length\":3,\"index\":3,\"type\":\"II2\"}],"
        "\"status\":\"ok\"}\n");
  r = run_cli("simples --monoid F --n 3 --method bfs-reversing");
  CHECK(r.exit_code == 0);
  r = run_cli("simples --monoid H --n 3.5 --method bfs-reversing");
  CHECK(r.exit_code == 0);
  r = run_cli("simples --monoid H --n 3 --method oracle");
  CHECK(r.exit_code == 0);
}

TEST_CASE("triangle") {
  RunResult r = run_cli("triangle --nmax 5 --csv");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "1,1\n1,2,2,1\n1,3,5,5,3,1\n1,4,9,13,13,9,4,1\n");
  r = run_cli("triangle --nmax 3 --json");
  CHECK(r.exit_code == 0);
  CHECK(r.output ==
        "{\"command\":\"triangle\",\"nmax\":3,\"result\":[{\"n\":2,\"counts\":[1,1]},"
        "{\"n\":3,\"counts\":[1,2,2,1]}],\"status\":\"ok\"}\n");
}

TEST_CASE("greedy") {
  RunResult r = run_cli("greedy --monoid F \"g4 g3 g2 g3 g1 g1 g2\"");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "g4 g3 g2 | g3 g1 | g1 | g2\n");
  r = run_cli("greedy --monoid H \"g2 g1\"");
  CHECK(r.exit_code == 2);
}

TEST_CASE("perm-word") {
  RunResult r = run_cli("perm-word 1,2");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "g1 g3\n");
  r = run_cli("perm-word 2,1");
  CHECK(r.output == "g2 g1\n");
  r = run_cli("perm-word 2,2");
  CHECK(r.exit_code == 2);
}

TEST_CASE("rho") {
  RunResult r = run_cli("rho --word g1 --eval 3,4");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("3 -> 1") != std::string::npos);
  CHECK(r.output.find("4 -> 3") != std::string::npos);
  r = run_cli("rho --word g1 --eval 3 --json");
  CHECK(r.output ==
        "{\"command\":\"rho\",\"word\":\"g1\",\"map\":\"1->1 2->2 3->1 k->k-1 for k>3\","
        "\"result\":[{\"k\":3,\"value\":1}],\"status\":\"ok\"}\n");
}

TEST_CASE("rho-tilde") {
  RunResult r = run_cli("rho-tilde --word g1 --dim 5");
  CHECK(r.exit_code == 0);
  CHECK(r.output ==
        "1, 0, 0, 0, 0\n"
        "t, 1-t, 0, 0, 0\n"
        "1+t, -t, 0, 0, 0\n"
        "0, 0, 1, 0, 0\n"
        "0, 0, 0, 1, 0\n");
  r = run_cli("rho-tilde --word g1 --dim 5 --t 0");
  CHECK(r.output.find("0, 1, 0, 0, 0") != std::string::npos);
  r = run_cli("rho-tilde --word g3 --dim 5");
  CHECK(r.exit_code == 2);
}

TEST_CASE("verify scoped run") {
  RunResult r = run_cli("verify words");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("PASS") != std::string::npos);
  CHECK(r.output.find("all checks passed") != std::string::npos);
  r = run_cli("verify rewrite");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("E_H local confluence window 30 : PASS") != std::string::npos);
  r = run_cli("verify garside");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("divisors(H,4) = 18 : PASS") != std::string::npos);
  CHECK(run_cli("verify bogus").exit_code == 2);
}

TEST_CASE("usage errors") {
  CHECK(run_cli("").exit_code == 2);
  CHECK(run_cli("frobnicate").exit_code == 2);
  CHECK(run_cli("reduce --monoid X g1").exit_code == 2);
  CHECK(run_cli("reduce --monoid H g0").exit_code == 2);
  CHECK(run_cli("--help").exit_code == 0);
}
