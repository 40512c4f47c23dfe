#include <doctest.h>

#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "fracchern/cli.hpp"

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "fracchern");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = fracchern::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const char* name) { return std::string(FRACCHERN_FIXTURES) + "/" + name; }

}  // namespace

TEST_CASE("frac-chern") {
  auto r = run({"frac-chern", "--n", "4", "--l", "2", "--k", "2", "--oracle"});
  CHECK(r.code == 0);
  CHECK(r.out == "closed: e2 - 3/2*a*e1 + 3/2*a^2\nbrute:  e2 - 3/2*a*e1 + 3/2*a^2\nMATCH\n");
  CHECK(run({"frac-chern", "--n", "4", "--l", "2", "--k", "1"}).out == "e1 - 2*a\n");
  auto roots = run({"frac-chern", "--n", "2", "--l", "2", "--k", "1", "--basis", "roots"});
  CHECK(roots.out == "x2 + x1 - a\n");
}

TEST_CASE("change-triv and universal") {
  CHECK(run({"change-triv", "--n", "4", "--l", "2", "--k", "2"}).out == "f2 - 3/2*x*f1 + 3/2*x^2\n");
  CHECK(run({"universal", "--map", "phi", "--n", "2", "--l", "2", "--k", "1"}).out == "c1 - g\n");
  CHECK(run({"universal", "--map", "phi2", "--n", "4", "--l", "2", "--k", "2"}).out == "c2 - 3/2*cb1^2\n");
  CHECK(run({"universal", "--map", "xi2", "--n", "2", "--l", "2", "--k", "2"}).out == "z2 + 1/2*zb1*c1\n");
  CHECK(run({"universal", "--map", "lphi2", "--n", "4", "--l", "2", "--k", "2"}).out == "z2 + zb1*cb1\n");
  CHECK(run({"universal", "--map", "psi", "--n", "2", "--l", "2", "--k", "1"}).code == 1);
  CHECK(run({"universal", "--map", "lphi2", "--n", "2", "--l", "2", "--k", "1"}).code == 2);
}

TEST_CASE("transgress") {
  CHECK(run({"transgress", "--space", "BUn", "--expr", "c1^2", "--n", "2"}).out == "2*z1*c1\n");
  CHECK(run({"transgress", "--space", "BSpinc", "--expr", "q1"}).out == "mu - sp1*t\n");
  CHECK(run({"transgress", "--space", "BUn_l", "--expr", "c2", "--n", "4", "--l", "2"}).out == "z2 + 4*zb1*cb1\n");
  auto bad = run({"transgress", "--space", "BUn", "--expr", "c1 +", "--n", "2"});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("parse error") != std::string::npos);
  CHECK(run({"transgress", "--space", "Bfoo", "--expr", "c1"}).code == 1);
  CHECK(run({"transgress", "--space", "BUn", "--expr", "c3", "--n", "3"}).code == 2);
}

TEST_CASE("obstruction and count") {
  auto su = fixture("su_simply_connected.json");
  auto r = run({"obstruction", "--level", "fracSU", "--descriptor", su});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "level: fracSU\nupstairs: 0\ndownstairs: 0\nvanishes: yes\ncompatible: yes\n"
        "consequence: a = (1/s) c1(E): PASS\n"
        "consequence: pi*(c2^{l,a}) = f2^a*(phi2*(c2Q)): PASS\n");
  auto u = run({"obstruction", "--level", "fracU6", "--descriptor", su});
  CHECK(u.out == "level: fracU6\nupstairs: y4\ndownstairs: m4\nvanishes: no\ncompatible: yes\n");
  auto loop = run({"obstruction", "--level", "loopU", "--descriptor", fixture("loop_lens.json")});
  CHECK(loop.out.find("converse: undecidable at ring level\n") != std::string::npos);
  CHECK(run({"obstruction", "--level", "loopU", "--descriptor", su}).code == 2);

  CHECK(run({"count", "--level", "fracU6", "--descriptor", su}).out == "Z\n");
  CHECK(run({"count", "--level", "fracSU", "--descriptor", su}).out == "0\n");
  CHECK(run({"count", "--level", "loopSU", "--descriptor", fixture("u6_torus.json")}).out == "Z^3 + Z/2\n");
  CHECK(run({"count", "--level", "fracU7", "--descriptor", su}).code == 1);
  CHECK(run({"count", "--level", "fracSU", "--descriptor", fixture("missing.json")}).code == 1);
}

TEST_CASE("gch") {
  auto r = run({"gch", "--kind", "theta3", "--n", "1", "--l", "1", "--q-order", "1", "--degree-cap", "4",
                "--method", "both"});
  CHECK(r.code == 0);
  CHECK(r.out == "q^0: 1\nq^1/2: 2 + x1^2 - 2*a*x1 + a^2\nmethods: MATCH\n");
  auto d = run({"gch", "--kind", "theta3", "--n", "1", "--l", "1", "--q-order", "1/2", "--degree-cap", "4",
                "--descend"});
  CHECK(d.out == "q^0: 1\nq^1/2: 2 + f1^2\n");
  auto nm = run({"gch", "--kind", "theta2", "--n", "2", "--l", "2", "--q-order", "1", "--degree-cap", "4",
                 "--normalize", "--descend"});
  CHECK(nm.out == "q^0: 1\nq^1/2: 2*f2 - f1^2\nq^1: 4*f2 - 2*f1^2\n");
  CHECK(run({"gch", "--kind", "theta5", "--n", "1"}).code == 1);
  CHECK(run({"gch", "--kind", "theta3", "--n", "1", "--q-order", "1/3"}).code == 1);
  CHECK(run({"gch", "--kind", "theta3", "--n", "1", "--q-order", "0"}).code == 2);
}

TEST_CASE("usage errors and determinism") {
  CHECK(run({}).code == 1);
  CHECK(run({"frac-chern", "--n", "3"}).code == 1);
  CHECK(run({"frac-chern", "--n", "3", "--l", "2", "--k", "1"}).code == 2);
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({"--help"}).code == 0);
  std::vector<std::string> args{"gch", "--kind", "theta2", "--n", "2", "--l", "1", "--q-order", "2"};
  CHECK(run(args).out == run(args).out);
}

TEST_CASE("degree cap from the environment") {
  setenv("FRACCHERN_DEGREE_CAP", "4", 1);
  auto r = run({"gch", "--kind", "theta3", "--n", "1", "--l", "1", "--q-order", "1/2"});
  CHECK(r.out == "q^0: 1\nq^1/2: 2 + x1^2 - 2*a*x1 + a^2\n");
  setenv("FRACCHERN_DEGREE_CAP", "four", 1);
  CHECK(run({"frac-chern", "--n", "2", "--l", "1", "--k", "1"}).code == 1);
  unsetenv("FRACCHERN_DEGREE_CAP");
}

TEST_CASE("verify") {
  auto r = run({"verify", "--max-n", "4", "--q-order", "2"});
  CHECK(r.code == 0);
  int lines = 0;
  for (char c : r.out) lines += c == '\n';
  CHECK(lines == 10);
  CHECK(r.out.find("FAIL") == std::string::npos);
}
