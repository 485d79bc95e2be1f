#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "typeb/cli.hpp"

using namespace typeb;

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string golden(const std::string& name) {
  const std::string path = std::string(TYPEB_GOLDEN_DIR) + "/" + name;
  std::ifstream in(path, std::ios::binary);
  REQUIRE_MESSAGE(in.good(), "missing golden file ", path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("enumeration output matches the golden listings") {
  const RunResult nc = run({"nc-enumerate", "--n", "4", "--format", "plain"});
  CHECK(nc.code == 0);
  CHECK(nc.err.empty());
  CHECK(nc.out == golden("nc_enumerate_n4.txt"));

  const RunResult ncb = run({"ncb-enumerate", "--n", "2", "--format", "plain"});
  CHECK(ncb.code == 0);
  CHECK(ncb.out == golden("ncb_enumerate_n2.txt"));
}

TEST_CASE("lattice queries") {
  const RunResult kr = run({"kreweras", "--p", "1,2|3"});
  CHECK(kr.code == 0);
  CHECK(kr.out == golden("kreweras_12_3.json"));

  const RunResult mu = run({"moebius", "--lower", "1|2|3|4", "--upper", "1,2,3,4",
                            "--format", "plain"});
  CHECK(mu.code == 0);
  CHECK(mu.out == golden("moebius_n4.txt"));
}

TEST_CASE("transform subcommands") {
  const RunResult m2c = run({"m2c", "--moments", "1,1;2,4;5,15;14,56"});
  CHECK(m2c.code == 0);
  CHECK(m2c.out == golden("m2c_semicircle.json"));

  const RunResult box = run({"boxconv", "--f", "1/2,-1/3;2,1;0,1", "--g", "1,0;-1/2,3;1/5,0",
                             "--format", "plain"});
  CHECK(box.code == 0);
  CHECK(box.out == golden("boxconv_frozen.txt"));

  const RunResult s = run({"s-transform", "--f", "1,0;1,0;0,0;0,0", "--format", "plain"});
  CHECK(s.code == 0);
  CHECK(s.out == golden("s_transform_catalan.txt"));
}

TEST_CASE("m2c and c2m are mutually inverse through the command line") {
  const RunResult there = run({"m2c", "--moments", "1,2;0,1;3,-1", "--format", "plain"});
  REQUIRE(there.code == 0);
  // captured cumulants: (1, 2); (-1, -3); (5, 8)
  CHECK(there.out == "(1, 2)\n(-1, -3)\n(5, 8)\n");
  const RunResult back = run({"c2m", "--cumulants", "1,2;-1,-3;5,8", "--format", "plain"});
  REQUIRE(back.code == 0);
  CHECK(back.out == "(1, 2)\n(0, 1)\n(3, -1)\n");
}

TEST_CASE("limit subcommands") {
  const RunResult clt = run({"clt", "--order", "6", "--variance", "1,1", "--format", "plain"});
  CHECK(clt.code == 0);
  CHECK(clt.out == golden("clt_order6.txt"));

  const RunResult hankel = run({"hankel", "--format", "plain"});
  CHECK(hankel.code == 0);
  CHECK(hankel.out == golden("hankel_default.txt"));
  CHECK(contains(hankel.out, "FAILS"));

  const RunResult poisson = run({"poisson", "--rate", "0,1", "--jump", "1,1", "--order", "3",
                                 "--summands", "2,4", "--format", "plain"});
  CHECK(poisson.code == 0);
  CHECK(poisson.out == golden("poisson_nilpotent.txt"));

  const RunResult arcsine = run({"arcsine", "--order", "20", "--format", "plain"});
  CHECK(arcsine.code == 0);
  CHECK(arcsine.out == "holds: true\n");

  const RunResult square = run({"semicircle-square", "--sigma", "1,0", "--order", "4",
                                "--format", "plain"});
  CHECK(square.code == 0);
  CHECK(contains(square.out, "holds: true"));
}

TEST_CASE("json output carries the schema marker") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"nc-enumerate", "--n", "3"},
           {"c2m", "--cumulants", "1,0;1,0"},
           {"bernoulli", "--order", "3"},
           {"arcsine"},
       }) {
    const RunResult r = run(args);
    CHECK(r.code == 0);
    CHECK(contains(r.out, "\"schema\": 1"));
  }
}

TEST_CASE("output redirection") {
  const std::string path = "cli_out_test.json";
  const RunResult r = run({"--out", path, "kreweras", "--p", "1,2|3"});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  in.close();
  CHECK(buf.str() == golden("kreweras_12_3.json"));
  std::remove(path.c_str());
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"no-such-command"}).code == 2);
  CHECK(run({"nc-enumerate"}).code == 2);                        // missing --n
  CHECK(run({"--format", "yaml", "nc-enumerate", "--n", "3"}).code == 2);
  const RunResult r = run({"kreweras"});
  CHECK(r.code == 2);
  CHECK(contains(r.err, "usage error"));
  CHECK(r.out.empty());
}

TEST_CASE("domain errors exit with 1") {
  const RunResult crossing = run({"kreweras", "--p", "1,3|2,4"});
  CHECK(crossing.code == 1);
  CHECK(contains(crossing.err, "error:"));
  CHECK(contains(crossing.err, "crosses"));

  const RunResult bad_rational = run({"m2c", "--moments", "1,x"});
  CHECK(bad_rational.code == 1);
  CHECK(contains(bad_rational.err, "error:"));

  const RunResult too_big = run({"nc-enumerate", "--n", "20"});
  CHECK(too_big.code == 1);
  CHECK(contains(too_big.err, "cap"));

  const RunResult bad_interval =
      run({"moebius", "--lower", "1,2|3", "--upper", "1|2,3"});
  CHECK(bad_interval.code == 1);

  const RunResult zero_den = run({"c2m", "--cumulants", "1/0,0"});
  CHECK(zero_den.code == 1);
}

TEST_CASE("help exits cleanly") {
  const RunResult top = run({"--help"});
  CHECK(top.code == 0);
  CHECK(contains(top.out, "nc-enumerate"));
  const RunResult sub = run({"kreweras", "--help"});
  CHECK(sub.code == 0);
  CHECK(contains(sub.out, "--p"));
}

TEST_CASE("identity suite reports the open failure") {
  const RunResult r = run({"verify-paper", "--format", "plain"});
  CHECK(r.code == 1);
  CHECK(contains(r.out, "[FAIL] 10."));
  CHECK(contains(r.out, "1 of 13 criteria fail"));
  for (int id : {1, 2, 3, 4, 5, 6, 7, 8, 9, 11, 12, 13})
    CHECK(contains(r.out, "[PASS] " + std::to_string(id) + ". "));
}
