#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "detspace/cli.hpp"
#include "detspace/io.hpp"

using namespace detspace;

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run(const std::vector<std::string>& args) {
  std::ostringstream o, e;
  int c = cli_run(args, o, e);
  return {c, o.str(), e.str()};
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

std::string tmp_file(const std::string& stem) {
  return "/tmp/detspace_cli_" + stem + ".json";
}

}  // namespace

TEST_CASE("construct then detpoly reproduces the printed formula") {
  std::string f = tmp_file("ex1");
  RunResult c = run({"construct", "ex1", "-o", f});
  REQUIRE(c.code == 0);
  CHECK(contains(c.out, "wrote"));
  RunResult d = run({"detpoly", "-i", f});
  REQUIRE(d.code == 0);
  CHECK(contains(d.out, "x1^2*x2 + x1*x2^2"));
  CHECK(contains(d.out, "seed"));
  CHECK(contains(d.out, "caps"));
}

TEST_CASE("census matches the printed examples") {
  std::string f1 = tmp_file("ex1c"), f2 = tmp_file("ex2c");
  REQUIRE(run({"construct", "ex1", "-o", f1}).code == 0);
  REQUIRE(run({"construct", "ex2", "-o", f2}).code == 0);
  RunResult a = run({"census", "-i", f1, "--json"});
  REQUIRE(a.code == 0);
  Json ja = Json::parse(a.out);
  CHECK(ja["N_affine"] == 4);  // vanishes on all of F_2^2
  CHECK(ja["q"] == 2);
  CHECK(ja["version"].is_string());
  RunResult b = run({"census", "-i", f2, "--json"});
  REQUIRE(b.code == 0);
  Json jb = Json::parse(b.out);
  CHECK(jb["N_affine"] == 9);  // vanishes on all of F_3^2
  CHECK(jb["n"] == 4);
  CHECK(jb["d"] == 2);
}

TEST_CASE("golden pipeline is byte-identical across runs") {
  std::string files[] = {tmp_file("g1"), tmp_file("g2"), tmp_file("g3")};
  REQUIRE(run({"construct", "ex1", "-o", files[0]}).code == 0);
  REQUIRE(run({"construct", "ex2", "-o", files[1]}).code == 0);
  REQUIRE(run({"construct", "ex3", "7", "3", "-o", files[2]}).code == 0);
  for (const std::string& f : files) {
    for (const char* verb : {"detpoly", "census", "classify", "singular"}) {
      RunResult first = run({verb, "-i", f, "--json"});
      RunResult second = run({verb, "-i", f, "--json"});
      CAPTURE(verb);
      CAPTURE(f);
      CHECK(first.code == second.code);
      CHECK(first.out == second.out);
    }
  }
}

TEST_CASE("construct without an output path emits the subspace") {
  RunResult r = run({"construct", "field", "2", "3", "--json"});
  REQUIRE(r.code == 0);
  Json j = Json::parse(r.out);
  REQUIRE(j.contains("subspace"));
  CHECK(j["subspace"]["basis"].size() == 3);
  // the emitted document round-trips through the reader
  MatSubspace sub = json_to_subspace(j["subspace"]);
  CHECK(sub.dim() == 3);
  CHECK(sub.n() == 3);
}

TEST_CASE("charpoly evaluates one element of the span") {
  std::string f = tmp_file("f23");
  REQUIRE(run({"construct", "field", "2", "3", "-o", f}).code == 0);
  RunResult r = run({"charpoly", "-i", f, "--coeffs", "0,1,1"});
  REQUIRE(r.code == 0);
  CHECK(contains(r.out, "y^3 + y + 1"));
  CHECK(contains(r.out, "irreducible"));
  RunResult bad = run({"charpoly", "-i", f, "--coeffs", "0,1"});
  CHECK(bad.code == 2);
  CHECK(contains(bad.err, "coordinates"));
}

TEST_CASE("group reports the commuting algebra and its normalizer") {
  std::string f = tmp_file("f23g");
  REQUIRE(run({"construct", "field", "2", "3", "-o", f}).code == 0);
  RunResult r = run({"group", "-i", f, "--normalizer", "--json"});
  REQUIRE(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["centralizer_dim"] == 3);
  CHECK(j["centralizer_order"] == 7);
  CHECK(j["field_flag"] == true);
  CHECK(j["normalizer_order"] == 21);
  CHECK(j["quotient_order"] == 3);
}

TEST_CASE("pfaffian squares back to the determinant") {
  std::string f = tmp_file("skew34");
  REQUIRE(run({"construct", "skew", "3", "4", "-o", f}).code == 0);
  RunResult r = run({"pfaffian", "-i", f, "--json"});
  REQUIRE(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["square_is_det"] == true);
}

TEST_CASE("rank distribution of an invertible-only space") {
  std::string f = tmp_file("f23r");
  REQUIRE(run({"construct", "field", "2", "3", "-o", f}).code == 0);
  RunResult r = run({"rank", "-i", f, "--json"});
  REQUIRE(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["counts"]["0"] == 1);
  CHECK(j["counts"]["3"] == 7);
  CHECK(j["bounds"].size() >= 1);
}

TEST_CASE("verify single entries and exit codes") {
  std::string f = tmp_file("f23v"), bad = tmp_file("t37");
  REQUIRE(run({"construct", "field", "2", "3", "-o", f}).code == 0);
  REQUIRE(run({"construct", "thm3_7", "2", "2", "-o", bad}).code == 0);
  // a passing check exits 0
  RunResult ok = run({"verify", "--id", "subspace_of_invertibles", "-i", f});
  CHECK(ok.code == 0);
  CHECK(contains(ok.out, "passed"));
  // a failing check exits 1 and names the violated clause
  RunResult no = run({"verify", "--id", "reducible_polynomials", "-i", bad});
  CHECK(no.code == 1);
  CHECK(contains(no.out, "violated"));
  // the arithmetic entry runs without an input file
  RunResult arith = run({"verify", "--id", "relatively_prime"});
  CHECK(arith.code == 0);
  // instance-requiring entries without a file are usage errors
  RunResult miss = run({"verify", "--id", "field_size"});
  CHECK(miss.code == 2);
}

TEST_CASE("catalogue listing") {
  RunResult r = run({"verify", "--list", "--json"});
  REQUIRE(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["catalogue"].size() == 24);
  CHECK(j["catalogue"][0] == "field_size");
}

TEST_CASE("usage and input errors exit 2") {
  CHECK(run({"no_such_verb"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"detpoly", "-i", "/tmp/detspace_does_not_exist.json"}).code == 2);
  CHECK(run({"construct", "no_such_space"}).code == 2);
  CHECK(run({"verify"}).code == 2);  // neither --suite nor --id
  std::string f = tmp_file("both");
  REQUIRE(run({"construct", "ex1", "-o", f}).code == 0);
  CHECK(run({"verify", "--suite", "--id", "field_size", "-i", f}).code == 2);
  // a tight affine cap alone falls back to the projective census
  CHECK(run({"census", "-i", f, "--affine-cap", "2"}).code == 0);
  // capping both enumerations makes the census a hard error
  CHECK(run({"census", "-i", f, "--affine-cap", "2", "--projective-cap", "2"})
            .code == 2);
}

TEST_CASE("help and version exit cleanly") {
  RunResult h = run({"--help"});
  CHECK(h.code == 0);
  CHECK(contains(h.out, "construct"));
  CHECK(contains(h.out, "verify"));
  RunResult v = run({"--version"});
  CHECK(v.code == 0);
  CHECK_FALSE(v.out.empty());
}

TEST_CASE("seed precedence: flag over environment over default") {
  std::string f = tmp_file("seed");
  REQUIRE(run({"construct", "ex1", "-o", f}).code == 0);
  unsetenv("DETSPACE_SEED");
  RunResult dflt = run({"detpoly", "-i", f});
  CHECK(contains(dflt.out, "1 (default)"));
  setenv("DETSPACE_SEED", "99", 1);
  RunResult env = run({"detpoly", "-i", f});
  CHECK(contains(env.out, "99 (env)"));
  RunResult flag = run({"detpoly", "-i", f, "--seed", "5"});
  CHECK(contains(flag.out, "5 (flag)"));
  setenv("DETSPACE_SEED", "not_a_number", 1);
  CHECK(run({"detpoly", "-i", f}).code == 2);
  unsetenv("DETSPACE_SEED");
}
