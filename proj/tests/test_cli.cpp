#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cli.hpp"
#include "hesse_moore/ext.hpp"
#include "hesse_moore/serialize.hpp"

using namespace hesse_moore;
using hesse_moore::cli::run;

namespace {

json result_of(const std::vector<std::string>& args) {
  cli::CommandResult r = run(args);
  INFO(r.err);
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.out);
  REQUIRE(j["status"] == "ok");
  return j["result"];
}

} // namespace

TEST_CASE("hesse commands match the library") {
  Modulus m(13);
  HesseCurve e(Fp(m, 6));
  json add = result_of({"hesse", "add", "--p", "13", "--lambda", "6", "--x", "1,2,3", "--a", "0,1,12"});
  CHECK(add["sum"] == to_json(e.add(ProjectivePoint(make_triple(m, 1, 2, 3)), e.identity())));
  json sub = result_of({"hesse", "sub", "--p", "13", "--lambda", "6", "--x", "1,2,3", "--a", "1,2,3"});
  CHECK(sub["difference"] == to_json(e.identity()));
  json pts = result_of({"hesse", "points", "--p", "13", "--a", "1,2,3"});
  CHECK(pts["count"] == e.points().size());
  CHECK(pts["curve"]["lambda"] == 6);
  json dbl = result_of({"hesse", "double", "--p", "13", "--a", "1,2,3"});
  CHECK(dbl["double"] == to_json(e.double_point(ProjectivePoint(make_triple(m, 1, 2, 3)))));
  json mul = result_of({"hesse", "mul", "--p", "13", "--a", "1,2,3", "--n", "-2"});
  CHECK(mul["product"] == to_json(e.neg(e.double_point(ProjectivePoint(make_triple(m, 1, 2, 3))))));
  CHECK(result_of({"hesse", "torsion3", "--p", "13", "--lambda", "6"})["count"] == 9);
  CHECK(result_of({"hesse", "torsion6", "--p", "13", "--lambda", "6"})["matches_brute_force"] == true);
  json t = result_of({"hesse", "triple", "--p", "13", "--a", "1,2,3"});
  CHECK(t["triple"] == to_json(e.triple_point(ProjectivePoint(make_triple(m, 1, 2, 3)))));
}

TEST_CASE("lambda sign convention") {
  // x0^3 + x1^3 + x2^3 + 7 x0 x1 x2 is the internal lambda = -7 = 6
  json plus = result_of({"hesse", "points", "--p", "13", "--lambda", "7", "--lambda-sign", "plus"});
  CHECK(plus["curve"]["lambda"] == 6);
  cli::CommandResult bad = run({"hesse", "points", "--p", "13", "--lambda", "7", "--lambda-sign", "up"});
  CHECK(bad.exit_code == cli::usage_error);
}

TEST_CASE("moore and heis commands") {
  json det = result_of({"moore", "det", "--p", "13", "--a", "1,1,1"});
  CHECK(det["det"] == "x0^3 + 10*x0*x1*x2 + x1^3 + x2^3");
  CHECK(det["matches_expansion"] == true);
  json k = result_of({"moore", "kernel", "--p", "13", "--a", "1,2,3", "--b", "1,2,3"});
  CHECK(k["rank"] == 2);
  CHECK(k["left"] == json::array({0, 1, 12}));
  CHECK(result_of({"moore", "build", "--p", "13", "--a", "1,0,0"})["matrix"][0][0] == "x0");
  CHECK(result_of({"heis", "orbit", "--p", "13", "--a", "1,2,3"})["count"] == 9);
  CHECK(result_of({"heis", "equiv", "--p", "13", "--a", "1,2,3", "--a2", "3,1,2"})["equivalent"] == true);
  json chi = result_of({"heis", "characters", "--p", "13", "--n", "6", "--j", "1"});
  CHECK(chi["values"].size() == 216);
  CHECK(chi["norm"] == 1);
  CHECK(result_of({"heis", "restrict", "--p", "13", "--n", "6", "--d", "3", "--j", "1"})["holds"] == true);
  CHECK(result_of({"heis", "tensor", "--p", "13"})["holds"] == true);
}

TEST_CASE("ulrich and ext commands") {
  json r2 = result_of({"ulrich", "rank2", "--p", "13", "--a", "1,2,3"});
  CHECK(r2["certified"] == true);
  CHECK(r2["divergence"] == 3);
  CHECK(r2["A"].size() == 6);
  json r1 = result_of({"ulrich", "rank1", "--p", "13", "--a", "1,2,3"});
  Modulus m(13);
  FormMatrix A = form_matrix_from_json(r1["A"], m);
  CHECK(A == moore(make_triple(m, 1, 2, 3)));

  std::string c = r2["C"].dump();
  // C is the upper-right block of A_2, also given separately
  json partner = result_of({"ulrich", "partner", "--p", "13", "--a", "1,2,3", "--C", c});
  CHECK(partner["D"] == r2["D"]);
  json tr = result_of({"ulrich", "trace", "--p", "13", "--a", "1,2,3", "--C", c});
  CHECK(tr["trace_criterion"] == true);
  CHECK(tr["bcb_divisible"] == true);

  cli::CommandResult no = run({"ulrich", "partner", "--p", "13", "--a", "1,2,3", "--C",
                               R"([["x0","0","0"],["0","0","0"],["0","0","0"]])"});
  CHECK(no.exit_code == cli::domain_error);
  CHECK(json::parse(no.out)["error"] == "no extension datum for this C");

  json dims = result_of({"ext", "dims", "--p", "13", "--a", "1,2,3", "--m", "-2,-1,0,1"});
  CHECK(dims == json::parse(R"({"-2":0,"-1":3,"0":1,"1":0})"));
  json basis = result_of({"ext", "basis", "--p", "13", "--a", "1,2,3", "--m", "-1"});
  CHECK(basis["solution_basis"].size() == 3);
  CHECK(result_of({"ext", "class", "--p", "13", "--a", "1,2,3", "--C", c})["divergence"] == 3);
}

TEST_CASE("errors and determinism") {
  CHECK(run({}).exit_code == cli::usage_error);
  CHECK(run({"hesse"}).exit_code == cli::usage_error);
  CHECK(run({"hesse", "add", "--p", "13", "--zzz"}).exit_code == cli::usage_error);
  CHECK(run({"hesse", "add", "--p", "13", "--lambda", "6", "--x", "1,2,3"}).exit_code == cli::usage_error);
  CHECK(run({"hesse", "points", "--p", "12", "--lambda", "1"}).exit_code == cli::domain_error);
  CHECK(run({"ulrich", "trace", "--p", "13", "--a", "1,2,3", "--C", "[[1"}).exit_code == cli::usage_error);
  cli::CommandResult help = run({"--help"});
  CHECK(help.exit_code == 0);
  CHECK(help.out.find("hesse") != std::string::npos);

  std::vector<std::string> args{"ulrich", "rank2", "--p", "13", "--a", "1,2,3"};
  CHECK(run(args).out == run(args).out);
  json timed = json::parse(run({"hesse", "points", "--p", "7", "--lambda", "0", "--timing"}).out);
  CHECK(timed.contains("timing_ms"));
  CHECK_FALSE(json::parse(run(args).out).contains("timing_ms"));
}

TEST_CASE("verify all") {
  json v = result_of({"verify", "all", "--p", "7", "--sequential"});
  CHECK(v["criteria"].size() == 12);
  CHECK(v["failed"] == 0);
  CHECK(v["p"] == 7);
  CHECK(v["q"] == 13);
}
