#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hesse_moore/serialize.hpp"
#include "hesse_moore/ulrich.hpp"

using namespace hesse_moore;

TEST_CASE("triples") {
  Modulus m(13);
  CHECK(parse_triple("1,2,3", m) == make_triple(m, 1, 2, 3));
  CHECK(parse_triple(" 0, -1 ,14", m) == make_triple(m, 0, 12, 1));
  CHECK(parse_int_list("-1,0,1") == std::vector<std::int64_t>{-1, 0, 1});
  CHECK_THROWS_AS(parse_triple("1,2", m), PreconditionError);
  CHECK_THROWS_AS(parse_triple("1,2,x", m), PreconditionError);
  CHECK_THROWS_AS(parse_triple("1,,3", m), PreconditionError);
}

TEST_CASE("points and curves") {
  Modulus m(13);
  ProjectivePoint p(make_triple(m, 2, 4, 6));
  CHECK(to_json(p).dump() == "[1,2,3]");
  CHECK(point_from_json(to_json(p), m) == p);
  CHECK(to_json(HesseCurve(Fp(m, 6))).dump() == R"({"lambda":6,"p":13})");
  CHECK_THROWS_AS(point_from_json(json::array({1, 2}), m), PreconditionError);
}

TEST_CASE("matrices round-trip") {
  Modulus m(13);
  Matrix a(m, {{1, 2}, {3, 12}});
  CHECK(matrix_from_json(to_json(a), m) == a);
  CHECK_THROWS_AS(matrix_from_json(json::parse("[[1,2],[3]]"), m), PreconditionError);

  MatrixFactorization f = moore_factorization(make_triple(m, 1, 2, 3));
  CHECK(form_matrix_from_json(to_json(f.A()), m) == f.A());
  CHECK(form_matrix_from_json(to_json(f.B()), m) == f.B());
  FormMatrix zero(m, 3, 2);
  CHECK(form_matrix_from_json(to_json(zero), m, 2) == zero);
  CHECK(to_json(f.A())[0][1] == "2*x2");
  CHECK_THROWS_AS(form_matrix_from_json(json::parse(R"([["x0","x1^2"],["0","0"]])"), m), DegreeMismatch);
  CHECK_THROWS_AS(form_matrix_from_json(json::parse(R"([["x0","x1"]])"), m), PreconditionError);
}
