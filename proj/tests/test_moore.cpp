#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "hesse_moore/hesse.hpp"

using namespace hesse_moore;

namespace {

Triple random_triple(Modulus m, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> d(0, static_cast<std::int64_t>(m.value()) - 1);
  return {Fp(m, d(rng)), Fp(m, d(rng)), Fp(m, d(rng))};
}

HomForm x(Modulus m, int i) { return HomForm::variable(m, i); }

} // namespace

TEST_CASE("projective points") {
  Modulus m(13);
  ProjectivePoint p(make_triple(m, 2, 4, 6));
  CHECK(p == ProjectivePoint(make_triple(m, 1, 2, 3)));
  CHECK(p[0].value() == 1);
  ProjectivePoint q(make_triple(m, 0, 5, 3));
  CHECK(q[0].is_zero());
  CHECK(q[1].value() == 1);
  CHECK(q == ProjectivePoint(make_triple(m, 0, 1, 11)));
  CHECK_THROWS_AS(ProjectivePoint(make_triple(m, 0, 0, 0)), PreconditionError);
  CHECK(iota(p) == ProjectivePoint(make_triple(m, 1, 3, 2)));
  CHECK(p.to_string() == "[1:2:3]");
}

TEST_CASE("Moore matrix entries") {
  Modulus m(13);
  Triple e0 = make_triple(m, 1, 0, 0);
  FormMatrix mx = moore(e0);
  HomForm zero(m, 1);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      bool on = (i == 0 && j == 0) || (i == 1 && j == 2) || (i == 2 && j == 1);
      if (!on)
        CHECK(mx(i, j) == zero);
    }
  CHECK(mx(0, 0) == x(m, 0));
  CHECK(mx(1, 2) == x(m, 2));
  CHECK(mx(2, 1) == x(m, 1));

  std::mt19937_64 rng(11);
  for (int k = 0; k < 50; ++k) {
    Triple a = random_triple(m, rng);
    FormMatrix ma = moore(a);
    // a_{i+j} x_{i-j}
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        CHECK(ma(i, j) == scale(a[mod3(i + j)], x(m, mod3(i - j))));
    CHECK(ma.transpose() == moore(a, iota(coordinate_forms(m))));
    Fp mu(m, 5);
    CHECK(moore(scaled(mu, a)) == ma.scaled(mu));
    Triple b = random_triple(m, rng);
    CHECK(moore_at(a, b) == ma.evaluate(b));
  }
}

TEST_CASE("adjugate and determinant") {
  Modulus m(13);
  Triple a = make_triple(m, 2, 5, 7);
  FormMatrix adj = moore_adjugate(a);
  CHECK(adj(0, 0) == scale(a[1] * a[2], x(m, 0) * x(m, 0)) - scale(a[0] * a[0], x(m, 1) * x(m, 2)));
  Triple e0 = make_triple(m, 1, 0, 0);
  CHECK(moore_adjugate(e0) == moore(e0).cofactor_adjugate3());
  CHECK(moore_adjugate(e0)(0, 0) == -(x(m, 1) * x(m, 2)));

  CHECK(moore_det(make_triple(m, 1, 1, 1)) == parse_form("x0^3 + x1^3 + x2^3 - 3*x0*x1*x2", m));
  HomForm d0 = moore_det(e0);
  CHECK(d0 == -(x(m, 0) * x(m, 1) * x(m, 2)));

  std::mt19937_64 rng(12);
  for (int k = 0; k < 100; ++k) {
    Triple r = random_triple(m, rng);
    FormMatrix mr = moore(r);
    HomForm det = moore_det(r);
    CHECK(mr.det3() == det);
    CHECK(moore_adjugate(r) == mr.cofactor_adjugate3());
    CHECK(mr * moore_adjugate(r) == FormMatrix::identity_times(det, 3));
    CHECK(moore_adjugate(r) * mr == FormMatrix::identity_times(det, 3));
    // specialization commutes with the adjugate; cross-check with scalar cofactors
    Triple b = random_triple(m, rng);
    CHECK(moore_adjugate_at(r, b) == moore_at(r, b).adjugate());
    CHECK(moore_at(r, b).det() == det.evaluate(b));
  }
}

TEST_CASE("kernel points") {
  Modulus m(13);
  CHECK_THROWS_AS(left_kernel_point(Matrix::identity(m, 3)), PreconditionError);
  CHECK_THROWS_AS(left_kernel_point(Matrix(m, 3, 3)), PreconditionError);

  std::mt19937_64 rng(13);
  int tested = 0;
  while (tested < 100) {
    // rank-2 matrix: third row a combination of the first two
    Matrix r(m, 3, 3);
    Triple u = random_triple(m, rng), v = random_triple(m, rng), c = random_triple(m, rng);
    for (std::size_t j = 0; j < 3; ++j) {
      r(0, j) = u[j];
      r(1, j) = v[j];
      r(2, j) = c[0] * u[j] + c[1] * v[j];
    }
    if (r.rank() != 2)
      continue;
    ++tested;
    ProjectivePoint k = left_kernel_point(r);
    std::vector<Vector> ns = r.nullspace();
    REQUIRE(ns.size() == 1);
    CHECK(ProjectivePoint({ns[0][0], ns[0][1], ns[0][2]}) == k);
    CHECK(right_kernel_point(r) == left_kernel_point(r.transpose()));
    // the right kernel spans the rows of the adjugate
    Matrix adj = r.adjugate();
    for (std::size_t i = 0; i < 3; ++i)
      if (!adj.row(i).empty() && !std::all_of(adj.row(i).begin(), adj.row(i).end(),
                                              [](const Fp& f) { return f.is_zero(); }))
        CHECK(ProjectivePoint({adj(i, 0), adj(i, 1), adj(i, 2)}) == right_kernel_point(r));
  }
}

TEST_CASE("kernels of Moore matrices at curve points") {
  Modulus m(13);
  HesseCurve e(Fp(m, 6));
  for (const ProjectivePoint& a : e.points())
    for (const ProjectivePoint& b : e.points()) {
      Matrix mab = moore_at(a.coords(), b.coords());
      ProjectivePoint c = left_kernel_point(mab);
      CHECK(e.contains(c));
      CHECK(right_kernel_point(mab) == left_kernel_point(moore_at(a.coords(), iota(b.coords()))));
    }
}

TEST_CASE("form matrix algebra") {
  Modulus m(13);
  Triple a = make_triple(m, 1, 2, 3);
  FormMatrix ma = moore(a);
  CHECK(ma.uniform_degree() == 1);
  CHECK((ma - ma).is_zero());
  CHECK(ma.linear_coefficient(0) == moore_at(a, make_triple(m, 1, 0, 0)));
  CHECK(ma.partial(1) == FormMatrix::scalar(ma.linear_coefficient(1)));
  FormMatrix block = FormMatrix::block_upper(ma, ma, ma, 1);
  CHECK(block.size() == 6);
  CHECK(block(3, 0).is_zero());
  CHECK(block(0, 3) == ma(0, 0));
  CHECK_THROWS(FormMatrix(m, 3, 1) * FormMatrix(m, 2, 1));
  CHECK(!pretty(ma).empty());
}
