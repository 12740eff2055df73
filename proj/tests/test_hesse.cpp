#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "hesse_moore/hesse.hpp"

using namespace hesse_moore;

namespace {

std::vector<ProjectivePoint> sorted(std::vector<ProjectivePoint> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// Independent scan: evaluate f at every normalized point of P^2.
std::vector<ProjectivePoint> brute_points(const HesseCurve& e) {
  Modulus m = e.modulus();
  auto p = static_cast<std::int64_t>(m.value());
  std::vector<ProjectivePoint> out;
  auto test = [&](std::int64_t a, std::int64_t b, std::int64_t c) {
    Fp x(m, a), y(m, b), z(m, c);
    if ((x * x * x + y * y * y + z * z * z - e.lambda() * x * y * z).is_zero())
      out.emplace_back(Triple{x, y, z});
  };
  for (std::int64_t b = 0; b < p; ++b)
    for (std::int64_t c = 0; c < p; ++c)
      test(1, b, c);
  for (std::int64_t c = 0; c < p; ++c)
    test(0, 1, c);
  test(0, 0, 1);
  return out;
}

ProjectivePoint pt(Modulus m, std::int64_t a, std::int64_t b, std::int64_t c) {
  return ProjectivePoint(make_triple(m, a, b, c));
}

} // namespace

TEST_CASE("curve through a point") {
  Modulus m(13);
  CHECK(HesseCurve::through(make_triple(m, 1, 2, 3)).lambda().value() == 6);
  CHECK_THROWS_AS(HesseCurve::through(make_triple(m, 1, 1, 1)), PreconditionError);
  CHECK_THROWS_AS(HesseCurve::through(make_triple(m, 1, 0, 1)), PreconditionError);
  CHECK_THROWS_AS(HesseCurve(Fp(m, 3)), PreconditionError);
  CHECK(HesseCurve::smooth_lambdas(m).size() == 10);
  CHECK(HesseCurve::smooth_lambdas(Modulus(7)).size() == 4);
}

TEST_CASE("points and membership") {
  for (std::uint64_t p : {7, 13, 19, 31}) {
    Modulus m(p);
    for (const Fp& l : HesseCurve::smooth_lambdas(m)) {
      HesseCurve e(l);
      CHECK(e.points() == sorted(brute_points(e)));
      CHECK(e.contains(e.identity()));
      CHECK_FALSE(e.contains(pt(m, 1, 0, 0)));
      double n = static_cast<double>(e.points().size());
      double bound = 2 * std::sqrt(static_cast<double>(p));
      CHECK(std::abs(n - static_cast<double>(p + 1)) <= bound);
      CHECK(std::binary_search(e.points().begin(), e.points().end(), e.identity()));
    }
  }
  Modulus m(13);
  CHECK(HesseCurve(Fp(m, 6)).identity() == pt(m, 0, 1, 12));
}

TEST_CASE("negation and subtraction") {
  Modulus m(13);
  HesseCurve e(Fp(m, 6));
  ProjectivePoint o = e.identity();
  CHECK(e.neg(o) == o);
  CHECK(e.neg(pt(m, 1, 2, 3)) == pt(m, 1, 3, 2));
  CHECK_THROWS_AS(e.neg(pt(m, 1, 2, 4)), PreconditionError);
  for (const ProjectivePoint& a : e.points()) {
    CHECK(e.neg(e.neg(a)) == a);
    CHECK(e.sub(a, a) == o);
    CHECK(e.sub(a, o) == a);
    CHECK(e.sub(o, a) == e.neg(a));
    for (const ProjectivePoint& b : e.points())
      CHECK(e.add(b, a) == e.sub(b, e.neg(a)));
  }
}

TEST_CASE("group law examples") {
  Modulus m(13);
  HesseCurve e(Fp(m, 6));
  CHECK(e.add(pt(m, 1, 2, 3), pt(m, 0, 1, 12)) == pt(m, 1, 2, 3));
  for (const ProjectivePoint& a : e.points()) {
    ProjectivePoint d = e.double_point(a);
    CHECK(e.contains(d));
    CHECK(d == e.add(a, a));
    CHECK(e.triple_point(a) == e.add(d, a));
    CHECK(e.mul(0, a) == e.identity());
    CHECK(e.mul(1, a) == a);
    CHECK(e.mul(-1, a) == e.neg(a));
    CHECK(e.mul(5, a) == e.add(e.add(e.add(e.add(a, a), a), a), a));
    // Lagrange
    CHECK(e.mul(static_cast<std::int64_t>(e.points().size()), a) == e.identity());
  }
}

TEST_CASE("associativity on F_7") {
  Modulus m(7);
  for (const Fp& l : HesseCurve::smooth_lambdas(m)) {
    HesseCurve e(l);
    for (const ProjectivePoint& x : e.points())
      for (const ProjectivePoint& y : e.points())
        for (const ProjectivePoint& z : e.points())
          CHECK(e.add(e.add(x, y), z) == e.add(x, e.add(y, z)));
  }
}

TEST_CASE("two-torsion") {
  for (std::uint64_t p : {7, 13, 19, 31}) {
    Modulus m(p);
    for (const Fp& l : HesseCurve::smooth_lambdas(m)) {
      HesseCurve e(l);
      for (const ProjectivePoint& a : e.torsion_brute_force(2)) {
        CHECK(e.double_point(a) == e.identity());
        // nonzero 2-torsion lies on the line x1 = x2
        if (a != e.identity())
          CHECK(a[1] == a[2]);
      }
    }
  }
}

TEST_CASE("three- and six-torsion") {
  for (std::uint64_t p : {7, 13, 19, 31}) {
    Modulus m(p);
    for (const Fp& l : HesseCurve::smooth_lambdas(m)) {
      HesseCurve e(l);
      std::vector<ProjectivePoint> t3 = sorted(e.torsion3());
      CHECK(t3.size() == 9);
      CHECK(std::binary_search(t3.begin(), t3.end(), e.identity()));
      CHECK(t3 == sorted(e.torsion_brute_force(3)));
      for (const ProjectivePoint& a : t3) {
        CHECK(e.contains(a));
        CHECK(e.mul(3, a) == e.identity());
        CHECK(coordinate_product(a.coords()).is_zero());
      }
      std::vector<ProjectivePoint> t6 = sorted(e.torsion6());
      CHECK(t6 == sorted(e.torsion_brute_force(6)));
      CHECK(std::includes(t6.begin(), t6.end(), t3.begin(), t3.end()));
      // E meet V(x0 x1 x2 (x2 - x1)) = E[3] u E[2]
      std::vector<ProjectivePoint> lines, union32 = t3;
      for (const ProjectivePoint& a : e.points())
        if ((coordinate_product(a.coords()) * (a[2] - a[1])).is_zero())
          lines.push_back(a);
      for (const ProjectivePoint& a : e.torsion_brute_force(2))
        union32.push_back(a);
      std::sort(union32.begin(), union32.end());
      union32.erase(std::unique(union32.begin(), union32.end()), union32.end());
      CHECK(sorted(lines) == union32);
    }
  }
}

TEST_CASE("fully rational six-torsion over F_31") {
  Modulus m(31);
  HesseCurve e(Fp(m, 0));
  std::vector<ProjectivePoint> t6 = sorted(e.torsion6());
  CHECK(t6.size() == 36);
  std::size_t primitive = 0;
  for (const ProjectivePoint& a : t6)
    if (e.mul(2, a) != e.identity() && e.mul(3, a) != e.identity())
      ++primitive;
  CHECK(primitive == 24);
}

TEST_CASE("translation graph and Segre embedding over F_7") {
  Modulus m(7);
  for (const Fp& l : HesseCurve::smooth_lambdas(m)) {
    HesseCurve e(l);
    for (const ProjectivePoint& a : e.points()) {
      CheckResult r = e.translation_graph_check(a);
      CHECK_MESSAGE(r.passed, r.detail);
      Matrix ma = moore_at(a.coords(), a.coords());
      Triple id = e.identity().coords();
      Vector o(id.begin(), id.end());
      CHECK(ma * o == zero_vector(m, 3));
      for (const ProjectivePoint& x : e.points()) {
        CHECK(e.segre_check(a, x));
        CHECK(moore_adjugate_at(a.coords(), x.coords()).rank() == 1);
        // reflection x -> -x - 2a is an involution
        auto reflect = [&](const ProjectivePoint& y) {
          return e.sub(e.neg(y), e.double_point(a));
        };
        CHECK(reflect(reflect(x)) == x);
      }
    }
  }
}
