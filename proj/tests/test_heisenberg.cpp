#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "hesse_moore/heisenberg.hpp"

using namespace hesse_moore;

namespace {

// H_n realized by its Schroedinger matrices (sigma e_i = e_{i+1}, tau e_i = zeta^i e_i),
// so the normal-form product can be checked against matrix multiplication.
Matrix schroedinger_matrix(const HeisenbergElement& g, const Fp& zeta) {
  Modulus m = zeta.modulus();
  auto n = static_cast<std::size_t>(g.n);
  Matrix s(m, n, n), t(m, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    s((i + 1) % n, i) = Fp::one(m);
    t(i, i) = zeta.pow(i);
  }
  Matrix z = s * t * s.inverse() * t.inverse();
  return z.pow(static_cast<unsigned>(g.r)) * s.pow(static_cast<unsigned>(g.s)) *
         t.pow(static_cast<unsigned>(g.t));
}

Triple random_point_triple(Modulus m, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> d(1, static_cast<std::int64_t>(m.value()) - 1);
  return {Fp(m, d(rng)), Fp(m, d(rng)), Fp(m, d(rng))};
}

} // namespace

TEST_CASE("Heisenberg group normal forms") {
  Modulus m(13);
  for (int n : {3, 6}) {
    std::vector<HeisenbergElement> all = heisenberg_elements(n);
    CHECK(all.size() == static_cast<std::size_t>(n * n * n));
    Fp zeta = primitive_root_of_unity(m, static_cast<std::uint64_t>(n));
    for (std::size_t k = 0; k < all.size(); ++k)
      CHECK(all[k].index() == k);
    for (const HeisenbergElement& g : all) {
      CHECK(g * g.inverse() == HeisenbergElement::identity(n));
      CHECK(g.inverse() * g == HeisenbergElement::identity(n));
    }
    // product against the faithful matrix representation
    for (std::size_t i = 0; i < all.size(); i += 7)
      for (std::size_t j = 0; j < all.size(); j += 5)
        CHECK(schroedinger_matrix(all[i] * all[j], zeta) ==
              schroedinger_matrix(all[i], zeta) * schroedinger_matrix(all[j], zeta));
    HeisenbergElement s = HeisenbergElement::sigma(n), t = HeisenbergElement::tau(n);
    HeisenbergElement z = HeisenbergElement::commutator(n);
    CHECK(s * t * s.inverse() * t.inverse() == z);
    CHECK(s * t == z * t * s);
    for (const HeisenbergElement& g : all)
      CHECK(z * g == g * z);
  }
  CHECK(HeisenbergElement(3, 4, -1, 5) == HeisenbergElement(3, 1, 2, 2));
  CHECK_THROWS(HeisenbergElement(3, 0, 0, 0) * HeisenbergElement(6, 0, 0, 0));
}

TEST_CASE("Heis_3 matrices") {
  Modulus m(13);
  Fp w = primitive_root_of_unity(m, 3);
  CHECK(w.value() == 3);
  Matrix s = sigma_matrix(m), t = t_matrix(m);
  CHECK(t == Matrix(m, {{1, 0, 0}, {0, 3, 0}, {0, 0, 9}}));
  CHECK(s.pow(3) == Matrix::identity(m, 3));
  CHECK(t.pow(3) == Matrix::identity(m, 3));
  // with these matrices the commutation scalar is w^2 = w^-1
  CHECK(s * t == (t * s).scaled(w * w));
  CHECK(t * s == (s * t).scaled(w));
  CHECK(heis3_matrix(Fp(m, 2), 1, 2) == (t * s * s).scaled(Fp(m, 2)));
  CHECK_THROWS_AS(heis3_matrix(Fp::zero(m), 0, 0), PreconditionError);
}

TEST_CASE("actions on Moore parameters") {
  Modulus m(13);
  Triple a = make_triple(m, 1, 2, 3);
  CHECK(act_sigma(a) == make_triple(m, 3, 1, 2));
  CHECK(act_t(a) == make_triple(m, 1, 6, 27));
  CHECK(orbit(a).size() == 9);
  std::mt19937_64 rng(17);
  Matrix s = sigma_matrix(m), t = t_matrix(m);
  FormMatrix ts = FormMatrix::scalar(t);
  for (int k = 0; k < 50; ++k) {
    Triple r = random_point_triple(m, rng);
    FormMatrix mr = moore(r);
    CHECK(moore(act_t(r)) == ts * mr * ts);
    CHECK(moore(act_sigma(r)) == FormMatrix::scalar(s.inverse()) * mr * FormMatrix::scalar(s));
    Vector v(r.begin(), r.end());
    Vector sv = s * v, tv = t * v;
    CHECK(act_sigma(r) == Triple{sv[0], sv[1], sv[2]});
    CHECK(act_t(r) == Triple{tv[0], tv[1], tv[2]});
  }
}

TEST_CASE("N matrices and trace invariants") {
  Modulus m(13);
  Triple a = make_triple(m, 1, 2, 3);
  NMatrices n = n_matrices(a);
  Fp zero = Fp::zero(m);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      bool on = (i == 0 && j == 2) || (i == 1 && j == 0) || (i == 2 && j == 1);
      if (!on)
        CHECK(n.n1(i, j) == zero);
    }
  CHECK(n.n1(0, 2) == a[2] / a[0]);
  CHECK(n.n1(1, 0) == a[1] / a[2]);
  CHECK(n.n1(2, 1) == a[0] / a[1]);
  FormMatrix mx = moore(a);
  CHECK(mx.linear_coefficient(0) * n.n1 == mx.linear_coefficient(1));
  CHECK(mx.linear_coefficient(0) * n.n2 == mx.linear_coefficient(2));
  CHECK_THROWS_AS(n_matrices(make_triple(m, 1, 0, 2)), PreconditionError);

  std::mt19937_64 rng(19);
  for (int k = 0; k < 100; ++k) {
    Triple r = random_point_triple(m, rng);
    TraceInvariants closed = trace_invariants_closed_form(r);
    CHECK(closed == trace_invariants_from_matrices(r));
    for (const ProjectivePoint& g : orbit(r))
      CHECK(trace_invariants(g.coords()) == closed);
    // on the curve through r: t1 + 2 t2 = lambda^2
    if (HesseCubic::is_smooth((r[0].pow(3) + r[1].pow(3) + r[2].pow(3)) / coordinate_product(r))) {
      Fp lambda = HesseCurve::through(r).lambda();
      CHECK(closed.t1 + Fp(m, 2) * closed.t2 == lambda * lambda);
    }
  }
}

TEST_CASE("equivalence of Moore matrices") {
  Modulus m(13);
  Triple a = make_triple(m, 1, 2, 3);
  CHECK(are_equivalent(a, act_sigma(a)));
  CHECK(are_equivalent(a, act_t(a)));
  // a point on another curve
  Triple other = make_triple(m, 1, 1, 2);
  REQUIRE(HesseCurve::through(other).lambda() != HesseCurve::through(a).lambda());
  CHECK_FALSE(are_equivalent(a, other));
  CHECK_THROWS_AS(are_equivalent(a, make_triple(m, 0, 1, 12)), PreconditionError);

  for (const Fp& l : HesseCurve::smooth_lambdas(m)) {
    HesseCurve e(l);
    std::vector<ProjectivePoint> pts;
    for (const ProjectivePoint& p : e.points())
      if (!coordinate_product(p.coords()).is_zero())
        pts.push_back(p);
    for (const ProjectivePoint& p : pts) {
      std::set<ProjectivePoint> o = orbit(p.coords());
      CHECK(o.size() == 9);
      for (const ProjectivePoint& q : pts) {
        bool by_orbit = o.count(q) > 0;
        CHECK(are_equivalent(p.coords(), q.coords()) == by_orbit);
        CHECK((e.triple_point(p) == e.triple_point(q)) == by_orbit);
      }
    }
  }
}

TEST_CASE("Schroedinger characters") {
  Modulus m(13);
  for (int n : {3, 6}) {
    for (int j = 1; j < n; ++j) {
      ClassFunction chi = schrodinger_character(m, n, j);
      CHECK(chi[HeisenbergElement::identity(n)] == Fp(m, n));
      CHECK(chi[HeisenbergElement::sigma(n)].is_zero());
      CHECK(is_class_function(chi));
      if (std::gcd(j, n) == 1) {
        CHECK(inner_product(chi, chi) == Fp::one(m));
        for (int i = 1; i < n; ++i)
          if (i != j && std::gcd(i, n) == 1)
            CHECK(inner_product(chi, schrodinger_character(m, n, i)).is_zero());
      }
    }
  }
  CHECK_THROWS_AS(schrodinger_character(3, 1, Fp(m, 1)), PreconditionError);
  CHECK_THROWS_AS(schrodinger_character(Modulus(7), 4, 1), PreconditionError);
}

TEST_CASE("restriction of characters") {
  Modulus m(13);
  CHECK(verify_restriction(m, 6, 3, 1));
  CHECK(verify_restriction(m, 6, 2, 1));
  CHECK(verify_restriction(m, 6, 6, 1));
  CHECK(verify_restriction(m, 3, 3, 2));
  CHECK(verify_restriction(Modulus(7), 6, 3, 5));
  CHECK_THROWS_AS(verify_restriction(m, 6, 4, 1), PreconditionError);
  CHECK_THROWS_AS(verify_restriction(m, 12, 6, 1), PreconditionError);
}

TEST_CASE("tensor square on H_3") {
  for (std::uint64_t p : {7, 13, 19}) {
    Modulus m(p);
    Fp w = primitive_root_of_unity(m, 3);
    CHECK(verify_tensor_h3(w));
    CHECK(verify_tensor_h3(w * w));
    CHECK_THROWS_AS(verify_tensor_h3(Fp::one(m)), PreconditionError);
    ClassFunction chi1 = schrodinger_character(3, 1, w);
    CHECK(chi1 * chi1 == schrodinger_character(3, 2, w).scaled(Fp(m, 3)));
  }
  Modulus m(13);
  SchroedingerTensorBasis b = schroedinger_tensor_basis(make_triple(m, 1, 2, 3));
  CHECK(b.f0(0, 0).value() == 1);
  CHECK(b.f0(2, 1).value() == 2);
  CHECK(b.f0(1, 2).value() == 3);
}
