#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "hesse_moore/ext.hpp"
#include "hesse_moore/heisenberg.hpp"

using namespace hesse_moore;

namespace {

std::vector<Triple> admissible(Modulus m) {
  std::vector<Triple> out;
  for (const Fp& l : HesseCurve::smooth_lambdas(m)) {
    HesseCurve e(l);
    for (const ProjectivePoint& p : e.points())
      if (!coordinate_product(p.coords()).is_zero())
        out.push_back(p.coords());
  }
  return out;
}

} // namespace

TEST_CASE("dimension table") {
  Modulus m(13);
  Triple a = make_triple(m, 1, 2, 3);
  const int shifts[] = {-3, -2, -1, 0, 1, 2};
  const std::size_t dims[] = {0, 0, 3, 1, 0, 0};
  for (int k = 0; k < 6; ++k) {
    ExtSpace e = ext_space(a, shifts[k]);
    CHECK(e.shift == shifts[k]);
    CHECK(e.quotient_dimension == dims[k]);
    CHECK(e.representatives.size() == dims[k]);
  }
  ExtSpace e1 = ext_space(a, -1);
  CHECK(e1.homotopy_basis.empty());
  ExtSpace e0 = ext_space(a, 0);
  CHECK(e0.solution_basis.size() == 18);
  CHECK(e0.homotopy_basis.size() == 17);
  CHECK_THROWS_AS(ext_space(make_triple(m, 0, 1, 12), 0), PreconditionError);
}

TEST_CASE("dimension table over many points") {
  std::mt19937_64 rng(41);
  std::vector<Triple> pts = admissible(Modulus(13));
  REQUIRE(pts.size() >= 10);
  std::shuffle(pts.begin(), pts.end(), rng);
  pts.erase(pts.begin() + 10, pts.end());
  for (const Triple& a : pts) {
    CHECK(ext_space(a, -1).quotient_dimension == 3);
    CHECK(ext_space(a, 0).quotient_dimension == 1);
    CHECK(ext_space(a, 1).quotient_dimension == 0);
    CHECK(ext_space(a, 2).quotient_dimension == 0);
  }
  // E(F_7) \ E[3] is empty on every curve
  CHECK(admissible(Modulus(7)).empty());
  pts = admissible(Modulus(19));
  REQUIRE(!pts.empty());
  CHECK(ext_space(pts.front(), -1).quotient_dimension == 3);
  CHECK(ext_space(pts.front(), 0).quotient_dimension == 1);
}

TEST_CASE("solution spaces") {
  Modulus m(13);
  Triple a = make_triple(m, 1, 2, 3);
  MatrixFactorization f = moore_factorization(a);
  for (int shift : {-1, 0, 1}) {
    ExtSpace e = ext_space(a, shift);
    for (const FormMatrix& c : e.solution_basis)
      CHECK(trace_criterion(f, c));
    for (const FormMatrix& h : e.homotopy_basis) {
      // homotopies satisfy the trace condition
      CHECK(trace_criterion(f, h));
      CHECK(bcb_divisible(f, h));
    }
  }
}

TEST_CASE("Moore span at m = -1") {
  Modulus m(13);
  for (const Triple& a : admissible(m))
    CHECK(verify_moore_span(a));
  Triple a = make_triple(m, 1, 2, 3);
  CHECK(verify_heis3_stability(a));
}

TEST_CASE("Moore representatives and the divergence class") {
  Modulus m(13);
  Triple a = make_triple(m, 1, 2, 3);
  Triple b = extension_representative(a);
  MooreRepresentative r = moore_representative(a, moore(b));
  CHECK(r.divergence.value() == 3);
  CHECK(r.well_defined);
  CHECK(moore(b, r.y) + FormMatrix::scalar(r.U) * moore(a) - moore(a) * FormMatrix::scalar(r.V) ==
        moore(b));
  for (const auto& y : r.kernel)
    CHECK(divergence(y).is_zero());

  CHECK(divergence_class(a, moore(b)).value() == 3);
  CHECK(divergence_class(a, moore(b, iota(coordinate_forms(m)))).value() == 1);
  CHECK(divergence_class(a, moore(b).scaled(Fp(m, 5))).value() == 2);

  ExtSpace e0 = ext_space(a, 0);
  for (const FormMatrix& h : e0.homotopy_basis)
    CHECK(divergence_class(a, h).is_zero());
  std::mt19937_64 rng(43);
  std::uniform_int_distribution<std::int64_t> d(0, 12);
  for (int k = 0; k < 20; ++k) {
    FormMatrix c(m, 3, 1);
    for (const FormMatrix& s : e0.solution_basis)
      c = c + s.scaled(Fp(m, d(rng)));
    MooreRepresentative rc = moore_representative(a, c);
    CHECK(rc.well_defined);
  }
  CHECK(verify_divergence_kernel(a));
  FormMatrix not_solution = FormMatrix::identity_times(HomForm::variable(m, 1), 3);
  if (!trace_criterion(moore_factorization(a), not_solution))
    CHECK_THROWS_AS(moore_representative(a, not_solution), PreconditionError);
  CHECK_THROWS_AS(moore_representative(a, FormMatrix(m, 3, 2)), DegreeMismatch);
}

TEST_CASE("coordinates") {
  Modulus m(13);
  FormMatrix c = moore(make_triple(m, 1, 2, 3));
  Vector v = coordinates(c, 1);
  CHECK(v.size() == 27);
  CHECK(from_coordinates(m, 3, 1, v) == c);
  // row-major entries, graded-lex monomials: entry (0,1) = 2 x2
  CHECK(v[3 + 2].value() == 2);
  CHECK_THROWS_AS(coordinates(c, 2), DegreeMismatch);
}
