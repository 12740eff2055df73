#include "hesse_moore/ext.hpp"

#include "hesse_moore/heisenberg.hpp"

namespace hesse_moore {

namespace {

std::vector<Vector> coordinate_list(const std::vector<FormMatrix>& ms, int degree) {
  std::vector<Vector> out;
  out.reserve(ms.size());
  for (const FormMatrix& m : ms)
    out.push_back(coordinates(m, degree));
  return out;
}

std::vector<FormMatrix> to_matrices(Modulus m, int degree, const std::vector<Vector>& vs) {
  std::vector<FormMatrix> out;
  out.reserve(vs.size());
  for (const Vector& v : vs)
    out.push_back(from_coordinates(m, 3, degree, v));
  return out;
}

std::vector<Vector> matrix_rows(const Matrix& m) {
  std::vector<Vector> out;
  for (std::size_t i = 0; i < m.rows(); ++i)
    out.push_back(m.row(i));
  return out;
}

std::vector<Vector> solution_vectors(const MatrixFactorization& fac, int degree) {
  Modulus m = fac.cubic().modulus();
  std::size_t per = monomial_count(degree);
  int tr_degree = degree + 2;
  std::size_t rows = monomial_count(tr_degree);
  Matrix constraints(m, rows, 9 * per);
  const auto& mons = monomials(degree);
  // C = mu E_{ij} gives tr(B C) = B(j, i) mu
  for (std::size_t e = 0; e < 9; ++e)
    for (std::size_t k = 0; k < per; ++k) {
      HomForm tr = fac.B()(e % 3, e / 3) * HomForm::monomial(Fp::one(m), mons[k]);
      HomForm rem = divide_by_cubic(tr, fac.cubic()).remainder;
      for (std::size_t r = 0; r < rows; ++r)
        constraints(r, e * per + k) = rem.coefficient(r);
    }
  return constraints.nullspace();
}

std::vector<Vector> homotopy_vectors(const MatrixFactorization& fac, int m_shift) {
  std::vector<Vector> out;
  if (m_shift < 0)
    return out;
  Modulus m = fac.cubic().modulus();
  std::size_t per = monomial_count(m_shift);
  std::size_t n = 9 * per;
  for (std::size_t k = 0; k < 2 * n; ++k) {
    Vector e = zero_vector(m, n);
    e[k % n] = Fp::one(m);
    FormMatrix g = from_coordinates(m, 3, m_shift, e);
    FormMatrix image = k < n ? g * fac.A() : -(fac.A() * g);
    out.push_back(coordinates(image, m_shift + 1));
  }
  return out;
}

FormMatrix conjugate(const Matrix& left, const FormMatrix& c, const Matrix& right) {
  return FormMatrix::scalar(left) * c * FormMatrix::scalar(right);
}

bool stable_under(const Triple& a, const Triple& ga, const Matrix& left, const Matrix& right) {
  Modulus m = a[0].modulus();
  for (int shift : {-1, 0}) {
    ExtSpace src = ext_space(a, shift);
    ExtSpace dst = ext_space(ga, shift);
    std::vector<FormMatrix> moved;
    for (const FormMatrix& c : src.solution_basis)
      moved.push_back(conjugate(left, c, right));
    int d = shift + 1;
    if (!same_span(m, coordinate_list(moved, d), coordinate_list(dst.solution_basis, d),
                   9 * monomial_count(d)))
      return false;
  }
  return true;
}

} // namespace

ExtSpace ext_space(const Triple& a, int m_shift) {
  MatrixFactorization fac = moore_factorization(a);
  ExtSpace out;
  out.shift = m_shift;
  if (m_shift < -1)
    return out;
  Modulus m = a[0].modulus();
  int degree = m_shift + 1;
  std::size_t n = 9 * monomial_count(degree);

  std::vector<Vector> sol = solution_vectors(fac, degree);
  std::vector<Vector> hom = homotopy_vectors(fac, m_shift);
  Matrix hom_basis = span_basis(m, hom, n);
  std::vector<Vector> hom_rows = matrix_rows(hom_basis);

  std::vector<Vector> all = sol;
  all.insert(all.end(), hom_rows.begin(), hom_rows.end());
  std::size_t sum_dim = span_rank(m, all, n);
  std::size_t meet_dim = sol.size() + hom_rows.size() - sum_dim;
  out.quotient_dimension = sol.size() - meet_dim;

  // Greedy complement of (sol meet hom) inside sol, grown from the homotopies.
  std::vector<Vector> grown = hom_rows;
  std::size_t rank = span_rank(m, grown, n);
  std::vector<Vector> reps;
  for (const Vector& v : sol) {
    if (reps.size() == out.quotient_dimension)
      break;
    grown.push_back(v);
    std::size_t r = span_rank(m, grown, n);
    if (r > rank) {
      rank = r;
      reps.push_back(v);
    } else {
      grown.pop_back();
    }
  }

  out.solution_basis = to_matrices(m, degree, sol);
  out.homotopy_basis = to_matrices(m, degree, hom_rows);
  out.representatives = to_matrices(m, degree, reps);
  return out;
}

bool verify_moore_span(const Triple& a) {
  Modulus m = a[0].modulus();
  Triple b = extension_representative(a);
  std::vector<Vector> moore_span;
  for (int i = 0; i < 3; ++i) {
    Triple e{Fp::zero(m), Fp::zero(m), Fp::zero(m)};
    e[i] = Fp::one(m);
    Matrix mb = moore_at(b, e);
    Vector v;
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t c = 0; c < 3; ++c)
        v.push_back(mb(r, c));
    moore_span.push_back(v);
  }
  if (span_rank(m, moore_span, 9) != 3)
    return false;
  ExtSpace ext = ext_space(a, -1);
  return same_span(m, coordinate_list(ext.solution_basis, 0), moore_span, 9);
}

bool verify_heis3_stability(const Triple& a) {
  Modulus m = a[0].modulus();
  Matrix t = t_matrix(m);
  Matrix s = sigma_matrix(m);
  return stable_under(a, act_t(a), t, t) && stable_under(a, act_sigma(a), s.inverse(), s);
}

MooreRepresentative moore_representative(const Triple& a, const FormMatrix& C) {
  MatrixFactorization fac = moore_factorization(a);
  Modulus m = a[0].modulus();
  if (C.size() != 3 || C.uniform_degree() != 1)
    throw DegreeMismatch("Moore representative needs a 3 x 3 matrix of linear forms");
  if (!trace_criterion(fac, C))
    throw PreconditionError("C is not in the m = 0 solution space");
  Triple b = extension_representative(a);

  // Unknowns: 9 coefficients of y (graded-lex per form), then U and V row-major.
  auto image = [&](const Vector& u) {
    std::array<HomForm, 3> y{HomForm(m, 1), HomForm(m, 1), HomForm(m, 1)};
    for (int i = 0; i < 3; ++i)
      for (std::size_t k = 0; k < 3; ++k)
        y[i].set_coefficient(k, u[3 * i + k]);
    Matrix U(m, 3, 3), V(m, 3, 3);
    for (std::size_t k = 0; k < 9; ++k) {
      U(k / 3, k % 3) = u[9 + k];
      V(k / 3, k % 3) = u[18 + k];
    }
    FormMatrix total = moore(b, y) + FormMatrix::scalar(U) * fac.A() -
                       fac.A() * FormMatrix::scalar(V);
    return std::make_tuple(y, U, V, total);
  };

  Matrix lin(m, 27, 27);
  for (std::size_t k = 0; k < 27; ++k) {
    Vector e = zero_vector(m, 27);
    e[k] = Fp::one(m);
    Vector col = coordinates(std::get<3>(image(e)), 1);
    for (std::size_t r = 0; r < 27; ++r)
      lin(r, k) = col[r];
  }
  Vector target = coordinates(C, 1);
  auto sol = solve(lin, target);
  if (!sol) {
    std::vector<Vector> cols = matrix_rows(lin.transpose());
    std::size_t r0 = span_rank(m, cols, 27);
    cols.push_back(target);
    throw PreconditionError("no Moore representative: rank " + std::to_string(r0) +
                            ", augmented rank " + std::to_string(span_rank(m, cols, 27)));
  }
  auto [y, U, V, total] = image(*sol);
  if (total != C)
    throw InternalError("Moore representative residual is nonzero");

  MooreRepresentative out{y, U, V, divergence(y), {}, true};
  for (const Vector& k : lin.nullspace()) {
    auto ky = std::get<0>(image(k));
    if (!divergence(ky).is_zero())
      out.well_defined = false;
    out.kernel.push_back(ky);
  }
  return out;
}

Fp divergence_class(const Triple& a, const FormMatrix& C) {
  MooreRepresentative rep = moore_representative(a, C);
  if (!rep.well_defined)
    throw InternalError("divergence depends on the chosen representative");
  return rep.divergence;
}

bool verify_divergence_kernel(const Triple& a) {
  Modulus m = a[0].modulus();
  ExtSpace ext = ext_space(a, 0);
  Matrix row(m, 1, ext.solution_basis.size());
  for (std::size_t k = 0; k < ext.solution_basis.size(); ++k)
    row(0, k) = divergence_class(a, ext.solution_basis[k]);
  std::vector<Vector> sol = coordinate_list(ext.solution_basis, 1);
  std::vector<Vector> kernel;
  for (const Vector& w : row.nullspace()) {
    Vector v = zero_vector(m, 27);
    for (std::size_t k = 0; k < w.size(); ++k)
      for (std::size_t r = 0; r < 27; ++r)
        v[r] += w[k] * sol[k][r];
    kernel.push_back(v);
  }
  return same_span(m, kernel, coordinate_list(ext.homotopy_basis, 1), 27);
}

} // namespace hesse_moore
