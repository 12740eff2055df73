#include "hesse_moore/ulrich.hpp"

namespace hesse_moore {

namespace {

FormMatrix identity_form_matrix(const HomForm& g, std::size_t n) {
  return FormMatrix::identity_times(g, n);
}

// Degree of the entries, treating the all-zero matrix of any type uniformly.
int entry_degree(const FormMatrix& m) {
  int d = m.uniform_degree();
  if (d < 0)
    throw DegreeMismatch("matrix entries must share one degree");
  return d;
}

void require_square3(const MatrixFactorization& fac, const FormMatrix& C) {
  if (C.size() != fac.size())
    throw PreconditionError("C has size " + std::to_string(C.size()) + ", expected " +
                            std::to_string(fac.size()));
  if (C.modulus() != fac.cubic().modulus())
    throw ModulusMismatch("C and the factorization live over different fields");
}

// Columns are images of the coordinate basis of S_d^(n x n) under `map`.
template <class Map>
Matrix linear_map_matrix(Modulus m, std::size_t n, int in_degree, int out_degree, Map map) {
  std::size_t in_dim = n * n * monomial_count(in_degree);
  std::size_t out_dim = n * n * monomial_count(out_degree);
  Matrix out(m, out_dim, in_dim);
  for (std::size_t k = 0; k < in_dim; ++k) {
    Vector e = zero_vector(m, in_dim);
    e[k] = Fp::one(m);
    Vector image = coordinates(map(from_coordinates(m, n, in_degree, e)), out_degree);
    for (std::size_t r = 0; r < out_dim; ++r)
      out(r, k) = image[r];
  }
  return out;
}

} // namespace

MatrixFactorization::MatrixFactorization(FormMatrix a, FormMatrix b, HesseCubic f, Fp unit)
    : a_(std::move(a)), b_(std::move(b)), f_(std::move(f)), unit_(std::move(unit)) {
  if (a_.size() != b_.size())
    throw PreconditionError("factorization matrices of different sizes");
  if (unit_.is_zero())
    throw PreconditionError("factorization unit must be nonzero");
  FormMatrix target = identity_form_matrix(product(), a_.size());
  if (a_ * b_ != target || b_ * a_ != target)
    throw PreconditionError("A B = B A = f I fails");
}

MatrixFactorization moore_factorization(const Triple& a) {
  Fp unit = coordinate_product(a);
  if (unit.is_zero())
    throw PreconditionError("Moore factorization needs a0 a1 a2 != 0");
  HesseCurve e = HesseCurve::through(a);
  return MatrixFactorization(moore(a), moore_adjugate(a), e.cubic(), unit);
}

Vector coordinates(const FormMatrix& m, int degree) {
  Vector out;
  out.reserve(m.size() * m.size() * monomial_count(degree));
  for (const HomForm& g : m.entries()) {
    if (g.degree() != degree) {
      if (!g.is_zero())
        throw DegreeMismatch("entry of degree " + std::to_string(g.degree()) + ", expected " +
                             std::to_string(degree));
      for (std::size_t k = 0; k < monomial_count(degree); ++k)
        out.push_back(Fp::zero(m.modulus()));
      continue;
    }
    for (const Fp& c : g.coefficients())
      out.push_back(c);
  }
  return out;
}

FormMatrix from_coordinates(Modulus m, std::size_t n, int degree, const Vector& v) {
  std::size_t per = monomial_count(degree);
  if (v.size() != n * n * per)
    throw PreconditionError("coordinate vector has the wrong length");
  FormMatrix out(m, n, degree);
  for (std::size_t e = 0; e < n * n; ++e)
    for (std::size_t k = 0; k < per; ++k)
      out(e / n, e % n).set_coefficient(k, v[e * per + k]);
  return out;
}

std::optional<FormMatrix> divide_entries(const FormMatrix& g, const HesseCubic& f) {
  std::vector<HomForm> q;
  q.reserve(g.entries().size());
  for (const HomForm& entry : g.entries()) {
    Division d = divide_by_cubic(entry, f);
    if (!d.remainder.is_zero())
      return std::nullopt;
    if (entry.degree() >= 3 && d.quotient * f.form() != entry)
      throw InternalError("division certificate failed");
    if (entry.degree() < 3) {
      // only zero is divisible; type the quotient as degree 0
      q.emplace_back(entry.modulus(), 0);
      continue;
    }
    q.push_back(d.quotient);
  }
  return FormMatrix(g.size(), std::move(q));
}

FormMatrix partner_D(const MatrixFactorization& fac, const FormMatrix& C) {
  require_square3(fac, C);
  auto q = divide_entries(fac.B() * C * fac.B(), fac.cubic());
  if (!q)
    throw PreconditionError("no extension datum for this C");
  return q->scaled(-fac.unit().inv());
}

FormMatrix recover_C(const MatrixFactorization& fac, const FormMatrix& D) {
  require_square3(fac, D);
  auto q = divide_entries(fac.A() * D * fac.A(), fac.cubic());
  if (!q)
    throw PreconditionError("A D A is not divisible by f");
  return q->scaled(-fac.unit().inv());
}

ExtensionDatum extension_datum(const MatrixFactorization& fac, const FormMatrix& C) {
  int m = entry_degree(C) - 1;
  FormMatrix D = partner_D(fac, C);
  if (!(fac.A() * D + C * fac.B()).is_zero() || !(D * fac.A() + fac.B() * C).is_zero())
    throw InternalError("partner identities fail");
  return {C, D, m};
}

std::optional<FormMatrix> solve_left_partner(const MatrixFactorization& fac,
                                             const FormMatrix& C) {
  require_square3(fac, C);
  Modulus m = fac.cubic().modulus();
  int dc = entry_degree(C);
  int dd = dc + 1; // deg A + deg D = deg C + deg B
  FormMatrix rhs = -(C * fac.B());
  Matrix lin = linear_map_matrix(m, fac.size(), dd, dd + 1,
                                 [&](const FormMatrix& D) { return fac.A() * D; });
  auto sol = solve(lin, coordinates(rhs, dc + 2));
  if (!sol)
    return std::nullopt;
  return from_coordinates(m, fac.size(), dd, *sol);
}

std::optional<FormMatrix> solve_right_partner(const MatrixFactorization& fac,
                                              const FormMatrix& C) {
  require_square3(fac, C);
  Modulus m = fac.cubic().modulus();
  int dc = entry_degree(C);
  int dd = dc + 1;
  FormMatrix rhs = -(fac.B() * C);
  Matrix lin = linear_map_matrix(m, fac.size(), dd, dd + 1,
                                 [&](const FormMatrix& D) { return D * fac.A(); });
  auto sol = solve(lin, coordinates(rhs, dc + 2));
  if (!sol)
    return std::nullopt;
  return from_coordinates(m, fac.size(), dd, *sol);
}

bool bcb_divisible(const MatrixFactorization& fac, const FormMatrix& C) {
  require_square3(fac, C);
  return divide_entries(fac.B() * C * fac.B(), fac.cubic()).has_value();
}

bool trace_criterion(const MatrixFactorization& fac, const FormMatrix& C) {
  require_square3(fac, C);
  return divide_by_cubic((fac.B() * C).trace(), fac.cubic()).remainder.is_zero();
}

bool bcb_congruence(const MatrixFactorization& fac, const FormMatrix& C) {
  require_square3(fac, C);
  HomForm tr = (fac.B() * C).trace();
  FormMatrix diff = fac.B() * C * fac.B() - fac.B().scaled(tr);
  for (const HomForm& g : diff.entries())
    if (!divide_by_cubic(g, fac.cubic()).remainder.is_zero())
      return false;
  return true;
}

Fp divergence(const std::array<HomForm, 3>& y) {
  Modulus m = y[0].modulus();
  Fp sum = Fp::zero(m);
  for (int i = 0; i < 3; ++i) {
    if (y[i].degree() != 1)
      throw DegreeMismatch("divergence needs linear forms");
    sum += y[i].coefficient(Exponent{i == 0, i == 1, i == 2});
  }
  return sum;
}

Triple extension_representative(const Triple& a) { return iota(doubling_representative(a)); }

UlrichExtension rank2_ulrich(const Triple& a) {
  MatrixFactorization rank1 = moore_factorization(a);
  Triple b = extension_representative(a);
  if (is_zero(b))
    throw InternalError("doubling representative vanishes");
  ExtensionDatum datum = extension_datum(rank1, moore(b));
  FormMatrix a2 = FormMatrix::block_upper(rank1.A(), datum.C, rank1.A(), 1);
  FormMatrix b2 = FormMatrix::block_upper(rank1.B(), datum.D, rank1.B(), 2);
  MatrixFactorization fac(std::move(a2), std::move(b2), rank1.cubic(), rank1.unit());
  Fp div = divergence(coordinate_forms(a[0].modulus()));
  return {std::move(fac), b, std::move(datum), div};
}

} // namespace hesse_moore
