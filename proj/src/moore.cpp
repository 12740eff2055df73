#include "hesse_moore/moore.hpp"

#include <algorithm>
#include <sstream>

namespace hesse_moore {

Triple make_triple(Modulus m, std::int64_t a0, std::int64_t a1, std::int64_t a2) {
  return {Fp(m, a0), Fp(m, a1), Fp(m, a2)};
}

bool is_zero(const Triple& a) {
  return a[0].is_zero() && a[1].is_zero() && a[2].is_zero();
}

Fp coordinate_product(const Triple& a) { return a[0] * a[1] * a[2]; }

Triple iota(const Triple& a) { return {a[0], a[2], a[1]}; }

Triple scaled(const Fp& c, const Triple& a) { return {c * a[0], c * a[1], c * a[2]}; }

ProjectivePoint::ProjectivePoint(const Triple& coords) : c_(coords) {
  std::size_t k = 0;
  while (k < 3 && c_[k].is_zero())
    ++k;
  if (k == 3)
    throw PreconditionError("(0,0,0) is not a projective point");
  Fp inv = c_[k].inv();
  for (Fp& x : c_)
    x *= inv;
}

std::string ProjectivePoint::to_string() const {
  std::ostringstream os;
  os << '[' << c_[0] << ':' << c_[1] << ':' << c_[2] << ']';
  return os.str();
}

ProjectivePoint iota(const ProjectivePoint& a) { return ProjectivePoint(iota(a.coords())); }

// FORM MATRIX

FormMatrix::FormMatrix(Modulus m, std::size_t n, int degree)
    : n_(n), entries_(n * n, HomForm(m, degree)) {
  if (n == 0)
    throw PreconditionError("empty form matrix");
}

FormMatrix::FormMatrix(std::size_t n, std::vector<HomForm> entries)
    : n_(n), entries_(std::move(entries)) {
  if (n == 0 || entries_.size() != n * n)
    throw PreconditionError("form matrix needs n*n entries");
}

FormMatrix FormMatrix::scalar(const Matrix& c) {
  if (c.rows() != c.cols())
    throw PreconditionError("scalar form matrix must be square");
  FormMatrix r(c.modulus(), c.rows(), 0);
  for (std::size_t i = 0; i < c.rows(); ++i)
    for (std::size_t j = 0; j < c.cols(); ++j)
      r(i, j) = HomForm::constant(c(i, j));
  return r;
}

FormMatrix FormMatrix::identity_times(const HomForm& g, std::size_t n) {
  FormMatrix r(g.modulus(), n, g.degree());
  for (std::size_t i = 0; i < n; ++i)
    r(i, i) = g;
  return r;
}

FormMatrix FormMatrix::block_upper(const FormMatrix& top_left, const FormMatrix& top_right,
                                   const FormMatrix& bottom_right, int zero_degree) {
  std::size_t n = top_left.size();
  if (top_right.size() != n || bottom_right.size() != n)
    throw PreconditionError("block sizes differ");
  FormMatrix r(top_left.modulus(), 2 * n, zero_degree);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      r(i, j) = top_left(i, j);
      r(i, j + n) = top_right(i, j);
      r(i + n, j + n) = bottom_right(i, j);
    }
  return r;
}

int FormMatrix::uniform_degree() const {
  int d = entries_.front().degree();
  for (const HomForm& e : entries_)
    if (e.degree() != d)
      return -1;
  return d;
}

bool FormMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const HomForm& e) { return e.is_zero(); });
}

FormMatrix FormMatrix::operator*(const FormMatrix& o) const {
  if (n_ != o.n_)
    throw PreconditionError("form matrix size mismatch");
  std::vector<HomForm> out;
  out.reserve(n_ * n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) {
      HomForm sum = (*this)(i, 0) * o(0, j);
      for (std::size_t k = 1; k < n_; ++k)
        sum += (*this)(i, k) * o(k, j);
      out.push_back(std::move(sum));
    }
  return FormMatrix(n_, std::move(out));
}

FormMatrix FormMatrix::operator+(const FormMatrix& o) const {
  if (n_ != o.n_)
    throw PreconditionError("form matrix size mismatch");
  FormMatrix r = *this;
  for (std::size_t k = 0; k < entries_.size(); ++k)
    r.entries_[k] += o.entries_[k];
  return r;
}

FormMatrix FormMatrix::operator-(const FormMatrix& o) const {
  if (n_ != o.n_)
    throw PreconditionError("form matrix size mismatch");
  FormMatrix r = *this;
  for (std::size_t k = 0; k < entries_.size(); ++k)
    r.entries_[k] -= o.entries_[k];
  return r;
}

FormMatrix FormMatrix::operator-() const {
  FormMatrix r = *this;
  for (HomForm& e : r.entries_)
    e = -e;
  return r;
}

FormMatrix FormMatrix::scaled(const Fp& c) const {
  FormMatrix r = *this;
  for (HomForm& e : r.entries_)
    e = c * e;
  return r;
}

FormMatrix FormMatrix::scaled(const HomForm& g) const {
  FormMatrix r = *this;
  for (HomForm& e : r.entries_)
    e = g * e;
  return r;
}

FormMatrix FormMatrix::transpose() const {
  FormMatrix r = *this;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      r(i, j) = (*this)(j, i);
  return r;
}

HomForm FormMatrix::trace() const {
  HomForm t = (*this)(0, 0);
  for (std::size_t i = 1; i < n_; ++i)
    t += (*this)(i, i);
  return t;
}

Matrix FormMatrix::evaluate(const Triple& point) const {
  Matrix r(modulus(), n_, n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      r(i, j) = (*this)(i, j).evaluate(point);
  return r;
}

Matrix FormMatrix::linear_coefficient(int v) const {
  Matrix r(modulus(), n_, n_);
  Exponent e;
  (v == 0 ? e.e0 : v == 1 ? e.e1 : e.e2) = 1;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) {
      const HomForm& g = (*this)(i, j);
      if (g.degree() != 1)
        throw DegreeMismatch("linear_coefficient needs a linear matrix");
      r(i, j) = g.coefficient(e);
    }
  return r;
}

FormMatrix FormMatrix::partial(int v) const {
  FormMatrix r = *this;
  for (HomForm& e : r.entries_)
    e = e.partial(v);
  return r;
}

HomForm FormMatrix::det3() const {
  if (n_ != 3)
    throw PreconditionError("det3 needs a 3x3 matrix");
  const auto& m = *this;
  return m(0, 0) * m(1, 1) * m(2, 2) + m(0, 1) * m(1, 2) * m(2, 0) +
         m(0, 2) * m(1, 0) * m(2, 1) - m(0, 2) * m(1, 1) * m(2, 0) -
         m(0, 0) * m(1, 2) * m(2, 1) - m(0, 1) * m(1, 0) * m(2, 2);
}

FormMatrix FormMatrix::cofactor_adjugate3() const {
  if (n_ != 3)
    throw PreconditionError("cofactor_adjugate3 needs a 3x3 matrix");
  const auto& m = *this;
  std::vector<HomForm> out;
  out.reserve(9);
  // adj(i, j) = cofactor(j, i); cyclic indices absorb the sign.
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      std::size_t r1 = (j + 1) % 3, r2 = (j + 2) % 3;
      std::size_t c1 = (i + 1) % 3, c2 = (i + 2) % 3;
      out.push_back(m(r1, c1) * m(r2, c2) - m(r1, c2) * m(r2, c1));
    }
  return FormMatrix(3, std::move(out));
}

// MOORE MATRICES

std::array<HomForm, 3> coordinate_forms(Modulus m) {
  return {HomForm::variable(m, 0), HomForm::variable(m, 1), HomForm::variable(m, 2)};
}

std::array<HomForm, 3> iota(const std::array<HomForm, 3>& vars) {
  return {vars[0], vars[2], vars[1]};
}

FormMatrix moore(const Triple& a, const std::array<HomForm, 3>& vars) {
  if (is_zero(a))
    throw PreconditionError("Moore matrix of the zero vector");
  std::vector<HomForm> out;
  out.reserve(9);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      out.push_back(a[mod3(i + j)] * vars[mod3(i - j)]);
  return FormMatrix(3, std::move(out));
}

FormMatrix moore(const Triple& a) { return moore(a, coordinate_forms(a[0].modulus())); }

Matrix moore_at(const Triple& a, const Triple& b) {
  if (is_zero(a))
    throw PreconditionError("Moore matrix of the zero vector");
  Matrix r(a[0].modulus(), 3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      r(i, j) = a[mod3(i + j)] * b[mod3(i - j)];
  return r;
}

FormMatrix moore_adjugate(const Triple& a) {
  if (is_zero(a))
    throw PreconditionError("Moore matrix of the zero vector");
  auto x = coordinate_forms(a[0].modulus());
  std::vector<HomForm> out;
  out.reserve(9);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      int k = j - i;
      HomForm square = x[mod3(k)] * x[mod3(k)];
      HomForm cross = x[mod3(k - 1)] * x[mod3(k + 1)];
      out.push_back((a[mod3(i + j - 1)] * a[mod3(i + j + 1)]) * square -
                    (a[mod3(i + j)] * a[mod3(i + j)]) * cross);
    }
  return FormMatrix(3, std::move(out));
}

Matrix moore_adjugate_at(const Triple& a, const Triple& b) {
  Matrix r(a[0].modulus(), 3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      int k = j - i;
      r(i, j) = a[mod3(i + j - 1)] * a[mod3(i + j + 1)] * b[mod3(k)] * b[mod3(k)] -
                a[mod3(i + j)] * a[mod3(i + j)] * b[mod3(k - 1)] * b[mod3(k + 1)];
    }
  return r;
}

HomForm moore_det(const Triple& a) {
  Modulus m = a[0].modulus();
  HomForm d(m, 3);
  Fp prod = coordinate_product(a);
  d.set_coefficient({3, 0, 0}, prod);
  d.set_coefficient({0, 3, 0}, prod);
  d.set_coefficient({0, 0, 3}, prod);
  d.set_coefficient({1, 1, 1}, -(a[0].pow(3) + a[1].pow(3) + a[2].pow(3)));
  return d;
}

ProjectivePoint left_kernel_point(const Matrix& m) {
  if (m.rows() != 3 || m.cols() != 3)
    throw PreconditionError("kernel point needs a 3x3 matrix");
  std::vector<Vector> kernel = m.nullspace();
  if (kernel.size() != 1)
    throw PreconditionError("matrix does not have rank 2 (rank " +
                            std::to_string(3 - kernel.size()) + ")");
  Matrix adj = m.adjugate();
  for (std::size_t j = 0; j < 3; ++j) {
    Vector column = adj.col(j);
    if (std::all_of(column.begin(), column.end(), [](const Fp& c) { return c.is_zero(); }))
      continue;
    if (!projectively_equal(kernel.front(), column))
      throw InternalError("adjugate column disagrees with elimination null space");
    return ProjectivePoint({column[0], column[1], column[2]});
  }
  throw InternalError("rank-2 matrix with zero adjugate");
}

ProjectivePoint right_kernel_point(const Matrix& m) { return left_kernel_point(m.transpose()); }

std::string pretty(const FormMatrix& m) {
  std::vector<std::string> cells;
  std::size_t width = 0;
  for (const HomForm& e : m.entries()) {
    cells.push_back(e.to_string());
    width = std::max(width, cells.back().size());
  }
  std::ostringstream os;
  for (std::size_t i = 0; i < m.size(); ++i) {
    os << "[ ";
    for (std::size_t j = 0; j < m.size(); ++j) {
      const std::string& c = cells[i * m.size() + j];
      os << c << std::string(width - c.size(), ' ') << (j + 1 < m.size() ? " | " : " ");
    }
    os << "]\n";
  }
  return os.str();
}

} // namespace hesse_moore
