#include "hesse_moore/linalg.hpp"

#include <sstream>
#include <utility>

namespace hesse_moore {

Vector zero_vector(Modulus m, std::size_t n) { return Vector(n, Fp::zero(m)); }

Matrix::Matrix(Modulus m, std::size_t rows, std::size_t cols)
    : mod_(m), rows_(rows), cols_(cols), data_(rows * cols, Fp::zero(m)) {}

Matrix::Matrix(Modulus m, std::initializer_list<std::initializer_list<std::int64_t>> rows)
    : Matrix(m, rows.size(), rows.size() ? rows.begin()->size() : 0) {
  std::size_t i = 0;
  for (const auto& r : rows) {
    if (r.size() != cols_)
      throw PreconditionError("ragged matrix literal");
    std::size_t j = 0;
    for (std::int64_t v : r)
      (*this)(i, j++) = Fp(m, v);
    ++i;
  }
}

Matrix Matrix::identity(Modulus m, std::size_t n) {
  Matrix r(m, n, n);
  for (std::size_t i = 0; i < n; ++i)
    r(i, i) = Fp::one(m);
  return r;
}

Matrix Matrix::from_rows(Modulus m, const std::vector<Vector>& rows, std::size_t cols) {
  Matrix r(m, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols)
      throw PreconditionError("row length does not match column count");
    for (std::size_t j = 0; j < cols; ++j)
      r(i, j) = rows[i][j];
  }
  return r;
}

Vector Matrix::row(std::size_t i) const {
  return Vector(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
}

Vector Matrix::col(std::size_t j) const {
  Vector v;
  v.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    v.push_back((*this)(i, j));
  return v;
}

bool Matrix::is_zero() const {
  for (const Fp& x : data_)
    if (!x.is_zero())
      return false;
  return true;
}

void Matrix::check_shape(const Matrix& o) const {
  if (mod_ != o.mod_)
    throw ModulusMismatch("matrices over different fields");
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw PreconditionError("matrix shape mismatch");
}

Matrix Matrix::transpose() const {
  Matrix r(mod_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      r(j, i) = (*this)(i, j);
  return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (mod_ != o.mod_)
    throw ModulusMismatch("matrices over different fields");
  if (cols_ != o.rows_)
    throw PreconditionError("matrix product shape mismatch");
  Matrix r(mod_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Fp& a = (*this)(i, k);
      if (a.is_zero())
        continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        r(i, j) += a * o(k, j);
    }
  return r;
}

Vector Matrix::operator*(const Vector& v) const {
  if (v.size() != cols_)
    throw PreconditionError("matrix-vector shape mismatch");
  Vector r = zero_vector(mod_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      r[i] += (*this)(i, j) * v[j];
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  check_shape(o);
  Matrix r = *this;
  for (std::size_t k = 0; k < data_.size(); ++k)
    r.data_[k] += o.data_[k];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  check_shape(o);
  Matrix r = *this;
  for (std::size_t k = 0; k < data_.size(); ++k)
    r.data_[k] -= o.data_[k];
  return r;
}

Matrix Matrix::scaled(const Fp& c) const {
  Matrix r = *this;
  for (Fp& x : r.data_)
    x *= c;
  return r;
}

Matrix Matrix::pow(unsigned e) const {
  if (rows_ != cols_)
    throw PreconditionError("power of a non-square matrix");
  Matrix r = identity(mod_, rows_);
  for (unsigned k = 0; k < e; ++k)
    r = r * *this;
  return r;
}

Fp Matrix::trace() const {
  Fp t = Fp::zero(mod_);
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i)
    t += (*this)(i, i);
  return t;
}

Matrix Matrix::rref(std::vector<std::size_t>* pivots) const {
  Matrix r = *this;
  std::vector<std::size_t> piv;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols_ && lead < rows_; ++c) {
    std::size_t sel = lead;
    while (sel < rows_ && r(sel, c).is_zero())
      ++sel;
    if (sel == rows_)
      continue;
    if (sel != lead)
      for (std::size_t j = 0; j < cols_; ++j)
        std::swap(r(sel, j), r(lead, j));
    Fp inv = r(lead, c).inv();
    for (std::size_t j = c; j < cols_; ++j)
      r(lead, j) *= inv;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == lead || r(i, c).is_zero())
        continue;
      Fp factor = r(i, c);
      for (std::size_t j = c; j < cols_; ++j)
        r(i, j) -= factor * r(lead, j);
    }
    piv.push_back(c);
    ++lead;
  }
  if (pivots)
    *pivots = std::move(piv);
  return r;
}

std::size_t Matrix::rank() const {
  std::vector<std::size_t> piv;
  rref(&piv);
  return piv.size();
}

std::vector<Vector> Matrix::nullspace() const {
  std::vector<std::size_t> piv;
  Matrix r = rref(&piv);
  std::vector<bool> is_pivot(cols_, false);
  for (std::size_t c : piv)
    is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free])
      continue;
    Vector v = zero_vector(mod_, cols_);
    v[free] = Fp::one(mod_);
    for (std::size_t k = 0; k < piv.size(); ++k)
      v[piv[k]] = -r(k, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

Fp Matrix::det() const {
  if (rows_ != cols_)
    throw PreconditionError("determinant of a non-square matrix");
  Matrix r = *this;
  Fp d = Fp::one(mod_);
  for (std::size_t c = 0; c < cols_; ++c) {
    std::size_t sel = c;
    while (sel < rows_ && r(sel, c).is_zero())
      ++sel;
    if (sel == rows_)
      return Fp::zero(mod_);
    if (sel != c) {
      for (std::size_t j = 0; j < cols_; ++j)
        std::swap(r(sel, j), r(c, j));
      d = -d;
    }
    d *= r(c, c);
    Fp inv = r(c, c).inv();
    for (std::size_t i = c + 1; i < rows_; ++i) {
      if (r(i, c).is_zero())
        continue;
      Fp factor = r(i, c) * inv;
      for (std::size_t j = c; j < cols_; ++j)
        r(i, j) -= factor * r(c, j);
    }
  }
  return d;
}

Matrix Matrix::adjugate() const {
  if (rows_ != cols_)
    throw PreconditionError("adjugate of a non-square matrix");
  std::size_t n = rows_;
  Matrix adj(mod_, n, n);
  if (n == 1) {
    adj(0, 0) = Fp::one(mod_);
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Matrix minor(mod_, n - 1, n - 1);
      for (std::size_t r = 0, mr = 0; r < n; ++r) {
        if (r == i)
          continue;
        for (std::size_t c = 0, mc = 0; c < n; ++c) {
          if (c == j)
            continue;
          minor(mr, mc++) = (*this)(r, c);
        }
        ++mr;
      }
      Fp cof = minor.det();
      adj(j, i) = (i + j) % 2 ? -cof : cof;
    }
  return adj;
}

Matrix Matrix::inverse() const {
  Fp d = det();
  if (d.is_zero())
    throw DivisionByZero("singular matrix has no inverse");
  return adjugate().scaled(d.inv());
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.mod_ == b.mod_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
  if (b.size() != m.rows())
    throw PreconditionError("right-hand side length mismatch");
  Matrix aug(m.modulus(), m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j)
      aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  std::vector<std::size_t> piv;
  Matrix r = aug.rref(&piv);
  if (!piv.empty() && piv.back() == m.cols())
    return std::nullopt;
  Vector x = zero_vector(m.modulus(), m.cols());
  for (std::size_t k = 0; k < piv.size(); ++k)
    x[piv[k]] = r(k, m.cols());
  return x;
}

Matrix span_basis(Modulus m, const std::vector<Vector>& vectors, std::size_t n) {
  std::vector<std::size_t> piv;
  Matrix r = Matrix::from_rows(m, vectors, n).rref(&piv);
  Matrix basis(m, piv.size(), n);
  for (std::size_t i = 0; i < piv.size(); ++i)
    for (std::size_t j = 0; j < n; ++j)
      basis(i, j) = r(i, j);
  return basis;
}

std::size_t span_rank(Modulus m, const std::vector<Vector>& vectors, std::size_t n) {
  return span_basis(m, vectors, n).rows();
}

bool same_span(Modulus m, const std::vector<Vector>& a, const std::vector<Vector>& b,
               std::size_t n) {
  return span_basis(m, a, n) == span_basis(m, b, n);
}

bool in_span(Modulus m, const std::vector<Vector>& basis, const Vector& v) {
  std::vector<Vector> extended = basis;
  extended.push_back(v);
  return span_rank(m, extended, v.size()) == span_rank(m, basis, v.size());
}

bool projectively_equal(const Vector& a, const Vector& b) {
  if (a.size() != b.size())
    return false;
  bool a_nonzero = false, b_nonzero = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    a_nonzero = a_nonzero || !a[i].is_zero();
    b_nonzero = b_nonzero || !b[i].is_zero();
  }
  if (!a_nonzero || !b_nonzero)
    return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (a[i] * b[j] != a[j] * b[i])
        return false;
  // all 2x2 minors vanish; also need the supports to agree
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].is_zero() != b[i].is_zero())
      return false;
  return true;
}

std::string to_string(const Matrix& m) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j)
      os << (j ? ", " : "") << m(i, j);
    os << ']';
  }
  os << ']';
  return os.str();
}

} // namespace hesse_moore
