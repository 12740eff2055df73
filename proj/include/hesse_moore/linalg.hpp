// Dense exact linear algebra over F_p.

#ifndef HESSE_MOORE_LINALG_HPP_
#define HESSE_MOORE_LINALG_HPP_

#include <optional>
#include <string>
#include <vector>

#include "field.hpp"

namespace hesse_moore {

using Vector = std::vector<Fp>;

Vector zero_vector(Modulus m, std::size_t n);

class Matrix {
public:
  Matrix(Modulus m, std::size_t rows, std::size_t cols);
  // Rows given as integer residues, e.g. Matrix(m, {{1, 0}, {0, 1}}).
  Matrix(Modulus m, std::initializer_list<std::initializer_list<std::int64_t>> rows);

  static Matrix identity(Modulus m, std::size_t n);
  static Matrix from_rows(Modulus m, const std::vector<Vector>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Modulus modulus() const { return mod_; }

  Fp& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Fp& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vector row(std::size_t i) const;
  Vector col(std::size_t j) const;
  bool is_zero() const;

  Matrix transpose() const;
  Matrix operator*(const Matrix& o) const;
  Vector operator*(const Vector& v) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const Fp& c) const;
  Matrix pow(unsigned e) const;
  Fp trace() const;

  // Reduced row echelon form; pivot columns are written to `pivots` if given.
  Matrix rref(std::vector<std::size_t>* pivots = nullptr) const;
  std::size_t rank() const;
  // Basis of {v : M v = 0}, one vector per free column of the rref.
  std::vector<Vector> nullspace() const;
  Fp det() const;
  // Transpose of the cofactor matrix, computed from minors.
  Matrix adjugate() const;
  Matrix inverse() const;

  friend bool operator==(const Matrix& a, const Matrix& b);

private:
  void check_shape(const Matrix& o) const;

  Modulus mod_;
  std::size_t rows_, cols_;
  std::vector<Fp> data_;
};

// Solution x of M x = b with free variables set to zero, or nullopt.
std::optional<Vector> solve(const Matrix& m, const Vector& b);

// Dimension of the span of the given vectors of length n.
std::size_t span_rank(Modulus m, const std::vector<Vector>& vectors, std::size_t n);

// Canonical basis (nonzero rows of the rref) of the span.
Matrix span_basis(Modulus m, const std::vector<Vector>& vectors, std::size_t n);

bool same_span(Modulus m, const std::vector<Vector>& a, const std::vector<Vector>& b,
               std::size_t n);

bool in_span(Modulus m, const std::vector<Vector>& basis, const Vector& v);

// Nonzero vectors proportional to each other.
bool projectively_equal(const Vector& a, const Vector& b);

std::string to_string(const Matrix& m);

} // namespace hesse_moore

#endif
