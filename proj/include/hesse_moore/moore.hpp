// Moore matrices M_{a,x} = (a_{i+j} x_{i-j}), i, j in Z/3, their adjugates,
// determinants and kernel points.

#ifndef HESSE_MOORE_MOORE_HPP_
#define HESSE_MOORE_MOORE_HPP_

#include <array>
#include <string>
#include <vector>

#include "linalg.hpp"
#include "poly.hpp"

namespace hesse_moore {

using Triple = std::array<Fp, 3>;

Triple make_triple(Modulus m, std::int64_t a0, std::int64_t a1, std::int64_t a2);
bool is_zero(const Triple& a);
Fp coordinate_product(const Triple& a);
// (a0, a1, a2) -> (a0, a2, a1), i.e. x_j -> x_{-j}
Triple iota(const Triple& a);
Triple scaled(const Fp& c, const Triple& a);

inline int mod3(int i) { return ((i % 3) + 3) % 3; }

// Point of P^2(F_p), stored with its first nonzero coordinate equal to 1.
class ProjectivePoint {
public:
  explicit ProjectivePoint(const Triple& coords);

  const Triple& coords() const { return c_; }
  const Fp& operator[](int i) const { return c_[i]; }
  Modulus modulus() const { return c_[0].modulus(); }

  friend bool operator==(const ProjectivePoint&, const ProjectivePoint&) = default;
  friend bool operator<(const ProjectivePoint& a, const ProjectivePoint& b) {
    return a.c_ < b.c_;
  }

  std::string to_string() const;

private:
  Triple c_;
};

ProjectivePoint iota(const ProjectivePoint& a);

// n x n matrix of homogeneous forms.
class FormMatrix {
public:
  // Zero matrix whose entries have the given degree.
  FormMatrix(Modulus m, std::size_t n, int degree);
  FormMatrix(std::size_t n, std::vector<HomForm> entries);

  static FormMatrix scalar(const Matrix& c);
  static FormMatrix identity_times(const HomForm& g, std::size_t n);
  // (top_left top_right; 0 bottom_right), zero block typed by `zero_degree`.
  static FormMatrix block_upper(const FormMatrix& top_left, const FormMatrix& top_right,
                                const FormMatrix& bottom_right, int zero_degree);

  std::size_t size() const { return n_; }
  Modulus modulus() const { return entries_.front().modulus(); }
  HomForm& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
  const HomForm& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
  const std::vector<HomForm>& entries() const { return entries_; }

  // Degree shared by all entries, or -1 when the profile is mixed.
  int uniform_degree() const;
  bool is_zero() const;

  FormMatrix operator*(const FormMatrix& o) const;
  FormMatrix operator+(const FormMatrix& o) const;
  FormMatrix operator-(const FormMatrix& o) const;
  FormMatrix operator-() const;
  FormMatrix scaled(const Fp& c) const;
  FormMatrix scaled(const HomForm& g) const;
  FormMatrix transpose() const;
  HomForm trace() const;
  Matrix evaluate(const Triple& point) const;
  // Coefficient matrix of x_i in a matrix of linear forms.
  Matrix linear_coefficient(int i) const;
  // Entrywise formal partial derivative.
  FormMatrix partial(int i) const;

  // Leibniz expansion; 3 x 3 only.
  HomForm det3() const;
  // Transpose of the cofactor matrix; 3 x 3 only.
  FormMatrix cofactor_adjugate3() const;

  friend bool operator==(const FormMatrix&, const FormMatrix&) = default;

private:
  std::size_t n_;
  std::vector<HomForm> entries_;
};

std::array<HomForm, 3> coordinate_forms(Modulus m);
std::array<HomForm, 3> iota(const std::array<HomForm, 3>& vars);

// Entry (i, j) is a_{i+j} * vars_{i-j}, indices mod 3.
FormMatrix moore(const Triple& a, const std::array<HomForm, 3>& vars);
FormMatrix moore(const Triple& a);
// Specialization x -> b.
Matrix moore_at(const Triple& a, const Triple& b);

// Closed form (a_{i+j-1} a_{i+j+1} x_{j-i}^2 - a_{i+j}^2 x_{j-i-1} x_{j-i+1}).
FormMatrix moore_adjugate(const Triple& a);
Matrix moore_adjugate_at(const Triple& a, const Triple& b);

// a0 a1 a2 (x0^3 + x1^3 + x2^3) - (a0^3 + a1^3 + a2^3) x0 x1 x2
HomForm moore_det(const Triple& a);

// Point spanning {c : M c^T = 0} for a rank-2 matrix: first nonzero column
// of the adjugate, checked against the elimination null space.
ProjectivePoint left_kernel_point(const Matrix& m);
// Point spanning {d : d M = 0}, i.e. left_kernel_point of the transpose.
ProjectivePoint right_kernel_point(const Matrix& m);

// Aligned multi-line rendering.
std::string pretty(const FormMatrix& m);

} // namespace hesse_moore

#endif
