// Matrix factorizations of Hesse cubics: the rank-1 Moore factorization,
// partner matrices of extension data, and the rank-2 block factorization.

#ifndef HESSE_MOORE_ULRICH_HPP_
#define HESSE_MOORE_ULRICH_HPP_

#include <optional>

#include "hesse.hpp"

namespace hesse_moore {

// A B = B A = unit * f * I with f the monic-in-x0^3 Hesse cubic, checked on
// construction. For the Moore factorization the unit is a0 a1 a2.
class MatrixFactorization {
public:
  MatrixFactorization(FormMatrix a, FormMatrix b, HesseCubic f, Fp unit);

  std::size_t size() const { return a_.size(); }
  const FormMatrix& A() const { return a_; }
  const FormMatrix& B() const { return b_; }
  const HesseCubic& cubic() const { return f_; }
  const Fp& unit() const { return unit_; }
  // unit * f, the polynomial actually factored.
  HomForm product() const { return scale(unit_, f_.form()); }

private:
  FormMatrix a_, b_;
  HesseCubic f_;
  Fp unit_;
};

// (M_{a,x}, M_{a,x}^adj). Requires a0 a1 a2 != 0 on a smooth curve.
MatrixFactorization moore_factorization(const Triple& a);

// Row-major entries, each as graded-lex coefficients of the given degree.
Vector coordinates(const FormMatrix& m, int degree);
FormMatrix from_coordinates(Modulus m, std::size_t n, int degree, const Vector& v);

// Entrywise quotient by f, or nullopt when some entry is not divisible.
// Quotients are checked by multiplying back.
std::optional<FormMatrix> divide_entries(const FormMatrix& g, const HesseCubic& f);

struct ExtensionDatum {
  FormMatrix C, D;
  int shift; // C has entries in S_{m+1}, D in S_{m+2}
};

// D = -B C B / (unit f). Throws PreconditionError when f does not divide BCB.
FormMatrix partner_D(const MatrixFactorization& fac, const FormMatrix& C);
// C = -A D A / (unit f).
FormMatrix recover_C(const MatrixFactorization& fac, const FormMatrix& D);
// C with its partner; both identities A D + C B = 0 = D A + B C are checked.
ExtensionDatum extension_datum(const MatrixFactorization& fac, const FormMatrix& C);

// D with A D + C B = 0, by linear algebra on coefficients.
std::optional<FormMatrix> solve_left_partner(const MatrixFactorization& fac, const FormMatrix& C);
// D' with D' A + B C = 0.
std::optional<FormMatrix> solve_right_partner(const MatrixFactorization& fac, const FormMatrix& C);

bool bcb_divisible(const MatrixFactorization& fac, const FormMatrix& C);
// tr(B C) = 0 mod f
bool trace_criterion(const MatrixFactorization& fac, const FormMatrix& C);
// B C B = tr(B C) B mod f, entrywise
bool bcb_congruence(const MatrixFactorization& fac, const FormMatrix& C);

// d y0/d x0 + d y1/d x1 + d y2/d x2 for linear forms y.
Fp divergence(const std::array<HomForm, 3>& y);

// iota of the doubling representative, representing -2a. With entries
// a_{i+j} x_{i-j} one has M_{b,e_0} = diag(b0, b2, b1), so this is the b for
// which M_{b,e_0} = diag(doubling representative) and tr(B M_{b,e_i}) = 0.
Triple extension_representative(const Triple& a);

struct UlrichExtension {
  MatrixFactorization factorization; // (A C; 0 A), (B D; 0 B)
  Triple b;                          // extension_representative(a)
  ExtensionDatum datum;              // C = M_{b,x}
  Fp divergence;                     // of the C block
};

// Rank-2 factorization from the self-extension by M_{b,x}.
UlrichExtension rank2_ulrich(const Triple& a);

} // namespace hesse_moore

#endif
