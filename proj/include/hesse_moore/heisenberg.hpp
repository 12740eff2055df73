// Finite Heisenberg groups H_n, the matrix group Heis_3 acting on Moore
// matrices, the trace invariants that decide equivalence of Moore matrices,
// and characters of the Schroedinger representations.

#ifndef HESSE_MOORE_HEISENBERG_HPP_
#define HESSE_MOORE_HEISENBERG_HPP_

#include <set>
#include <vector>

#include "hesse.hpp"

namespace hesse_moore {

// [sigma,tau]^r sigma^s tau^t with r, s, t in Z/n. The commutator
// z = sigma tau sigma^-1 tau^-1 is central, so tau^t sigma^s = z^(-ts) sigma^s tau^t.
struct HeisenbergElement {
  int n = 1;
  int r = 0, s = 0, t = 0;

  HeisenbergElement() = default;
  HeisenbergElement(int n, int r, int s, int t);

  static HeisenbergElement identity(int n) { return {n, 0, 0, 0}; }
  static HeisenbergElement sigma(int n) { return {n, 0, 1, 0}; }
  static HeisenbergElement tau(int n) { return {n, 0, 0, 1}; }
  static HeisenbergElement commutator(int n) { return {n, 1, 0, 0}; }

  HeisenbergElement inverse() const;
  // Flat index r n^2 + s n + t into tables of size n^3.
  std::size_t index() const;

  friend bool operator==(const HeisenbergElement&, const HeisenbergElement&) = default;
};

HeisenbergElement hn_mul(const HeisenbergElement& g, const HeisenbergElement& h);
inline HeisenbergElement operator*(const HeisenbergElement& g, const HeisenbergElement& h) {
  return hn_mul(g, h);
}

// All n^3 elements in index order.
std::vector<HeisenbergElement> heisenberg_elements(int n);

// SIGMA: e_j -> e_{j+1}; T = diag(1, w, w^2) with w the canonical cube root.
Matrix sigma_matrix(Modulus m);
Matrix t_matrix(Modulus m);
// mu T^i SIGMA^j
Matrix heis3_matrix(const Fp& mu, int i, int j);

// SIGMA(a) = (a2, a0, a1), T(a) = (a0, w a1, w^2 a2).
Triple act_sigma(const Triple& a);
Triple act_t(const Triple& a);

// {T^i SIGMA^j a} as normalized points.
std::set<ProjectivePoint> orbit(const Triple& a);

struct NMatrices {
  Matrix n1, n2;
};

// N_i = M_0^-1 M_i with M_i the coefficient of x_i in M_{a,x}. Requires a0 a1 a2 != 0.
NMatrices n_matrices(const Triple& a);

struct TraceInvariants {
  Fp t1; // tr((N1 N2)^2)
  Fp t2; // tr(N1^2 N2^2)
  Fp t3; // tr(N1 N2 N1^2 N2^2)

  friend bool operator==(const TraceInvariants&, const TraceInvariants&) = default;
};

TraceInvariants trace_invariants_from_matrices(const Triple& a);
TraceInvariants trace_invariants_closed_form(const Triple& a);
// Both routes; a disagreement throws InternalError.
TraceInvariants trace_invariants(const Triple& a);

// Whether M_{a,x} and M_{a2,x} are equivalent determinantal representations:
// false on different curves, otherwise equality of trace invariants.
bool are_equivalent(const Triple& a, const Triple& a2);

class ClassFunction {
public:
  ClassFunction(Modulus m, int n);

  int n() const { return n_; }
  Modulus modulus() const { return values_.front().modulus(); }
  Fp& operator[](const HeisenbergElement& g) { return values_[g.index()]; }
  const Fp& operator[](const HeisenbergElement& g) const { return values_[g.index()]; }
  const std::vector<Fp>& values() const { return values_; }

  ClassFunction operator*(const ClassFunction& o) const;
  ClassFunction scaled(const Fp& c) const;

  friend bool operator==(const ClassFunction&, const ClassFunction&) = default;

private:
  int n_;
  std::vector<Fp> values_;
};

// chi_j(z^r s^s t^t) = n zeta^(jr) if s = jt = 0 mod n, else 0.
ClassFunction schrodinger_character(int n, int j, const Fp& zeta);
// Same, with the canonical primitive n-th root of unity.
ClassFunction schrodinger_character(Modulus m, int n, int j);

// (1 / n^3) sum_g chi(g) psi(g^-1)
Fp inner_product(const ClassFunction& chi, const ClassFunction& psi);

// Whether a class function is constant on conjugacy classes.
bool is_class_function(const ClassFunction& chi);

// Pull chi_j of H_n back along (r, s, t) -> (m^2 r, m s, m t), m = n/d, and
// compare with (n/d) chi_{jm mod d} of H_d taken with zeta^m. Requires
// d | n and gcd(d, n/d) = 1.
bool verify_restriction(Modulus m, int n, int d, int j);

// Bilinear tensors sum c_ij x_i (x) y_j as 3x3 coefficient matrices.
struct SchroedingerTensorBasis {
  Matrix f0, f1, f2;
};

// f0 = a0 x0y0 + a1 x2y1 + a2 x1y2, f_{-i} = (sigma')^i f0.
SchroedingerTensorBasis schroedinger_tensor_basis(const Triple& a);

// chi_1^2 = 3 chi_2 on H_3, and the basis f0, f1, f2 is a Schroedinger basis
// of rho_2 (tau' eigenvalues 1, w^2, w; sigma' cycling) for a = e0, e1, e2,
// the three copies spanning V (x) V'.
bool verify_tensor_h3(const Fp& zeta);

} // namespace hesse_moore

#endif
