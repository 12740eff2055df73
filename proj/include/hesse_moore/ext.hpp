// Graded self-extensions Ext^1(L, L(m)) of the rank-1 Moore module, as
// {C : tr(B C) = 0 mod f} modulo homotopies {U A - A V}.

#ifndef HESSE_MOORE_EXT_HPP_
#define HESSE_MOORE_EXT_HPP_

#include "ulrich.hpp"

namespace hesse_moore {

struct ExtSpace {
  int shift = 0;
  std::vector<FormMatrix> solution_basis; // entries in S_{m+1}
  std::vector<FormMatrix> homotopy_basis; // canonical basis of {U A - A V}
  std::vector<FormMatrix> representatives; // solution vectors not in the homotopy span
  std::size_t quotient_dimension = 0;
};

// Requires a0 a1 a2 != 0 on a smooth curve. Zero for m < -1.
ExtSpace ext_space(const Triple& a, int m);

// The m = -1 solution space is spanned by M_{b,e_0}, M_{b,e_1}, M_{b,e_2}
// with b = extension_representative(a).
bool verify_moore_span(const Triple& a);

// Solution spaces transform as sol(T a) = T sol(a) T and
// sol(SIGMA a) = SIGMA^-1 sol(a) SIGMA, for m = -1 and m = 0.
bool verify_heis3_stability(const Triple& a);

struct MooreRepresentative {
  std::array<HomForm, 3> y; // C = M_{b,y} + U A - A V
  Matrix U, V;
  Fp divergence;
  // y-parts of the solutions of M_{b,y} + U A - A V = 0.
  std::vector<std::array<HomForm, 3>> kernel;
  bool well_defined = true; // every kernel y has divergence 0
};

// Requires C in the m = 0 solution space; throws PreconditionError when the
// system has no solution.
MooreRepresentative moore_representative(const Triple& a, const FormMatrix& C);

// Divergence of the Moore representative. Throws InternalError when the
// value depends on the representative.
Fp divergence_class(const Triple& a, const FormMatrix& C);

// Kernel of divergence_class on the m = 0 solution space equals the span of
// the homotopies.
bool verify_divergence_kernel(const Triple& a);

} // namespace hesse_moore

#endif
