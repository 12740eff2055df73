#include "hesse_moore/heisenberg.hpp"

#include <numeric>

namespace hesse_moore {

namespace {

int mod_n(long long v, int n) {
  long long r = v % n;
  return static_cast<int>(r < 0 ? r + n : r);
}

} // namespace

HeisenbergElement::HeisenbergElement(int n_, int r_, int s_, int t_) : n(n_) {
  if (n_ < 1)
    throw PreconditionError("Heisenberg group order parameter must be positive");
  r = mod_n(r_, n);
  s = mod_n(s_, n);
  t = mod_n(t_, n);
}

HeisenbergElement HeisenbergElement::inverse() const {
  // (r, s, t)(r', -s, -t) has commutator exponent r + r' + t s
  return {n, -r - t * s, -s, -t};
}

std::size_t HeisenbergElement::index() const {
  auto nn = static_cast<std::size_t>(n);
  return static_cast<std::size_t>(r) * nn * nn + static_cast<std::size_t>(s) * nn +
         static_cast<std::size_t>(t);
}

HeisenbergElement hn_mul(const HeisenbergElement& g, const HeisenbergElement& h) {
  if (g.n != h.n)
    throw PreconditionError("elements of H_" + std::to_string(g.n) + " and H_" +
                            std::to_string(h.n));
  return {g.n, g.r + h.r - g.t * h.s, g.s + h.s, g.t + h.t};
}

std::vector<HeisenbergElement> heisenberg_elements(int n) {
  std::vector<HeisenbergElement> out;
  out.reserve(static_cast<std::size_t>(n) * n * n);
  for (int r = 0; r < n; ++r)
    for (int s = 0; s < n; ++s)
      for (int t = 0; t < n; ++t)
        out.emplace_back(n, r, s, t);
  return out;
}

// ALGEBRAIC HEISENBERG GROUP

Matrix sigma_matrix(Modulus m) { return Matrix(m, {{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}); }

Matrix t_matrix(Modulus m) {
  Fp w = primitive_root_of_unity(m, 3);
  Matrix t(m, 3, 3);
  t(0, 0) = Fp::one(m);
  t(1, 1) = w;
  t(2, 2) = w * w;
  return t;
}

Matrix heis3_matrix(const Fp& mu, int i, int j) {
  if (mu.is_zero())
    throw PreconditionError("Heis_3 scalar must be nonzero");
  Modulus m = mu.modulus();
  return (t_matrix(m).pow(static_cast<unsigned>(mod3(i))) *
          sigma_matrix(m).pow(static_cast<unsigned>(mod3(j))))
      .scaled(mu);
}

Triple act_sigma(const Triple& a) { return {a[2], a[0], a[1]}; }

Triple act_t(const Triple& a) {
  Fp w = primitive_root_of_unity(a[0].modulus(), 3);
  return {a[0], w * a[1], w * w * a[2]};
}

std::set<ProjectivePoint> orbit(const Triple& a) {
  if (is_zero(a))
    throw PreconditionError("orbit of the zero vector");
  std::set<ProjectivePoint> out;
  Modulus m = a[0].modulus();
  Vector v(a.begin(), a.end());
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Vector w = heis3_matrix(Fp::one(m), i, j) * v;
      out.emplace(Triple{w[0], w[1], w[2]});
    }
  return out;
}

// TRACE INVARIANTS

NMatrices n_matrices(const Triple& a) {
  if (coordinate_product(a).is_zero())
    throw PreconditionError("N matrices need a0 a1 a2 != 0");
  FormMatrix mx = moore(a);
  Matrix m0 = mx.linear_coefficient(0);
  Matrix m0_inv = m0.inverse();
  return {m0_inv * mx.linear_coefficient(1), m0_inv * mx.linear_coefficient(2)};
}

TraceInvariants trace_invariants_from_matrices(const Triple& a) {
  NMatrices n = n_matrices(a);
  Matrix n12 = n.n1 * n.n2;
  Matrix sq = n.n1 * n.n1 * n.n2 * n.n2;
  return {(n12 * n12).trace(), sq.trace(), (n12 * sq).trace()};
}

TraceInvariants trace_invariants_closed_form(const Triple& a) {
  Fp prod = coordinate_product(a);
  if (prod.is_zero())
    throw PreconditionError("trace invariants need a0 a1 a2 != 0");
  Fp c0 = a[0].pow(3), c1 = a[1].pow(3), c2 = a[2].pow(3);
  Fp prod2_inv = prod.pow(2).inv();
  Fp prod3_inv = prod.pow(3).inv();
  return {(c0 * c0 + c1 * c1 + c2 * c2) * prod2_inv,
          (c0 * c1 + c0 * c2 + c1 * c2) * prod2_inv,
          (c0 * c0 * c1 + c1 * c1 * c2 + c2 * c2 * c0) * prod3_inv};
}

TraceInvariants trace_invariants(const Triple& a) {
  TraceInvariants from_traces = trace_invariants_from_matrices(a);
  if (from_traces != trace_invariants_closed_form(a))
    throw InternalError("closed-form trace invariants disagree with matrix traces");
  return from_traces;
}

bool are_equivalent(const Triple& a, const Triple& a2) {
  if (coordinate_product(a).is_zero() || coordinate_product(a2).is_zero())
    throw PreconditionError("equivalence test needs nonzero coordinate products");
  HesseCurve e1 = HesseCurve::through(a);
  HesseCurve e2 = HesseCurve::through(a2);
  if (e1.lambda() != e2.lambda())
    return false;
  return trace_invariants(a) == trace_invariants(a2);
}

// CHARACTERS

ClassFunction::ClassFunction(Modulus m, int n)
    : n_(n), values_(static_cast<std::size_t>(n) * n * n, Fp::zero(m)) {
  if (n < 1)
    throw PreconditionError("class function on H_n needs n >= 1");
}

ClassFunction ClassFunction::operator*(const ClassFunction& o) const {
  if (n_ != o.n_)
    throw PreconditionError("class functions on different groups");
  ClassFunction r = *this;
  for (std::size_t k = 0; k < values_.size(); ++k)
    r.values_[k] *= o.values_[k];
  return r;
}

ClassFunction ClassFunction::scaled(const Fp& c) const {
  ClassFunction r = *this;
  for (Fp& v : r.values_)
    v *= c;
  return r;
}

ClassFunction schrodinger_character(int n, int j, const Fp& zeta) {
  Modulus m = zeta.modulus();
  if (n < 1 || (m.value() - 1) % static_cast<std::uint64_t>(n) != 0 ||
      zeta.is_zero() || multiplicative_order(zeta) != static_cast<std::uint64_t>(n))
    throw PreconditionError("zeta = " + std::to_string(zeta.value()) +
                            " is not a primitive root of unity of order " + std::to_string(n));
  ClassFunction chi(m, n);
  Fp n_scalar(m, n);
  for (const HeisenbergElement& g : heisenberg_elements(n)) {
    bool trivial = g.s == 0 && mod_n(static_cast<long long>(j) * g.t, n) == 0;
    if (trivial)
      chi[g] = n_scalar * zeta.pow(static_cast<std::uint64_t>(mod_n(static_cast<long long>(j) * g.r, n)));
  }
  return chi;
}

ClassFunction schrodinger_character(Modulus m, int n, int j) {
  return schrodinger_character(n, j, primitive_root_of_unity(m, static_cast<std::uint64_t>(n)));
}

Fp inner_product(const ClassFunction& chi, const ClassFunction& psi) {
  if (chi.n() != psi.n())
    throw PreconditionError("class functions on different groups");
  Modulus m = chi.modulus();
  Fp sum = Fp::zero(m);
  for (const HeisenbergElement& g : heisenberg_elements(chi.n()))
    sum += chi[g] * psi[g.inverse()];
  return sum / Fp(m, static_cast<std::int64_t>(chi.n()) * chi.n() * chi.n());
}

bool is_class_function(const ClassFunction& chi) {
  auto elements = heisenberg_elements(chi.n());
  for (const HeisenbergElement& g : elements)
    for (const HeisenbergElement& h : elements)
      if (chi[h * g * h.inverse()] != chi[g])
        return false;
  return true;
}

bool verify_restriction(Modulus m, int n, int d, int j) {
  if (d < 1 || n < 1 || n % d != 0 || std::gcd(d, n / d) != 1)
    throw PreconditionError("restriction needs d | n and gcd(d, n/d) = 1");
  int mult = n / d;
  Fp zeta_n = primitive_root_of_unity(m, static_cast<std::uint64_t>(n));
  Fp zeta_d = zeta_n.pow(static_cast<std::uint64_t>(mult));
  ClassFunction big = schrodinger_character(n, j, zeta_n);
  ClassFunction small = schrodinger_character(d, mod_n(static_cast<long long>(j) * mult, d), zeta_d);
  Fp copies(m, mult);
  for (const HeisenbergElement& g : heisenberg_elements(d)) {
    HeisenbergElement image(n, mult * mult * g.r, mult * g.s, mult * g.t);
    if (big[image] != copies * small[g])
      return false;
  }
  return true;
}

// TENSOR PRODUCT OF SCHROEDINGER REPRESENTATIONS

namespace {

// sigma' = rho_1(sigma) (x) rho_1(sigma): x_i y_j -> x_{i-1} y_{j-1}
Matrix sigma_prime(const Matrix& c) {
  Matrix r(c.modulus(), 3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      r(i, j) = c(mod3(i + 1), mod3(j + 1));
  return r;
}

// tau' = rho_1(tau) (x) rho_1(tau): x_i y_j -> zeta^(i+j) x_i y_j
Matrix tau_prime(const Matrix& c, const Fp& zeta) {
  Matrix r = c;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      r(i, j) *= zeta.pow(static_cast<std::uint64_t>(i + j));
  return r;
}

Vector flatten(const Matrix& c) {
  Vector v;
  for (std::size_t i = 0; i < c.rows(); ++i)
    for (std::size_t j = 0; j < c.cols(); ++j)
      v.push_back(c(i, j));
  return v;
}

} // namespace

SchroedingerTensorBasis schroedinger_tensor_basis(const Triple& a) {
  Matrix f0(a[0].modulus(), 3, 3);
  f0(0, 0) = a[0];
  f0(2, 1) = a[1];
  f0(1, 2) = a[2];
  Matrix f2 = sigma_prime(f0);
  Matrix f1 = sigma_prime(f2);
  return {f0, f1, f2};
}

bool verify_tensor_h3(const Fp& zeta) {
  Modulus m = zeta.modulus();
  ClassFunction chi1 = schrodinger_character(3, 1, zeta);
  ClassFunction chi2 = schrodinger_character(3, 2, zeta);
  if (chi1 * chi1 != chi2.scaled(Fp(m, 3)))
    return false;

  Fp w2 = zeta * zeta;
  std::vector<Vector> all;
  for (int e = 0; e < 3; ++e) {
    Triple a{Fp::zero(m), Fp::zero(m), Fp::zero(m)};
    a[e] = Fp::one(m);
    SchroedingerTensorBasis b = schroedinger_tensor_basis(a);
    if (tau_prime(b.f0, zeta) != b.f0 || tau_prime(b.f1, zeta) != b.f1.scaled(w2) ||
        tau_prime(b.f2, zeta) != b.f2.scaled(zeta))
      return false;
    // rho_2(sigma) v_i = v_{i-1}
    if (sigma_prime(b.f1) != b.f0 || sigma_prime(b.f0) != b.f2 || sigma_prime(b.f2) != b.f1)
      return false;
    all.push_back(flatten(b.f0));
    all.push_back(flatten(b.f1));
    all.push_back(flatten(b.f2));
  }
  return span_rank(m, all, 9) == 9;
}

} // namespace hesse_moore
