// Homogeneous polynomials in x0, x1, x2 over F_p, and division by a Hesse cubic.

#ifndef HESSE_MOORE_POLY_HPP_
#define HESSE_MOORE_POLY_HPP_

#include <array>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "field.hpp"

namespace hesse_moore {

struct Exponent {
  int e0 = 0, e1 = 0, e2 = 0;
  int degree() const { return e0 + e1 + e2; }
  int operator[](int i) const { return i == 0 ? e0 : i == 1 ? e1 : e2; }
  friend bool operator==(const Exponent&, const Exponent&) = default;
};

// Number of monomials of degree d in three variables; 0 for d < 0.
std::size_t monomial_count(int degree);

// Monomials of degree d in graded-lex order with x0 > x1 > x2, so the
// first entry is x0^d and the last is x2^d.
const std::vector<Exponent>& monomials(int degree);

// Position of e in monomials(e.degree()).
std::size_t monomial_index(const Exponent& e);

// Dense homogeneous form of fixed degree. The zero form exists at every degree.
class HomForm {
public:
  HomForm(Modulus m, int degree);

  static HomForm constant(const Fp& c);
  static HomForm variable(Modulus m, int i);
  static HomForm monomial(const Fp& c, const Exponent& e);

  int degree() const { return degree_; }
  Modulus modulus() const { return mod_; }
  std::span<const Fp> coefficients() const { return coeffs_; }
  const Fp& coefficient(const Exponent& e) const;
  const Fp& coefficient(std::size_t index) const { return coeffs_[index]; }
  void set_coefficient(const Exponent& e, const Fp& c);
  void set_coefficient(std::size_t index, const Fp& c) { coeffs_[index] = c; }
  bool is_zero() const;
  std::size_t term_count() const;

  HomForm& operator+=(const HomForm& o);
  HomForm& operator-=(const HomForm& o);
  friend HomForm operator+(HomForm a, const HomForm& b) { return a += b; }
  friend HomForm operator-(HomForm a, const HomForm& b) { return a -= b; }
  HomForm operator-() const;
  friend HomForm operator*(const HomForm& a, const HomForm& b);
  friend HomForm operator*(const Fp& c, HomForm g);

  HomForm partial(int i) const;
  Fp evaluate(const std::array<Fp, 3>& point) const;
  // Substitute linear forms for the variables.
  HomForm substitute(const std::array<HomForm, 3>& linear) const;

  // "3*x0^2*x1 + x2^3" with decimal residues and unit coefficients dropped, or "0".
  std::string to_string() const;

  friend bool operator==(const HomForm& a, const HomForm& b) {
    return a.degree_ == b.degree_ && a.mod_ == b.mod_ && a.coeffs_ == b.coeffs_;
  }

private:
  void check_compatible(const HomForm& o) const;

  Modulus mod_;
  int degree_;
  std::vector<Fp> coeffs_;
};

HomForm scale(const Fp& c, const HomForm& g);

// Parses sums of terms such as "3*x0^2*x1 - x2^3 + 5*x0*x1*x2". Coefficients
// are integers reduced mod p. `degree` is required to type the zero form;
// pass -1 to infer it from the terms.
HomForm parse_form(std::string_view text, Modulus m, int degree = -1);

// f = x0^3 + x1^3 + x2^3 - lambda*x0*x1*x2 with lambda^3 != 27.
class HesseCubic {
public:
  explicit HesseCubic(const Fp& lambda);

  static bool is_smooth(const Fp& lambda);

  const Fp& lambda() const { return lambda_; }
  const HomForm& form() const { return form_; }
  Modulus modulus() const { return lambda_.modulus(); }

private:
  Fp lambda_;
  HomForm form_;
};

struct Division {
  HomForm quotient;
  HomForm remainder;
};

// g = q*f + r where no monomial of r is divisible by x0^3, the leading
// monomial of f. The remainder is unique, so r == 0 iff f divides g.
Division divide_by_cubic(const HomForm& g, const HesseCubic& f);

// Storage audit: one coefficient per monomial of the declared degree.
bool is_homogeneous(const HomForm& g);

} // namespace hesse_moore

#endif
