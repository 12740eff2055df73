// Prime field arithmetic with guaranteed sixth roots of unity.

#ifndef HESSE_MOORE_FIELD_HPP_
#define HESSE_MOORE_FIELD_HPP_

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace hesse_moore {

// ERRORS

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Operands live in different prime fields.
struct ModulusMismatch : Error {
  using Error::Error;
};

struct DivisionByZero : Error {
  using Error::Error;
};

// Homogeneous forms of different degree were added.
struct DegreeMismatch : Error {
  using Error::Error;
};

// A mathematical precondition of an operation does not hold for its input.
struct PreconditionError : Error {
  using Error::Error;
};

// A property that the theory guarantees failed; always a bug or a finding.
struct InternalError : Error {
  using Error::Error;
};

bool is_prime(std::uint64_t n);

// A prime p > 3 with p = 1 (mod 6). Validated once at construction.
class Modulus {
public:
  explicit Modulus(std::uint64_t p);

  std::uint64_t value() const { return p_; }

  friend bool operator==(Modulus, Modulus) = default;
  friend auto operator<=>(Modulus, Modulus) = default;

private:
  friend class Fp;
  struct Unchecked {};
  Modulus(std::uint64_t p, Unchecked) : p_(p) {}
  static Modulus trusted(std::uint64_t p) { return Modulus(p, Unchecked{}); }

  std::uint64_t p_;
};

// Element of F_p. The modulus travels with the value; mixing moduli throws.
class Fp {
public:
  Fp(Modulus m, std::int64_t v);

  static Fp zero(Modulus m) { return Fp(m, 0); }
  static Fp one(Modulus m) { return Fp(m, 1); }

  std::uint64_t value() const { return v_; }
  Modulus modulus() const { return Modulus::trusted(p_); }
  std::uint64_t prime() const { return p_; }
  bool is_zero() const { return v_ == 0; }

  // Representative in (-p/2, p/2], handy for printing signs.
  std::int64_t signed_value() const;

  Fp& operator+=(const Fp& o);
  Fp& operator-=(const Fp& o);
  Fp& operator*=(const Fp& o);
  Fp& operator/=(const Fp& o) { return *this *= o.inv(); }

  friend Fp operator+(Fp a, const Fp& b) { return a += b; }
  friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
  friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
  friend Fp operator/(Fp a, const Fp& b) { return a /= b; }
  Fp operator-() const;

  // Integer scalars are reduced into the same field.
  friend Fp operator*(std::int64_t k, const Fp& a) { return Fp(a.modulus(), k) * a; }

  Fp inv() const;
  Fp pow(std::uint64_t e) const;

  friend bool operator==(const Fp& a, const Fp& b) {
    return a.p_ == b.p_ && a.v_ == b.v_;
  }
  friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }
  friend bool operator<(const Fp& a, const Fp& b) {
    return a.p_ != b.p_ ? a.p_ < b.p_ : a.v_ < b.v_;
  }

private:
  void check_same(const Fp& o) const;

  std::uint64_t v_;
  std::uint64_t p_;
};

std::ostream& operator<<(std::ostream& os, const Fp& x);

// Smallest residue of exact multiplicative order n. Requires n | p-1.
Fp primitive_root_of_unity(Modulus m, std::uint64_t n);

// Multiplicative order of a nonzero element.
std::uint64_t multiplicative_order(const Fp& x);

} // namespace hesse_moore

#endif
