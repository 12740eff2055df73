#include "hesse_moore/field.hpp"

#include <array>

namespace hesse_moore {

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1)
      r = mul_mod(r, b, m);
    b = mul_mod(b, b, m);
    e >>= 1;
  }
  return r;
}

} // namespace

// Deterministic Miller-Rabin; these bases cover all 64-bit integers.
bool is_prime(std::uint64_t n) {
  if (n < 2)
    return false;
  constexpr std::array<std::uint64_t, 12> bases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (std::uint64_t q : bases)
    if (n % q == 0)
      return n == q;
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : bases) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1)
      continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite)
      return false;
  }
  return true;
}

Modulus::Modulus(std::uint64_t p) : p_(p) {
  if (p >= (std::uint64_t(1) << 62))
    throw PreconditionError("modulus " + std::to_string(p) + " exceeds 2^62");
  if (p <= 3 || p % 6 != 1 || !is_prime(p))
    throw PreconditionError("modulus " + std::to_string(p) +
                            " must be a prime p > 3 with p = 1 (mod 6)");
}

Fp::Fp(Modulus m, std::int64_t v) : p_(m.value()) {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0)
    r += static_cast<std::int64_t>(p_);
  v_ = static_cast<std::uint64_t>(r);
}

std::int64_t Fp::signed_value() const {
  if (v_ > p_ / 2)
    return static_cast<std::int64_t>(v_) - static_cast<std::int64_t>(p_);
  return static_cast<std::int64_t>(v_);
}

void Fp::check_same(const Fp& o) const {
  if (p_ != o.p_)
    throw ModulusMismatch("mixed moduli " + std::to_string(p_) + " and " +
                          std::to_string(o.p_));
}

Fp& Fp::operator+=(const Fp& o) {
  check_same(o);
  v_ = v_ >= p_ - o.v_ ? v_ - (p_ - o.v_) : v_ + o.v_;
  return *this;
}

Fp& Fp::operator-=(const Fp& o) {
  check_same(o);
  v_ = v_ >= o.v_ ? v_ - o.v_ : v_ + (p_ - o.v_);
  return *this;
}

Fp& Fp::operator*=(const Fp& o) {
  check_same(o);
  v_ = mul_mod(v_, o.v_, p_);
  return *this;
}

Fp Fp::operator-() const {
  Fp r = *this;
  r.v_ = v_ == 0 ? 0 : p_ - v_;
  return r;
}

Fp Fp::inv() const {
  if (v_ == 0)
    throw DivisionByZero("inverse of zero in F_" + std::to_string(p_));
  return pow(p_ - 2);
}

Fp Fp::pow(std::uint64_t e) const {
  Fp r = *this;
  r.v_ = pow_mod(v_, e, p_);
  return r;
}

std::ostream& operator<<(std::ostream& os, const Fp& x) {
  return os << x.value();
}

std::uint64_t multiplicative_order(const Fp& x) {
  if (x.is_zero())
    throw DivisionByZero("zero has no multiplicative order");
  std::uint64_t order = x.prime() - 1;
  std::uint64_t rest = order;
  for (std::uint64_t q = 2; rest > 1; ++q) {
    if (q * q > rest)
      q = rest;
    if (rest % q != 0)
      continue;
    while (rest % q == 0)
      rest /= q;
    while (order % q == 0 && x.pow(order / q).value() == 1)
      order /= q;
  }
  return order;
}

Fp primitive_root_of_unity(Modulus m, std::uint64_t n) {
  std::uint64_t p = m.value();
  if (n == 0 || (p - 1) % n != 0)
    throw PreconditionError(std::to_string(n) + " does not divide p-1 = " +
                            std::to_string(p - 1));
  for (std::uint64_t v = 1; v < p; ++v) {
    Fp z(m, static_cast<std::int64_t>(v));
    if (z.pow(n).value() == 1 && multiplicative_order(z) == n)
      return z;
  }
  throw InternalError("no primitive root of order " + std::to_string(n));
}

} // namespace hesse_moore
