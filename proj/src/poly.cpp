#include "hesse_moore/poly.hpp"

#include <cassert>
#include <cctype>
#include <map>
#include <mutex>
#include <sstream>

namespace hesse_moore {

std::size_t monomial_count(int degree) {
  if (degree < 0)
    return 0;
  std::size_t d = static_cast<std::size_t>(degree);
  return (d + 1) * (d + 2) / 2;
}

const std::vector<Exponent>& monomials(int degree) {
  static std::mutex mutex;
  static std::map<int, std::vector<Exponent>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(degree);
  if (it != cache.end())
    return it->second;
  std::vector<Exponent> list;
  for (int e0 = degree; e0 >= 0; --e0)
    for (int e1 = degree - e0; e1 >= 0; --e1)
      list.push_back({e0, e1, degree - e0 - e1});
  return cache.emplace(degree, std::move(list)).first->second;
}

std::size_t monomial_index(const Exponent& e) {
  std::size_t r = static_cast<std::size_t>(e.e1 + e.e2);
  return r * (r + 1) / 2 + static_cast<std::size_t>(e.e2);
}

HomForm::HomForm(Modulus m, int degree) : mod_(m), degree_(degree) {
  if (degree < 0)
    throw PreconditionError("negative degree " + std::to_string(degree));
  coeffs_.assign(monomial_count(degree), Fp::zero(m));
}

HomForm HomForm::constant(const Fp& c) {
  HomForm g(c.modulus(), 0);
  g.coeffs_[0] = c;
  return g;
}

HomForm HomForm::variable(Modulus m, int i) {
  if (i < 0 || i > 2)
    throw PreconditionError("variable index out of range");
  Exponent e;
  (i == 0 ? e.e0 : i == 1 ? e.e1 : e.e2) = 1;
  return monomial(Fp::one(m), e);
}

HomForm HomForm::monomial(const Fp& c, const Exponent& e) {
  if (e.e0 < 0 || e.e1 < 0 || e.e2 < 0)
    throw PreconditionError("negative exponent");
  HomForm g(c.modulus(), e.degree());
  g.coeffs_[monomial_index(e)] = c;
  return g;
}

const Fp& HomForm::coefficient(const Exponent& e) const {
  if (e.degree() != degree_)
    throw DegreeMismatch("exponent of degree " + std::to_string(e.degree()) +
                         " in form of degree " + std::to_string(degree_));
  return coeffs_[monomial_index(e)];
}

void HomForm::set_coefficient(const Exponent& e, const Fp& c) {
  if (e.degree() != degree_)
    throw DegreeMismatch("exponent of degree " + std::to_string(e.degree()) +
                         " in form of degree " + std::to_string(degree_));
  coeffs_[monomial_index(e)] = c;
}

bool HomForm::is_zero() const {
  for (const Fp& c : coeffs_)
    if (!c.is_zero())
      return false;
  return true;
}

std::size_t HomForm::term_count() const {
  std::size_t n = 0;
  for (const Fp& c : coeffs_)
    n += !c.is_zero();
  return n;
}

void HomForm::check_compatible(const HomForm& o) const {
  if (mod_ != o.mod_)
    throw ModulusMismatch("forms over different fields");
  if (degree_ != o.degree_)
    throw DegreeMismatch("cannot add forms of degree " + std::to_string(degree_) +
                         " and " + std::to_string(o.degree_));
}

HomForm& HomForm::operator+=(const HomForm& o) {
  check_compatible(o);
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    coeffs_[k] += o.coeffs_[k];
  return *this;
}

HomForm& HomForm::operator-=(const HomForm& o) {
  check_compatible(o);
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    coeffs_[k] -= o.coeffs_[k];
  return *this;
}

HomForm HomForm::operator-() const {
  HomForm g = *this;
  for (Fp& c : g.coeffs_)
    c = -c;
  return g;
}

HomForm operator*(const HomForm& a, const HomForm& b) {
  if (a.mod_ != b.mod_)
    throw ModulusMismatch("forms over different fields");
  HomForm r(a.mod_, a.degree_ + b.degree_);
  const auto& ma = monomials(a.degree_);
  const auto& mb = monomials(b.degree_);
  for (std::size_t i = 0; i < ma.size(); ++i) {
    if (a.coeffs_[i].is_zero())
      continue;
    for (std::size_t j = 0; j < mb.size(); ++j) {
      if (b.coeffs_[j].is_zero())
        continue;
      Exponent e{ma[i].e0 + mb[j].e0, ma[i].e1 + mb[j].e1, ma[i].e2 + mb[j].e2};
      r.coeffs_[monomial_index(e)] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  assert(is_homogeneous(r));
  return r;
}

HomForm operator*(const Fp& c, HomForm g) {
  for (Fp& x : g.coeffs_)
    x *= c;
  return g;
}

HomForm scale(const Fp& c, const HomForm& g) { return c * g; }

HomForm HomForm::partial(int i) const {
  if (i < 0 || i > 2)
    throw PreconditionError("variable index out of range");
  HomForm r(mod_, degree_ > 0 ? degree_ - 1 : 0);
  if (degree_ == 0)
    return r;
  const auto& mons = monomials(degree_);
  for (std::size_t k = 0; k < mons.size(); ++k) {
    Exponent e = mons[k];
    int power = e[i];
    if (power == 0 || coeffs_[k].is_zero())
      continue;
    (i == 0 ? e.e0 : i == 1 ? e.e1 : e.e2) -= 1;
    r.coeffs_[monomial_index(e)] += Fp(mod_, power) * coeffs_[k];
  }
  return r;
}

Fp HomForm::evaluate(const std::array<Fp, 3>& point) const {
  std::array<std::vector<Fp>, 3> powers;
  for (int v = 0; v < 3; ++v) {
    powers[v].push_back(Fp::one(mod_));
    for (int k = 0; k < degree_; ++k)
      powers[v].push_back(powers[v].back() * point[v]);
  }
  Fp sum = Fp::zero(mod_);
  const auto& mons = monomials(degree_);
  for (std::size_t k = 0; k < mons.size(); ++k)
    if (!coeffs_[k].is_zero())
      sum += coeffs_[k] * powers[0][mons[k].e0] * powers[1][mons[k].e1] * powers[2][mons[k].e2];
  return sum;
}

HomForm HomForm::substitute(const std::array<HomForm, 3>& linear) const {
  std::array<std::vector<HomForm>, 3> powers;
  for (int v = 0; v < 3; ++v) {
    if (linear[v].degree() != 1)
      throw DegreeMismatch("substitution requires linear forms");
    powers[v].push_back(HomForm::constant(Fp::one(mod_)));
    for (int k = 0; k < degree_; ++k)
      powers[v].push_back(powers[v].back() * linear[v]);
  }
  HomForm sum(mod_, degree_);
  const auto& mons = monomials(degree_);
  for (std::size_t k = 0; k < mons.size(); ++k)
    if (!coeffs_[k].is_zero())
      sum += coeffs_[k] * (powers[0][mons[k].e0] * powers[1][mons[k].e1] * powers[2][mons[k].e2]);
  return sum;
}

std::string HomForm::to_string() const {
  std::ostringstream os;
  bool first = true;
  const auto& mons = monomials(degree_);
  for (std::size_t k = 0; k < mons.size(); ++k) {
    if (coeffs_[k].is_zero())
      continue;
    if (!first)
      os << " + ";
    first = false;
    bool unit = coeffs_[k].value() == 1 && degree_ > 0;
    if (!unit)
      os << coeffs_[k].value();
    for (int v = 0; v < 3; ++v) {
      int e = mons[k][v];
      if (e == 0)
        continue;
      if (!unit)
        os << '*';
      unit = false;
      os << 'x' << v;
      if (e > 1)
        os << '^' << e;
    }
  }
  return first ? "0" : os.str();
}

bool is_homogeneous(const HomForm& g) {
  return g.coefficients().size() == monomial_count(g.degree());
}

namespace {

[[noreturn]] void parse_fail(std::string_view text, const std::string& why) {
  throw PreconditionError("cannot parse form \"" + std::string(text) + "\": " + why);
}

long long parse_int(std::string_view s, std::string_view text) {
  if (s.empty())
    parse_fail(text, "missing number");
  long long v = 0;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch)))
      parse_fail(text, "bad number '" + std::string(s) + "'");
    v = v * 10 + (ch - '0');
    if (v > (1LL << 50))
      parse_fail(text, "number too large");
  }
  return v;
}

} // namespace

HomForm parse_form(std::string_view text, Modulus m, int degree) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch)))
      s += ch;
  if (s.empty())
    parse_fail(text, "empty input");

  struct Term {
    Fp coeff;
    Exponent exp;
  };
  std::vector<Term> terms;
  std::size_t pos = 0;
  while (pos < s.size()) {
    bool negative = false;
    if (s[pos] == '+' || s[pos] == '-') {
      negative = s[pos] == '-';
      ++pos;
    } else if (pos != 0) {
      parse_fail(text, "expected '+' or '-'");
    }
    std::size_t end = s.find_first_of("+-", pos);
    // a '-' right after '^' is not allowed, so any sign ends the term
    std::string_view term = std::string_view(s).substr(pos, end == std::string::npos ? std::string::npos : end - pos);
    if (term.empty())
      parse_fail(text, "empty term");
    Fp coeff = Fp::one(m);
    Exponent exp;
    std::size_t fpos = 0;
    while (fpos <= term.size()) {
      std::size_t star = term.find('*', fpos);
      std::string_view factor = term.substr(fpos, star == std::string_view::npos ? std::string_view::npos : star - fpos);
      if (factor.empty())
        parse_fail(text, "empty factor");
      if (factor[0] == 'x') {
        if (factor.size() < 2 || factor[1] < '0' || factor[1] > '2')
          parse_fail(text, "variables are x0, x1, x2");
        int v = factor[1] - '0';
        long long power = 1;
        if (factor.size() > 2) {
          if (factor[2] != '^')
            parse_fail(text, "expected '^' after variable");
          power = parse_int(factor.substr(3), text);
        }
        if (power > 1000)
          parse_fail(text, "exponent too large");
        (v == 0 ? exp.e0 : v == 1 ? exp.e1 : exp.e2) += static_cast<int>(power);
      } else {
        coeff *= Fp(m, parse_int(factor, text));
      }
      if (star == std::string_view::npos)
        break;
      fpos = star + 1;
    }
    terms.push_back({negative ? -coeff : coeff, exp});
    pos = end == std::string::npos ? s.size() : end;
  }

  int d = degree;
  if (d < 0)
    for (const Term& t : terms)
      if (!t.coeff.is_zero()) {
        d = t.exp.degree();
        break;
      }
  if (d < 0)
    d = 0;
  HomForm g(m, d);
  for (const Term& t : terms) {
    if (t.coeff.is_zero())
      continue;
    if (t.exp.degree() != d)
      parse_fail(text, "not homogeneous of degree " + std::to_string(d));
    g.set_coefficient(t.exp, g.coefficient(t.exp) + t.coeff);
  }
  return g;
}

HesseCubic::HesseCubic(const Fp& lambda) : lambda_(lambda), form_(lambda.modulus(), 3) {
  if (!is_smooth(lambda))
    throw PreconditionError("Hesse cubic with lambda = " + std::to_string(lambda.value()) +
                            " is singular (lambda^3 = 27)");
  Modulus m = lambda.modulus();
  Fp one = Fp::one(m);
  form_.set_coefficient({3, 0, 0}, one);
  form_.set_coefficient({0, 3, 0}, one);
  form_.set_coefficient({0, 0, 3}, one);
  form_.set_coefficient({1, 1, 1}, -lambda);
}

bool HesseCubic::is_smooth(const Fp& lambda) {
  return lambda.pow(3) != Fp(lambda.modulus(), 27);
}

Division divide_by_cubic(const HomForm& g, const HesseCubic& f) {
  if (g.modulus() != f.modulus())
    throw ModulusMismatch("form and cubic over different fields");
  int d = g.degree();
  HomForm rem = g;
  HomForm quot(g.modulus(), d >= 3 ? d - 3 : 0);
  if (d < 3)
    return {quot, rem};
  const auto& mons = monomials(d);
  const Fp& lambda = f.lambda();
  // Reducing x^e by x^(e-3e0)*f only creates monomials with smaller x0
  // power, which come later in the graded-lex order.
  for (std::size_t k = 0; k < mons.size(); ++k) {
    const Exponent& e = mons[k];
    Fp c = rem.coefficient(k);
    if (e.e0 < 3 || c.is_zero())
      continue;
    Exponent q{e.e0 - 3, e.e1, e.e2};
    quot.set_coefficient(q, quot.coefficient(q) + c);
    rem.set_coefficient(k, Fp::zero(g.modulus()));
    Exponent t1{q.e0, q.e1 + 3, q.e2};
    Exponent t2{q.e0, q.e1, q.e2 + 3};
    Exponent t3{q.e0 + 1, q.e1 + 1, q.e2 + 1};
    rem.set_coefficient(t1, rem.coefficient(t1) - c);
    rem.set_coefficient(t2, rem.coefficient(t2) - c);
    rem.set_coefficient(t3, rem.coefficient(t3) + c * lambda);
  }
  return {quot, rem};
}

} // namespace hesse_moore
