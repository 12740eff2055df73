#include "hesse_moore/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <future>
#include <numeric>
#include <random>
#include <sstream>

#include "hesse_moore/ext.hpp"
#include "hesse_moore/heisenberg.hpp"

namespace hesse_moore {

namespace {

using Rng = std::mt19937_64;

Rng make_rng(const VerifyConfig& cfg, int id) {
  std::seed_seq seq{cfg.seed, static_cast<std::uint64_t>(id)};
  return Rng(seq);
}

Fp random_fp(Modulus m, Rng& rng) {
  std::uniform_int_distribution<std::uint64_t> dist(0, m.value() - 1);
  return Fp(m, static_cast<std::int64_t>(dist(rng)));
}

Triple random_triple(Modulus m, Rng& rng) {
  return {random_fp(m, rng), random_fp(m, rng), random_fp(m, rng)};
}

FormMatrix random_form_matrix(Modulus m, int degree, Rng& rng) {
  FormMatrix out(m, 3, degree);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < monomial_count(degree); ++k)
        out(i, j).set_coefficient(k, random_fp(m, rng));
  return out;
}

FormMatrix random_combination(const std::vector<FormMatrix>& basis, Modulus m, int degree,
                              Rng& rng) {
  FormMatrix out(m, 3, degree);
  for (const FormMatrix& b : basis)
    out = out + b.scaled(random_fp(m, rng));
  return out;
}

std::vector<HesseCurve> all_curves(Modulus m) {
  std::vector<HesseCurve> out;
  for (const Fp& lambda : HesseCurve::smooth_lambdas(m))
    out.emplace_back(lambda);
  return out;
}

// Points with a0 a1 a2 != 0, i.e. E \ E[3].
std::vector<ProjectivePoint> admissible_points(const HesseCurve& e) {
  std::vector<ProjectivePoint> out;
  for (const ProjectivePoint& p : e.points())
    if (!coordinate_product(p.coords()).is_zero())
      out.push_back(p);
  return out;
}

std::vector<ProjectivePoint> sorted(std::vector<ProjectivePoint> v) {
  std::sort(v.begin(), v.end());
  return v;
}

std::string lam(const HesseCurve& e) { return "lambda=" + std::to_string(e.lambda().value()); }

// Collects the first failure and counts checks.
struct Tally {
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::string first;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok && failures++ == 0)
      first = what;
  }
  template <class F>
  void expect_lazy(bool ok, F what) {
    ++checks;
    if (!ok && failures++ == 0)
      first = what();
  }

  CriterionResult result(int id, const std::string& name, const std::string& summary) const {
    CriterionResult r;
    r.id = id;
    r.name = name;
    r.passed = failures == 0 && checks > 0;
    std::ostringstream os;
    os << summary << "; " << checks << " checks, " << failures << " failures";
    if (failures)
      os << "; first: " << first;
    if (checks == 0)
      os << "; nothing was checked";
    r.detail = os.str();
    return r;
  }
};

CriterionResult determinant_identity(const VerifyConfig& cfg) {
  Modulus m(cfg.large_prime);
  Rng rng = make_rng(cfg, 1);
  Tally t;
  for (int k = 0; k < 200; ++k) {
    Triple a = random_triple(m, rng);
    FormMatrix mx = moore(a);
    HomForm det = moore_det(a);
    FormMatrix adj = moore_adjugate(a);
    auto where = [&] { return "a=" + ProjectivePoint(is_zero(a) ? make_triple(m, 1, 0, 0) : a).to_string(); };
    t.expect_lazy(mx.det3() == det, where);
    t.expect_lazy(adj == mx.cofactor_adjugate3(), where);
    FormMatrix target = FormMatrix::identity_times(det, 3);
    t.expect_lazy(mx * adj == target && adj * mx == target, where);
  }
  return t.result(1, "determinant identity", "200 random a over F_" + std::to_string(m.value()));
}

CriterionResult rank_lemma(const VerifyConfig& cfg) {
  Tally t;
  std::size_t curves = 0, pairs = 0;
  for (std::uint64_t p : {cfg.small_prime, cfg.large_prime}) {
    for (const HesseCurve& e : all_curves(Modulus(p))) {
      ++curves;
      for (const ProjectivePoint& a : e.points())
        for (const ProjectivePoint& b : e.points()) {
          ++pairs;
          t.expect_lazy(moore_at(a.coords(), b.coords()).rank() == 2, [&] {
            return "p=" + std::to_string(p) + " " + lam(e) + " a=" + a.to_string() +
                   " b=" + b.to_string();
          });
        }
    }
    std::size_t here = all_curves(Modulus(p)).size();
    t.expect(here >= 3, "fewer than 3 smooth curves over F_" + std::to_string(p));
  }
  return t.result(2, "rank lemma",
                  std::to_string(pairs) + " pairs on " + std::to_string(curves) + " curves");
}

CriterionResult group_law(const VerifyConfig& cfg) {
  Tally t;
  for (const HesseCurve& e : all_curves(Modulus(cfg.large_prime))) {
    ProjectivePoint o = e.identity();
    for (const ProjectivePoint& x : e.points()) {
      auto at = [&] { return lam(e) + " x=" + x.to_string(); };
      t.expect_lazy(e.add(x, o) == x && e.add(o, x) == x, at);
      t.expect_lazy(e.add(x, e.neg(x)) == o, at);
      t.expect_lazy(e.sub(x, x) == o, at);
      for (const ProjectivePoint& y : e.points())
        t.expect_lazy(e.add(x, y) == e.add(y, x),
                      [&] { return lam(e) + " x=" + x.to_string() + " y=" + y.to_string(); });
    }
  }
  for (const HesseCurve& e : all_curves(Modulus(cfg.small_prime))) {
    const auto& pts = e.points();
    for (const ProjectivePoint& x : pts)
      for (const ProjectivePoint& y : pts) {
        ProjectivePoint xy = e.add(x, y);
        for (const ProjectivePoint& z : pts)
          t.expect_lazy(e.add(xy, z) == e.add(x, e.add(y, z)), [&] {
            return lam(e) + " associativity at " + x.to_string() + ", " + y.to_string() + ", " +
                   z.to_string();
          });
      }
  }
  std::size_t triples = 0;
  for (std::uint64_t p : {cfg.small_prime, cfg.large_prime})
    for (const HesseCurve& e : all_curves(Modulus(p)))
      for (const ProjectivePoint& a : e.points()) {
        ProjectivePoint twice = e.add(a, a);
        t.expect_lazy(e.double_point(a) == twice,
                      [&] { return "doubling at p=" + std::to_string(p) + " a=" + a.to_string(); });
        if (!coordinate_product(a.coords()).is_zero()) {
          ++triples;
          t.expect_lazy(ProjectivePoint(tripling_representative(a.coords())) == e.add(twice, a),
                        [&] { return "tripling at p=" + std::to_string(p) + " a=" + a.to_string(); });
        }
      }
  return t.result(3, "group law",
                  "identity/inverse/commutativity on F_" + std::to_string(cfg.large_prime) +
                      ", associativity on F_" + std::to_string(cfg.small_prime) + ", " +
                      std::to_string(triples) + " tripling points");
}

CriterionResult torsion(const VerifyConfig& cfg) {
  Tally t;
  for (std::uint64_t p : {cfg.small_prime, cfg.large_prime})
    for (const HesseCurve& e : all_curves(Modulus(p))) {
      auto at = [&] { return "p=" + std::to_string(p) + " " + lam(e); };
      std::vector<ProjectivePoint> e3 = sorted(e.torsion3());
      std::vector<ProjectivePoint> axis;
      for (const ProjectivePoint& q : e.points())
        if (coordinate_product(q.coords()).is_zero())
          axis.push_back(q);
      t.expect_lazy(e3.size() == 9, at);
      t.expect_lazy(e3 == sorted(axis), at);
      t.expect_lazy(e3 == sorted(e.torsion_brute_force(3)), at);
      t.expect_lazy(sorted(e.torsion6()) == sorted(e.torsion_brute_force(6)), at);
    }

  // A curve with all 36 six-torsion points rational.
  std::string witness;
  for (std::uint64_t p = 7; p < 200 && witness.empty(); p += 6) {
    if (!is_prime(p))
      continue;
    for (const HesseCurve& e : all_curves(Modulus(p))) {
      if (e.points().size() % 36 != 0)
        continue;
      std::vector<ProjectivePoint> e6 = sorted(e.torsion_brute_force(6));
      if (e6.size() != 36)
        continue;
      std::size_t primitive = 0;
      for (const ProjectivePoint& q : e6)
        if (e.mul(2, q) != e.identity() && e.mul(3, q) != e.identity())
          ++primitive;
      auto at = [&] { return "witness p=" + std::to_string(p) + " " + lam(e); };
      t.expect_lazy(primitive == 24, at);
      t.expect_lazy(sorted(e.torsion6()) == e6, at);
      witness = "p=" + std::to_string(p) + " " + lam(e);
      break;
    }
  }
  t.expect(!witness.empty(), "no curve with rational E[6] for p < 200");
  return t.result(4, "torsion", "full E[6] witness at " + (witness.empty() ? "none" : witness));
}

CriterionResult classification(const VerifyConfig& cfg) {
  Tally t;
  std::size_t equivalent = 0;
  for (const HesseCurve& e : all_curves(Modulus(cfg.large_prime))) {
    std::vector<ProjectivePoint> pts = admissible_points(e);
    std::vector<TraceInvariants> inv;
    std::vector<std::set<ProjectivePoint>> orbits;
    std::vector<ProjectivePoint> triples;
    for (const ProjectivePoint& a : pts) {
      inv.push_back(trace_invariants(a.coords()));
      orbits.push_back(orbit(a.coords()));
      triples.push_back(e.triple_point(a));
      bool on_curve = true;
      for (const ProjectivePoint& q : orbits.back())
        on_curve = on_curve && e.contains(q);
      t.expect_lazy(orbits.back().size() == 9 && on_curve,
                    [&] { return lam(e) + " orbit of " + a.to_string(); });
    }
    for (std::size_t i = 0; i < pts.size(); ++i)
      for (std::size_t j = 0; j < pts.size(); ++j) {
        bool by_traces = inv[i] == inv[j];
        bool by_orbit = orbits[i].count(pts[j]) > 0;
        bool by_triple = triples[i] == triples[j];
        equivalent += by_orbit;
        t.expect_lazy(by_traces == by_orbit && by_orbit == by_triple &&
                          are_equivalent(pts[i].coords(), pts[j].coords()) == by_traces,
                      [&] {
                        return lam(e) + " a=" + pts[i].to_string() + " a'=" + pts[j].to_string() +
                               " traces/orbit/triple = " + std::to_string(by_traces) +
                               std::to_string(by_orbit) + std::to_string(by_triple);
                      });
      }
  }
  return t.result(5, "classification of Moore matrices",
                  std::to_string(equivalent) + " equivalent ordered pairs over F_" +
                      std::to_string(cfg.large_prime));
}

CriterionResult conjugation(const VerifyConfig& cfg) {
  Tally t;
  auto check = [&](const Triple& a) {
    Modulus m = a[0].modulus();
    FormMatrix mx = moore(a);
    FormMatrix tt = FormMatrix::scalar(t_matrix(m));
    Matrix s = sigma_matrix(m);
    auto at = [&] { return "a=" + ProjectivePoint(a).to_string(); };
    t.expect_lazy(moore(act_t(a)) == tt * mx * tt, at);
    t.expect_lazy(moore(act_sigma(a)) == FormMatrix::scalar(s.inverse()) * mx * FormMatrix::scalar(s),
                  at);
  };
  Modulus small(cfg.small_prime);
  std::int64_t p = static_cast<std::int64_t>(cfg.small_prime);
  for (std::int64_t a0 = 0; a0 < p; ++a0)
    for (std::int64_t a1 = 0; a1 < p; ++a1)
      for (std::int64_t a2 = 0; a2 < p; ++a2)
        if (a0 || a1 || a2)
          check(make_triple(small, a0, a1, a2));
  Modulus large(cfg.large_prime);
  Rng rng = make_rng(cfg, 6);
  for (int k = 0; k < 200; ++k) {
    Triple a = random_triple(large, rng);
    if (!is_zero(a))
      check(a);
  }
  return t.result(6, "Heisenberg conjugation",
                  "all of F_" + std::to_string(cfg.small_prime) + "^3 and 200 random a over F_" +
                      std::to_string(cfg.large_prime));
}

CriterionResult characters(const VerifyConfig& cfg) {
  Modulus m(cfg.large_prime);
  Tally t;
  for (int n : {3, 6}) {
    std::vector<int> units;
    for (int j = 1; j < n; ++j)
      if (std::gcd(j, n) == 1)
        units.push_back(j);
    for (int i : units) {
      ClassFunction chi = schrodinger_character(m, n, i);
      t.expect(is_class_function(chi), "chi_" + std::to_string(i) + " of H_" + std::to_string(n) +
                                           " is not a class function");
      for (int j : units) {
        Fp ip = inner_product(chi, schrodinger_character(m, n, j));
        Fp expected(m, i == j ? 1 : 0);
        t.expect(ip == expected, "<chi_" + std::to_string(i) + ", chi_" + std::to_string(j) +
                                     "> on H_" + std::to_string(n) + " = " +
                                     std::to_string(ip.value()));
      }
    }
  }
  t.expect(verify_restriction(m, 6, 3, 1), "restriction of chi_1 from H_6 to H_3 is not 2 chi_2");
  t.expect(verify_tensor_h3(primitive_root_of_unity(m, 3)), "chi_1^2 != 3 chi_2 on H_3");
  return t.result(7, "characters", "H_3 and H_6 over F_" + std::to_string(m.value()));
}

// Random admissible points of random curves over F_p; empty when every
// rational point is 3-torsion.
std::vector<Triple> sample_points(Modulus m, std::size_t count, Rng& rng) {
  std::vector<std::vector<ProjectivePoint>> per_curve;
  for (const HesseCurve& e : all_curves(m)) {
    std::vector<ProjectivePoint> pts = admissible_points(e);
    if (!pts.empty())
      per_curve.push_back(std::move(pts));
  }
  std::vector<Triple> out;
  if (per_curve.empty())
    return out;
  while (out.size() < count) {
    const auto& pts = per_curve[std::uniform_int_distribution<std::size_t>(0, per_curve.size() - 1)(rng)];
    out.push_back(pts[std::uniform_int_distribution<std::size_t>(0, pts.size() - 1)(rng)].coords());
  }
  return out;
}

CriterionResult partner_lemma(const VerifyConfig& cfg) {
  Modulus m(cfg.large_prime);
  Rng rng = make_rng(cfg, 8);
  std::vector<Triple> points = sample_points(m, 5, rng);
  std::vector<MatrixFactorization> facs;
  std::vector<std::vector<FormMatrix>> sols;
  for (const Triple& a : points) {
    facs.push_back(moore_factorization(a));
    sols.push_back(ext_space(a, 0).solution_basis);
  }
  Tally t;
  std::size_t satisfied = 0;
  for (int k = 0; k < 100; ++k) {
    std::size_t which = static_cast<std::size_t>(k) % points.size();
    const MatrixFactorization& fac = facs[which];
    FormMatrix C = k % 2 ? random_combination(sols[which], m, 1, rng) : random_form_matrix(m, 1, rng);
    auto at = [&] { return "sample " + std::to_string(k) + " a=" + ProjectivePoint(points[which]).to_string(); };
    auto left = solve_left_partner(fac, C);
    auto right = solve_right_partner(fac, C);
    bool divisible = bcb_divisible(fac, C);
    t.expect_lazy(left.has_value() == divisible && right.has_value() == divisible, at);
    if (!divisible || !left || !right)
      continue;
    ++satisfied;
    FormMatrix D = partner_D(fac, C);
    t.expect_lazy(D == *left && D == *right, at);
    t.expect_lazy((fac.A() * D + C * fac.B()).is_zero() && (D * fac.A() + fac.B() * C).is_zero(), at);
    t.expect_lazy(recover_C(fac, D) == C, at);
  }
  return t.result(8, "partner lemma",
                  "100 linear C over F_" + std::to_string(m.value()) + ", " +
                      std::to_string(satisfied) + " with a partner");
}

CriterionResult trace_lemma(const VerifyConfig& cfg) {
  Modulus m(cfg.large_prime);
  Rng rng = make_rng(cfg, 9);
  std::vector<Triple> points = sample_points(m, 5, rng);
  Tally t;
  std::size_t divisible_count = 0;
  for (int k = 0; k < 100; ++k) {
    std::size_t which = static_cast<std::size_t>(k) % points.size();
    MatrixFactorization fac = moore_factorization(points[which]);
    int degree = k % 3;
    FormMatrix C = (k / 3) % 2
                       ? random_combination(ext_space(points[which], degree - 1).solution_basis, m,
                                            degree, rng)
                       : random_form_matrix(m, degree, rng);
    auto at = [&] {
      return "sample " + std::to_string(k) + " degree " + std::to_string(degree) + " a=" +
             ProjectivePoint(points[which]).to_string();
    };
    t.expect_lazy(bcb_congruence(fac, C), at);
    bool divisible = bcb_divisible(fac, C);
    divisible_count += divisible;
    t.expect_lazy(trace_criterion(fac, C) == divisible, at);
  }
  return t.result(9, "trace lemma",
                  "100 C of degree 0..2 over F_" + std::to_string(m.value()) + ", " +
                      std::to_string(divisible_count) + " with f | BCB");
}

struct NontrivialPoints {
  std::vector<std::pair<HesseCurve, ProjectivePoint>> points;
  std::size_t small_count = 0;

  std::string summary(const VerifyConfig& cfg) const {
    return std::to_string(small_count) + " points of E(F_" + std::to_string(cfg.small_prime) +
           ") \\ E[3] over all curves, " + std::to_string(points.size() - small_count) +
           " sampled from E(F_" + std::to_string(cfg.large_prime) + ") \\ E[3]";
  }
};

// E(F_small) \ E[3] on every curve, then `large_count` random points over F_large.
NontrivialPoints nontrivial_points(const VerifyConfig& cfg, int id, std::size_t large_count) {
  NontrivialPoints out;
  for (const HesseCurve& e : all_curves(Modulus(cfg.small_prime)))
    for (const ProjectivePoint& a : admissible_points(e))
      out.points.emplace_back(e, a);
  out.small_count = out.points.size();
  Rng rng = make_rng(cfg, id);
  for (const Triple& a : sample_points(Modulus(cfg.large_prime), large_count, rng))
    out.points.emplace_back(HesseCurve::through(a), ProjectivePoint(a));
  return out;
}

CriterionResult rank2_extension(const VerifyConfig& cfg) {
  Tally t;
  NontrivialPoints points = nontrivial_points(cfg, 10, 10);
  for (const auto& [e, a] : points.points) {
    auto at = [&] { return "p=" + std::to_string(e.modulus().value()) + " a=" + a.to_string(); };
    UlrichExtension u = rank2_ulrich(a.coords());
    const MatrixFactorization& f = u.factorization;
    FormMatrix target = FormMatrix::identity_times(f.product(), 6);
    t.expect_lazy(f.size() == 6 && f.A() * f.B() == target && f.B() * f.A() == target, at);
    t.expect_lazy(ProjectivePoint(u.b) == e.neg(e.double_point(a)), at);
    t.expect_lazy(u.divergence == Fp(e.modulus(), 3), at);
  }
  return t.result(10, "rank-2 Ulrich factorization", points.summary(cfg));
}

CriterionResult extension_dimensions(const VerifyConfig& cfg) {
  Tally t;
  NontrivialPoints points = nontrivial_points(cfg, 11, 10);
  const int shifts[] = {-2, -1, 0, 1};
  const std::size_t expected[] = {0, 3, 1, 0};
  for (const auto& [e, a] : points.points) {
    auto at = [&] { return "p=" + std::to_string(e.modulus().value()) + " a=" + a.to_string(); };
    for (int k = 0; k < 4; ++k) {
      ExtSpace ext = ext_space(a.coords(), shifts[k]);
      t.expect_lazy(ext.quotient_dimension == expected[k] &&
                        ext.representatives.size() == expected[k],
                    [&] { return at() + " m=" + std::to_string(shifts[k]) + " dim " +
                                 std::to_string(ext.quotient_dimension); });
      if (shifts[k] == -1)
        t.expect_lazy(ext.homotopy_basis.empty(), at);
    }
    t.expect_lazy(verify_moore_span(a.coords()), at);
    t.expect_lazy(verify_divergence_kernel(a.coords()), at);
    t.expect_lazy(divergence_class(a.coords(), moore(extension_representative(a.coords()))) ==
                      Fp(e.modulus(), 3),
                  at);
  }
  return t.result(11, "extension dimensions", points.summary(cfg));
}

CriterionResult geometry(const VerifyConfig& cfg) {
  Tally t;
  for (const HesseCurve& e : all_curves(Modulus(cfg.small_prime)))
    for (const ProjectivePoint& a : e.points()) {
      CheckResult graph = e.translation_graph_check(a);
      t.expect(graph.passed, graph.detail);
      for (const ProjectivePoint& x : e.points())
        t.expect_lazy(e.segre_check(a, x),
                      [&] { return lam(e) + " segre at a=" + a.to_string() + " x=" + x.to_string(); });
    }
  return t.result(12, "geometric interpretations", "all points over F_" + std::to_string(cfg.small_prime));
}

CriterionResult run_one(const Criterion& c, const VerifyConfig& cfg) {
  auto start = std::chrono::steady_clock::now();
  CriterionResult r;
  try {
    r = c.run(cfg);
  } catch (const std::exception& e) {
    r.passed = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.id = c.id;
  r.name = c.name;
  r.milliseconds =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

} // namespace

std::uint64_t seed_from_environment() {
  const char* env = std::getenv("HESSE_MOORE_SEED");
  if (!env || !*env)
    return VerifyConfig::default_seed;
  char* end = nullptr;
  unsigned long long v = std::strtoull(env, &end, 10);
  if (*end != '\0')
    return VerifyConfig::default_seed;
  return v;
}

const std::vector<Criterion>& acceptance_criteria() {
  static const std::vector<Criterion> criteria = {
      {1, "determinant identity", determinant_identity},
      {2, "rank lemma", rank_lemma},
      {3, "group law", group_law},
      {4, "torsion", torsion},
      {5, "classification of Moore matrices", classification},
      {6, "Heisenberg conjugation", conjugation},
      {7, "characters", characters},
      {8, "partner lemma", partner_lemma},
      {9, "trace lemma", trace_lemma},
      {10, "rank-2 Ulrich factorization", rank2_extension},
      {11, "extension dimensions", extension_dimensions},
      {12, "geometric interpretations", geometry},
  };
  return criteria;
}

std::vector<CriterionResult> run_acceptance(const VerifyConfig& config) {
  const auto& criteria = acceptance_criteria();
  std::vector<CriterionResult> out;
  if (!config.parallel) {
    for (const Criterion& c : criteria)
      out.push_back(run_one(c, config));
    return out;
  }
  std::vector<std::future<CriterionResult>> pending;
  for (const Criterion& c : criteria)
    pending.push_back(std::async(std::launch::async, [&c, &config] { return run_one(c, config); }));
  for (auto& f : pending)
    out.push_back(f.get());
  return out;
}

} // namespace hesse_moore
