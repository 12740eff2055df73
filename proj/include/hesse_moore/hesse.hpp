// Smooth Hesse cubics E = V(x0^3 + x1^3 + x2^3 - lambda x0 x1 x2) and their
// group law with identity o = [0:-1:1], computed from Moore matrix kernels.

#ifndef HESSE_MOORE_HESSE_HPP_
#define HESSE_MOORE_HESSE_HPP_

#include <memory>
#include <string>
#include <vector>

#include "moore.hpp"

namespace hesse_moore {

struct CheckResult {
  bool passed = true;
  std::string detail; // first counterexample when !passed

  explicit operator bool() const { return passed; }
};

// (a0(a2^3 - a1^3), a2(a1^3 - a0^3), a1(a0^3 - a2^3)), representing 2a.
Triple doubling_representative(const Triple& a);

// Tripling formula with denominators (a0 a1 a2)^3 cleared. Requires a0 a1 a2 != 0.
Triple tripling_representative(const Triple& a);

class HesseCurve {
public:
  explicit HesseCurve(const Fp& lambda);

  // Curve with lambda = (a0^3 + a1^3 + a2^3) / (a0 a1 a2).
  static HesseCurve through(const Triple& a);
  static HesseCurve through(const ProjectivePoint& a) { return through(a.coords()); }

  // All lambda in F_p with lambda^3 != 27, ascending.
  static std::vector<Fp> smooth_lambdas(Modulus m);

  Modulus modulus() const { return cubic_.modulus(); }
  const Fp& lambda() const { return cubic_.lambda(); }
  const HesseCubic& cubic() const { return cubic_; }

  // [0:-1:1], stored normalized as [0:1:p-1].
  ProjectivePoint identity() const;
  bool contains(const ProjectivePoint& p) const;
  bool contains(const Triple& p) const;

  ProjectivePoint neg(const ProjectivePoint& a) const;
  // b - a = l(M_{a,b}).
  ProjectivePoint sub(const ProjectivePoint& b, const ProjectivePoint& a) const;
  // x + a = l(M_{iota(a),x}).
  ProjectivePoint add(const ProjectivePoint& x, const ProjectivePoint& a) const;
  // Closed doubling formula.
  ProjectivePoint double_point(const ProjectivePoint& a) const;
  // Closed tripling formula when a0 a1 a2 != 0, otherwise 2a + a.
  ProjectivePoint triple_point(const ProjectivePoint& a) const;
  // Double-and-add over the Moore-kernel addition.
  ProjectivePoint mul(std::int64_t n, const ProjectivePoint& a) const;

  // E(F_p) by scanning the p^2 + p + 1 normalized points of P^2; cached.
  const std::vector<ProjectivePoint>& points() const;

  // The nine inflection points [1:-w:0], [0:1:-w], [-w:0:1], w^3 = 1.
  std::vector<ProjectivePoint> torsion3() const;
  // E meet V(x0 x1 x2 (x0^3 - x1^3)(x1^3 - x2^3)(x2^3 - x0^3)).
  std::vector<ProjectivePoint> torsion6() const;
  // {p in E(F_p) : n p = o}.
  std::vector<ProjectivePoint> torsion_brute_force(std::int64_t n) const;

  // X = V(f0, f1, f2) in E x E is the graph of x -> x - a, and the two
  // bilinear rewritings of M_{a,x} y^T agree coefficientwise.
  CheckResult translation_graph_check(const ProjectivePoint& a) const;

  // [M^adj_{a,x}] = (x - a)^T (-x - a) projectively.
  bool segre_check(const ProjectivePoint& a, const ProjectivePoint& x) const;

  friend bool operator==(const HesseCurve& a, const HesseCurve& b) {
    return a.lambda() == b.lambda();
  }

private:
  void require_on_curve(const ProjectivePoint& p) const;

  struct PointCache;
  HesseCubic cubic_;
  std::shared_ptr<PointCache> cache_;
};

} // namespace hesse_moore

#endif
