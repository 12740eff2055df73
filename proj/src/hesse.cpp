#include "hesse_moore/hesse.hpp"

#include <algorithm>
#include <mutex>

namespace hesse_moore {

struct HesseCurve::PointCache {
  std::once_flag once;
  std::vector<ProjectivePoint> points;
};

Triple doubling_representative(const Triple& a) {
  Fp c0 = a[0].pow(3), c1 = a[1].pow(3), c2 = a[2].pow(3);
  return {a[0] * (c2 - c1), a[2] * (c1 - c0), a[1] * (c0 - c2)};
}

Triple tripling_representative(const Triple& a) {
  Fp prod = coordinate_product(a);
  if (prod.is_zero())
    throw PreconditionError("tripling formula needs a0 a1 a2 != 0");
  Fp c0 = a[0].pow(3), c1 = a[1].pow(3), c2 = a[2].pow(3);
  Fp s0 = a[0].pow(6), s1 = a[1].pow(6), s2 = a[2].pow(6);
  Fp three_prod_cubed = Fp(prod.modulus(), 3) * prod.pow(3);
  return {prod * (s0 + s1 + s2 - c0 * c1 - c1 * c2 - c0 * c2),
          s0 * c1 + s1 * c2 + s2 * c0 - three_prod_cubed,
          s0 * c2 + s1 * c0 + s2 * c1 - three_prod_cubed};
}

HesseCurve::HesseCurve(const Fp& lambda)
    : cubic_(lambda), cache_(std::make_shared<PointCache>()) {}

HesseCurve HesseCurve::through(const Triple& a) {
  Fp prod = coordinate_product(a);
  if (prod.is_zero())
    throw PreconditionError("curve_through needs a0 a1 a2 != 0");
  Fp lambda = (a[0].pow(3) + a[1].pow(3) + a[2].pow(3)) / prod;
  return HesseCurve(lambda);
}

std::vector<Fp> HesseCurve::smooth_lambdas(Modulus m) {
  std::vector<Fp> out;
  for (std::uint64_t v = 0; v < m.value(); ++v) {
    Fp lambda(m, static_cast<std::int64_t>(v));
    if (HesseCubic::is_smooth(lambda))
      out.push_back(lambda);
  }
  return out;
}

ProjectivePoint HesseCurve::identity() const {
  return ProjectivePoint(make_triple(modulus(), 0, -1, 1));
}

bool HesseCurve::contains(const Triple& p) const {
  return cubic_.form().evaluate(p).is_zero();
}

bool HesseCurve::contains(const ProjectivePoint& p) const { return contains(p.coords()); }

void HesseCurve::require_on_curve(const ProjectivePoint& p) const {
  if (p.modulus() != modulus())
    throw ModulusMismatch("point and curve over different fields");
  if (!contains(p))
    throw PreconditionError("point " + p.to_string() + " is not on the curve with lambda = " +
                            std::to_string(lambda().value()));
}

ProjectivePoint HesseCurve::neg(const ProjectivePoint& a) const {
  require_on_curve(a);
  return iota(a);
}

ProjectivePoint HesseCurve::sub(const ProjectivePoint& b, const ProjectivePoint& a) const {
  require_on_curve(a);
  require_on_curve(b);
  try {
    return left_kernel_point(moore_at(a.coords(), b.coords()));
  } catch (const PreconditionError& e) {
    throw InternalError(std::string("Moore kernel failed on a smooth curve: ") + e.what());
  }
}

ProjectivePoint HesseCurve::add(const ProjectivePoint& x, const ProjectivePoint& a) const {
  require_on_curve(a);
  require_on_curve(x);
  try {
    return left_kernel_point(moore_at(iota(a.coords()), x.coords()));
  } catch (const PreconditionError& e) {
    throw InternalError(std::string("Moore kernel failed on a smooth curve: ") + e.what());
  }
}

ProjectivePoint HesseCurve::double_point(const ProjectivePoint& a) const {
  require_on_curve(a);
  Triple b = doubling_representative(a.coords());
  if (is_zero(b))
    throw InternalError("doubling formula vanished at " + a.to_string());
  return ProjectivePoint(b);
}

ProjectivePoint HesseCurve::triple_point(const ProjectivePoint& a) const {
  require_on_curve(a);
  if (coordinate_product(a.coords()).is_zero())
    return add(double_point(a), a);
  Triple t = tripling_representative(a.coords());
  if (is_zero(t))
    throw InternalError("tripling formula vanished at " + a.to_string());
  return ProjectivePoint(t);
}

ProjectivePoint HesseCurve::mul(std::int64_t n, const ProjectivePoint& a) const {
  require_on_curve(a);
  if (n < 0)
    return neg(mul(-n, a));
  ProjectivePoint result = identity();
  ProjectivePoint base = a;
  auto k = static_cast<std::uint64_t>(n);
  while (k) {
    if (k & 1)
      result = add(result, base);
    k >>= 1;
    if (k)
      base = add(base, base);
  }
  return result;
}

const std::vector<ProjectivePoint>& HesseCurve::points() const {
  std::call_once(cache_->once, [this] {
    Modulus m = modulus();
    auto p = static_cast<std::int64_t>(m.value());
    std::vector<ProjectivePoint>& out = cache_->points;
    for (std::int64_t y = 0; y < p; ++y)
      for (std::int64_t z = 0; z < p; ++z) {
        Triple t = make_triple(m, 1, y, z);
        if (contains(t))
          out.emplace_back(t);
      }
    for (std::int64_t z = 0; z < p; ++z) {
      Triple t = make_triple(m, 0, 1, z);
      if (contains(t))
        out.emplace_back(t);
    }
    Triple t = make_triple(m, 0, 0, 1);
    if (contains(t))
      out.emplace_back(t);
    std::sort(out.begin(), out.end());
  });
  return cache_->points;
}

std::vector<ProjectivePoint> HesseCurve::torsion3() const {
  Modulus m = modulus();
  Fp omega = primitive_root_of_unity(m, 3);
  Fp one = Fp::one(m), zero = Fp::zero(m);
  std::vector<ProjectivePoint> out;
  Fp w = one;
  for (int k = 0; k < 3; ++k, w *= omega) {
    out.emplace_back(Triple{one, -w, zero});
    out.emplace_back(Triple{zero, one, -w});
    out.emplace_back(Triple{-w, zero, one});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ProjectivePoint> HesseCurve::torsion6() const {
  std::vector<ProjectivePoint> out;
  for (const ProjectivePoint& pt : points()) {
    const Triple& c = pt.coords();
    Fp c0 = c[0].pow(3), c1 = c[1].pow(3), c2 = c[2].pow(3);
    Fp arrangement = coordinate_product(c) * (c0 - c1) * (c1 - c2) * (c2 - c0);
    if (arrangement.is_zero())
      out.push_back(pt);
  }
  return out;
}

std::vector<ProjectivePoint> HesseCurve::torsion_brute_force(std::int64_t n) const {
  std::vector<ProjectivePoint> out;
  ProjectivePoint o = identity();
  for (const ProjectivePoint& pt : points())
    if (mul(n, pt) == o)
      out.push_back(pt);
  return out;
}

namespace {

// coefficients[k][i][j] of x_i y_j in the k-th bilinear form
using Trilinear = std::array<std::array<std::array<Fp, 3>, 3>, 3>;

Trilinear zero_trilinear(Modulus m) {
  std::array<Fp, 3> row{Fp::zero(m), Fp::zero(m), Fp::zero(m)};
  std::array<std::array<Fp, 3>, 3> slab{row, row, row};
  return {slab, slab, slab};
}

// M_{a,x} y^T: entry (k, j) of M is linear in x, multiplied by y_j.
Trilinear forms_from_moore_x(const Triple& a) {
  FormMatrix mx = moore(a);
  Trilinear t = zero_trilinear(a[0].modulus());
  for (int i = 0; i < 3; ++i) {
    Matrix c = mx.linear_coefficient(i);
    for (int k = 0; k < 3; ++k)
      for (int j = 0; j < 3; ++j)
        t[k][i][j] += c(k, j);
  }
  return t;
}

// M_{iota(a),y} x^T: entry (k, j) is linear in y, multiplied by x_j.
Trilinear forms_from_moore_y(const Triple& a) {
  FormMatrix my = moore(iota(a));
  Trilinear t = zero_trilinear(a[0].modulus());
  for (int i = 0; i < 3; ++i) {
    Matrix c = my.linear_coefficient(i);
    for (int k = 0; k < 3; ++k)
      for (int j = 0; j < 3; ++j)
        t[k][j][i] += c(k, j);
  }
  return t;
}

// (x M_{iota(a),iota(y)})^T: component k is sum_j x_j M(j, k).
Trilinear forms_from_row_product(const Triple& a) {
  Modulus m = a[0].modulus();
  FormMatrix my = moore(iota(a), iota(coordinate_forms(m)));
  Trilinear t = zero_trilinear(m);
  for (int i = 0; i < 3; ++i) {
    Matrix c = my.linear_coefficient(i);
    for (int k = 0; k < 3; ++k)
      for (int j = 0; j < 3; ++j)
        t[k][j][i] += c(j, k);
  }
  return t;
}

} // namespace

CheckResult HesseCurve::translation_graph_check(const ProjectivePoint& a) const {
  require_on_curve(a);
  Trilinear t1 = forms_from_moore_x(a.coords());
  if (t1 != forms_from_moore_y(a.coords()))
    return {false, "M_{a,x} y^T != M_{iota(a),y} x^T for a = " + a.to_string()};
  if (t1 != forms_from_row_product(a.coords()))
    return {false, "M_{a,x} y^T != (x M_{iota(a),iota(y)})^T for a = " + a.to_string()};

  const auto& pts = points();
  for (const ProjectivePoint& x : pts) {
    ProjectivePoint expected = sub(x, a);
    Matrix mx = moore_at(a.coords(), x.coords());
    for (const ProjectivePoint& y : pts) {
      Vector f = mx * Vector(y.coords().begin(), y.coords().end());
      bool vanishes = std::all_of(f.begin(), f.end(), [](const Fp& v) { return v.is_zero(); });
      if (vanishes != (y == expected))
        return {false, "pair (" + x.to_string() + ", " + y.to_string() + ") " +
                           (vanishes ? "zeroes the forms but is not (x, x - a)"
                                     : "is (x, x - a) but does not zero the forms")};
    }
  }
  return {true, ""};
}

bool HesseCurve::segre_check(const ProjectivePoint& a, const ProjectivePoint& x) const {
  require_on_curve(a);
  require_on_curve(x);
  Matrix adj = moore_adjugate_at(a.coords(), x.coords());
  if (adj.is_zero())
    throw PreconditionError("specialized adjugate vanishes");
  ProjectivePoint left = sub(x, a);
  ProjectivePoint right = sub(neg(x), a);
  Vector flat_adj, flat_outer;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      flat_adj.push_back(adj(i, j));
      flat_outer.push_back(left[i] * right[j]);
    }
  return projectively_equal(flat_adj, flat_outer);
}

} // namespace hesse_moore
