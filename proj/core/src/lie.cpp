#include "qg/lie.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

#include "qg/error.hpp"

namespace qg {

TraceZero TraceZero::strict(CMatrix m, double tol) {
  if (m.rows() != m.cols()) throw DimensionError("TraceZero: matrix must be square");
  if (const double t = std::abs(m.trace()); t > tol)
    throw Error("TraceZero: trace " + std::to_string(t) + " exceeds " + std::to_string(tol));
  return TraceZero(std::move(m));
}

TraceZero TraceZero::project(CMatrix m, const QGBundle& b) {
  require_operand(b, m, "TraceZero");
  const Complex t = m.trace();
  m -= t * b.haar_vector * b.haar_vector.adjoint();
  return TraceZero(std::move(m));
}

CMatrix ostar(const QGBundle& b, const CMatrix& rho, const CMatrix& tau) {
  return 0.5 * (star(b, rho, tau) - bullet(b, tau, rho));
}

CMatrix ostar_plus(const QGBundle& b, const CMatrix& rho, const CMatrix& tau) {
  return 0.5 * (star(b, rho, tau) + bullet(b, tau, rho));
}

CMatrix ostar_dual(const QGBundle& b, const CMatrix& rho, const CMatrix& tau) {
  return ostar(build_dual(b, {{}, false}), rho, tau);
}

CMatrix ostar_plus_dual(const QGBundle& b, const CMatrix& rho, const CMatrix& tau) {
  return ostar_plus(build_dual(b, {{}, false}), rho, tau);
}

CMatrix entrywise_ostar_commutative(const FiniteGroup& g, const CMatrix& omega,
                                    const CMatrix& tau, Translate t) {
  const int d = g.order();
  require_square(omega, d, "entrywise_ostar_commutative");
  require_square(tau, d, "entrywise_ostar_commutative");
  CMatrix out(d, d);
  for (int s = 0; s < d; ++s)
    for (int u = 0; u < d; ++u) {
      Complex acc = 0.0;
      for (int r = 0; r < d; ++r) {
        const int ri = g.inv(r);
        acc += tau(r, r) * omega(g.mul(s, ri), g.mul(u, ri));
        acc -= t == Translate::right ? tau(s, u) * omega(g.mul(s, r), g.mul(u, r))
                                     : tau(s, u) * omega(g.mul(r, s), g.mul(r, u));
      }
      out(s, u) = 0.5 * acc;
    }
  return out;
}

ConditionResiduals check_conditions(const ProductPair& p, const ElementSampler& gen,
                                    int samples, std::uint64_t seed) {
  Sampler s(seed);
  ConditionResiduals r;
  for (int i = 0; i < samples; ++i) {
    const CMatrix a = gen(s), b = gen(s), c = gen(s);
    const double scale = a.norm() * b.norm() * c.norm();
    if (scale == 0.0) continue;
    auto rel = [scale](const CMatrix& x, const CMatrix& y) { return (x - y).norm() / scale; };
    r.condition1 = std::max(r.condition1, rel(p.star(a, p.bullet(b, c)), p.bullet(b, p.star(a, c))));
    r.condition2 = std::max(r.condition2, rel(p.bullet(p.star(a, b), c), p.star(p.bullet(a, c), b)));
    r.star_assoc = std::max(r.star_assoc, rel(p.star(p.star(a, b), c), p.star(a, p.star(b, c))));
    r.bullet_assoc =
        std::max(r.bullet_assoc, rel(p.bullet(p.bullet(a, b), c), p.bullet(a, p.bullet(b, c))));
  }
  return r;
}

CMatrix MixedProduct::operator()(const CMatrix& a, const CMatrix& b) const {
  const CMatrix x = pair_.star(a, b);
  const CMatrix y = pair_.bullet(b, a);
  return sign_ == MixedSign::lie ? CMatrix(0.5 * (x - y)) : CMatrix(0.5 * (x + y));
}

MixedProduct mixed_product_general(const ProductPair& p, MixedSign sign,
                                   const ElementSampler& gen, const MixedProductOptions& opt) {
  const ConditionResiduals r = check_conditions(p, gen, opt.samples, opt.seed);
  auto reject = [&](const char* what, double res) {
    throw ConditionViolation(std::string(what) + " violated (residual " + std::to_string(res) + ")", r);
  };
  if (r.condition1 > opt.tolerance) reject("a*(b.c) = b.(a*c)", r.condition1);
  if (r.condition2 > opt.tolerance) reject("(a*b).c = (a.c)*b", r.condition2);
  if (r.star_assoc > opt.tolerance) reject("associativity of the first product", r.star_assoc);
  if (r.bullet_assoc > opt.tolerance) reject("associativity of the second product", r.bullet_assoc);
  return MixedProduct(p, sign, r);
}

ProductPair bundle_products(const QGBundle& b) {
  auto shared = std::make_shared<const QGBundle>(b);
  ProductPair p;
  p.d = b.d;
  p.star = [shared](const CMatrix& x, const CMatrix& y) { return star(*shared, x, y); };
  p.bullet = [shared](const CMatrix& x, const CMatrix& y) { return bullet(*shared, x, y); };
  return p;
}

namespace {

double rel_assoc(const QGBundle& b, bool plus, const CMatrix& x, const CMatrix& y,
                 const CMatrix& z) {
  auto op = [&](const CMatrix& l, const CMatrix& r) {
    return plus ? ostar_plus(b, l, r) : ostar(b, l, r);
  };
  const double scale = x.norm() * y.norm() * z.norm();
  if (scale == 0.0) return 0.0;
  return (op(op(x, y), z) - op(x, op(y, z))).norm() / scale;
}

}  // namespace

VerifyReport verify_associativity(const QGBundle& b, const AssociativityOptions& opt) {
  VerifyReport r;
  r.suite = "lie";
  r.seed = opt.seed;
  r.group = b.group ? b.group->name() : b.id;
  const int d = b.d;
  if (d == 1) {
    for (const char* n : {"lie.ostar.assoc", "lie.ostar_plus.assoc"})
      r.add_flag(n, "trace-zero space is {0}", true).note = "vacuous";
    return r;
  }
  Sampler s(opt.seed);
  double a = 0, ap = 0, m = 0, mp = 0, viol = 0, closure = 0;
  for (int i = 0; i < opt.samples; ++i) {
    const CMatrix x = s.trace_zero(d), y = s.trace_zero(d), z = s.trace_zero(d);
    a = std::max(a, rel_assoc(b, false, x, y, z));
    ap = std::max(ap, rel_assoc(b, true, x, y, z));
    closure = std::max(closure, std::abs(ostar(b, x, y).trace()));
    const CMatrix x1 = s.trace_one_ish(d), z1 = s.trace_one_ish(d);
    m = std::max(m, rel_assoc(b, false, x1, y, z1));
    mp = std::max(mp, rel_assoc(b, true, x1, y, z1));
    const CMatrix y1 = s.trace_one_ish(d);
    viol = std::max(viol, rel_assoc(b, false, x, y1, z));
  }
  r.add("lie.ostar.assoc", "(r # w) # t = r # (w # t), tr = 0", a, opt.tolerance);
  r.add("lie.ostar_plus.assoc", "(r #+ w) #+ t = r #+ (w #+ t), tr = 0", ap, opt.tolerance);
  r.add("lie.ostar.assoc_middle", "(r # w0) # t = r # (w0 # t), only tr(w0) = 0", m, opt.tolerance);
  r.add("lie.ostar_plus.assoc_middle", "(r #+ w0) #+ t = r #+ (w0 #+ t), only tr(w0) = 0", mp,
        opt.tolerance);
  r.add("lie.ostar.closure", "tr(r # t) = 0", closure, opt.tolerance);
  CheckCase& c = r.add_flag("lie.ostar.middle_trace_violation",
                            "(r # w) # t != r # (w # t) for some tr(w) != 0", viol > 1e-3);
  c.note = "max residual " + std::to_string(viol);
  return r;
}

VerifyReport dual_product_relation(const QGBundle& b, const CMatrix& rho, const CMatrix& tau,
                                   double tolerance) {
  VerifyReport r;
  r.suite = "lie";
  r.group = b.group ? b.group->name() : b.id;
  const QGBundle dual = build_dual(b, {{}, false});
  const Tolerance tol{tolerance, tolerance};
  const Residual a = approx_eq(ostar(dual, rho, tau), -ostar(b, tau, rho), tol);
  r.add("lie.dual.ostar", "r #^ t = -(t # r)", a.residual, a.threshold);
  const Residual p = approx_eq(ostar_plus(dual, rho, tau), ostar_plus(b, tau, rho), tol);
  r.add("lie.dual.ostar_plus", "r #^+ t = t #+ r", p.residual, p.threshold);
  return r;
}

std::vector<CMatrix> trace_zero_basis(int d) {
  std::vector<CMatrix> basis;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      if (i != j) basis.push_back(matrix_unit(d, i, j));
  for (int i = 1; i < d; ++i) basis.push_back(matrix_unit(d, 0, 0) - matrix_unit(d, i, i));
  return basis;
}

CVector trace_zero_coordinates(const CMatrix& m) {
  const int d = static_cast<int>(m.rows());
  CVector c(static_cast<Eigen::Index>(d) * d - 1);
  Eigen::Index k = 0;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      if (i != j) c(k++) = m(i, j);
  for (int i = 1; i < d; ++i) c(k++) = -m(i, i);
  return c;
}

Witness nonabelian_witness(const QGBundle& b, std::uint64_t seed) {
  const int d = b.d;
  if (d < 2) throw Error("nonabelian_witness: trace-zero space is {0} for d = 1");
  Witness best;
  double best_ratio = -1.0;
  auto consider = [&](const CMatrix& x, const CMatrix& y) {
    const double scale = x.norm() * y.norm();
    if (scale == 0.0) return;
    const double res = (ostar(b, x, y) - ostar(b, y, x)).norm();
    if (res / scale > best_ratio) {
      best_ratio = res / scale;
      best = {x, y, res, scale};
    }
  };
  Sampler s(seed);
  for (int i = 0; i < 64; ++i) {
    const CMatrix x = s.trace_zero(d);
    consider(x, s.trace_zero(d));
  }
  std::vector<CMatrix> diffs;
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) diffs.push_back(matrix_unit(d, i, j) - matrix_unit(d, j, i));
  int pairs = 0;
  for (std::size_t k = 0; k < diffs.size() && pairs < 256; ++k)
    for (std::size_t l = k + 1; l < diffs.size() && pairs < 256; ++l, ++pairs)
      consider(diffs[k], diffs[l]);
  if (best_ratio <= 0.01)
    throw IdentityError("no nonabelian witness found", std::max(best_ratio, 0.0));
  return best;
}

CMatrix identity_element_unchecked(const QGBundle& b) {
  if (b.group && b.kind != BundleKind::user) {
    const int d = b.d;
    CMatrix e = CMatrix::Constant(d, d, -2.0 / d);
    e(0, 0) += 2.0;
    return b.kind == BundleKind::commutative ? e : CMatrix(-e);
  }
  return 2.0 * (b.counit_vector * b.counit_vector.adjoint() - b.haar_vector * b.haar_vector.adjoint());
}

CMatrix identity_element(const QGBundle& b, double tolerance) {
  const CMatrix e = identity_element_unchecked(b);
  double worst = std::abs(e.trace());
  for (const CMatrix& t : trace_zero_basis(b.d)) {
    worst = std::max(worst, (ostar(b, e, t) - t).norm());
    worst = std::max(worst, (ostar(b, t, e) - t).norm());
  }
  if (worst > tolerance) throw IdentityError("E = 2(eta eta* - xi xi*) is not a two-sided identity", worst);
  return e;
}

}  // namespace qg
