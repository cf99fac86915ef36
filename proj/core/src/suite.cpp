#include "qg/suite.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>

#include "qg/error.hpp"
#include "qg/lie.hpp"
#include "qg/lp.hpp"
#include "qg/multipliers.hpp"
#include "qg/random.hpp"

namespace qg {

SuiteKind parse_suite_kind(const std::string& text) {
  if (text == "pentagon") return SuiteKind::pentagon;
  if (text == "products") return SuiteKind::products;
  if (text == "lie") return SuiteKind::lie;
  if (text == "multipliers") return SuiteKind::multipliers;
  if (text == "lp") return SuiteKind::lp;
  if (text == "all") return SuiteKind::all;
  throw Error("unknown suite '" + text + "'");
}

std::string to_string(SuiteKind k) {
  switch (k) {
    case SuiteKind::pentagon: return "pentagon";
    case SuiteKind::products: return "products";
    case SuiteKind::lie: return "lie";
    case SuiteKind::multipliers: return "multipliers";
    case SuiteKind::lp: return "lp";
    case SuiteKind::all: return "all";
  }
  return "all";
}

namespace {

double rel(const CMatrix& x, const CMatrix& y) {
  const double s = std::max(x.norm(), y.norm());
  return s == 0.0 ? 0.0 : (x - y).norm() / s;
}

double diff(const CMatrix& x, const CMatrix& y) { return (x - y).norm(); }

// Running maximum of a residual, recorded once at the end.
struct Worst {
  double v = 0.0;
  void operator()(double x) {
    if (!(x <= v)) v = x;
  }
};

CMatrix zero_diagonal(CMatrix m) {
  m.diagonal().setZero();
  return m;
}

VerifyReport pentagon_suite(const QGBundle& b, const SuiteConfig& cfg) {
  VerifyReport r = validate_qg(b, cfg.tol);
  const QGBundle dual = build_dual(b, {cfg.tol, false});
  for (CheckCase c : validate_qg(dual, cfg.tol).cases) {
    c.name = "dual." + c.name;
    r.cases.push_back(std::move(c));
  }
  const QGBundle bi = build_dual(dual, {cfg.tol, false});
  const double res = std::max({diff(bi.w.dense(), b.w.dense()), diff(bi.v.dense(), b.v.dense()),
                               diff(bi.w_hat.dense(), b.w_hat.dense()),
                               diff(bi.v_hat.dense(), b.v_hat.dense())});
  r.add("qg.biduality", "(G^)^ = G: W, V, W^, V^ recovered", res, cfg.tol.absolute);
  return r;
}

VerifyReport products_suite(const QGBundle& b, const SuiteConfig& cfg) {
  VerifyReport r;
  const FiniteGroup& g = *b.group;
  const int d = b.d;
  const QGBundle dual = build_dual(b, {cfg.tol, false});
  Sampler s(derive_seed(cfg.seed, 2));
  Worst so, bor, bol, bvs, bds, sa, ba, drs, drb, cr, trs, trb, deg, pis, pihb, pib;
  bool faithful = true;
  for (int i = 0; i < cfg.samples; ++i) {
    const CMatrix x = s.matrix(d), y = s.matrix(d), z = s.matrix(d);
    const CMatrix xy = star(b, x, y), bxy = bullet(b, x, y);
    so(rel(xy, star_oracle_commutative(g, x, y)));
    bor(rel(bxy, bullet_oracle_cocommutative(g, x, y, Translate::right)));
    bol(rel(bxy, bullet_oracle_cocommutative(g, x, y, Translate::left)));
    bvs(rel(bxy, bullet_via_star(b, x, y)));
    bds(rel(bxy, star(dual, x, y)));
    sa(diff(star(b, xy, z), star(b, x, star(b, y, z))));
    ba(diff(bullet(b, bxy, z), bullet(b, x, bullet(b, y, z))));
    drs(diff(star(b, x, bullet(b, y, z)), z.trace() * xy));
    drb(diff(bullet(b, x, star(b, y, z)), z.trace() * bxy));
    cr(diff(bullet(b, xy, z), star(b, bullet(b, x, z), y)));
    trs(std::abs(xy.trace() - x.trace() * y.trace()));
    trb(std::abs(bxy.trace() - x.trace() * y.trace()));
    deg(star(b, x, zero_diagonal(y)).norm());
    pis((pi(b, xy) - convolve(g, pi(b, x), pi(b, y))).norm());
    pihb((pi_hat(b, bxy) - pi_hat(b, x).cwiseProduct(pi_hat(b, y))).norm());
    pib((pi(b, bxy) - y.trace() * pi(b, x)).norm());
    if (i < 20) {
      double best = 0.0;
      for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l) best = std::max(best, star(b, x, matrix_unit(d, k, l)).norm());
      faithful = faithful && best > 1e-8;
    }
  }
  const double t = cfg.tol.relative, it = cfg.identity_tol;
  r.add("products.star.oracle", "w * t = sum_s rho(s)* w rho(s) t_ss", so.v, t);
  CheckCase& right = r.add("products.bullet.oracle_right", "(w . t)_st = w_st sum_r t_{sr,tr}", bor.v, t);
  CheckCase& left = r.add("products.bullet.oracle_left", "(w . t)_st = w_st sum_r t_{rs,rt}", bol.v, t, false);
  const char* orient = bor.v <= t && bol.v > t ? "right translates (sr) match; left translates (rs) differ"
                     : bor.v <= t && bol.v <= t ? "both translate orientations agree (abelian)"
                                                : "right translate form does not match";
  right.note = orient;
  left.note = orient;
  r.add("products.bullet.via_star", "m_. = m_* o Ad(W*) o Sigma", bvs.v, t);
  r.add("products.bullet.dual_star", "w . t = w *^ t (dual bundle)", bds.v, t);
  r.add("products.star.assoc", "(r * w) * t = r * (w * t)", sa.v, it);
  r.add("products.bullet.assoc", "(r . w) . t = r . (w . t)", ba.v, it);
  r.add("products.dr.star", "r * (w . t) = tr(t) r * w", drs.v, it);
  r.add("products.dr.bullet", "r . (w * t) = tr(t) r . w", drb.v, it);
  r.add("products.cr", "(r * w) . t = (r . t) * w", cr.v, it);
  r.add("products.star.trace", "tr(w * t) = tr(w) tr(t)", trs.v, it);
  r.add("products.bullet.trace", "tr(w . t) = tr(w) tr(t)", trb.v, it);
  r.add("products.star.degenerate", "w * t = 0 if diag(t) = 0", deg.v, t);
  r.add_flag("products.star.left_faithful", "r != 0 => r * E_kl != 0 for some k, l", faithful);
  r.add("products.pi.star", "pi(w * t) = pi(w) * pi(t)", pis.v, it);
  r.add("products.pi_hat.bullet", "pi^(w . t) = pi^(w) pi^(t)", pihb.v, it);
  r.add("products.pi.bullet", "pi(w . t) = tr(t) pi(w)", pib.v, it);
  return r;
}

VerifyReport lie_suite(const QGBundle& b, const SuiteConfig& cfg) {
  const int d = b.d;
  VerifyReport r = verify_associativity(b, {cfg.samples, derive_seed(cfg.seed, 3), cfg.identity_tol});
  const CMatrix e = identity_element_unchecked(b);
  const QGBundle dual = build_dual(b, {cfg.tol, false});
  const CMatrix ed = identity_element_unchecked(dual);
  Worst id, idd;
  for (const CMatrix& t : trace_zero_basis(d)) {
    id(std::max(diff(ostar(b, e, t), t), diff(ostar(b, t, e), t)));
    idd(std::max(diff(ostar(dual, ed, t), t), diff(ostar(dual, t, ed), t)));
  }
  r.add("lie.identity", "E # t = t = t # E, E = 2(eta eta* - xi xi*)", id.v, cfg.tol.absolute);
  r.add("lie.identity.trace", "tr(E) = 0", std::abs(e.trace()), cfg.tol.absolute);
  r.add("lie.identity.dual", "E^ #^ t = t = t #^ E^", idd.v, cfg.tol.absolute);
  if (d == 2) {
    CMatrix expect(2, 2);
    expect << 1.0, -1.0, -1.0, -1.0;
    r.add("lie.identity.order2", "E = [[1,-1],[-1,-1]]", diff(e, expect), 1e-12);
    CMatrix z = CMatrix::Zero(2, 2);
    z(0, 0) = 1.0;
    z(1, 1) = -1.0;
    r.add("lie.ostar.z_square", "Z # Z = Z", diff(ostar(b, z, z), z), 1e-12);
  }

  Sampler s(derive_seed(cfg.seed, 4));
  Worst dual_rel, ent_r, ent_l, half_pi, half_pih, shuffle;
  const bool group = b.kind == BundleKind::commutative && b.group;
  const int n = d == 1 ? 0 : cfg.samples;
  for (int i = 0; i < n; ++i) {
    const CMatrix x = s.trace_zero(d), y = s.trace_zero(d), z = s.trace_zero(d);
    const CMatrix xy = ostar(b, x, y);
    if (i < 5) dual_rel(dual_product_relation(b, x, y, cfg.tol.absolute).max_residual("lie.dual"));
    shuffle(diff(star(b, star(b, x, y), z), star(b, x, CMatrix(bullet(b, y, z) + star(b, y, z)))));
    if (group) {
      const FiniteGroup& g = *b.group;
      ent_r(rel(xy, entrywise_ostar_commutative(g, x, y, Translate::right)));
      ent_l(rel(xy, entrywise_ostar_commutative(g, x, y, Translate::left)));
      half_pi((0.5 * pi(b, xy) - convolve(g, 0.5 * pi(b, x), 0.5 * pi(b, y))).norm());
      half_pih((0.5 * pi_hat(b, xy) + (0.5 * pi_hat(b, x)).cwiseProduct(0.5 * pi_hat(b, y))).norm());
    }
  }
  r.add("lie.dual.relation", "r #^ t = -(t # r), r #^+ t = t #+ r", dual_rel.v, cfg.tol.absolute);
  r.add("lie.shuffle", "(r * t) * w = r * (t . w + t * w)", shuffle.v, cfg.identity_tol);
  if (group) {
    r.add("lie.entrywise.right", "(w # t)_st = 1/2 sum_r (t_rr w_{sr^-1,tr^-1} - t_st w_{sr,tr})",
          ent_r.v, cfg.tol.relative);
    r.add("lie.entrywise.left", "(w # t)_st = 1/2 sum_r (t_rr w_{sr^-1,tr^-1} - t_st w_{rs,rt})",
          ent_l.v, cfg.tol.relative, false);
    r.add("lie.pi.half_multiplicative", "1/2 pi(r # t) = (1/2 pi r) * (1/2 pi t)", half_pi.v,
          cfg.identity_tol);
    r.add("lie.pi_hat.half_antimultiplicative", "1/2 pi^(r # t) = -(1/2 pi^ r)(1/2 pi^ t)",
          half_pih.v, cfg.identity_tol);
  }

  if (d >= 2) {
    try {
      const Witness w = nonabelian_witness(b, derive_seed(cfg.seed, 5));
      CheckCase& c = r.add_flag("lie.nonabelian", "r # t != t # r for some trace-zero r, t", true);
      char buf[96];
      std::snprintf(buf, sizeof buf, "commutator %.3e at scale %.3e", w.residual, w.scale);
      c.note = buf;
    } catch (const IdentityError& ex) {
      r.add_flag("lie.nonabelian", "r # t != t # r for some trace-zero r, t", false).note = ex.what();
    }
  }

  const ElementSampler tz = [d](Sampler& sm) { return sm.trace_zero(d); };
  const MixedProductOptions mo{std::min(cfg.samples, 50), derive_seed(cfg.seed, 6), cfg.identity_tol};
  try {
    mixed_product_general(bundle_products(b), MixedSign::lie, tz, mo);
    r.add_flag("lie.engine.bundle_accepted", "(*, .) satisfy both commuting conditions", true);
  } catch (const ConditionViolation& ex) {
    r.add_flag("lie.engine.bundle_accepted", "(*, .) satisfy both commuting conditions", false).note = ex.what();
  }
  {
    ProductPair mm;
    mm.d = d;
    mm.star = [](const CMatrix& x, const CMatrix& y) { return CMatrix(x * y); };
    mm.bullet = mm.star;
    const ElementSampler any = [d](Sampler& sm) { return sm.matrix(d); };
    double res = 0.0;
    bool rejected = false;
    try {
      mixed_product_general(mm, MixedSign::lie, any, mo);
    } catch (const ConditionViolation& ex) {
      rejected = true;
      res = std::max(ex.residuals().condition1, ex.residuals().condition2);
    }
    const bool sharp = d == 1 ? !rejected : rejected && res > 1e-3;
    CheckCase& c = r.add_flag("lie.engine.matmul_rejected", "a(bc) = b(ac) fails for matrix multiplication", sharp);
    c.note = d == 1 ? "scalars commute; vacuous" : "condition residual " + std::to_string(res);
  }
  return r;
}

VerifyReport multipliers_suite(const QGBundle& b, const SuiteConfig& cfg) {
  VerifyReport r;
  const FiniteGroup& g = *b.group;
  const int d = b.d;
  Sampler s(derive_seed(cfg.seed, 7));
  auto unit = [](CVector v) { return CVector(v / v.norm()); };
  const CMatrix chi = b.haar_vector * b.haar_vector.adjoint();
  const CMatrix eta = b.counit_vector * b.counit_vector.adjoint();
  const int n = std::min(cfg.samples, 50);
  Worst tl, tid, tanti, hr, hid, hanti, comm, hl, hdr, hidem, hfix, hrange, hmod, hdiag;
  for (int i = 0; i < n; ++i) {
    const CVector f = unit(s.vector(d)), h = unit(s.vector(d));
    const CMatrix x0 = s.trace_zero(d), x = s.matrix(d), y = s.matrix(d);
    const CMatrix fd = f.asDiagonal(), hd = h.asDiagonal();
    auto th = [&](const CMatrix& fdiag, const CMatrix& m) { return star(b, m, fdiag); };
    tl(diff(th(fd, ostar(b, x0, x)), ostar(b, x0, th(fd, x))));
    tid(diff(star(b, x, matrix_unit(d, 0, 0)), x));
    const CMatrix fh = convolve(g, f, h).asDiagonal();
    tanti(diff(th(fh, x), th(hd, th(fd, x))));
    const CMatrix lf = fourier_lift(g, f), lh = fourier_lift(g, h);
    auto thh = [&](const CMatrix& lift, const CMatrix& m) { return bullet(b, m, lift); };
    hr(diff(thh(lf, ostar(b, x, x0)), ostar(b, thh(lf, x), x0)));
    hid(diff(bullet(b, x, fourier_lift(g, CVector::Ones(d))), x));
    hanti(diff(thh(fourier_lift(g, f.cwiseProduct(h)), x), thh(lh, thh(lf, x))));
    comm(diff(th(fd, thh(lf, x)), thh(lf, th(fd, x))));
    hl(diff(ostar(b, x0, x).trace() * chi, ostar(b, x0, CMatrix(x.trace() * chi))));
    hdr(diff(ostar(b, x, x0).trace() * eta, ostar(b, CMatrix(x.trace() * eta), x0)));
    const CMatrix ex = apply_haar_expectation(b, x);
    hidem(diff(apply_haar_expectation(b, ex), ex));
    CMatrix proj = CMatrix::Zero(d, d);
    for (int k = 0; k < d; ++k) {
      const CMatrix l = left_regular(g, k);
      proj += (l.adjoint() * ex).trace() / static_cast<double>(d) * l;
    }
    hrange(diff(proj, ex));
    hmod(diff(apply_haar_expectation(b, right_action(b, x, y)), right_action(b, ex, y)));
    const CVector fx = s.vector(d);
    hdiag(diff(apply_haar_expectation(b, fx.asDiagonal()), fx.mean() * identity(d)));
  }
  for (int k = 0; k < d; ++k) {
    const CMatrix l = left_regular(g, k);
    hfix(diff(apply_haar_expectation(b, l), l));
  }
  const double t = cfg.tol.absolute;
  r.add("mult.theta.left_module", "Theta(f)(r0 # t) = r0 # Theta(f)(t)", tl.v, t);
  r.add("mult.theta.unit", "Theta(delta_e) = id", tid.v, t);
  r.add("mult.theta.anti", "Theta(f * h) = Theta(h) o Theta(f)", tanti.v, t);
  r.add("mult.theta_hat.right_module", "Theta^(f)(r # t0) = Theta^(f)(r) # t0", hr.v, t);
  r.add("mult.theta_hat.unit", "Theta^(1) = id", hid.v, t);
  r.add("mult.theta_hat.anti", "Theta^(f h) = Theta^(h) o Theta^(f)", hanti.v, t);
  r.add("mult.theta.commute", "Theta(f) Theta^(h) = Theta^(h) Theta(f)", comm.v, t);
  r.add("mult.haar_trace.left_module", "tr(r0 # t) xi xi* = r0 # (tr(t) xi xi*)", hl.v, t);
  r.add("mult.dual_haar_trace.right_module", "tr(t # r0) eta eta* = (tr(t) eta eta*) # r0", hdr.v, t);
  r.add("mult.haar.idempotent", "Theta(m)^2 = Theta(m)", hidem.v, t);
  r.add("mult.haar.fixes_lambda", "Theta(m)(lambda(s)) = lambda(s)", hfix.v, t);
  r.add("mult.haar.range", "Theta(m)(T) in span lambda(G)", hrange.v, t);
  r.add("mult.haar.module", "Theta(m)(T * r) = Theta(m)(T) * r", hmod.v, t);
  r.add("mult.haar.diagonal_mean", "Theta(m)(diag x) = mean(x) 1", hdiag.v, t);

  if (d <= 12) {
    std::vector<SuperOperator> th, thh;
    for (int k = 0; k < d; ++k) {
      L1Function e = L1Function::Zero(d);
      e(k) = 1.0;
      th.push_back(theta(b, e));
      thh.push_back(theta_hat(b, e));
    }
    r.add_flag("mult.theta.injective", "Theta(f) = 0 => f = 0", span_rank(th) == d);
    r.add_flag("mult.theta_hat.injective", "Theta^(f) = 0 => f = 0", span_rank(thh) == d);
  }

  if (d <= cfg.max_exact_dim_order) {
    for (Side side : {Side::left, Side::right}) {
      const ModuleMapSpace m = module_map_space_dim(b, side, {1e-8, false});
      const std::string p = side == Side::left ? "mult.dim.left" : "mult.dim.right";
      const char* span = side == Side::left ? "Theta(L1) + C lambda(phi) tr" : "Theta^(A) + C lambda^(phi^) tr";
      r.add(p + ".containment", std::string(span) + " inside the module-map space",
            m.containment_residual, t);
      CheckCase& gap = r.add_flag(p + ".gap", "singular-value gap >= 4 orders at the cutoff",
                                  m.gap_orders >= 4.0 && !m.ambiguous);
      gap.note = "gap " + std::to_string(m.gap_orders) + " orders";
      CheckCase& eq = r.add(p + ".equality", std::string("dim module maps = dim ") + span,
                            std::abs(m.dimension - m.predicted), 0.0, false);
      eq.note = "measured " + std::to_string(m.dimension) + ", predicted " + std::to_string(m.predicted);
      CheckCase& ds = r.add_flag(p + ".direct_sum", "the sum is direct", m.direct_sum, false);
      ds.note = "generator rank " + std::to_string(m.generators_rank);
    }
  } else {
    r.add_flag("mult.dim.skipped", "exact module-map dimension", true, false).note =
        "order " + std::to_string(d) + " above the exact-solve limit";
  }
  return r;
}

std::string p_label(double p) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "lp.p%g.", p);
  return buf;
}

VerifyReport lp_suite(const QGBundle& b, const SuiteConfig& cfg) {
  VerifyReport r;
  const FiniteGroup& g = *b.group;
  const int d = b.d;
  const ElementSampler tz = [d](Sampler& sm) { return sm.trace_zero(d); };
  const ElementSampler any = [d](Sampler& sm) { return sm.matrix(d); };
  std::uint64_t salt = 10;
  for (double p : cfg.p_values) {
    const std::string pre = p_label(p);
    FundamentalPair pair;
    try {
      pair = build_lp_pair(g, p, 1e-12);
    } catch (const Error& ex) {
      r.add_flag(pre + "build", "V_p, V^_p constructed", false).note = ex.what();
      continue;
    }
    r.add(pre + "commutation", "V12 V^13 = V^13 V12 V^23", lp_commutation_residual(pair), 1e-12);
    bool perm = true;
    for (const CMatrix* m : {&pair.v_p.dense(), &pair.v_hat_p.dense()}) {
      for (Eigen::Index i = 0; i < m->rows(); ++i) {
        int ones = 0, ones_c = 0;
        for (Eigen::Index j = 0; j < m->cols(); ++j) {
          const Complex x = (*m)(i, j), y = (*m)(j, i);
          if (x != Complex(0.0) && x != Complex(1.0)) perm = false;
          ones += x == Complex(1.0);
          ones_c += y == Complex(1.0);
        }
        perm = perm && ones == 1 && ones_c == 1;
      }
    }
    r.add_flag(pre + "permutation", "V_p, V^_p are permutation matrices", perm);
    r.add(pre + "inverse_transpose", "V_p* = V_p'^-1", diff(pair.v_p.inverse(), pair.v_p.dense().transpose()),
          cfg.tol.absolute);
    const ProductPair pp = lp_products(pair);
    const std::uint64_t seed = derive_seed(cfg.seed, salt++);
    const ConditionResiduals c1 = check_conditions(pp, tz, cfg.samples, seed);
    const ConditionResiduals c2 = check_conditions(pp, any, cfg.samples, seed);
    r.add(pre + "condition1", "r * (w . t) = w . (r * t), trace-zero", c1.condition1, cfg.tol.absolute);
    r.add(pre + "condition2", "(r * w) . t = (r . t) * w", c2.condition2, cfg.identity_tol);
    r.add(pre + "star.assoc", "(r * w) * t = r * (w * t)", c2.star_assoc, cfg.identity_tol);
    r.add(pre + "bullet.assoc", "(r . w) . t = r . (w . t)", c2.bullet_assoc, cfg.identity_tol);
    for (MixedSign sign : {MixedSign::lie, MixedSign::jordan}) {
      const std::string nm = pre + (sign == MixedSign::lie ? "ostar.assoc" : "ostar_plus.assoc");
      const char* anchor = sign == MixedSign::lie ? "(r #p w) #p t = r #p (w #p t)" : "(r #p+ w) #p+ t = r #p+ (w #p+ t)";
      try {
        const MixedProduct mp = ostar_p(pair, sign, {std::min(cfg.samples, 50), seed, cfg.identity_tol});
        Sampler s(derive_seed(seed, 1));
        Worst a;
        for (int i = 0; i < (d == 1 ? 0 : cfg.samples); ++i) {
          const CMatrix x = s.trace_zero(d), y = s.trace_zero(d), z = s.trace_zero(d);
          a(diff(mp(mp(x, y), z), mp(x, mp(y, z))));
        }
        r.add(nm, anchor, a.v, cfg.identity_tol);
      } catch (const ConditionViolation& ex) {
        r.add_flag(nm, anchor, false).note = ex.what();
      }
    }
    Sampler s(derive_seed(seed, 2));
    Worst cs, cb, co, tr;
    for (int i = 0; i < std::min(cfg.samples, 50); ++i) {
      const CMatrix x = s.matrix(d), y = s.matrix(d);
      const CMatrix sp = star_p(pair, x, y);
      cs(rel(sp, star(b, x, y)));
      cb(rel(bullet_p(pair, x, y), bullet(b, x, y)));
      const CMatrix x0 = s.trace_zero(d), y0 = s.trace_zero(d);
      co(diff(0.5 * (star_p(pair, x0, y0) - bullet_p(pair, y0, x0)), ostar(b, x0, y0)));
      tr(std::abs(sp.trace() - x.trace() * y.trace()));
    }
    r.add(pre + "collapse.star", "star_p = star (unimodular)", cs.v, cfg.tol.relative);
    r.add(pre + "collapse.bullet", "bullet_p = bullet (unimodular)", cb.v, cfg.tol.relative);
    r.add(pre + "collapse.ostar", "#p = # (unimodular)", co.v, cfg.tol.absolute);
    r.add(pre + "star.trace", "tr(w *p t) = tr(w) tr(t)", tr.v, cfg.identity_tol);
  }
  return r;
}

}  // namespace

VerifyReport run_suite(SuiteKind kind, const FiniteGroup& g, const SuiteConfig& cfg) {
  if (cfg.samples < 1) throw Error("samples must be >= 1");
  if (cfg.tol.absolute < 0 || cfg.tol.relative < 0 || cfg.identity_tol < 0)
    throw Error("tolerances must be >= 0");
  const auto t0 = std::chrono::steady_clock::now();
  const QGBundle b = build_commutative(g, {cfg.tol, false});
  VerifyReport r;
  auto want = [kind](SuiteKind k) { return kind == SuiteKind::all || kind == k; };
  if (want(SuiteKind::pentagon)) r.merge(pentagon_suite(b, cfg));
  if (want(SuiteKind::products)) r.merge(products_suite(b, cfg));
  if (want(SuiteKind::lie)) r.merge(lie_suite(b, cfg));
  if (want(SuiteKind::multipliers)) r.merge(multipliers_suite(b, cfg));
  if (want(SuiteKind::lp)) r.merge(lp_suite(b, cfg));
  r.suite = to_string(kind);
  r.group = g.name();
  r.seed = cfg.seed;
  r.sort_cases();
  r.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

StructureProduct parse_structure_product(const std::string& text) {
  if (text == "star") return StructureProduct::star;
  if (text == "bullet") return StructureProduct::bullet;
  if (text == "ostar") return StructureProduct::ostar;
  if (text == "ostar_plus") return StructureProduct::ostar_plus;
  throw Error("unknown product '" + text + "'");
}

std::string to_string(StructureProduct p) {
  switch (p) {
    case StructureProduct::star: return "star";
    case StructureProduct::bullet: return "bullet";
    case StructureProduct::ostar: return "ostar";
    case StructureProduct::ostar_plus: return "ostar_plus";
  }
  return "star";
}

StructureTable emit_structure_constants(const FiniteGroup& g, StructureProduct p, int max_order) {
  if (g.order() > max_order)
    throw DimensionError("structure constants are limited to order " + std::to_string(max_order));
  const QGBundle b = build_commutative(g, {{}, false});
  const int d = g.order();
  StructureTable t;
  t.group = g.name();
  t.product = p;
  auto unit_name = [](int i, int j) { return "E[" + std::to_string(i) + "," + std::to_string(j) + "]"; };
  std::vector<CMatrix> basis;
  const bool tz = p == StructureProduct::ostar || p == StructureProduct::ostar_plus;
  if (tz) {
    basis = trace_zero_basis(d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        if (i != j) t.basis.push_back(unit_name(i, j));
    for (int i = 1; i < d; ++i) t.basis.push_back(unit_name(0, 0) + "-" + unit_name(i, i));
  } else {
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        basis.push_back(matrix_unit(d, i, j));
        t.basis.push_back(unit_name(i, j));
      }
  }
  const std::size_t n = basis.size();
  t.coefficients.assign(n, std::vector<std::vector<Complex>>(n, std::vector<Complex>(n)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      CMatrix m;
      switch (p) {
        case StructureProduct::star: m = star(b, basis[i], basis[j]); break;
        case StructureProduct::bullet: m = bullet(b, basis[i], basis[j]); break;
        case StructureProduct::ostar: m = ostar(b, basis[i], basis[j]); break;
        case StructureProduct::ostar_plus: m = ostar_plus(b, basis[i], basis[j]); break;
      }
      const CVector c = tz ? trace_zero_coordinates(m) : CVector(m.transpose().reshaped());
      for (std::size_t k = 0; k < n; ++k) t.coefficients[i][j][k] = c(static_cast<Eigen::Index>(k));
    }
  return t;
}

Json table_to_json(const StructureTable& t) {
  Json entries = Json::array();
  const std::size_t n = t.basis.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Complex c = t.coefficients[i][j][k];
        if (std::abs(c) > 1e-14) entries.push_back({i, j, k, c.real(), c.imag()});
      }
  return {{"schema", kSchemaVersion}, {"group", t.group}, {"product", to_string(t.product)},
          {"basis", t.basis}, {"entries", std::move(entries)}};
}

std::string table_to_csv(const StructureTable& t) {
  std::ostringstream os;
  os.precision(17);
  os << "i,j,k,left,right,result,re,im\n";
  const std::size_t n = t.basis.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Complex c = t.coefficients[i][j][k];
        if (std::abs(c) > 1e-14)
          os << i << ',' << j << ',' << k << ",\"" << t.basis[i] << "\",\"" << t.basis[j] << "\",\""
             << t.basis[k] << "\"," << c.real() << ',' << c.imag() << '\n';
      }
  return os.str();
}

}  // namespace qg
