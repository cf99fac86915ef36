#include "qg/bundle.hpp"

#include <cmath>
#include <vector>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>

#include "qg/error.hpp"

namespace qg {

namespace {

SparseCMatrix to_sparse(const CMatrix& m) {
  std::vector<Eigen::Triplet<Complex>> t;
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (m(i, j) != Complex(0.0)) t.emplace_back(i, j, m(i, j));
  SparseCMatrix s(m.rows(), m.cols());
  s.setFromTriplets(t.begin(), t.end());
  return s;
}

SparseCMatrix sparse_id(int d) {
  SparseCMatrix s(d, d);
  s.setIdentity();
  return s;
}

// σXσ by index relabelling.
CMatrix flip_conjugate(const CMatrix& x, int d) {
  const Eigen::Index n = static_cast<Eigen::Index>(d) * d;
  CMatrix out(n, n);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      for (int c = 0; c < d; ++c)
        for (int e = 0; e < d; ++e) out(a * d + b, c * d + e) = x(b * d + a, e * d + c);
  return out;
}

CMatrix hat_of(const CMatrix& w, int d) { return flip_conjugate(w.adjoint(), d); }

// σ(1⊗U)W(1⊗U*)σ
CMatrix v_of(const CMatrix& w, const CMatrix& u, int d) {
  const SparseCMatrix k = kron(sparse_id(d), to_sparse(u));
  const SparseCMatrix ka = k.adjoint();
  CMatrix t = k * w;
  t = t * ka;
  return flip_conjugate(t, d);
}

Residual check(const CMatrix& a, const CMatrix& b, const Tolerance& tol) { return approx_eq(a, b, tol); }

Residual check_sparse(const SparseCMatrix& a, const SparseCMatrix& b, const Tolerance& tol) {
  Residual r;
  r.residual = frobenius_diff(a, b);
  r.threshold = tol.absolute + tol.relative * std::max(a.norm(), b.norm());
  r.pass = r.residual <= r.threshold;
  return r;
}

CheckCase& record(VerifyReport& r, const char* name, const char* anchor, const Residual& res,
                  bool gating = true) {
  return r.add(name, anchor, res.residual, res.threshold, gating);
}

// Unit vectors η with X(ζ⊗η) = ζ⊗η for every ζ.
CVector second_leg_fixed_vector(const CMatrix& x, int d, const char* what) {
  const CMatrix a = x - identity(x.rows());
  CMatrix gram = CMatrix::Zero(d, d);
  for (int k = 0; k < d; ++k) {
    const CMatrix blk = a.middleCols(static_cast<Eigen::Index>(k) * d, d);
    gram += blk.adjoint() * blk;
  }
  const Eigen::SelfAdjointEigenSolver<CMatrix> es(gram);
  const double scale = std::max(1.0, es.eigenvalues().cwiseAbs().maxCoeff());
  std::vector<int> null;
  for (int i = 0; i < d; ++i)
    if (es.eigenvalues()(i) <= 1e-10 * scale) null.push_back(i);
  if (null.empty())
    throw IdentityError(std::string("no fixed vector for the ") + what, es.eigenvalues()(0));
  CVector v;
  if (null.size() == 1) {
    v = es.eigenvectors().col(null[0]);
  } else {
    CVector e0 = CVector::Zero(d);
    e0(0) = 1.0;
    v = CVector::Zero(d);
    for (int i : null) {
      const CVector q = es.eigenvectors().col(i);
      v += q * q.dot(e0);
    }
    if (v.norm() < 1e-8) v = es.eigenvectors().col(null[0]);
  }
  v.normalize();
  Eigen::Index k = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (std::abs(v(i)) > std::abs(v(k)) + 1e-12) k = i;
  v *= std::conj(v(k)) / std::abs(v(k));
  return v;
}

void require_valid(const VerifyReport& r, const std::string& what) {
  for (const CheckCase& c : r.cases)
    if (c.gating && !c.pass) throw IdentityError(what + ": " + c.name + " failed", c.residual);
}

CMatrix slice_matrix(const CMatrix& w, int d, bool left) {
  const Eigen::Index n = static_cast<Eigen::Index>(d) * d;
  CMatrix m(n, n);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      const CMatrix s = left ? left_slice(w, d, i, j) : right_slice(w, d, i, j);
      m.col(i * d + j) = s.transpose().reshaped();
    }
  return m;
}

// Orthonormal basis (columns) of the column span.
CMatrix span_basis(const CMatrix& m, double rel = 1e-10) {
  Eigen::ColPivHouseholderQR<CMatrix> qr(m);
  qr.setThreshold(rel);
  const Eigen::Index r = qr.maxPivot() == 0.0 ? 0 : qr.rank();
  const CMatrix q = qr.householderQ() * CMatrix::Identity(m.rows(), r);
  return q;
}

CMatrix unvec_rows(const CVector& v, int d) {
  CMatrix m(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) m(i, j) = v(i * d + j);
  return m;
}

}  // namespace

CMatrix Conjugation::conjugate_pair(const CMatrix& x) const {
  const SparseCMatrix mm = kron(to_sparse(m), to_sparse(m));
  CMatrix t = mm * x.conjugate();
  return t * SparseCMatrix(mm.conjugate());
}

const FiniteGroup& QGBundle::require_group(const char* what) const {
  if (!group) throw Error(std::string(what) + " requires a bundle built from a finite group");
  return *group;
}

CMatrix commutative_w(const FiniteGroup& g) {
  const int d = g.order();
  CMatrix w = CMatrix::Zero(static_cast<Eigen::Index>(d) * d, static_cast<Eigen::Index>(d) * d);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) w(a * d + g.mul(a, b), a * d + b) = 1.0;
  return w;
}

CMatrix commutative_v(const FiniteGroup& g) {
  const int d = g.order();
  CMatrix v = CMatrix::Zero(static_cast<Eigen::Index>(d) * d, static_cast<Eigen::Index>(d) * d);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      v(g.mul(a, g.inv(b)) * d + b, a * d + b) = std::sqrt(modular_function(g, b));
  return v;
}

CMatrix inversion_matrix(const FiniteGroup& g) {
  const int d = g.order();
  CMatrix p = CMatrix::Zero(d, d);
  for (int s = 0; s < d; ++s) p(g.inv(s), s) = 1.0;
  return p;
}

CMatrix left_slice(const CMatrix& w, int d, int i, int j) {
  CMatrix s(d, d);
  for (int k = 0; k < d; ++k)
    for (int l = 0; l < d; ++l) s(k, l) = w(j * d + k, i * d + l);
  return s;
}

CMatrix right_slice(const CMatrix& w, int d, int i, int j) {
  CMatrix s(d, d);
  for (int k = 0; k < d; ++k)
    for (int l = 0; l < d; ++l) s(k, l) = w(k * d + j, l * d + i);
  return s;
}

int intersection_dimension(const QGBundle& b) {
  const CMatrix l = span_basis(slice_matrix(b.w.dense(), b.d, true));
  const CMatrix r = span_basis(slice_matrix(b.w.dense(), b.d, false));
  CMatrix both(l.rows(), l.cols() + r.cols());
  both << l, r;
  return static_cast<int>(l.cols() + r.cols()) - numerical_rank(both, 1e-10);
}

VerifyReport validate_qg(const QGBundle& b, const Tolerance& tol) {
  VerifyReport r;
  r.suite = "bundle";
  r.group = b.group ? b.group->name() : b.id;
  const int d = b.d;
  const CMatrix& w = b.w.dense();
  const CMatrix& v = b.v.dense();
  const CMatrix& wh = b.w_hat.dense();
  const CMatrix& vh = b.v_hat.dense();
  const bool group_bundle = b.is_group_bundle();

  record(r, "qg.unitary.W", "W* W = 1", check(w.adjoint() * w, identity(w.rows()), tol));
  record(r, "qg.unitary.V", "V* V = 1", check(v.adjoint() * v, identity(v.rows()), tol));
  record(r, "qg.unitary.W_hat", "W^* W^ = 1", check(wh.adjoint() * wh, identity(wh.rows()), tol));
  record(r, "qg.unitary.V_hat", "V^* V^ = 1", check(vh.adjoint() * vh, identity(vh.rows()), tol));

  const SparseCMatrix w12 = leg_embed(b.w.sparse(), Legs::l12, d);
  const SparseCMatrix w13 = leg_embed(b.w.sparse(), Legs::l13, d);
  const SparseCMatrix w23 = leg_embed(b.w.sparse(), Legs::l23, d);
  record(r, "qg.pentagon.W", "W12 W13 W23 = W23 W12",
         check_sparse(SparseCMatrix(w12 * w13 * w23), SparseCMatrix(w23 * w12), tol));
  const SparseCMatrix v12 = leg_embed(b.v.sparse(), Legs::l12, d);
  const SparseCMatrix v13 = leg_embed(b.v.sparse(), Legs::l13, d);
  const SparseCMatrix v23 = leg_embed(b.v.sparse(), Legs::l23, d);
  record(r, "qg.pentagon.V", "V12 V13 V23 = V23 V12",
         check_sparse(SparseCMatrix(v12 * v13 * v23), SparseCMatrix(v23 * v12), tol));

  record(r, "qg.hat.W", "W^ = sigma W* sigma", check(wh, hat_of(w, d), tol));
  record(r, "qg.hat.V", "V^ = (J x J) W (J x J)", check(vh, b.j.conjugate_pair(w), tol));
  record(r, "qg.wv", "V = sigma (1 x U) W (1 x U*) sigma", check(v, v_of(w, b.u, d), tol));
  record(r, "qg.u", "U = J^ J", check(b.u, b.j_hat.m * b.j.m.conjugate(), tol));

  const SparseCMatrix wh23 = leg_embed(b.w_hat.sparse(), Legs::l23, d);
  const SparseCMatrix vh12 = leg_embed(b.v_hat.sparse(), Legs::l12, d);
  const SparseCMatrix w12a = w12.adjoint();
  const SparseCMatrix wh23a = wh23.adjoint();
  record(r, "qg.commutation.W", "W^23 W13 = W13 W^23 W12*",
         check_sparse(SparseCMatrix(wh23 * w13), SparseCMatrix(w13 * wh23 * w12a), tol));
  record(r, "qg.commutation.V", "V^12 V13 = V13 V^12 W^23",
         check_sparse(SparseCMatrix(vh12 * v13), SparseCMatrix(v13 * vh12 * wh23), tol));
  {
    CheckCase& c = record(r, "qg.commutation.W_printed", "W^23 W13 = W13 W^23 W12",
                          check_sparse(SparseCMatrix(wh23 * w13),
                                       SparseCMatrix(w13 * wh23 * w12), tol),
                          false);
    c.note = "literal form, informational";
    CheckCase& c2 = record(r, "qg.commutation.V_printed", "V^12 V13 = V13 V^12 W^23*",
                           check_sparse(SparseCMatrix(vh12 * v13),
                                        SparseCMatrix(v13 * vh12 * wh23a), tol),
                           false);
    c2.note = "literal form, informational";
  }

  {
    const SparseCMatrix k = kron(sparse_id(d), to_sparse(b.u));
    CMatrix rhs = flip_sparse(d) * w;
    rhs = rhs * v;
    rhs = rhs * k;
    CheckCase& c = record(r, "qg.prop33", "V^ = sigma W V (1 x U)", check(vh, rhs, tol), group_bundle);
    if (!group_bundle) c.note = "not asserted for user-supplied unitaries";
  }

  {
    const CMatrix basis = span_basis(slice_matrix(w, d, false));
    double worst = 0.0, thr = tol.absolute;
    for (Eigen::Index k = 0; k < basis.cols(); ++k) {
      const CMatrix x = unvec_rows(basis.col(k), d);
      const CMatrix lhs = b.w.adjoint_sandwich(kron(identity(d), x));
      const CMatrix rhs = b.v.sandwich(kron(x, identity(d)));
      const Residual res = check(lhs, rhs, tol);
      worst = std::max(worst, res.residual);
      thr = std::max(thr, res.threshold);
    }
    r.add("qg.coproduct", "W*(1 x x)W = V(x x 1)V* on (id x w)(W)", worst, thr);
  }

  if (b.kind == BundleKind::commutative && b.group) {
    const FiniteGroup& g = *b.group;
    double worst = 0.0;
    for (int s = 0; s < d; ++s) {
      CMatrix x = CMatrix::Zero(d, d);
      x(s, s) = 1.0;
      const CMatrix lhs = b.w.adjoint_sandwich(kron(identity(d), x));
      CMatrix expect = CMatrix::Zero(lhs.rows(), lhs.cols());
      for (int a = 0; a < d; ++a)
        for (int c = 0; c < d; ++c)
          if (g.mul(a, c) == s) expect(a * d + c, a * d + c) = 1.0;
      worst = std::max(worst, (lhs - expect).norm());
    }
    r.add("qg.coproduct.table", "Gamma(f)(s,t) = f(st)", worst, tol.absolute);
    const CMatrix p = inversion_matrix(g);
    r.add("qg.u.inversion", "U delta_s = delta_{s^-1}", (b.u - p).norm(), tol.absolute);
  }

  {
    const CMatrix a = kron(identity(d), CMatrix(b.counit_vector));
    const CMatrix h = kron(identity(d), CMatrix(b.haar_vector));
    r.add("qg.counit_vector", "V(z x eta) = z x eta", (v * a - a).norm(),
          tol.absolute + tol.relative * a.norm());
    r.add("qg.haar_vector", "V^(z x xi) = z x xi", (vh * h - h).norm(),
          tol.absolute + tol.relative * h.norm());
  }

  {
    const int dim = intersection_dimension(b);
    CheckCase& c = r.add_flag("qg.intersection", "L(G) cap L(G^) = C1", dim == 1, group_bundle);
    c.note = "dimension " + std::to_string(dim);
  }
  return r;
}

QGBundle build_commutative(const FiniteGroup& g, const BundleOptions& opt) {
  const int d = g.order();
  QGBundle b;
  b.d = d;
  const CMatrix w = commutative_w(g);
  b.j.m = identity(d);
  b.j_hat.m = inversion_matrix(g);
  b.u = b.j_hat.m * b.j.m.conjugate();
  b.w = Operator(w);
  b.v = Operator(commutative_v(g));
  b.w_hat = Operator(hat_of(w, d));
  b.v_hat = Operator(b.j.conjugate_pair(w));
  b.counit_vector = CVector::Zero(d);
  b.counit_vector(g.identity_index()) = 1.0;
  b.haar_vector = CVector::Constant(d, 1.0 / std::sqrt(static_cast<double>(d)));
  b.kind = BundleKind::commutative;
  b.id = "commutative:" + g.name();
  b.group = g;
  if (opt.validate) require_valid(validate_qg(b, opt.tol), b.id);
  return b;
}

QGBundle build_dual(const QGBundle& src, const BundleOptions& opt) {
  const int d = src.d;
  QGBundle b;
  b.d = d;
  b.j = src.j_hat;
  b.j_hat = src.j;
  b.u = b.j_hat.m * b.j.m.conjugate();
  const CMatrix& w = src.w_hat.dense();
  b.w = src.w_hat;
  b.v = src.v_hat;
  b.w_hat = Operator(hat_of(w, d));
  b.v_hat = Operator(b.j.conjugate_pair(w));
  b.counit_vector = src.haar_vector;
  b.haar_vector = src.counit_vector;
  b.kind = BundleKind::dual;
  b.id = "dual:" + src.id;
  b.group = src.group;
  if (opt.validate) require_valid(validate_qg(b, opt.tol), b.id);
  return b;
}

QGBundle build_from_unitary(const CMatrix& w, const Conjugation& j, const Conjugation& j_hat,
                            const BundleOptions& opt) {
  if (w.rows() != w.cols()) throw DimensionError("build_from_unitary: W must be square");
  const int d = static_cast<int>(std::lround(std::sqrt(static_cast<double>(w.rows()))));
  if (static_cast<Eigen::Index>(d) * d != w.rows() || d < 1)
    throw DimensionError("build_from_unitary: W must be d^2 x d^2");
  require_square(j.m, d, "build_from_unitary: J");
  require_square(j_hat.m, d, "build_from_unitary: J^");
  if (!w.allFinite()) throw DimensionError("build_from_unitary: non-finite entries in W");
  const Tolerance& tol = opt.tol;
  const double thr = tol.absolute + tol.relative * w.norm();
  if (const double u = unitarity_residual(w); u > thr) throw IdentityError("W is not unitary", u);
  for (const auto* c : {&j, &j_hat})
    if (const double u = unitarity_residual(c->m); u > thr)
      throw IdentityError("conjugation is not antiunitary", u);
  {
    const SparseCMatrix ws = to_sparse(w);
    const SparseCMatrix w12 = leg_embed(ws, Legs::l12, d);
    const SparseCMatrix w13 = leg_embed(ws, Legs::l13, d);
    const SparseCMatrix w23 = leg_embed(ws, Legs::l23, d);
    const Residual p =
        check_sparse(SparseCMatrix(w12 * w13 * w23), SparseCMatrix(w23 * w12), tol);
    if (!p.pass) throw IdentityError("pentagon W12 W13 W23 = W23 W12 violated", p.residual);
  }
  QGBundle b;
  b.d = d;
  b.j = j;
  b.j_hat = j_hat;
  b.u = j_hat.m * j.m.conjugate();
  b.w = Operator(w);
  b.v = Operator(v_of(w, b.u, d));
  b.w_hat = Operator(hat_of(w, d));
  b.v_hat = Operator(j.conjugate_pair(w));
  b.counit_vector = second_leg_fixed_vector(b.v.dense(), d, "co-unit (second leg of V)");
  b.haar_vector = second_leg_fixed_vector(b.v_hat.dense(), d, "Haar state (second leg of V^)");
  b.kind = BundleKind::user;
  b.id = "user";
  if (opt.validate) require_valid(validate_qg(b, opt.tol), "user bundle");
  return b;
}

}  // namespace qg
