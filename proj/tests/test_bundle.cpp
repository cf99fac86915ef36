#include <gtest/gtest.h>

#include "oracle.hpp"
#include "qg/bundle.hpp"
#include "qg/error.hpp"
#include "qg/random.hpp"

using namespace qg;

namespace {

FiniteGroup named(const char* s) { return build_standard(parse_group_spec(s)); }

// δ_a⊗δ_b ↦ δ_a⊗δ_{ab}, straight from the table.
CMatrix w_from_table(const oracle::Table& t) {
  const int d = oracle::order(t);
  CMatrix w = CMatrix::Zero(d * d, d * d);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) w(a * d + t[a][b], a * d + b) = 1.0;
  return w;
}

CMatrix pentagon_lhs(const CMatrix& w, int d) {
  return leg_embed(w, Legs::l12, d) * leg_embed(w, Legs::l13, d) * leg_embed(w, Legs::l23, d);
}

CMatrix pentagon_rhs(const CMatrix& w, int d) {
  return leg_embed(w, Legs::l23, d) * leg_embed(w, Legs::l12, d);
}

}  // namespace

TEST(Bundle, TrivialGroup) {
  const QGBundle b = build_commutative(named("Z1"));
  EXPECT_EQ(b.d, 1);
  EXPECT_EQ(b.w.dense(), identity(1));
  EXPECT_EQ(b.v.dense(), identity(1));
  EXPECT_EQ(b.w_hat.dense(), identity(1));
  EXPECT_EQ(b.v_hat.dense(), identity(1));
  EXPECT_TRUE(validate_qg(b).all_pass());
}

TEST(Bundle, Z2FundamentalUnitary) {
  const QGBundle b = build_commutative(named("Z2"));
  CMatrix w = CMatrix::Zero(4, 4);
  w(0, 0) = w(1, 1) = 1.0;  // δ_e⊗δ_e, δ_e⊗δ_g fixed
  w(3, 2) = w(2, 3) = 1.0;  // δ_g⊗δ_e ↔ δ_g⊗δ_g
  EXPECT_EQ(b.w.dense(), w);
}

TEST(Bundle, OperatorsMatchTableFormulas) {
  for (const char* s : {"Z3", "S3", "Q8"}) {
    const FiniteGroup g = named(s);
    const QGBundle b = build_commutative(g);
    const int d = g.order();
    EXPECT_EQ(b.w.dense(), w_from_table(g.table())) << s;
    CMatrix v = CMatrix::Zero(d * d, d * d);
    for (int a = 0; a < d; ++a)
      for (int c = 0; c < d; ++c) v(g.mul(a, g.inv(c)) * d + c, a * d + c) = 1.0;
    EXPECT_EQ(b.v.dense(), v) << s;
    CMatrix u = CMatrix::Zero(d, d);
    for (int a = 0; a < d; ++a) u(g.inv(a), a) = 1.0;
    EXPECT_EQ(b.u, u) << s;
    EXPECT_EQ(b.u * b.u, identity(d)) << s;
    EXPECT_LT((b.counit_vector - CMatrix(identity(d).col(0))).norm(), 1e-15);
    EXPECT_LT((b.haar_vector - CVector::Constant(d, 1.0 / std::sqrt(d))).norm(), 1e-15);
  }
}

TEST(Bundle, S3PentagonExact) {
  const QGBundle b = build_commutative(named("S3"));
  EXPECT_LE((pentagon_lhs(b.w.dense(), 6) - pentagon_rhs(b.w.dense(), 6)).norm(), 1e-12);
  EXPECT_LE((pentagon_lhs(b.v.dense(), 6) - pentagon_rhs(b.v.dense(), 6)).norm(), 1e-12);
}

TEST(Bundle, HatRelations) {
  const QGBundle b = build_commutative(named("D4"));
  const int d = b.d;
  const CMatrix s = flip_operator(d);
  EXPECT_LT((b.w_hat.dense() - s * b.w.dense().adjoint() * s).norm(), 1e-12);
  const CMatrix jj = kron(b.j.m, b.j.m);
  EXPECT_LT((b.v_hat.dense() - jj * b.w.dense().conjugate() * jj.conjugate()).norm(), 1e-12);
  const CMatrix one_u = kron(identity(d), b.u);
  EXPECT_LT((b.v.dense() - s * one_u * b.w.dense() * one_u.adjoint() * s).norm(), 1e-12);
}

TEST(Bundle, ValidateAllTestGroups) {
  for (const char* s : {"Z2", "Z3", "Z4", "Z2xZ2", "S3", "D4", "Q8", "Z6"}) {
    const QGBundle b = build_commutative(named(s));
    const VerifyReport r = validate_qg(b);
    EXPECT_TRUE(r.all_pass()) << s << "\n" << format_report(r);
    for (const char* c : {"qg.pentagon.W", "qg.pentagon.V", "qg.hat.W", "qg.hat.V", "qg.wv", "qg.commutation.W",
                          "qg.commutation.V", "qg.prop33", "qg.coproduct", "qg.intersection"}) {
      const CheckCase* k = r.find(c);
      ASSERT_NE(k, nullptr) << s << " " << c;
      EXPECT_TRUE(k->gating) << c;
      EXPECT_LE(k->residual, 1e-10) << s << " " << c;
    }
  }
}

TEST(Bundle, LiteralCommutationFormsAreInformational) {
  for (const char* g : {"Z3", "S3"}) {
    const VerifyReport r = validate_qg(build_commutative(named(g)));
    for (const char* c : {"qg.commutation.W_printed", "qg.commutation.V_printed"}) {
      const CheckCase* p = r.find(c);
      ASSERT_NE(p, nullptr);
      EXPECT_FALSE(p->gating);
      EXPECT_FALSE(p->pass) << g << " " << c;
    }
    EXPECT_TRUE(r.all_pass());
  }
}

TEST(Bundle, CoproductIsFunctionOfProduct) {
  const FiniteGroup g = named("S3");
  const QGBundle b = build_commutative(g);
  const int d = g.order();
  // Indicator of the transposition (1 2), one-line label "213".
  int idx = -1;
  for (int i = 0; i < d; ++i)
    if (g.labels()[i] == "213") idx = i;
  ASSERT_GE(idx, 0);
  CMatrix x = CMatrix::Zero(d, d);
  x(idx, idx) = 1.0;
  CMatrix expect = CMatrix::Zero(d * d, d * d);
  for (int s = 0; s < d; ++s)
    for (int t = 0; t < d; ++t) expect(s * d + t, s * d + t) = g.mul(s, t) == idx ? 1.0 : 0.0;
  const CMatrix w = b.w.dense(), v = b.v.dense();
  EXPECT_LT((w.adjoint() * kron(identity(d), x) * w - expect).norm(), 1e-14);
  EXPECT_LT((v * kron(x, identity(d)) * v.adjoint() - expect).norm(), 1e-14);
}

TEST(Bundle, IntersectionIsScalars) {
  for (const char* s : {"Z2", "S3", "D4", "Q8", "Z2xZ2"})
    EXPECT_EQ(intersection_dimension(build_commutative(named(s))), 1) << s;
}

TEST(Bundle, DualSwapsRoles) {
  const QGBundle b = build_commutative(named("Z2"));
  const QGBundle h = build_dual(b);
  const CMatrix s = flip_operator(2);
  EXPECT_LT((h.w.dense() - s * b.w.dense().adjoint() * s).norm(), 1e-14);
  EXPECT_EQ(h.counit_vector, b.haar_vector);
  EXPECT_EQ(h.haar_vector, b.counit_vector);
  EXPECT_EQ(h.j.m, b.j_hat.m);
  EXPECT_EQ(h.j_hat.m, b.j.m);
  EXPECT_EQ(h.kind, BundleKind::dual);
}

TEST(Bundle, Biduality) {
  const QGBundle b = build_commutative(named("S3"));
  const QGBundle bb = build_dual(build_dual(b));
  EXPECT_LE((bb.w.dense() - b.w.dense()).norm(), 1e-12);
  EXPECT_LE((bb.v.dense() - b.v.dense()).norm(), 1e-12);
  EXPECT_LE((bb.v_hat.dense() - b.v_hat.dense()).norm(), 1e-12);
}

TEST(Bundle, DualPentagonD4) {
  const QGBundle h = build_dual(build_commutative(named("D4")));
  EXPECT_LE((pentagon_lhs(h.w.dense(), 8) - pentagon_rhs(h.w.dense(), 8)).norm(), 1e-10);
  const VerifyReport r = validate_qg(h);
  EXPECT_TRUE(r.all_pass()) << format_report(r);
}

TEST(Bundle, FromUnitaryReproducesCommutative) {
  const FiniteGroup g = named("Z2");
  const QGBundle ref = build_commutative(g);
  const QGBundle b = build_from_unitary(w_from_table(g.table()), {identity(2)}, {inversion_matrix(g)});
  EXPECT_LE((b.v.dense() - ref.v.dense()).norm(), 1e-12);
  EXPECT_LE((b.w_hat.dense() - ref.w_hat.dense()).norm(), 1e-12);
  EXPECT_LE((b.v_hat.dense() - ref.v_hat.dense()).norm(), 1e-12);
  EXPECT_LE((b.u - ref.u).norm(), 1e-12);
  EXPECT_EQ(b.kind, BundleKind::user);
}

TEST(Bundle, FromUnitaryS3) {
  const FiniteGroup g = named("S3");
  const QGBundle b = build_from_unitary(w_from_table(g.table()), {identity(6)}, {inversion_matrix(g)});
  EXPECT_TRUE(validate_qg(b).all_pass());
}

TEST(Bundle, IdentityUnitarySatisfiesPentagon) {
  const CMatrix w = identity(4);
  EXPECT_EQ(pentagon_lhs(w, 2), pentagon_rhs(w, 2));
}

TEST(Bundle, RandomUnitaryRejected) {
  Sampler s(3);
  const CMatrix w = s.unitary(9);
  const double residual = (pentagon_lhs(w, 3) - pentagon_rhs(w, 3)).norm();
  ASSERT_GT(residual, 1e-3);
  try {
    build_from_unitary(w, {identity(3)}, {identity(3)});
    FAIL() << "accepted a non-multiplicative unitary";
  } catch (const IdentityError& e) {
    EXPECT_GT(e.residual(), 1e-3);
  }
}

TEST(Bundle, NonUnitaryRejected) {
  CMatrix w = identity(4);
  w(0, 0) = 2.0;
  EXPECT_THROW(build_from_unitary(w, {identity(2)}, {identity(2)}), IdentityError);
}

TEST(Bundle, SliceHelpers) {
  const QGBundle b = build_commutative(named("Z3"));
  const CMatrix w = b.w.dense();
  // (ω⊗id)(W) with ω = E_ij is the (i,j) block.
  EXPECT_EQ(left_slice(w, 3, 1, 1), w.block(3, 3, 3, 3));
  EXPECT_EQ(right_slice(w, 3, 0, 0), partial_trace(w * kron(identity(3), matrix_unit(3, 0, 0)), 2, 3));
}
