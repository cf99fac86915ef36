#include <gtest/gtest.h>

#include "oracle.hpp"
#include "qg/error.hpp"
#include "qg/lie.hpp"

using namespace qg;

namespace {

FiniteGroup named(const char* s) { return build_standard(parse_group_spec(s)); }

CMatrix z2() {
  CMatrix z = CMatrix::Zero(2, 2);
  z(0, 0) = 1.0;
  z(1, 1) = -1.0;
  return z;
}

// (−2/|G|)·M with M all ones except M_00 = 1 − |G|.
CMatrix identity_formula(int d) {
  CMatrix m = CMatrix::Ones(d, d);
  m(0, 0) = 1.0 - d;
  return (-2.0 / d) * m;
}

class LieOnGroup : public ::testing::TestWithParam<const char*> {
 protected:
  void SetUp() override {
    g = named(GetParam());
    b = build_commutative(g);
  }
  FiniteGroup g;
  QGBundle b;
};

}  // namespace

TEST(Ostar, Z2Examples) {
  const QGBundle b = build_commutative(named("Z2"));
  EXPECT_LT((ostar(b, z2(), z2()) - z2()).norm(), 1e-15);
  EXPECT_LT((ostar_plus(b, z2(), z2()) - z2()).norm(), 1e-15);
  EXPECT_LT((entrywise_ostar_commutative(*b.group, z2(), z2()) - z2()).norm(), 1e-15);
}

TEST(Identity, Z2Exact) {
  const QGBundle b = build_commutative(named("Z2"));
  const CMatrix e = identity_element(b);
  CMatrix expect(2, 2);
  expect << 1.0, -1.0, -1.0, -1.0;
  EXPECT_EQ(e, expect);
  EXPECT_LE((e - identity_formula(2)).norm(), 1e-15);
  EXPECT_LE((ostar(b, z2(), z2()) - z2()).norm(), 1e-12);
}

TEST(Identity, Z3Formula) {
  const QGBundle b = build_commutative(named("Z3"));
  CMatrix m(3, 3);
  m << -2.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0;
  EXPECT_LE((identity_element(b) - (-2.0 / 3.0) * m).norm(), 1e-14);
}

TEST(Identity, DualBundle) {
  const QGBundle h = build_dual(build_commutative(named("S3")));
  const CMatrix e = identity_element(h);
  const CMatrix expect = 2.0 * (h.counit_vector * h.counit_vector.adjoint() - h.haar_vector * h.haar_vector.adjoint());
  EXPECT_LE((e - expect).norm(), 1e-14);
  oracle::Rng rng(1);
  for (int i = 0; i < 5; ++i) {
    const CMatrix t = rng.trace_zero(6);
    EXPECT_LE((ostar(h, e, t) - t).norm(), 1e-10);
    EXPECT_LE((ostar(h, t, e) - t).norm(), 1e-10);
  }
}

TEST_P(LieOnGroup, IdentityIsTwoSided) {
  const CMatrix e = identity_element(b);
  EXPECT_LE((e - identity_formula(b.d)).norm(), 1e-13);
  EXPECT_LE(std::abs(e.trace()), 1e-14);
  oracle::Rng rng(2);
  for (int i = 0; i < 10; ++i) {
    const CMatrix t = rng.trace_zero(b.d);
    EXPECT_LE((ostar(b, e, t) - t).norm(), 1e-10);
    EXPECT_LE((ostar(b, t, e) - t).norm(), 1e-10);
    EXPECT_LE((oracle::ostar(g.table(), e, t) - t).norm(), 1e-10);
  }
}

TEST_P(LieOnGroup, MatchesOracleProducts) {
  oracle::Rng rng(3);
  for (int i = 0; i < 10; ++i) {
    const CMatrix r = rng.trace_zero(b.d), t = rng.trace_zero(b.d);
    EXPECT_LE(oracle::rel(ostar(b, r, t), oracle::ostar(g.table(), r, t)), 1e-10);
    EXPECT_LE(oracle::rel(ostar_plus(b, r, t), oracle::ostar_plus(g.table(), r, t)), 1e-10);
    EXPECT_LE(oracle::rel(entrywise_ostar_commutative(g, r, t), ostar(b, r, t)), 1e-10);
  }
}

TEST_P(LieOnGroup, AssociativeOnTraceZero) {
  oracle::Rng rng(4);
  for (int i = 0; i < 30; ++i) {
    const CMatrix r = rng.trace_zero(b.d), w = rng.trace_zero(b.d), t = rng.trace_zero(b.d);
    EXPECT_LE((ostar(b, ostar(b, r, w), t) - ostar(b, r, ostar(b, w, t))).norm(), 1e-9);
    EXPECT_LE((ostar_plus(b, ostar_plus(b, r, w), t) - ostar_plus(b, r, ostar_plus(b, w, t))).norm(), 1e-9);
  }
}

TEST_P(LieOnGroup, MiddleElementSuffices) {
  oracle::Rng rng(5);
  for (int i = 0; i < 20; ++i) {
    const CMatrix r = rng.matrix(b.d), w = rng.trace_zero(b.d), t = rng.matrix(b.d);
    EXPECT_LE((ostar(b, ostar(b, r, w), t) - ostar(b, r, ostar(b, w, t))).norm(), 1e-9);
    EXPECT_LE((ostar_plus(b, ostar_plus(b, r, w), t) - ostar_plus(b, r, ostar_plus(b, w, t))).norm(), 1e-9);
  }
}

TEST_P(LieOnGroup, TraceZeroClosed) {
  oracle::Rng rng(6);
  const CMatrix r = rng.trace_zero(b.d), t = rng.trace_zero(b.d);
  EXPECT_LE(std::abs(ostar(b, r, t).trace()), 1e-14);
  EXPECT_LE(std::abs(ostar_plus(b, r, t).trace()), 1e-14);
}

TEST_P(LieOnGroup, HalfQuotientsMultiplicative) {
  oracle::Rng rng(7);
  for (int i = 0; i < 10; ++i) {
    const CMatrix r = rng.trace_zero(b.d), t = rng.trace_zero(b.d);
    const CMatrix p = ostar(b, r, t);
    const CVector lhs = 0.5 * p.diagonal();
    const CVector rhs = oracle::convolve(g.table(), 0.5 * r.diagonal(), 0.5 * t.diagonal());
    EXPECT_LE((lhs - rhs).norm(), 1e-9);
    const CVector hl = 0.5 * oracle::fourier(g.table(), p);
    const CVector hr = -(0.5 * oracle::fourier(g.table(), r)).cwiseProduct(0.5 * oracle::fourier(g.table(), t));
    EXPECT_LE((hl - hr).norm(), 1e-9);
  }
}

TEST_P(LieOnGroup, ShuffleIdentity) {
  oracle::Rng rng(8);
  for (int i = 0; i < 10; ++i) {
    const CMatrix r = rng.trace_zero(b.d), t = rng.trace_zero(b.d), w = rng.trace_zero(b.d);
    const CMatrix lhs = star(b, star(b, r, t), w);
    const CMatrix rhs = star(b, r, bullet(b, t, w) + star(b, t, w));
    EXPECT_LE((lhs - rhs).norm(), 1e-9);
  }
}

TEST_P(LieOnGroup, DualRelation) {
  oracle::Rng rng(9);
  const CMatrix r = rng.trace_zero(b.d), t = rng.trace_zero(b.d);
  const VerifyReport rep = dual_product_relation(b, r, t);
  EXPECT_TRUE(rep.all_pass()) << format_report(rep);
  EXPECT_LE((ostar_dual(b, r, t) + ostar(b, t, r)).norm(), 1e-10);
  EXPECT_LE((ostar_plus_dual(b, r, t) - ostar_plus(b, t, r)).norm(), 1e-10);
}

TEST_P(LieOnGroup, NonabelianWitness) {
  const Witness w = nonabelian_witness(b);
  const double res = (ostar(b, w.rho, w.tau) - ostar(b, w.tau, w.rho)).norm();
  EXPECT_NEAR(res, w.residual, 1e-12);
  EXPECT_GT(res, 0.01 * w.rho.norm() * w.tau.norm());
  EXPECT_LE(std::abs(w.rho.trace()), 1e-12);
  EXPECT_LE(std::abs(w.tau.trace()), 1e-12);
}

TEST_P(LieOnGroup, VerifyAssociativityReport) {
  const VerifyReport r = verify_associativity(b, {40, 11, 1e-9});
  EXPECT_TRUE(r.all_pass()) << format_report(r);
}

INSTANTIATE_TEST_SUITE_P(Groups, LieOnGroup,
                         ::testing::Values("Z2", "Z3", "Z4", "Z2xZ2", "S3", "D4", "Q8", "Z6"));

TEST(Ostar, LeftTranslateEntrywiseFormFailsOnS3) {
  const FiniteGroup g = named("S3");
  const QGBundle b = build_commutative(g);
  oracle::Rng rng(10);
  const CMatrix r = rng.trace_zero(6), t = rng.trace_zero(6);
  EXPECT_GT(oracle::rel(entrywise_ostar_commutative(g, r, t, Translate::left), ostar(b, r, t)), 1e-3);
}

TEST(Associativity, ViolationWithTracedMiddleOnZ2) {
  const QGBundle b = build_commutative(named("Z2"));
  oracle::Rng rng(11);
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    const CMatrix r = rng.trace_zero(2), t = rng.trace_zero(2);
    const CMatrix w = rng.trace_zero(2) + identity(2);
    worst = std::max(worst, (ostar(b, ostar(b, r, w), t) - ostar(b, r, ostar(b, w, t))).norm());
  }
  EXPECT_GT(worst, 1e-3);
  const VerifyReport rep = verify_associativity(b, {50, 7, 1e-9});
  const CheckCase* v = rep.find("lie.ostar.middle_trace_violation");
  ASSERT_NE(v, nullptr);
  EXPECT_TRUE(v->pass);
}

TEST(TraceZero, StrictAndProject) {
  const QGBundle b = build_commutative(named("Z3"));
  EXPECT_THROW(TraceZero::strict(identity(3)), Error);
  EXPECT_NO_THROW(TraceZero::strict(matrix_unit(3, 0, 1)));
  oracle::Rng rng(12);
  const CMatrix m = rng.matrix(3);
  const TraceZero p = TraceZero::project(m, b);
  EXPECT_LE(std::abs(p.mat().trace()), 1e-14);
  EXPECT_LE((p.mat() - (m - m.trace() * b.haar_vector * b.haar_vector.adjoint())).norm(), 1e-15);
}

TEST(TraceZero, Basis) {
  const std::vector<CMatrix> basis = trace_zero_basis(3);
  ASSERT_EQ(basis.size(), 8u);
  CMatrix stacked(9, 8);
  for (int i = 0; i < 8; ++i) {
    EXPECT_EQ(basis[i].trace(), Complex(0.0));
    stacked.col(i) = oracle::vec(basis[i]);
  }
  EXPECT_EQ(oracle::rank(stacked), 8);
  oracle::Rng rng(13);
  const CMatrix t = rng.trace_zero(3);
  const CVector c = trace_zero_coordinates(t);
  CMatrix back = CMatrix::Zero(3, 3);
  for (int i = 0; i < 8; ++i) back += c(i) * basis[i];
  EXPECT_LE((back - t).norm(), 1e-14);
}

TEST(MixedEngine, RejectsMatrixMultiplication) {
  const BilinearProduct mm = [](const CMatrix& a, const CMatrix& c) -> CMatrix { return a * c; };
  const ProductPair p{mm, mm, 3};
  const ElementSampler gen = [](Sampler& s) { return s.trace_zero(3); };
  try {
    mixed_product_general(p, MixedSign::lie, gen);
    FAIL() << "matrix multiplication accepted";
  } catch (const ConditionViolation& e) {
    EXPECT_GT(e.residuals().condition1, 1e-3);
  }
}

TEST(MixedEngine, AcceptsBundlePair) {
  const QGBundle b = build_commutative(named("S3"));
  const ElementSampler gen = [](Sampler& s) { return s.trace_zero(6); };
  const MixedProduct mp = mixed_product_general(bundle_products(b), MixedSign::lie, gen);
  oracle::Rng rng(14);
  for (int i = 0; i < 20; ++i) {
    const CMatrix x = rng.trace_zero(6), y = rng.trace_zero(6), z = rng.trace_zero(6);
    EXPECT_LE((mp(mp(x, y), z) - mp(x, mp(y, z))).norm(), 1e-9);
    EXPECT_LE((mp(x, y) - ostar(b, x, y)).norm(), 1e-14);
  }
}

TEST(MixedEngine, TrivialGroupVacuous) {
  const QGBundle b = build_commutative(named("Z1"));
  const ElementSampler gen = [](Sampler& s) { return s.trace_zero(1); };
  EXPECT_NO_THROW(mixed_product_general(bundle_products(b), MixedSign::lie, gen));
  EXPECT_THROW(nonabelian_witness(b), Error);
  EXPECT_TRUE(trace_zero_basis(1).empty());
}
