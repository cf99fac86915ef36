#include <gtest/gtest.h>

#include "oracle.hpp"
#include "qg/error.hpp"
#include "qg/products.hpp"

using namespace qg;

namespace {

FiniteGroup named(const char* s) { return build_standard(parse_group_spec(s)); }

CMatrix z2() {
  CMatrix z = CMatrix::Zero(2, 2);
  z(0, 0) = 1.0;
  z(1, 1) = -1.0;
  return z;
}

class ProductsOnGroup : public ::testing::TestWithParam<const char*> {
 protected:
  void SetUp() override {
    g = named(GetParam());
    b = build_commutative(g);
  }
  FiniteGroup g;
  QGBundle b;
};

}  // namespace

TEST(Star, Z2MatrixUnits) {
  const QGBundle b = build_commutative(named("Z2"));
  EXPECT_LT((star(b, matrix_unit(2, 0, 0), matrix_unit(2, 1, 1)) - matrix_unit(2, 1, 1)).norm(), 1e-15);
  EXPECT_LT((star(b, z2(), z2()) - 2.0 * z2()).norm(), 1e-15);
  EXPECT_LT(bullet(b, z2(), z2()).norm(), 1e-15);
}

TEST(Star, DefiningPairing) {
  // tr(T (ω★τ)) = tr(V(T⊗1)V* (ω⊗τ)) for every T.
  const QGBundle b = build_commutative(named("S3"));
  oracle::Rng rng(1);
  const CMatrix w = rng.matrix(6), t = rng.matrix(6), T = rng.matrix(6);
  const CMatrix v = b.v.dense();
  const Complex lhs = (T * star(b, w, t)).trace();
  const Complex rhs = (v * kron(T, identity(6)) * v.adjoint() * kron(w, t)).trace();
  EXPECT_LT(std::abs(lhs - rhs), 1e-12);
}

TEST(Star, DegenerateOnZeroDiagonal) {
  const QGBundle b = build_commutative(named("D4"));
  oracle::Rng rng(2);
  CMatrix t = rng.matrix(8);
  t.diagonal().setZero();
  EXPECT_LT(star(b, rng.matrix(8), t).norm(), 1e-14);
}

TEST(Star, HaarDiagonalAveragesTranslates) {
  const FiniteGroup g = named("S3");
  const QGBundle b = build_commutative(g);
  oracle::Rng rng(3);
  const CMatrix w = rng.matrix(6);
  CMatrix avg = CMatrix::Zero(6, 6);
  for (int s = 0; s < 6; ++s) avg += right_regular(g, s).adjoint() * w * right_regular(g, s) / 6.0;
  EXPECT_LT((star(b, w, identity(6) / 6.0) - avg).norm(), 1e-14);
}

TEST(Bullet, HaarProjectorScalesByOneOverD) {
  const FiniteGroup g = named("S3");
  const QGBundle b = build_commutative(g);
  oracle::Rng rng(4);
  const CMatrix w = rng.matrix(6);
  const CMatrix chi = b.haar_vector * b.haar_vector.adjoint();
  EXPECT_LT((bullet(b, w, chi) - w).norm(), 1e-14);
  // tr(χχ*λ(g)) = 1 for every g, so the Schur multiplier is constant.
  for (int s = 0; s < 6; ++s) EXPECT_NEAR(std::abs((chi * oracle::lambda(g.table(), s)).trace() - 1.0), 0.0, 1e-14);
}

TEST(Bullet, IsStarOfDual) {
  const QGBundle b = build_commutative(named("S3"));
  const QGBundle h = build_dual(b);
  oracle::Rng rng(5);
  const CMatrix w = rng.matrix(6), t = rng.matrix(6);
  EXPECT_LT((bullet(b, w, t) - star(h, w, t)).norm(), 1e-14);
  EXPECT_LT((star(b, w, t) - bullet(h, w, t)).norm(), 1e-14);
}

TEST(Bullet, ProductsRouteD4) {
  const QGBundle b = build_commutative(named("D4"));
  oracle::Rng rng(6);
  for (int i = 0; i < 10; ++i) {
    const CMatrix w = rng.matrix(8), t = rng.matrix(8);
    EXPECT_LE(oracle::rel(bullet_via_star(b, w, t), bullet(b, w, t)), 1e-10);
  }
}

TEST_P(ProductsOnGroup, StarMatchesTranslateFormula) {
  oracle::Rng rng(7);
  for (int i = 0; i < 20; ++i) {
    const CMatrix w = rng.matrix(b.d), t = rng.matrix(b.d);
    EXPECT_LE(oracle::rel(star(b, w, t), oracle::star(g.table(), w, t)), 1e-10);
    EXPECT_LE(oracle::rel(star_oracle_commutative(g, w, t), oracle::star(g.table(), w, t)), 1e-10);
  }
}

TEST_P(ProductsOnGroup, BulletMatchesRightTranslateSchur) {
  oracle::Rng rng(8);
  for (int i = 0; i < 20; ++i) {
    const CMatrix w = rng.matrix(b.d), t = rng.matrix(b.d);
    EXPECT_LE(oracle::rel(bullet(b, w, t), oracle::bullet(g.table(), w, t)), 1e-10);
    EXPECT_LE(oracle::rel(bullet_oracle_cocommutative(g, w, t), oracle::bullet(g.table(), w, t)), 1e-10);
    EXPECT_LE(oracle::rel(bullet_oracle_cocommutative(g, w, t, Translate::left),
                          oracle::bullet_left_translates(g.table(), w, t)),
              1e-10);
  }
}

TEST_P(ProductsOnGroup, TraceMultiplicative) {
  oracle::Rng rng(9);
  const CMatrix w = rng.matrix(b.d), t = rng.matrix(b.d);
  EXPECT_LT(std::abs(star(b, w, t).trace() - w.trace() * t.trace()), 1e-12);
  EXPECT_LT(std::abs(bullet(b, w, t).trace() - w.trace() * t.trace()), 1e-12);
}

TEST_P(ProductsOnGroup, Associative) {
  oracle::Rng rng(10);
  for (int i = 0; i < 10; ++i) {
    const CMatrix r = rng.matrix(b.d), w = rng.matrix(b.d), t = rng.matrix(b.d);
    EXPECT_LE(oracle::rel(star(b, star(b, r, w), t), star(b, r, star(b, w, t))), 1e-9);
    EXPECT_LE(oracle::rel(bullet(b, bullet(b, r, w), t), bullet(b, r, bullet(b, w, t))), 1e-9);
  }
}

TEST_P(ProductsOnGroup, MixedRelations) {
  oracle::Rng rng(11);
  for (int i = 0; i < 10; ++i) {
    const CMatrix r = rng.matrix(b.d), w = rng.matrix(b.d), t = rng.matrix(b.d);
    EXPECT_LE((star(b, r, bullet(b, w, t)) - t.trace() * star(b, r, w)).norm(), 1e-9);
    EXPECT_LE((bullet(b, r, star(b, w, t)) - t.trace() * bullet(b, r, w)).norm(), 1e-9);
    EXPECT_LE((bullet(b, star(b, r, w), t) - star(b, bullet(b, r, t), w)).norm(), 1e-9);
  }
}

TEST_P(ProductsOnGroup, QuotientMaps) {
  oracle::Rng rng(12);
  const CMatrix w = rng.matrix(b.d), t = rng.matrix(b.d);
  EXPECT_LT((pi(b, w) - oracle::diag(w)).norm(), 1e-15);
  EXPECT_LT((pi_hat(b, w) - oracle::fourier(g.table(), w)).norm(), 1e-13);
  EXPECT_LT((convolve(g, pi(b, w), pi(b, t)) - oracle::convolve(g.table(), w.diagonal(), t.diagonal())).norm(), 1e-13);
  EXPECT_LT((pi(b, star(b, w, t)) - convolve(g, pi(b, w), pi(b, t))).norm(), 1e-12);
  EXPECT_LT((pi_hat(b, bullet(b, w, t)) - pi_hat(b, w).cwiseProduct(pi_hat(b, t))).norm(), 1e-12);
  EXPECT_LT((pi(b, bullet(b, w, t)) - t.trace() * pi(b, w)).norm(), 1e-12);
  CMatrix e = CMatrix::Zero(b.d, b.d);
  e(0, 0) = 1.0;
  CVector ind = CVector::Zero(b.d);
  ind(0) = 1.0;
  EXPECT_EQ(pi(b, e), ind);
}

TEST_P(ProductsOnGroup, FourierLiftInvertsPiHat) {
  oracle::Rng rng(13);
  const CVector fh = rng.vector(b.d);
  EXPECT_LT((pi_hat(g, fourier_lift(g, fh)) - fh).norm(), 1e-13);
}

TEST_P(ProductsOnGroup, StarLeftFaithful) {
  oracle::Rng rng(14);
  for (int k = 0; k < 5; ++k) {
    const CMatrix r = rng.matrix(b.d);
    double best = 0.0;
    for (int i = 0; i < b.d; ++i) best = std::max(best, star(b, r, matrix_unit(b.d, i, i)).norm());
    EXPECT_GT(best, 1e-3);
  }
}

INSTANTIATE_TEST_SUITE_P(Groups, ProductsOnGroup,
                         ::testing::Values("Z2", "Z3", "Z4", "Z2xZ2", "S3", "D4", "Q8", "Z6"));

TEST(Bullet, LeftTranslateFormDiffersOnS3) {
  const FiniteGroup g = named("S3");
  const QGBundle b = build_commutative(g);
  oracle::Rng rng(15);
  const CMatrix w = rng.matrix(6), t = rng.matrix(6);
  EXPECT_GT(oracle::rel(bullet(b, w, t), oracle::bullet_left_translates(g.table(), w, t)), 1e-3);
}

TEST(Products, DimensionChecks) {
  const QGBundle b = build_commutative(named("Z3"));
  EXPECT_THROW(star(b, identity(2), identity(3)), DimensionError);
  EXPECT_THROW(bullet(b, identity(3), identity(4)), DimensionError);
  CMatrix nan = identity(3);
  nan(0, 0) = std::nan("");
  EXPECT_THROW(star(b, nan, identity(3)), DimensionError);
}

TEST(Products, Z2HalfPiExample) {
  const QGBundle b = build_commutative(named("Z2"));
  const CMatrix z = z2();
  const CMatrix zz = 0.5 * (star(b, z, z) - bullet(b, z, z));
  const CVector lhs = 0.5 * pi(b, zz);
  const CVector half = 0.5 * pi(b, z);
  EXPECT_NEAR(lhs(0).real(), 0.5, 1e-15);
  EXPECT_NEAR(lhs(1).real(), -0.5, 1e-15);
  EXPECT_LT((convolve(*b.group, half, half) - lhs).norm(), 1e-15);
}
