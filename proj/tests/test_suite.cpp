#include <chrono>

#include <gtest/gtest.h>

#include "qg/error.hpp"
#include "qg/suite.hpp"

using namespace qg;

namespace {

FiniteGroup named(const char* s) { return build_standard(parse_group_spec(s)); }

}  // namespace

TEST(Suite, AllOnZ2PassesQuickly) {
  const auto t0 = std::chrono::steady_clock::now();
  const VerifyReport r = run_suite(SuiteKind::all, named("Z2"));
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  EXPECT_TRUE(r.all_pass()) << format_report(r);
  EXPECT_LT(s, 1.0);
  EXPECT_EQ(r.seed, 7u);
  EXPECT_EQ(r.suite, "all");
  for (const CheckCase& c : r.cases) {
    EXPECT_EQ(c.pass, c.residual <= c.tolerance) << c.name;
    EXPECT_FALSE(c.anchor.empty()) << c.name;
  }
  EXPECT_TRUE(std::is_sorted(r.cases.begin(), r.cases.end(),
                             [](const CheckCase& a, const CheckCase& b) { return a.name < b.name; }));
}

TEST(Suite, Reproducible) {
  SuiteConfig cfg;
  cfg.samples = 20;
  cfg.seed = 99;
  const VerifyReport a = run_suite(SuiteKind::lie, named("S3"), cfg);
  const VerifyReport b = run_suite(SuiteKind::lie, named("S3"), cfg);
  ASSERT_EQ(a.cases.size(), b.cases.size());
  for (std::size_t i = 0; i < a.cases.size(); ++i) {
    EXPECT_EQ(a.cases[i].name, b.cases[i].name);
    EXPECT_EQ(a.cases[i].residual, b.cases[i].residual);
  }
}

TEST(Suite, MultipliersReportsMeasuredAndPredicted) {
  SuiteConfig cfg;
  cfg.samples = 10;
  const VerifyReport r = run_suite(SuiteKind::multipliers, named("Z3"), cfg);
  const CheckCase* eq = r.find("mult.dim.left.equality");
  ASSERT_NE(eq, nullptr);
  EXPECT_FALSE(eq->gating);
  EXPECT_NE(eq->note.find("measured"), std::string::npos);
  EXPECT_NE(eq->note.find("predicted"), std::string::npos);
  EXPECT_TRUE(r.find("mult.dim.left.containment")->pass);
  EXPECT_TRUE(r.find("mult.dim.right.gap")->pass);
}

TEST(Suite, EachKindOnS3) {
  SuiteConfig cfg;
  cfg.samples = 20;
  cfg.max_exact_dim_order = 4;
  for (SuiteKind k : {SuiteKind::pentagon, SuiteKind::products, SuiteKind::lie, SuiteKind::multipliers, SuiteKind::lp}) {
    const VerifyReport r = run_suite(k, named("S3"), cfg);
    EXPECT_TRUE(r.all_pass()) << to_string(k) << "\n" << format_report(r);
    EXPECT_FALSE(r.cases.empty());
  }
}

TEST(Suite, ProductsRecordsOrientation) {
  SuiteConfig cfg;
  cfg.samples = 20;
  const VerifyReport r = run_suite(SuiteKind::products, named("S3"), cfg);
  const CheckCase* left = nullptr;
  for (const CheckCase& c : r.cases)
    if (c.name.find("left") != std::string::npos && !c.gating) left = &c;
  ASSERT_NE(left, nullptr);
  EXPECT_FALSE(left->pass);
}

TEST(Suite, RejectsBadConfig) {
  SuiteConfig cfg;
  cfg.samples = 0;
  EXPECT_THROW(run_suite(SuiteKind::lie, named("Z2"), cfg), Error);
  cfg.samples = 5;
  cfg.tol.absolute = -1.0;
  EXPECT_THROW(run_suite(SuiteKind::lie, named("Z2"), cfg), Error);
  EXPECT_THROW(parse_suite_kind("everything"), Error);
}

TEST(StructureConstants, Z2Ostar) {
  const StructureTable t = emit_structure_constants(named("Z2"), StructureProduct::ostar);
  ASSERT_EQ(t.basis.size(), 3u);
  ASSERT_EQ(t.coefficients.size(), 3u);
  // Z = E00 − E11 is the last basis element and Z⊛Z = Z.
  for (int k = 0; k < 3; ++k) EXPECT_EQ(t.coefficients[2][2][k], Complex(k == 2 ? 1.0 : 0.0));
  const Json j = table_to_json(t);
  EXPECT_EQ(j.at("basis").size(), 3u);
  const std::string csv = table_to_csv(t);
  EXPECT_NE(csv.find("2,2,2"), std::string::npos);
}

TEST(StructureConstants, Z2StarTraceMultiplicative) {
  const StructureTable t = emit_structure_constants(named("Z2"), StructureProduct::star);
  ASSERT_EQ(t.basis.size(), 4u);
  // Units E_ii have trace 1, off-diagonal units trace 0; tr(E_a ★ E_b) = tr(E_a) tr(E_b).
  const int diag[4] = {1, 0, 0, 1};
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      Complex tr = 0.0;
      for (int k = 0; k < 4; ++k) tr += t.coefficients[a][b][k] * static_cast<double>(diag[k]);
      EXPECT_NEAR(std::abs(tr - static_cast<double>(diag[a] * diag[b])), 0.0, 1e-14);
    }
}

TEST(StructureConstants, TrivialAndCap) {
  const StructureTable t = emit_structure_constants(named("Z1"), StructureProduct::ostar);
  EXPECT_TRUE(t.basis.empty());
  EXPECT_THROW(emit_structure_constants(named("S4"), StructureProduct::star), DimensionError);
  EXPECT_NO_THROW(emit_structure_constants(named("Z4"), StructureProduct::bullet));
}
