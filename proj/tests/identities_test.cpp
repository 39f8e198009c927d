#include "test_support.hpp"

#include <gtest/gtest.h>

namespace cyclodet {
namespace {

using testing::q;

CycloElem oracle_det(MatrixKind kind, long n) {
  const auto ctx = context_new(n);
  return perm_expansion_det(build(kind, ctx, static_cast<std::size_t>(n - 1)));
}

TEST(ClosedForms, CayleyDeterminantSpotValues) {
  EXPECT_EQ(cayley_det_value(3), Rational(-1, 3));
  EXPECT_EQ(cayley_det_value(5), Rational(9, 5));
  EXPECT_EQ(cayley_det_value(7), Rational(-225, 7));
  EXPECT_EQ(cayley_det_value(9), Rational(11025, 9));
  EXPECT_THROW(cayley_det_value(4), std::invalid_argument);
}

TEST(ClosedForms, AgreeWithPermutationExpansion) {
  for (long n : {3, 5, 7, 9}) {
    const auto ctx = context_new(n);
    EXPECT_EQ(oracle_det(MatrixKind::A, n), CycloElem::from_rational(ctx, cayley_det_value(n))) << n;
    EXPECT_EQ(oracle_det(MatrixKind::TildeA, n), CycloElem::from_rational(ctx, half_diagonal_det_value(n))) << n;
    EXPECT_EQ(oracle_det(MatrixKind::CHollow, n), CycloElem::from_rational(ctx, hollow_cauchy_det_value(n))) << n;
    EXPECT_EQ(oracle_det(MatrixKind::B, n), CycloElem::from_rational(ctx, unit_diagonal_cayley_det_value(n))) << n;
    EXPECT_EQ(oracle_det(MatrixKind::CPlusI, n), CycloElem::from_rational(ctx, shifted_cauchy_det_value(n))) << n;
    EXPECT_EQ(oracle_det(MatrixKind::Tangent, n), CycloElem::from_rational(ctx, tangent_det_value(n))) << n;
  }
}

TEST(ClosedForms, SmallValuesFrozenFromOracle) {
  EXPECT_EQ(half_diagonal_det_value(3), Rational(-1, 12));
  EXPECT_EQ(half_diagonal_det_value(5), Rational(9, 80));
  EXPECT_EQ(half_diagonal_det_value(7), Rational(-225, 448));
  EXPECT_EQ(hollow_cauchy_det_value(3), Rational(-1, 3));
  EXPECT_EQ(hollow_cauchy_det_value(5), Rational(4, 5));
  EXPECT_EQ(hollow_cauchy_det_value(7), Rational(-36, 7));
  EXPECT_EQ(unit_diagonal_cayley_det_value(3), Rational(2, 3));
  EXPECT_EQ(unit_diagonal_cayley_det_value(5), Rational(-16, 5));
  EXPECT_EQ(unit_diagonal_cayley_det_value(7), Rational(384, 7));
  EXPECT_EQ(shifted_cauchy_det_value(3), Rational(2, 3));
  EXPECT_EQ(shifted_cauchy_det_value(5), Rational(-6, 5));
  EXPECT_EQ(shifted_cauchy_det_value(7), Rational(48, 7));
  EXPECT_EQ(tangent_det_value(3), Rational(-3));
  EXPECT_EQ(tangent_det_value(5), Rational(125));
  EXPECT_EQ(tangent_det_value(7), Rational(-16807));
}

TEST(ClosedForms, UnitDiagonalSlopeIsNTimesConstant) {
  for (long n : {3, 5, 7}) {
    const auto ctx = context_new(n);
    const AffineDet ad = det_affine(build(MatrixKind::B, ctx, static_cast<std::size_t>(n - 1)));
    EXPECT_EQ(ad.slope, ad.constant * Rational(n));
  }
}

TEST(Build, EntriesDependOnIndexDifference) {
  const auto c3 = context_new(3);
  const CMatrix b = build(MatrixKind::B, c3, 3);
  EXPECT_EQ(b(0, 0), q(c3, 1));
  EXPECT_EQ(b(1, 0), b(2, 1));
  EXPECT_EQ(b(0, 2), b(1, 0));
  const CMatrix t = build(MatrixKind::TildeA, c3, 2);
  EXPECT_EQ(t(1, 1), q(c3, 1, 2));
  EXPECT_EQ(t(1, 0), CycloElem::from_coeffs(c3, {Rational(2, 3), Rational(1, 3)}));
  EXPECT_EQ(build(MatrixKind::TwoC, c3, 2)(1, 0), t(1, 0) * Rational(2));
  EXPECT_THROW(build(MatrixKind::A, c3, 1), std::invalid_argument);
}

TEST(Build, GaloisTwistMapsEveryEntry) {
  const auto c5 = context_new(5);
  const CMatrix a = build(MatrixKind::A, c5, 4);
  const CMatrix a2 = build(MatrixKind::A, c5, 4, 2);
  EXPECT_EQ(a2, a.map([](const CycloElem& e) { return e.galois(2); }));
  EXPECT_NE(a2, a);
}

TEST(Eigen, LabelsInBothOrientations) {
  EXPECT_EQ(claimed_spectrum(MatrixKind::A, 5),
            (std::vector<Rational>{Rational(-3), Rational(-1), Rational(1), Rational(3), Rational(0)}));
  EXPECT_EQ(eigen_label(MatrixKind::A, 5, 1, Orientation::Columns), Rational(3));
  EXPECT_EQ(eigen_label(MatrixKind::B, 5, 5), Rational(1));
  EXPECT_EQ(eigen_label(MatrixKind::B, 5, 2), Rational(0));
  EXPECT_EQ(eigen_label(MatrixKind::CPlusI, 4, 1), Rational(-1, 2));
  EXPECT_EQ(eigen_label(MatrixKind::CPlusI, 4, 4), Rational(5, 2));
  EXPECT_THROW(eigen_label(MatrixKind::CHollow, 5, 1), std::invalid_argument);
  EXPECT_THROW(eigen_label(MatrixKind::A, 5, 0), std::out_of_range);
}

TEST(Eigen, VectorsSatisfyTheClaim) {
  for (long n : {3, 5, 7}) {
    const auto ctx = context_new(n);
    for (auto kind : {MatrixKind::A, MatrixKind::B, MatrixKind::CPlusI}) {
      const CMatrix m = build(kind, ctx, static_cast<std::size_t>(n));
      for (long s = 1; s <= n; ++s) {
        const auto lambda = eigenvalue_of(m, eigenvector(ctx, s));
        ASSERT_TRUE(lambda.has_value());
        EXPECT_EQ(*lambda, CycloElem::from_rational(ctx, eigen_label(kind, n, s))) << kind_name(kind);
        const auto lambda_t = eigenvalue_of(m.transpose(), eigenvector(ctx, s));
        ASSERT_TRUE(lambda_t.has_value());
        EXPECT_EQ(*lambda_t, CycloElem::from_rational(ctx, eigen_label(kind, n, s, Orientation::Columns)));
      }
    }
  }
}

TEST(Eigen, VectorIdentityForN3) {
  // For n = 3 the A-minor of size 2 has det -1/3; EEI ties it to the spectrum.
  for (auto kind : {MatrixKind::A, MatrixKind::B, MatrixKind::CPlusI}) {
    const IdentityReport r = verify_eigenvector_eigenvalue_identity(kind, 3);
    EXPECT_TRUE(r.passed) << r.expected << " vs " << r.computed;
  }
  EXPECT_TRUE(verify_eigenvector_eigenvalue_identity(MatrixKind::A, 5).passed);
}

TEST(Verifiers, AllPassOnSmallGrids) {
  for (long n : {3, 5, 7}) {
    EXPECT_TRUE(verify_cayley_det(n, true).passed) << n;
    EXPECT_TRUE(verify_half_diagonal_det(n).passed) << n;
    EXPECT_TRUE(verify_hollow_cauchy_det(n, true).passed) << n;
    EXPECT_TRUE(verify_unit_diagonal_cayley_det(n).passed) << n;
    EXPECT_TRUE(verify_shifted_cauchy_det(n).passed) << n;
    EXPECT_TRUE(verify_tangent_det(n).passed) << n;
    EXPECT_TRUE(verify_plus_root_sums(n).passed) << n;
    for (auto kind : {MatrixKind::A, MatrixKind::B, MatrixKind::CPlusI}) {
      EXPECT_TRUE(verify_eigenpairs(kind, n).passed) << n;
    }
  }
  for (long n = 2; n <= 8; ++n) {
    EXPECT_TRUE(verify_shifted_cauchy_spectrum(n).passed) << n;
    EXPECT_TRUE(verify_doubled_cauchy_charpoly(n).passed) << n;
    EXPECT_TRUE(verify_minus_root_sums(n).passed) << n;
    EXPECT_TRUE(verify_root_sums(n).passed) << n;
    EXPECT_TRUE(verify_cayley_row_sums(n).passed) << n;
    EXPECT_TRUE(verify_root_sum_identity(n).passed) << n;
    EXPECT_TRUE(verify_cayley_sum_identity(n).passed) << n;
  }
}

TEST(Verifiers, ReportFields) {
  const IdentityReport r = verify_cayley_det(5);
  EXPECT_EQ(r.identity, "thm1.1");
  EXPECT_EQ(r.n, 5);
  EXPECT_EQ(r.expected, "(9/5, 0)");
  EXPECT_EQ(r.computed, "(9/5, 0)");
  EXPECT_GE(r.elapsed_seconds, 0.0);
}

TEST(Verifiers, GaloisInvariance) {
  for (const auto& id : galois_supported_identities()) {
    for (long n : {3, 5, 7}) EXPECT_TRUE(verify_galois_invariance(id, n).passed) << id << " n=" << n;
  }
  EXPECT_THROW(verify_galois_invariance("eq2.3", 5), std::invalid_argument);
}

TEST(Verifiers, RejectEvenNWhereOddIsRequired) {
  EXPECT_THROW(verify_cayley_det(4), std::invalid_argument);
  EXPECT_THROW(verify_half_diagonal_det(6), std::invalid_argument);
  EXPECT_THROW(verify_hollow_cauchy_det(4), std::invalid_argument);
  EXPECT_THROW(verify_unit_diagonal_cayley_det(8), std::invalid_argument);
  EXPECT_THROW(verify_shifted_cauchy_det(4), std::invalid_argument);
  EXPECT_THROW(verify_tangent_det(4), std::invalid_argument);
  EXPECT_THROW(verify_plus_root_sums(4), std::invalid_argument);
  EXPECT_THROW(verify_eigenpairs(MatrixKind::A, 4), std::invalid_argument);
  EXPECT_NO_THROW(verify_eigenpairs(MatrixKind::CPlusI, 4));
}

TEST(Verifiers, OracleOnlyRunsBelowGuardrail) {
  EXPECT_NE(verify_cayley_det(9, true).params.find("oracle"), std::string::npos);
  const IdentityReport big = verify_cayley_det(11, true);
  EXPECT_TRUE(big.passed);
  EXPECT_EQ(big.params.find("oracle"), std::string::npos);
}

}  // namespace
}  // namespace cyclodet
