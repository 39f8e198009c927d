#include "test_support.hpp"

#include <gtest/gtest.h>

#include <algorithm>

namespace cyclodet {
namespace {

std::vector<std::vector<int>> collect(int m) {
  std::vector<std::vector<int>> out;
  DerangementStream stream(m);
  while (auto p = stream.next()) out.push_back(p->image());
  return out;
}

// Brute-force oracle: filter every permutation in lexicographic order.
std::vector<std::vector<int>> filtered_permutations(int m) {
  std::vector<int> img(static_cast<std::size_t>(m));
  std::iota(img.begin(), img.end(), 1);
  std::vector<std::vector<int>> out;
  do {
    bool fixed = false;
    for (int i = 0; i < m; ++i) fixed = fixed || img[static_cast<std::size_t>(i)] == i + 1;
    if (!fixed) out.push_back(img);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

TEST(Derangements, SmallLists) {
  EXPECT_EQ(collect(0), (std::vector<std::vector<int>>{{}}));
  EXPECT_TRUE(collect(1).empty());
  EXPECT_EQ(collect(2), (std::vector<std::vector<int>>{{2, 1}}));
  EXPECT_EQ(collect(3), (std::vector<std::vector<int>>{{2, 3, 1}, {3, 1, 2}}));
}

TEST(Derangements, MatchFilteredPermutationsInOrder) {
  for (int m = 1; m <= 8; ++m) {
    const auto got = collect(m);
    EXPECT_EQ(got, filtered_permutations(m)) << "m=" << m;
    EXPECT_EQ(Integer(static_cast<long>(got.size())), derangement_count(m));
  }
  EXPECT_EQ(collect(4).size(), 9u);
}

TEST(Derangements, CountMatchesRecurrence) {
  Integer prev2 = 1, prev1 = 0;  // D_0, D_1
  EXPECT_EQ(derangement_count(0), prev2);
  EXPECT_EQ(derangement_count(1), prev1);
  for (long m = 2; m <= 30; ++m) {
    const Integer cur = Integer(m - 1) * (prev1 + prev2);
    EXPECT_EQ(derangement_count(m), cur) << "m=" << m;
    prev2 = prev1;
    prev1 = cur;
  }
  EXPECT_EQ(derangement_count(8), 14833);
}

TEST(Permutation, SignIsMultiplicative) {
  std::mt19937 rng(61);
  for (int m = 1; m <= 8; ++m) {
    for (int i = 0; i < 30; ++i) {
      std::vector<int> a(static_cast<std::size_t>(m)), b(static_cast<std::size_t>(m));
      std::iota(a.begin(), a.end(), 1);
      std::iota(b.begin(), b.end(), 1);
      std::shuffle(a.begin(), a.end(), rng);
      std::shuffle(b.begin(), b.end(), rng);
      const Permutation p(a), q(b);
      EXPECT_EQ(sign(p * q), sign(p) * sign(q));
    }
  }
  EXPECT_EQ(sign(Permutation({2, 1, 3})), -1);
  EXPECT_EQ(sign(Permutation({2, 3, 1})), 1);
  EXPECT_EQ(sign(Permutation::identity(5)), 1);
  EXPECT_THROW(Permutation({1, 1}), std::invalid_argument);
}

TEST(Factorials, DoubleFactorial) {
  EXPECT_EQ(double_factorial(-1), 1);
  EXPECT_EQ(double_factorial(0), 1);
  EXPECT_EQ(double_factorial(1), 1);
  EXPECT_EQ(double_factorial(5), 15);
  EXPECT_EQ(double_factorial(6), 48);
  EXPECT_EQ(double_factorial(9), 945);
  EXPECT_EQ(factorial(10), 3628800);
  EXPECT_THROW(double_factorial(-2), std::invalid_argument);
}

TEST(SignedDerangementSum, EqualsDeterminantOnHollowMatrices) {
  std::mt19937 rng(67);
  for (long n : {3, 5}) {
    const auto ctx = context_new(n);
    for (std::size_t dim = 0; dim <= 7; ++dim) {
      CMatrix m = testing::random_matrix(rng, ctx, dim, 2);
      for (std::size_t i = 0; i < dim; ++i) m(i, i) = CycloElem::zero(ctx);
      EXPECT_EQ(signed_derangement_sum(m), det(m)) << "dim=" << dim;
    }
  }
}

TEST(SignedDerangementSum, CayleyMatrixSmallCases) {
  for (long n : {3, 5, 7}) {
    const auto ctx = context_new(n);
    const CMatrix a = build(MatrixKind::A, ctx, static_cast<std::size_t>(n - 1));
    EXPECT_EQ(signed_derangement_sum(a), CycloElem::from_rational(ctx, cayley_det_value(n)));
  }
}

TEST(SignedDerangementSum, GuardrailNamesTheTermCount) {
  const auto ctx = context_new(3);
  try {
    signed_derangement_sum(CMatrix::zero(ctx, 11));
    FAIL() << "expected GuardrailError";
  } catch (const GuardrailError& e) {
    EXPECT_NE(std::string(e.what()).find("D_11 = 14684570"), std::string::npos) << e.what();
  }
  EXPECT_NO_THROW(signed_derangement_sum(CMatrix::zero(ctx, 10)));
}

}  // namespace
}  // namespace cyclodet
