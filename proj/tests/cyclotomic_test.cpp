#include "test_support.hpp"

#include <gtest/gtest.h>

namespace cyclodet {
namespace {

using testing::q;

std::vector<Integer> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

// Schoolbook product in Z[x]; independent of the library's reduction code.
std::vector<Integer> mul_z(const std::vector<Integer>& a, const std::vector<Integer>& b) {
  std::vector<Integer> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

TEST(CyclotomicPolynomial, SmallCases) {
  EXPECT_EQ(cyclotomic_polynomial(1), ints({-1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(3), ints({1, 1, 1}));
  // x^6 - 1 = (x - 1)(x + 1)(x^2 + x + 1) Phi_6  =>  Phi_6 = x^2 - x + 1.
  EXPECT_EQ(cyclotomic_polynomial(6), ints({1, -1, 1}));
  EXPECT_EQ(mul_z(mul_z(mul_z(ints({-1, 1}), ints({1, 1})), ints({1, 1, 1})), ints({1, -1, 1})),
            ints({-1, 0, 0, 0, 0, 0, 1}));
  EXPECT_THROW(cyclotomic_polynomial(0), std::invalid_argument);
}

TEST(CyclotomicPolynomial, DivisorProductIsXnMinusOne) {
  for (long n = 1; n <= 36; ++n) {
    std::vector<Integer> acc = ints({1});
    for (long d = 1; d <= n; ++d) {
      if (n % d == 0) acc = mul_z(acc, cyclotomic_polynomial(d));
    }
    std::vector<Integer> target(static_cast<std::size_t>(n) + 1, 0);
    target.front() = -1;
    target.back() = 1;
    EXPECT_EQ(acc, target) << "n=" << n;
    EXPECT_EQ(static_cast<long>(cyclotomic_polynomial(n).size()) - 1, euler_totient(n));
    EXPECT_EQ(cyclotomic_polynomial(n).back(), 1);
  }
}

TEST(Context, DegreeIsTotient) {
  EXPECT_EQ(context_new(3)->degree(), 2);
  EXPECT_EQ(context_new(5)->degree(), 4);
  EXPECT_EQ(context_new(9)->degree(), 6);
  EXPECT_THROW(context_new(1), std::invalid_argument);
}

TEST(ZetaPow, Reduction) {
  const auto c3 = context_new(3);
  EXPECT_EQ(zeta_pow(c3, 0), CycloElem::one(c3));
  EXPECT_EQ(zeta_pow(c3, 2), CycloElem::from_coeffs(c3, {Rational(-1), Rational(-1)}));
  const auto c5 = context_new(5);
  EXPECT_EQ(zeta_pow(c5, 7), zeta_pow(c5, 2));
  EXPECT_EQ(zeta_pow(c5, -3), zeta_pow(c5, 2));
}

TEST(ZetaPow, Primitivity) {
  for (long n = 2; n <= 30; ++n) {
    const auto ctx = context_new(n);
    for (long e = 1; e < n; ++e) {
      const CycloElem z = zeta_pow(ctx, e);
      CycloElem p = CycloElem::one(ctx);
      for (long i = 0; i < n; ++i) p *= z;
      EXPECT_EQ(p, CycloElem::one(ctx));
      if (std::gcd(e, n) == 1) {
        EXPECT_NE(z, CycloElem::one(ctx));
      }
    }
  }
}

TEST(Arithmetic, WorkedExamples) {
  const auto c3 = context_new(3);
  const CycloElem one = CycloElem::one(c3);
  const CycloElem z = zeta_pow(c3, 1);
  // (1 - z)(1 - z^2) = 1 - z - z^2 + z^3 = 2 - (z + z^2) = 3.
  EXPECT_EQ((one - z) * (one - z * z), q(c3, 3));
  EXPECT_EQ(z * one, z);
  const auto c5 = context_new(5);
  EXPECT_EQ(zeta_pow(c5, 2) * zeta_pow(c5, 3), CycloElem::one(c5));
  EXPECT_EQ((one + z + z * z).as_rational(), Rational(0));
}

TEST(Arithmetic, ContextMismatchIsRejected) {
  EXPECT_THROW(CycloElem::one(context_new(3)) + CycloElem::one(context_new(5)), std::invalid_argument);
  EXPECT_THROW(CycloElem() * CycloElem(), std::logic_error);
}

TEST(Inverse, WorkedExamples) {
  const auto c3 = context_new(3);
  const CycloElem one = CycloElem::one(c3);
  const CycloElem z = zeta_pow(c3, 1);
  // (1 - z)^-1 = (1 - z^2)/3 = (2 + z)/3.
  EXPECT_EQ((one - z).inverse(), CycloElem::from_coeffs(c3, {Rational(2, 3), Rational(1, 3)}));
  EXPECT_EQ(one.inverse(), one);
  EXPECT_EQ(z.inverse(), zeta_pow(c3, 2));
  EXPECT_THROW(CycloElem::zero(c3).inverse(), std::domain_error);
}

TEST(Inverse, TwoSidedOnRandomElements) {
  std::mt19937 rng(2024);
  for (long n : {3, 4, 5, 7, 8, 9, 12, 15}) {
    const auto ctx = context_new(n);
    for (int i = 0; i < 200; ++i) {
      const CycloElem a = testing::random_nonzero(rng, ctx);
      const CycloElem b = a.inverse();
      EXPECT_EQ(a * b, CycloElem::one(ctx));
      EXPECT_EQ(b * a, CycloElem::one(ctx));
    }
  }
}

TEST(Galois, Examples) {
  const auto c3 = context_new(3);
  EXPECT_EQ(galois(zeta_pow(c3, 1), 2), CycloElem::from_coeffs(c3, {Rational(-1), Rational(-1)}));
  const auto c5 = context_new(5);
  const CycloElem a = CycloElem::from_coeffs(c5, {Rational(1, 2), Rational(-3), Rational(0), Rational(7, 5)});
  EXPECT_EQ(galois(a, 1), a);
  EXPECT_EQ(galois(galois(zeta_pow(c5, 1), 2), 2), zeta_pow(c5, 4));
  EXPECT_THROW(galois(zeta_pow(context_new(6), 1), 3), std::invalid_argument);
}

TEST(Galois, IsAFieldHomomorphism) {
  std::mt19937 rng(99);
  for (long n : {5, 7, 8, 9, 12}) {
    const auto ctx = context_new(n);
    for (long t = 1; t < n; ++t) {
      if (std::gcd(t, n) != 1) continue;
      for (int i = 0; i < 20; ++i) {
        const CycloElem a = testing::random_elem(rng, ctx);
        const CycloElem b = testing::random_elem(rng, ctx);
        EXPECT_EQ(galois(a + b, t), galois(a, t) + galois(b, t));
        EXPECT_EQ(galois(a * b, t), galois(a, t) * galois(b, t));
      }
    }
  }
}

TEST(Conjugate, Examples) {
  const auto c3 = context_new(3);
  EXPECT_EQ(conjugate(zeta_pow(c3, 1)), zeta_pow(c3, 2));
  EXPECT_EQ(conjugate(q(c3, 5, 7)), q(c3, 5, 7));
  const auto c5 = context_new(5);
  const CycloElem one = CycloElem::one(c5);
  EXPECT_EQ(conjugate(one - zeta_pow(c5, 1)), one - zeta_pow(c5, 4));
}

TEST(Conjugate, IsAnInvolution) {
  std::mt19937 rng(5);
  for (long n : {3, 5, 8, 10, 13}) {
    const auto ctx = context_new(n);
    for (int i = 0; i < 50; ++i) {
      const CycloElem a = testing::random_elem(rng, ctx);
      EXPECT_EQ(conjugate(conjugate(a)), a);
    }
  }
}

TEST(AsRational, ExtractsOnlyRationalElements) {
  const auto c3 = context_new(3);
  EXPECT_EQ(as_rational(q(c3, 5, 3)), Rational(5, 3));
  EXPECT_FALSE(as_rational(zeta_pow(c3, 1)).has_value());
  std::mt19937 rng(3);
  for (int i = 0; i < 100; ++i) {
    const Rational r = testing::random_rational(rng, 50, 20);
    EXPECT_EQ(as_rational(CycloElem::from_rational(context_new(7), r)), r);
  }
}

TEST(Rendering, PowerBasis) {
  const auto c5 = context_new(5);
  EXPECT_EQ(CycloElem::from_coeffs(c5, {Rational(1), Rational(-1), Rational(0), Rational(2, 3)}).to_string(),
            "1 - z + 2/3*z^3");
  EXPECT_EQ(CycloElem::zero(c5).to_string(), "0");
  EXPECT_EQ((-zeta_pow(c5, 2)).to_string(), "-z^2");
}

}  // namespace
}  // namespace cyclodet
