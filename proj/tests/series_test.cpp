#include "compcount/series.hpp"

#include <gtest/gtest.h>

#include <random>

#include "compcount/compositions.hpp"
#include "oracles.hpp"

namespace compcount {
namespace {

std::vector<BigInt> ints(std::initializer_list<long> values) {
  std::vector<BigInt> out;
  for (long v : values) out.emplace_back(v);
  return out;
}

TEST(Series, AddTruncatesToShorterOrder) {
  const TruncatedSeries a(ints({1, 1}));
  const TruncatedSeries b(ints({1, -1}));
  EXPECT_EQ(series_add(a, b).coefficients(), ints({2, 0}));
  const TruncatedSeries z(ints({0, 1}));
  EXPECT_EQ(series_add(z, z).coefficients(), ints({0, 2}));
  EXPECT_EQ(series_add(TruncatedSeries(3), TruncatedSeries(5)).order(), 3);
}

TEST(Series, Multiplication) {
  const TruncatedSeries one_plus_z(ints({1, 1, 0, 0}));
  EXPECT_EQ(series_mul(one_plus_z, one_plus_z).coefficients(), ints({1, 2, 1, 0}));
  const TruncatedSeries parts(ints({0, 1, 1, 0, 0}));
  EXPECT_EQ(series_mul(parts, parts).coefficient(3), 2);
  const TruncatedSeries unit(ints({1, 0, 0, 0, 0}));
  const TruncatedSeries x(ints({3, -1, 4, 1, -5}));
  EXPECT_EQ(series_mul(x, unit), x);
  EXPECT_EQ(series_mul(TruncatedSeries(2), TruncatedSeries(6)).order(), 2);
}

TEST(Series, CoefficientBeyondOrderIsAnError) {
  const TruncatedSeries s(ints({1, 2, 3}));
  EXPECT_THROW(s.coefficient(3), DomainError);
  EXPECT_EQ(s.coefficient(-1), 0);
  EXPECT_EQ(s.shifted(1).coefficients(), ints({0, 1, 2}));
}

TEST(SeriesFromRational, Examples) {
  EXPECT_EQ(series_from_rational(gf_all_compositions(), 5).coefficients(), ints({0, 1, 2, 4, 8, 16}));
  EXPECT_EQ(series_from_rational({Polynomial{1}, Polynomial{1, -1}}, 3).coefficients(), ints({1, 1, 1, 1}));
  const RationalGF weak2{Polynomial{1, -1} * Polynomial::monomial(2), Polynomial{1, -2, 0, 1}};
  EXPECT_EQ(series_from_rational(weak2, 6).coefficients(), ints({0, 0, 1, 1, 2, 3, 5}));
  for (std::int64_t n = 0; n <= 6; ++n) {
    EXPECT_EQ(series_from_rational(weak2, 6).coefficient(n), count_leading_weak(n, 2));
  }
}

TEST(SeriesFromRational, NegativeUnitDenominator) {
  // 1 / (-1 + z) = -(1 + z + z^2 + ...)
  EXPECT_EQ(series_from_rational({Polynomial{1}, Polynomial{-1, 1}}, 3).coefficients(), ints({-1, -1, -1, -1}));
}

TEST(SeriesFromRational, RejectsNonUnitDenominator) {
  EXPECT_THROW(series_from_rational({Polynomial{1}, Polynomial{2, 1}}, 3), DomainError);
  EXPECT_THROW(series_from_rational({Polynomial{1}, Polynomial{0, 1}}, 3), DomainError);
}

TEST(SeriesFromRational, IsMultiplicative) {
  std::mt19937 rng(11);
  auto random_poly = [&](bool unit_constant) {
    std::vector<BigInt> c;
    const int degree = static_cast<int>(rng() % 5);
    for (int i = 0; i <= degree; ++i) c.emplace_back(static_cast<long>(rng() % 7) - 3);
    if (unit_constant) c[0] = rng() % 2 ? 1 : -1;
    return Polynomial(std::move(c));
  };
  for (int trial = 0; trial < 50; ++trial) {
    const RationalGF a{random_poly(false), random_poly(true)};
    const RationalGF b{random_poly(false), random_poly(true)};
    EXPECT_EQ(series_from_rational(a * b, 25), series_mul(series_from_rational(a, 25), series_from_rational(b, 25)));
  }
}

TEST(GfLeadingStrict, Examples) {
  const auto k1 = series_from_rational(gf_leading_strict(1), 8);
  EXPECT_EQ(k1.coefficients(), ints({0, 1, 0, 0, 0, 0, 0, 0, 0}));
  EXPECT_EQ(series_from_rational(gf_leading_strict(3), 5).coefficient(5), 2);
  const auto k2 = series_from_rational(gf_leading_strict(2), 30);
  for (std::int64_t n = 2; n <= 30; ++n) EXPECT_EQ(k2.coefficient(n), 1);
}

TEST(GfLeadingWeak, Examples) {
  const auto k1 = series_from_rational(gf_leading_weak(1), 10);
  for (std::int64_t n = 1; n <= 10; ++n) EXPECT_EQ(k1.coefficient(n), 1);
  EXPECT_EQ(k1.coefficient(0), 0);
  EXPECT_EQ(series_from_rational(gf_leading_weak(2), 5).coefficient(5), 3);
  EXPECT_EQ(gf_leading_weak(2).denominator, (Polynomial{1, -1} * Polynomial{1, -1, -1}));
}

TEST(GfLeading, FibonacciFormAgrees) {
  for (std::int64_t k = 1; k <= 6; ++k) {
    EXPECT_EQ(series_from_rational(gf_leading_strict(k), 40), series_from_rational(gf_leading_fibonacci_form(k, false), 40));
    EXPECT_EQ(series_from_rational(gf_leading_weak(k), 40), series_from_rational(gf_leading_fibonacci_form(k, true), 40));
  }
}

TEST(GfLeading, DenominatorFactorization) {
  // 1 - 2z + z^k = (1 - z)(1 - z - ... - z^(k-1))
  for (std::int64_t k = 2; k <= 8; ++k) {
    std::vector<BigInt> fib(static_cast<std::size_t>(k), -1);
    fib[0] = 1;
    EXPECT_EQ((Polynomial{1, -1} * Polynomial(fib)), gf_leading_strict(k).denominator);
  }
}

TEST(GfAvoiding, Examples) {
  const auto k2 = series_from_rational(gf_avoiding(2), 4);
  EXPECT_EQ(k2.coefficients(), ints({0, 1, 1, 2, 4}));
  EXPECT_EQ(series_from_rational(gf_avoiding(1), 1).coefficient(1), 0);
  EXPECT_EQ(series_from_rational(gf_avoiding(3), 3).coefficient(3), 3);
}

TEST(GfAvoiding, IsQOverOneMinusQ) {
  // q = (z - z^k + z^(k+1)) / (1 - z); q/(1-q) = sum_{m>=1} q^m
  for (std::int64_t k = 1; k <= 6; ++k) {
    const RationalGF q{Polynomial{0, 1} - Polynomial::monomial(k) + Polynomial::monomial(k + 1), Polynomial{1, -1}};
    const auto qs = series_from_rational(q, 30);
    auto power = TruncatedSeries::from_polynomial(Polynomial{1}, 30);
    TruncatedSeries sum(30);
    for (int m = 1; m <= 30; ++m) {
      power = series_mul(power, qs);
      sum = series_add(sum, power);
    }
    EXPECT_EQ(sum, series_from_rational(gf_avoiding(k), 30)) << k;
  }
}

TEST(GfContaining, Examples) {
  EXPECT_EQ(series_from_rational(gf_containing(1), 2).coefficient(2), 1);
  EXPECT_EQ(series_from_rational(gf_containing(2), 3).coefficient(3), 2);
  EXPECT_EQ(series_from_rational(gf_containing(5), 4).coefficient(4), 0);
}

TEST(GfContaining, IsDifferenceOfExpansions) {
  for (std::int64_t k = 1; k <= 6; ++k) {
    EXPECT_EQ(series_from_rational(gf_containing(k), 40),
              series_sub(series_from_rational(gf_all_compositions(), 40), series_from_rational(gf_avoiding(k), 40)));
  }
}

TEST(GfDistinctTotal, Coefficients) {
  const auto s = gf_distinct_total(40);
  EXPECT_EQ(s.coefficient(0), 0);
  EXPECT_EQ(s.coefficient(3), 3);
  EXPECT_EQ(s.coefficient(6), 11);
  for (std::int64_t n = 0; n <= 40; ++n) EXPECT_EQ(s.coefficient(n), oracle::distinct_compositions_total(n)) << n;
  EXPECT_EQ(gf_distinct_total(0).coefficients(), ints({0}));
}

TEST(GfLeadingTotal, ShiftIdentity) {
  const auto f = gf_leading_total(40, false);
  const auto f_star = gf_leading_total(40, true);
  EXPECT_EQ(f_star.shifted(1), series_sub(f, TruncatedSeries::from_polynomial(Polynomial{0, 1}, 40)));
}

TEST(Polynomial, TrimsAndCompares) {
  EXPECT_EQ(Polynomial({1, 2, 0, 0}), (Polynomial{1, 2}));
  EXPECT_EQ(Polynomial{}.degree(), -1);
  EXPECT_EQ((Polynomial{1, 1} - Polynomial{1, 1}).degree(), -1);
  EXPECT_EQ(Polynomial::monomial(3, 5).coefficient(3), 5);
}

}  // namespace
}  // namespace compcount
