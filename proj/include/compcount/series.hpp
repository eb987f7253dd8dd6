#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "compcount/exactnum.hpp"

namespace compcount {

/// Integer polynomial c_0 + c_1 z + ... ; trailing zeros are trimmed.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<BigInt> coefficients);
  Polynomial(std::initializer_list<long> coefficients);

  /// c * z^exponent
  static Polynomial monomial(std::int64_t exponent, const BigInt& coefficient = 1);

  /// -1 for the zero polynomial.
  std::int64_t degree() const { return static_cast<std::int64_t>(coefficients_.size()) - 1; }
  BigInt coefficient(std::int64_t i) const;
  const std::vector<BigInt>& coefficients() const { return coefficients_; }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim();
  std::vector<BigInt> coefficients_;
};

/// Exact coefficients of z^0..z^order of a formal power series. Binary
/// operations truncate to the smaller order of the two operands.
class TruncatedSeries {
 public:
  /// Zero series of the given order.
  explicit TruncatedSeries(std::int64_t order);
  TruncatedSeries(std::vector<BigInt> coefficients);

  static TruncatedSeries from_polynomial(const Polynomial& p, std::int64_t order);

  std::int64_t order() const { return static_cast<std::int64_t>(coefficients_.size()) - 1; }
  /// Coefficient of z^i; zero for i < 0. Throws DomainError for i > order.
  BigInt coefficient(std::int64_t i) const;
  const std::vector<BigInt>& coefficients() const { return coefficients_; }

  TruncatedSeries truncated(std::int64_t order) const;
  /// z^k * this, keeping the same order.
  TruncatedSeries shifted(std::int64_t k) const;

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  std::vector<BigInt> coefficients_;
};

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_sub(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);

/// numerator / denominator. The denominator's constant term must be +-1 so
/// that every coefficient of the expansion is an integer.
struct RationalGF {
  Polynomial numerator;
  Polynomial denominator;
};

RationalGF operator*(const RationalGF& a, const RationalGF& b);
RationalGF operator-(const RationalGF& a, const RationalGF& b);

/// Expands gf to z^order by long division: d_0 c_n = a_n - sum_{i>=1} d_i c_{n-i}.
/// Throws DomainError if the denominator's constant term is not +-1.
TruncatedSeries series_from_rational(const RationalGF& gf, std::int64_t order);

/// (1-z) z^k / (1 - 2z + z^k): leading part k, later parts < k.
RationalGF gf_leading_strict(std::int64_t k);

/// (1-z) z^k / (1 - 2z + z^(k+1)): leading part k, later parts <= k.
RationalGF gf_leading_weak(std::int64_t k);

/// z^k / (1 - z - ... - z^m) with m = k-1 (strict) or m = k (weak); the
/// Fibonacci form of the two families above.
RationalGF gf_leading_fibonacci_form(std::int64_t k, bool weak);

/// (z - z^k + z^(k+1)) / (1 - 2z + z^k - z^(k+1)): no part equal to k.
RationalGF gf_avoiding(std::int64_t k);

/// z / (1 - 2z): all compositions of n >= 1.
RationalGF gf_all_compositions();

/// z/(1-2z) minus gf_avoiding(k), over the common denominator.
RationalGF gf_containing(std::int64_t k);

/// sum_{k>=1} k! z^(k(k+1)/2) / ((1-z)(1-z^2)...(1-z^k)) to z^order. Terms with
/// k(k+1)/2 > order start beyond the truncation and are skipped.
TruncatedSeries gf_distinct_total(std::int64_t order);

/// sum_{k=1..order} F_k(z) (strict) or F*_k(z) (weak) to z^order. F_k starts
/// at z^k, so later terms vanish at this order.
TruncatedSeries gf_leading_total(std::int64_t order, bool weak);

}  // namespace compcount
