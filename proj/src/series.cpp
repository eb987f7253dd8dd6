#include "compcount/series.hpp"

#include <algorithm>
#include <string>

namespace compcount {

Polynomial::Polynomial(std::vector<BigInt> coefficients) : coefficients_(std::move(coefficients)) {
  trim();
}

Polynomial::Polynomial(std::initializer_list<long> coefficients) {
  coefficients_.reserve(coefficients.size());
  for (long c : coefficients) coefficients_.emplace_back(c);
  trim();
}

Polynomial Polynomial::monomial(std::int64_t exponent, const BigInt& coefficient) {
  if (exponent < 0) throw DomainError("monomial: negative exponent");
  std::vector<BigInt> c(static_cast<std::size_t>(exponent) + 1, 0);
  c.back() = coefficient;
  return Polynomial(std::move(c));
}

BigInt Polynomial::coefficient(std::int64_t i) const {
  if (i < 0 || i > degree()) return 0;
  return coefficients_[static_cast<std::size_t>(i)];
}

void Polynomial::trim() {
  while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  const auto n = std::max(a.coefficients_.size(), b.coefficients_.size());
  std::vector<BigInt> c(n, 0);
  for (std::size_t i = 0; i < a.coefficients_.size(); ++i) c[i] += a.coefficients_[i];
  for (std::size_t i = 0; i < b.coefficients_.size(); ++i) c[i] += b.coefficients_[i];
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  const auto n = std::max(a.coefficients_.size(), b.coefficients_.size());
  std::vector<BigInt> c(n, 0);
  for (std::size_t i = 0; i < a.coefficients_.size(); ++i) c[i] += a.coefficients_[i];
  for (std::size_t i = 0; i < b.coefficients_.size(); ++i) c[i] -= b.coefficients_[i];
  return Polynomial(std::move(c));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.coefficients_.empty() || b.coefficients_.empty()) return {};
  std::vector<BigInt> c(a.coefficients_.size() + b.coefficients_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coefficients_.size(); ++i) {
    for (std::size_t j = 0; j < b.coefficients_.size(); ++j) {
      c[i + j] += a.coefficients_[i] * b.coefficients_[j];
    }
  }
  return Polynomial(std::move(c));
}

TruncatedSeries::TruncatedSeries(std::int64_t order) {
  if (order < 0) throw DomainError("series order must be nonnegative");
  coefficients_.assign(static_cast<std::size_t>(order) + 1, 0);
}

TruncatedSeries::TruncatedSeries(std::vector<BigInt> coefficients)
    : coefficients_(std::move(coefficients)) {
  if (coefficients_.empty()) throw DomainError("series needs at least the z^0 coefficient");
}

TruncatedSeries TruncatedSeries::from_polynomial(const Polynomial& p, std::int64_t order) {
  TruncatedSeries s(order);
  for (std::int64_t i = 0; i <= std::min(order, p.degree()); ++i) {
    s.coefficients_[static_cast<std::size_t>(i)] = p.coefficient(i);
  }
  return s;
}

BigInt TruncatedSeries::coefficient(std::int64_t i) const {
  if (i < 0) return 0;
  if (i > order()) {
    throw DomainError("coefficient z^" + std::to_string(i) + " is beyond the series order " +
                      std::to_string(order()));
  }
  return coefficients_[static_cast<std::size_t>(i)];
}

TruncatedSeries TruncatedSeries::truncated(std::int64_t order) const {
  if (order > this->order()) throw DomainError("cannot extend a truncated series");
  return TruncatedSeries(
      std::vector<BigInt>(coefficients_.begin(), coefficients_.begin() + order + 1));
}

TruncatedSeries TruncatedSeries::shifted(std::int64_t k) const {
  if (k < 0) throw DomainError("shift must be nonnegative");
  TruncatedSeries s(order());
  for (std::int64_t i = k; i <= order(); ++i) {
    s.coefficients_[static_cast<std::size_t>(i)] = coefficients_[static_cast<std::size_t>(i - k)];
  }
  return s;
}

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::int64_t order = std::min(a.order(), b.order());
  std::vector<BigInt> c(static_cast<std::size_t>(order) + 1);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coefficients()[i] + b.coefficients()[i];
  return TruncatedSeries(std::move(c));
}

TruncatedSeries series_sub(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::int64_t order = std::min(a.order(), b.order());
  std::vector<BigInt> c(static_cast<std::size_t>(order) + 1);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coefficients()[i] - b.coefficients()[i];
  return TruncatedSeries(std::move(c));
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::int64_t order = std::min(a.order(), b.order());
  std::vector<BigInt> c(static_cast<std::size_t>(order) + 1, 0);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (a.coefficients()[i] == 0) continue;
    for (std::size_t j = 0; i + j < c.size(); ++j) {
      c[i + j] += a.coefficients()[i] * b.coefficients()[j];
    }
  }
  return TruncatedSeries(std::move(c));
}

RationalGF operator*(const RationalGF& a, const RationalGF& b) {
  return {a.numerator * b.numerator, a.denominator * b.denominator};
}

RationalGF operator-(const RationalGF& a, const RationalGF& b) {
  return {a.numerator * b.denominator - b.numerator * a.denominator,
          a.denominator * b.denominator};
}

TruncatedSeries series_from_rational(const RationalGF& gf, std::int64_t order) {
  const BigInt lead = gf.denominator.coefficient(0);
  if (lead != 1 && lead != -1) {
    throw DomainError("series_from_rational: denominator constant term is " + to_decimal(lead) +
                      ", expected +-1");
  }
  if (order < 0) throw DomainError("series order must be nonnegative");
  std::vector<BigInt> c(static_cast<std::size_t>(order) + 1, 0);
  const std::int64_t d = gf.denominator.degree();
  for (std::int64_t n = 0; n <= order; ++n) {
    BigInt v = gf.numerator.coefficient(n);
    for (std::int64_t i = 1; i <= std::min(n, d); ++i) {
      v -= gf.denominator.coefficient(i) * c[static_cast<std::size_t>(n - i)];
    }
    // dividing by +-1
    if (lead < 0) v = -v;
    c[static_cast<std::size_t>(n)] = std::move(v);
  }
  return TruncatedSeries(std::move(c));
}

namespace {

void require_k(std::int64_t k, const char* what) {
  if (k < 1) throw DomainError(std::string(what) + ": k must be at least 1");
}

// 1 - z - z^2 - ... - z^m
Polynomial fibonacci_denominator(std::int64_t m) {
  std::vector<BigInt> c(static_cast<std::size_t>(m) + 1, -1);
  c[0] = 1;
  return Polynomial(std::move(c));
}

}  // namespace

RationalGF gf_leading_strict(std::int64_t k) {
  require_k(k, "gf_leading_strict");
  return {Polynomial{1, -1} * Polynomial::monomial(k),
          Polynomial{1, -2} + Polynomial::monomial(k)};
}

RationalGF gf_leading_weak(std::int64_t k) {
  require_k(k, "gf_leading_weak");
  return {Polynomial{1, -1} * Polynomial::monomial(k),
          Polynomial{1, -2} + Polynomial::monomial(k + 1)};
}

RationalGF gf_leading_fibonacci_form(std::int64_t k, bool weak) {
  require_k(k, "gf_leading_fibonacci_form");
  return {Polynomial::monomial(k), fibonacci_denominator(weak ? k : k - 1)};
}

RationalGF gf_avoiding(std::int64_t k) {
  require_k(k, "gf_avoiding");
  return {Polynomial{0, 1} - Polynomial::monomial(k) + Polynomial::monomial(k + 1),
          Polynomial{1, -2} + Polynomial::monomial(k) - Polynomial::monomial(k + 1)};
}

RationalGF gf_all_compositions() { return {Polynomial{0, 1}, Polynomial{1, -2}}; }

RationalGF gf_containing(std::int64_t k) {
  require_k(k, "gf_containing");
  return gf_all_compositions() - gf_avoiding(k);
}

TruncatedSeries gf_distinct_total(std::int64_t order) {
  TruncatedSeries total(order);
  Polynomial denominator{1};
  BigInt k_factorial = 1;
  for (std::int64_t k = 1; k * (k + 1) / 2 <= order; ++k) {
    denominator = denominator * (Polynomial{1} - Polynomial::monomial(k));
    k_factorial *= static_cast<unsigned long>(k);
    const RationalGF term{Polynomial::monomial(k * (k + 1) / 2, k_factorial), denominator};
    total = series_add(total, series_from_rational(term, order));
  }
  return total;
}

TruncatedSeries gf_leading_total(std::int64_t order, bool weak) {
  TruncatedSeries total(order);
  for (std::int64_t k = 1; k <= order; ++k) {
    const RationalGF gf = weak ? gf_leading_weak(k) : gf_leading_strict(k);
    total = series_add(total, series_from_rational(gf, order));
  }
  return total;
}

}  // namespace compcount
