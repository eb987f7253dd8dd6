#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace compcount {

/// Signed arbitrary-precision integer. Counting results are always
/// nonnegative; series coefficients may be negative.
using BigInt = mpz_class;

/// Arbitrary-precision nonnegative count.
using BigCount = mpz_class;

using BigRational = mpq_class;

/// Input outside an operation's domain (e.g. multinomial parts that do not
/// sum to n, cycle with fewer than 3 vertices).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An explicit size guard was hit (enumeration limit, subset-DP vertex cap).
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An identity that must hold exactly did not (inexact division, non-integral
/// result). Indicates a bug, never bad input.
class ArithmeticError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

std::string to_decimal(const BigInt& value);

/// numerator / denominator, throwing ArithmeticError on a nonzero remainder.
BigInt exact_div(const BigInt& numerator, const BigInt& denominator);

BigInt pow2(std::int64_t exponent);

BigCount factorial(std::int64_t n);

/// n choose k; zero outside 0 <= k <= n.
BigCount binomial(std::int64_t n, std::int64_t k);

/// n! / (parts_1! parts_2! ...). Throws DomainError unless parts sum to n.
BigCount multinomial(std::int64_t n, std::span<const std::int64_t> parts);

BigCount bell(std::int64_t n);

/// Set partitions of an n-set into k nonempty blocks.
BigCount stirling2(std::int64_t n, std::int64_t k);

/// Unsigned Stirling numbers of the first kind (permutations with k cycles).
BigCount stirling1(std::int64_t n, std::int64_t k);

/// (1/k!) times the sum of multinomial(n; i_1..i_k) over the compositions
/// of n into k positive parts.
BigCount stirling2_via_compositions(std::int64_t n, std::int64_t k);

/// (n!/k!) times the sum of 1/(i_1 i_2 ... i_k) over the compositions of n
/// into k positive parts, accumulated as an exact rational.
BigCount stirling1_via_compositions(std::int64_t n, std::int64_t k);

/// Partitions of an eta-set into kappa blocks of size lambda each:
/// eta! / (kappa! (lambda!)^kappa) when eta = kappa*lambda, else 0.
BigCount equal_block_partitions(std::int64_t eta, std::int64_t kappa, std::int64_t lambda);

/// Sum over partitions of n into exactly k parts (multiplicity vectors m_i)
/// of k! / (m_1! m_2! ... m_n!). Counts the same objects as binomial(n-1, k-1).
BigCount binomial_via_partition_multiplicities(std::int64_t n, std::int64_t k);

}  // namespace compcount
