#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "compcount/exactnum.hpp"

namespace compcount {

/// Ordered sequence of nonnegative parts; represents the sum of its parts.
struct Composition {
  std::vector<std::int64_t> parts;

  std::int64_t total() const;
  std::size_t size() const { return parts.size(); }

  friend auto operator<=>(const Composition&, const Composition&) = default;
};

/// Inclusive bounds a <= part <= b on every part. The upper bound is either a
/// value or absent (unbounded).
class PartBounds {
 public:
  /// [0, inf)
  PartBounds() = default;

  static PartBounds at_least(std::int64_t lower);
  /// Throws DomainError unless 0 <= lower <= upper.
  static PartBounds between(std::int64_t lower, std::int64_t upper);

  std::int64_t lower() const { return lower_; }
  const std::optional<std::int64_t>& upper() const { return upper_; }
  bool bounded() const { return upper_.has_value(); }
  bool admits(std::int64_t part) const;

 private:
  std::int64_t lower_ = 0;
  std::optional<std::int64_t> upper_;
};

using PartPredicate = std::function<bool(std::span<const std::int64_t>)>;

inline constexpr std::size_t kDefaultEnumerationLimit = 10'000'000;

/// Every solution of i_1 + ... + i_k = n with all parts inside `bounds` and
/// accepted by `predicate`, in lexicographic order. Throws ResourceError once
/// more than `limit` compositions would be returned.
std::vector<Composition> enumerate_compositions(std::int64_t n, std::int64_t k,
                                                const PartBounds& bounds,
                                                const PartPredicate& predicate = {},
                                                std::size_t limit = kDefaultEnumerationLimit);

/// Compositions of n into positive parts with any number of parts, ordered by
/// part count and then lexicographically. n = 0 yields the empty composition.
std::vector<Composition> enumerate_all_compositions(std::int64_t n,
                                                    const PartPredicate& predicate = {},
                                                    std::size_t limit = kDefaultEnumerationLimit);

/// Number of solutions of i_1 + ... + i_k = n within bounds. Uses the binomial
/// closed forms for [0, inf) and [1, inf) and count_restricted_by_dp otherwise.
BigCount count_restricted(std::int64_t n, std::int64_t k, const PartBounds& bounds);

/// Dynamic program over (parts placed, running sum). Never uses closed forms.
BigCount count_restricted_by_dp(std::int64_t n, std::int64_t k, const PartBounds& bounds);

/// Partitions of n into k distinct nonzero parts.
BigCount count_partitions_distinct(std::int64_t n, std::int64_t k);

/// Compositions of n into k distinct nonzero parts.
BigCount count_compositions_distinct(std::int64_t n, std::int64_t k);

/// Compositions of n into distinct parts, any number k >= 1 of parts.
/// Zero for n <= 0.
BigCount count_compositions_distinct_total(std::int64_t n);

// Leading-summand families. The first part equals k and bounds every later
// part: strictly (< k) or weakly (<= k).

BigCount count_leading_strict(std::int64_t n, std::int64_t k);
BigCount count_leading_weak(std::int64_t n, std::int64_t k);

/// Coefficients 0..max_n of the strict/weak family for a fixed leading part k.
std::vector<BigCount> leading_strict_sequence(std::int64_t k, std::int64_t max_n);
std::vector<BigCount> leading_weak_sequence(std::int64_t k, std::int64_t max_n);

/// Compositions of n whose first part is strictly larger than all others.
BigCount count_leading_strict_total(std::int64_t n);

/// Compositions of n whose first part is at least as large as all others.
BigCount leading_weak_total(std::int64_t n);

/// Compositions of n >= 1 into positive parts; zero for n <= 0.
BigCount total_compositions(std::int64_t n);

/// Compositions of n with no part equal to k (zero for n <= 0).
BigCount count_avoiding(std::int64_t n, std::int64_t k);
std::vector<BigCount> avoiding_sequence(std::int64_t k, std::int64_t max_n);

/// Compositions of n in which at least one part equals k.
BigCount count_containing(std::int64_t n, std::int64_t k);

/// Compositions of n into parts of size at most m (the order-m Fibonacci
/// numbers); fibonacci_higher(m, 0) = 1.
BigCount fibonacci_higher(std::int64_t m, std::int64_t n);

enum class TriangleKind { partitions_distinct, compositions_distinct };

struct Triangle {
  TriangleKind kind;
  /// rows[n][k] for 0 <= k <= n.
  std::vector<std::vector<BigCount>> rows;
};

Triangle triangle(TriangleKind kind, std::int64_t rows);

}  // namespace compcount
