#include "compcount/compositions.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "composition_walk.hpp"

namespace compcount {

std::int64_t Composition::total() const {
  return std::accumulate(parts.begin(), parts.end(), std::int64_t{0});
}

PartBounds PartBounds::at_least(std::int64_t lower) {
  if (lower < 0) throw DomainError("part lower bound must be nonnegative");
  PartBounds b;
  b.lower_ = lower;
  return b;
}

PartBounds PartBounds::between(std::int64_t lower, std::int64_t upper) {
  if (lower < 0) throw DomainError("part lower bound must be nonnegative");
  if (upper < lower) {
    throw DomainError("part bounds [" + std::to_string(lower) + ", " + std::to_string(upper) +
                      "] are empty");
  }
  PartBounds b;
  b.lower_ = lower;
  b.upper_ = upper;
  return b;
}

bool PartBounds::admits(std::int64_t part) const {
  return part >= lower_ && (!upper_ || part <= *upper_);
}

namespace {

void push_checked(std::vector<Composition>& out, const std::vector<std::int64_t>& parts,
                  std::size_t limit) {
  if (out.size() >= limit) {
    throw ResourceError("composition enumeration exceeded the limit of " + std::to_string(limit) +
                        " results");
  }
  out.push_back(Composition{parts});
}

// Distinct-part tables share the recurrence shape T[n,k] = T[n-k,k] + w(k) T[n-k,k-1]
// with T[0,0] = 1; w(k) = 1 for partitions and k for compositions.
std::vector<std::vector<BigCount>> distinct_table(std::int64_t max_n, std::int64_t max_k,
                                                  bool ordered) {
  const auto rows = static_cast<std::size_t>(max_n) + 1;
  const auto cols = static_cast<std::size_t>(max_k) + 1;
  std::vector<std::vector<BigCount>> t(rows, std::vector<BigCount>(cols, 0));
  t[0][0] = 1;
  for (std::int64_t n = 1; n <= max_n; ++n) {
    for (std::int64_t k = 1; k <= max_k; ++k) {
      const std::int64_t m = n - k;
      if (m < 0) continue;
      const auto um = static_cast<std::size_t>(m);
      const auto uk = static_cast<std::size_t>(k);
      BigCount below = t[um][uk - 1];
      if (ordered) below *= static_cast<unsigned long>(k);
      t[static_cast<std::size_t>(n)][uk] = t[um][uk] + below;
    }
  }
  return t;
}

// Largest k with k(k+1)/2 <= n, the most distinct positive parts n can hold.
std::int64_t max_distinct_parts(std::int64_t n) {
  std::int64_t k = 0;
  while ((k + 1) * (k + 2) / 2 <= n) ++k;
  return k;
}

BigCount distinct_count(std::int64_t n, std::int64_t k, bool ordered) {
  if (n < 0 || k < 0) return 0;
  if (k * (k + 1) / 2 > n) return 0;
  return distinct_table(n, k, ordered)[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

// f_n = 2 f_{n-1} - f_{n-gap} + [n == k] - [n == k+1], f_n = 0 for n < k.
// gap = k for the strict family and k+1 for the weak one.
std::vector<BigCount> leading_sequence(std::int64_t k, std::int64_t gap, std::int64_t max_n) {
  std::vector<BigCount> f(static_cast<std::size_t>(std::max<std::int64_t>(max_n, -1) + 1), 0);
  if (k < 1) return f;
  auto at = [&](std::int64_t i) -> BigCount { return i < 0 ? BigCount(0) : f[static_cast<std::size_t>(i)]; };
  for (std::int64_t n = k; n <= max_n; ++n) {
    BigCount v = 2 * at(n - 1) - at(n - gap);
    if (n == k) v += 1;
    if (n == k + 1) v -= 1;
    f[static_cast<std::size_t>(n)] = v;
  }
  return f;
}

BigCount sequence_at(const std::vector<BigCount>& seq, std::int64_t n) {
  if (n < 0 || n >= static_cast<std::int64_t>(seq.size())) return 0;
  return seq[static_cast<std::size_t>(n)];
}

void require_positive_part(std::int64_t k, const char* what) {
  if (k < 1) throw DomainError(std::string(what) + ": part k must be at least 1");
}

}  // namespace

std::vector<Composition> enumerate_compositions(std::int64_t n, std::int64_t k,
                                                const PartBounds& bounds,
                                                const PartPredicate& predicate,
                                                std::size_t limit) {
  std::vector<Composition> out;
  const std::int64_t upper = bounds.upper().value_or(-1);
  detail::walk_compositions(n, k, bounds.lower(), upper, [&](const std::vector<std::int64_t>& parts) {
    if (!predicate || predicate(parts)) push_checked(out, parts, limit);
    return true;
  });
  return out;
}

std::vector<Composition> enumerate_all_compositions(std::int64_t n, const PartPredicate& predicate,
                                                    std::size_t limit) {
  std::vector<Composition> out;
  if (n < 0) return out;
  if (n == 0) {
    if (!predicate || predicate({})) push_checked(out, {}, limit);
    return out;
  }
  for (std::int64_t k = 1; k <= n; ++k) {
    detail::walk_compositions(n, k, 1, -1, [&](const std::vector<std::int64_t>& parts) {
      if (!predicate || predicate(parts)) push_checked(out, parts, limit);
      return true;
    });
  }
  return out;
}

BigCount count_restricted_by_dp(std::int64_t n, std::int64_t k, const PartBounds& bounds) {
  if (n < 0 || k < 0) return 0;
  // Subtract the lower bound from every part: parts become 0..width.
  const std::int64_t shifted = n - k * bounds.lower();
  if (shifted < 0) return 0;
  const std::int64_t width = bounds.bounded() ? *bounds.upper() - bounds.lower() : shifted;
  if (bounds.bounded() && shifted > width * k) return 0;

  const auto size = static_cast<std::size_t>(shifted) + 1;
  std::vector<BigCount> ways(size, 0);
  ways[0] = 1;
  std::vector<BigCount> prefix(size + 1);
  for (std::int64_t part = 0; part < k; ++part) {
    prefix[0] = 0;
    for (std::size_t s = 0; s < size; ++s) prefix[s + 1] = prefix[s] + ways[s];
    for (std::size_t s = 0; s < size; ++s) {
      // sum of ways[s - p] for p in 0..min(s, width)
      const std::size_t low = s >= static_cast<std::size_t>(width) ? s - static_cast<std::size_t>(width) : 0;
      ways[s] = prefix[s + 1] - prefix[low];
    }
  }
  return ways[static_cast<std::size_t>(shifted)];
}

BigCount count_restricted(std::int64_t n, std::int64_t k, const PartBounds& bounds) {
  if (n < 0 || k < 0) return 0;
  // The closed forms below read binomial(n-1, -1) = 0 at k = 0, which would
  // miss the empty composition of 0.
  if (k == 0) return n == 0 ? 1 : 0;
  if (!bounds.bounded() && bounds.lower() == 0) return binomial(n + k - 1, k - 1);
  if (!bounds.bounded() && bounds.lower() == 1) return binomial(n - 1, k - 1);
  return count_restricted_by_dp(n, k, bounds);
}

BigCount count_partitions_distinct(std::int64_t n, std::int64_t k) {
  return distinct_count(n, k, false);
}

BigCount count_compositions_distinct(std::int64_t n, std::int64_t k) {
  return distinct_count(n, k, true);
}

BigCount count_compositions_distinct_total(std::int64_t n) {
  if (n <= 0) return 0;
  const std::int64_t kmax = max_distinct_parts(n);
  const auto table = distinct_table(n, kmax, true);
  BigCount sum = 0;
  for (std::int64_t k = 1; k <= kmax; ++k) {
    sum += table[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
  }
  return sum;
}

std::vector<BigCount> leading_strict_sequence(std::int64_t k, std::int64_t max_n) {
  return leading_sequence(k, k, max_n);
}

std::vector<BigCount> leading_weak_sequence(std::int64_t k, std::int64_t max_n) {
  return leading_sequence(k, k + 1, max_n);
}

BigCount count_leading_strict(std::int64_t n, std::int64_t k) {
  if (n < 1 || k < 1 || n < k) return 0;
  return sequence_at(leading_strict_sequence(k, n), n);
}

BigCount count_leading_weak(std::int64_t n, std::int64_t k) {
  if (n < 1 || k < 1 || n < k) return 0;
  return sequence_at(leading_weak_sequence(k, n), n);
}

BigCount count_leading_strict_total(std::int64_t n) {
  BigCount sum = 0;
  for (std::int64_t k = 1; k <= n; ++k) sum += count_leading_strict(n, k);
  return sum;
}

BigCount leading_weak_total(std::int64_t n) {
  BigCount sum = 0;
  for (std::int64_t k = 1; k <= n; ++k) sum += count_leading_weak(n, k);
  return sum;
}

BigCount total_compositions(std::int64_t n) {
  if (n <= 0) return 0;
  return pow2(n - 1);
}

std::vector<BigCount> avoiding_sequence(std::int64_t k, std::int64_t max_n) {
  require_positive_part(k, "count_avoiding");
  std::vector<BigCount> c(static_cast<std::size_t>(std::max<std::int64_t>(max_n, -1) + 1), 0);
  // Seeds n <= k+1 by direct count over first parts: c'(m) = sum_{p != k} c'(m-p)
  // with c'(0) = 1 for the empty tail.
  const std::int64_t seed_end = std::min(max_n, k + 1);
  std::vector<BigCount> tails(static_cast<std::size_t>(std::max<std::int64_t>(seed_end, 0)) + 1, 0);
  tails[0] = 1;
  for (std::int64_t m = 1; m <= seed_end; ++m) {
    BigCount v = 0;
    for (std::int64_t p = 1; p <= m; ++p) {
      if (p != k) v += tails[static_cast<std::size_t>(m - p)];
    }
    tails[static_cast<std::size_t>(m)] = v;
    c[static_cast<std::size_t>(m)] = v;
  }
#ifdef COMPCOUNT_MUTATE_AVOIDING
  const std::int64_t last_lag = k - 1;
#else
  const std::int64_t last_lag = k + 1;
#endif
  for (std::int64_t n = k + 2; n <= max_n; ++n) {
    const auto at = [&](std::int64_t i) -> const BigCount& { return c[static_cast<std::size_t>(i)]; };
    c[static_cast<std::size_t>(n)] = 2 * at(n - 1) - at(n - k) + at(n - last_lag);
  }
  return c;
}

BigCount count_avoiding(std::int64_t n, std::int64_t k) {
  require_positive_part(k, "count_avoiding");
  if (n <= 0) return 0;
  return sequence_at(avoiding_sequence(k, n), n);
}

BigCount count_containing(std::int64_t n, std::int64_t k) {
  require_positive_part(k, "count_containing");
  if (n <= 0) return 0;
  return total_compositions(n) - count_avoiding(n, k);
}

BigCount fibonacci_higher(std::int64_t m, std::int64_t n) {
  if (m < 1) throw DomainError("fibonacci_higher: order m must be at least 1");
  if (n < 0) return 0;
  std::vector<BigCount> phi(static_cast<std::size_t>(n) + 1, 0);
  phi[0] = 1;
  for (std::int64_t i = 1; i <= n; ++i) {
    BigCount v = 0;
    for (std::int64_t j = 1; j <= m && j <= i; ++j) v += phi[static_cast<std::size_t>(i - j)];
    phi[static_cast<std::size_t>(i)] = v;
  }
  return phi[static_cast<std::size_t>(n)];
}

Triangle triangle(TriangleKind kind, std::int64_t rows) {
  if (rows < 1) throw DomainError("triangle: at least one row is required");
  const std::int64_t max_n = rows - 1;
  const auto table = distinct_table(max_n, max_n, kind == TriangleKind::compositions_distinct);
  Triangle t{kind, {}};
  t.rows.reserve(static_cast<std::size_t>(rows));
  for (std::int64_t n = 0; n <= max_n; ++n) {
    const auto& full = table[static_cast<std::size_t>(n)];
    t.rows.emplace_back(full.begin(), full.begin() + n + 1);
  }
  return t;
}

}  // namespace compcount
