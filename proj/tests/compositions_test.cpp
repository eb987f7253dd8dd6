#include "compcount/compositions.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "oracles.hpp"

namespace compcount {
namespace {

using Parts = std::vector<std::int64_t>;

std::vector<Parts> parts_of(const std::vector<Composition>& comps) {
  std::vector<Parts> out;
  for (const auto& c : comps) out.push_back(c.parts);
  return out;
}

bool distinct(std::span<const std::int64_t> p) {
  return std::set<std::int64_t>(p.begin(), p.end()).size() == p.size();
}

unsigned long count_all(std::int64_t n, const std::function<bool(const Parts&)>& keep) {
  unsigned long c = 0;
  oracle::for_each_composition(n, [&](const Parts& p) { c += keep(p) ? 1 : 0; });
  return c;
}

TEST(PartBounds, Validation) {
  EXPECT_THROW(PartBounds::between(3, 2), DomainError);
  EXPECT_THROW(PartBounds::at_least(-1), DomainError);
  const auto b = PartBounds::between(1, 3);
  EXPECT_TRUE(b.bounded());
  EXPECT_TRUE(b.admits(3));
  EXPECT_FALSE(b.admits(0));
  EXPECT_FALSE(PartBounds{}.bounded());
  EXPECT_TRUE(PartBounds{}.admits(1'000'000));
}

TEST(EnumerateCompositions, Examples) {
  EXPECT_EQ(parts_of(enumerate_compositions(2, 2, PartBounds{})), (std::vector<Parts>{{0, 2}, {1, 1}, {2, 0}}));
  EXPECT_EQ(parts_of(enumerate_compositions(0, 0, PartBounds::between(2, 5))), (std::vector<Parts>{{}}));
  EXPECT_EQ(parts_of(enumerate_compositions(3, 2, PartBounds::at_least(1), distinct)),
            (std::vector<Parts>{{1, 2}, {2, 1}}));
  EXPECT_TRUE(enumerate_compositions(-1, 2, PartBounds{}).empty());
  EXPECT_TRUE(enumerate_compositions(3, 0, PartBounds{}).empty());
}

TEST(EnumerateCompositions, LexicographicAndCompleteAgainstOracle) {
  for (std::int64_t n = 0; n <= 10; ++n) {
    std::vector<Parts> expected;
    oracle::for_each_composition(n, [&](const Parts& p) { expected.push_back(p); });
    std::sort(expected.begin(), expected.end());
    auto got = parts_of(enumerate_all_compositions(n));
    EXPECT_EQ(got.size(), expected.size());
    std::sort(got.begin(), got.end());
    EXPECT_EQ(got, expected);
    for (std::int64_t k = 0; k <= n; ++k) {
      const auto fixed = parts_of(enumerate_compositions(n, k, PartBounds::at_least(1)));
      EXPECT_TRUE(std::is_sorted(fixed.begin(), fixed.end()));
    }
  }
}

TEST(EnumerateCompositions, LimitIsAResourceError) {
  EXPECT_THROW(enumerate_compositions(20, 5, PartBounds{}, {}, 100), ResourceError);
  EXPECT_NO_THROW(enumerate_compositions(4, 2, PartBounds{}, {}, 5));
  EXPECT_THROW(enumerate_compositions(4, 2, PartBounds{}, {}, 4), ResourceError);
}

TEST(CountRestricted, Examples) {
  EXPECT_EQ(count_restricted(8, 6, PartBounds{}), 1287);
  EXPECT_EQ(count_restricted(4, 2, PartBounds::at_least(1)), 3);
  EXPECT_EQ(count_restricted(5, 2, PartBounds::between(1, 2)), 0);
  EXPECT_EQ(count_restricted(0, 0, PartBounds::at_least(3)), 1);
  EXPECT_EQ(count_restricted(-2, 3, PartBounds{}), 0);
  EXPECT_EQ(count_restricted(5, 2, PartBounds::at_least(3)), 0);
}

TEST(CountRestricted, FigureOnePathCodeIsOneOfTheSolutions) {
  const auto all = parts_of(enumerate_compositions(8, 6, PartBounds{}));
  EXPECT_EQ(all.size(), 1287u);
  EXPECT_NE(std::find(all.begin(), all.end(), Parts{1, 2, 3, 0, 2, 0}), all.end());
}

TEST(CountRestricted, MatchesEnumerationForAssortedBounds) {
  for (std::int64_t n = 0; n <= 12; ++n) {
    for (std::int64_t k = 0; k <= 6; ++k) {
      for (std::int64_t a = 0; a <= 3; ++a) {
        EXPECT_EQ(count_restricted(n, k, PartBounds::at_least(a)),
                  static_cast<unsigned long>(enumerate_compositions(n, k, PartBounds::at_least(a)).size()));
        for (std::int64_t b = a; b <= 5; ++b) {
          const auto bounds = PartBounds::between(a, b);
          EXPECT_EQ(count_restricted(n, k, bounds),
                    static_cast<unsigned long>(enumerate_compositions(n, k, bounds).size()))
              << n << ' ' << k << ' ' << a << ' ' << b;
        }
      }
    }
  }
}

TEST(CountRestricted, MonotoneInUpperBound) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const std::int64_t n = rng() % 30;
    const std::int64_t k = rng() % 8;
    const std::int64_t a = rng() % 3;
    const std::int64_t b = a + rng() % 6;
    const std::int64_t b2 = b + rng() % 6;
    EXPECT_LE(count_restricted(n, k, PartBounds::between(a, b)), count_restricted(n, k, PartBounds::between(a, b2)));
    EXPECT_LE(count_restricted(n, k, PartBounds::between(a, b2)), count_restricted(n, k, PartBounds::at_least(a)));
  }
}

TEST(DistinctParts, Examples) {
  EXPECT_EQ(count_partitions_distinct(0, 0), 1);
  EXPECT_EQ(count_partitions_distinct(6, 3), 1);
  EXPECT_EQ(count_partitions_distinct(9, 3), 3);
  EXPECT_EQ(count_partitions_distinct(-1, 0), 0);
  EXPECT_EQ(count_partitions_distinct(4, 0), 0);
  EXPECT_EQ(count_compositions_distinct(0, 0), 1);
  EXPECT_EQ(count_compositions_distinct(6, 3), 6);
  EXPECT_EQ(count_compositions_distinct(3, 2), 2);
  EXPECT_EQ(count_compositions_distinct_total(3), 3);
  EXPECT_EQ(count_compositions_distinct_total(6), 11);
  EXPECT_EQ(count_compositions_distinct_total(0), 0);
}

TEST(DistinctParts, ZeroBeyondMinimalSum) {
  for (std::int64_t n = 0; n <= 40; ++n) {
    for (std::int64_t k = 0; k <= 12; ++k) {
      if (k * (k + 1) / 2 > n) {
        EXPECT_EQ(count_partitions_distinct(n, k), 0);
        EXPECT_EQ(count_compositions_distinct(n, k), 0);
      }
    }
  }
}

TEST(DistinctParts, OrderingsFactor) {
  for (std::int64_t n = 0; n <= 30; ++n) {
    for (std::int64_t k = 0; k <= n; ++k) {
      EXPECT_EQ(count_compositions_distinct(n, k), oracle::product_factorial(k) * count_partitions_distinct(n, k));
    }
  }
}

TEST(DistinctParts, TotalMatchesPartitionOracle) {
  for (std::int64_t n = 0; n <= 40; ++n) {
    EXPECT_EQ(count_compositions_distinct_total(n), oracle::distinct_compositions_total(n)) << n;
  }
}

TEST(Triangle, Rows) {
  const auto one = triangle(TriangleKind::partitions_distinct, 1);
  EXPECT_EQ(one.rows, (std::vector<std::vector<BigCount>>{{1}}));
  const auto c = triangle(TriangleKind::compositions_distinct, 4);
  ASSERT_EQ(c.rows.size(), 4u);
  EXPECT_EQ(c.rows[3], (std::vector<BigCount>{0, 1, 2, 0}));
  const auto p = triangle(TriangleKind::partitions_distinct, 7);
  EXPECT_EQ(p.rows[6], (std::vector<BigCount>{0, 1, 2, 1, 0, 0, 0}));
  for (std::size_t n = 0; n < p.rows.size(); ++n) EXPECT_EQ(p.rows[n].size(), n + 1);
  EXPECT_THROW(triangle(TriangleKind::partitions_distinct, 0), DomainError);
}

TEST(LeadingSummand, Examples) {
  EXPECT_EQ(count_leading_strict(5, 3), 2);
  EXPECT_EQ(count_leading_strict(1, 1), 1);
  EXPECT_EQ(count_leading_strict(4, 1), 0);
  EXPECT_EQ(count_leading_weak(5, 2), 3);
  EXPECT_EQ(count_leading_weak(9, 9), 1);
  EXPECT_EQ(count_leading_weak(4, 1), 1);
  EXPECT_EQ(count_leading_strict_total(4), 3);
  EXPECT_EQ(count_leading_strict_total(1), 1);
  EXPECT_EQ(count_leading_strict_total(3), 2);
  EXPECT_EQ(leading_weak_total(2), 2);
  EXPECT_EQ(leading_weak_total(3), 3);
  EXPECT_EQ(leading_weak_total(1), 1);
}

TEST(LeadingSummand, MatchesOracleUpToForty) {
  for (std::int64_t k = 1; k <= 6; ++k) {
    oracle::FirstPartCounter strict([k](auto p) { return p == k; }, [k](auto p) { return p < k; });
    oracle::FirstPartCounter weak([k](auto p) { return p == k; }, [k](auto p) { return p <= k; });
    for (std::int64_t n = 0; n <= 40; ++n) {
      EXPECT_EQ(count_leading_strict(n, k), strict.count(n)) << n << ' ' << k;
      EXPECT_EQ(count_leading_weak(n, k), weak.count(n)) << n << ' ' << k;
    }
  }
}

TEST(LeadingSummand, TotalsMatchListing) {
  for (std::int64_t n = 1; n <= 14; ++n) {
    const auto strictly_largest_first = [](const Parts& p) {
      return std::all_of(p.begin() + 1, p.end(), [&](auto x) { return x < p.front(); });
    };
    const auto largest_first = [](const Parts& p) {
      return std::all_of(p.begin() + 1, p.end(), [&](auto x) { return x <= p.front(); });
    };
    EXPECT_EQ(count_leading_strict_total(n), count_all(n, strictly_largest_first)) << n;
    EXPECT_EQ(leading_weak_total(n), count_all(n, largest_first)) << n;
  }
}

TEST(LeadingSummand, ShiftIdentityHoldsFromOne) {
  for (std::int64_t n = 1; n <= 39; ++n) {
    EXPECT_EQ(count_leading_strict_total(n + 1), leading_weak_total(n)) << n;
  }
}

TEST(AvoidContain, Examples) {
  EXPECT_EQ(count_avoiding(3, 2), 2);
  EXPECT_EQ(count_avoiding(4, 2), 4);
  EXPECT_EQ(count_avoiding(1, 1), 0);
  EXPECT_EQ(count_containing(2, 1), 1);
  EXPECT_EQ(count_containing(3, 2), 2);
  EXPECT_EQ(count_containing(4, 9), 0);
  EXPECT_THROW(count_avoiding(4, 0), DomainError);
  EXPECT_THROW(count_containing(4, -2), DomainError);
}

TEST(AvoidContain, MatchOraclesUpToForty) {
  for (std::int64_t k = 1; k <= 6; ++k) {
    oracle::FirstPartCounter avoid([k](auto p) { return p != k; }, [k](auto p) { return p != k; });
    for (std::int64_t n = 0; n <= 40; ++n) {
      EXPECT_EQ(count_avoiding(n, k), avoid.count(n)) << n << ' ' << k;
      EXPECT_EQ(count_containing(n, k), oracle::containing_by_state(n, k)) << n << ' ' << k;
    }
  }
}

TEST(AvoidContain, PartitionAllCompositions) {
  for (std::int64_t k = 1; k <= 10; ++k) {
    for (std::int64_t n = 1; n <= 60; ++n) {
      EXPECT_EQ(count_avoiding(n, k) + count_containing(n, k), oracle::Count(1) << static_cast<unsigned>(n - 1));
    }
  }
}

TEST(HigherFibonacci, Examples) {
  EXPECT_EQ(fibonacci_higher(1, 5), 1);
  EXPECT_EQ(fibonacci_higher(2, 4), 5);
  EXPECT_EQ(fibonacci_higher(3, 0), 1);
  EXPECT_THROW(fibonacci_higher(0, 3), DomainError);
  for (std::int64_t m = 1; m <= 5; ++m) {
    for (std::int64_t n = 1; n <= 15; ++n) {
      EXPECT_EQ(fibonacci_higher(m, n),
                count_all(n, [m](const Parts& p) { return std::all_of(p.begin(), p.end(), [m](auto x) { return x <= m; }); }));
    }
  }
}

TEST(HigherFibonacci, SatisfiesOrderMRecurrence) {
  for (std::int64_t m = 2; m <= 6; ++m) {
    for (std::int64_t n = 0; n <= 30; ++n) {
      BigCount window = 0;
      for (std::int64_t i = 0; i < m; ++i) window += fibonacci_higher(m, n + i);
      EXPECT_EQ(fibonacci_higher(m, n + m), window);
    }
  }
}

}  // namespace
}  // namespace compcount
