#include "compcount/verify.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "compcount/compositions.hpp"
#include "compcount/exactnum.hpp"
#include "compcount/series.hpp"

namespace compcount {

std::uint64_t SeededRng::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t SeededRng::below(std::uint64_t bound) {
  if (bound == 0) throw DomainError("SeededRng::below: bound must be positive");
  return next() % bound;
}

bool SeededRng::chance(std::uint64_t numerator, std::uint64_t denominator) {
  return below(denominator) < numerator;
}

namespace {

std::vector<std::size_t> shuffled_labels(std::size_t n, SeededRng& rng) {
  std::vector<std::size_t> labels(n);
  std::iota(labels.begin(), labels.end(), std::size_t{0});
  for (std::size_t i = n; i > 1; --i) std::swap(labels[i - 1], labels[rng.below(i)]);
  return labels;
}

}  // namespace

LabeledGraph random_tree(std::size_t n, SeededRng& rng) {
  const auto label = shuffled_labels(n, rng);
  LabeledGraph g(n);
  for (std::size_t i = 1; i < n; ++i) g.add_edge(label[i], label[rng.below(i)]);
  return g;
}

LabeledGraph random_connected_graph(std::size_t n, std::uint64_t num, std::uint64_t den,
                                    SeededRng& rng) {
  LabeledGraph g = random_tree(n, rng);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (rng.chance(num, den)) g.add_edge(u, v);
    }
  }
  return g;
}

LabeledGraph random_graph(std::size_t n, std::uint64_t num, std::uint64_t den, SeededRng& rng) {
  LabeledGraph g(n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (rng.chance(num, den)) g.add_edge(u, v);
    }
  }
  return g;
}

LabeledGraph random_block_graph(std::size_t n, SeededRng& rng) {
  const auto label = shuffled_labels(n, rng);
  LabeledGraph g(n);
  std::size_t placed = 0;
  while (placed < n) {
    const std::size_t size = std::min<std::size_t>(n - placed, 1 + rng.below(5));
    // blob on label[placed .. placed+size), dense enough to be mostly 2-connected
    for (std::size_t i = placed; i < placed + size; ++i) {
      for (std::size_t j = i + 1; j < placed + size; ++j) {
        if (j == i + 1 || rng.chance(2, 3)) g.add_edge(label[i], label[j]);
      }
    }
    if (placed > 0) {
      const std::size_t anchor = label[rng.below(placed)];
      switch (rng.below(3)) {
        case 0:  // bridge
          g.add_edge(anchor, label[placed]);
          break;
        case 1:  // shared vertex: the blob's first vertex also joins the anchor's neighborhood
          for (std::size_t i = placed + 1; i < placed + size; ++i) {
            if (g.has_edge(label[placed], label[i])) g.add_edge(anchor, label[i]);
          }
          g.add_edge(anchor, label[placed]);
          break;
        default:  // disjoint
          break;
      }
    }
    placed += size;
  }
  return g;
}

VerifySuite parse_verify_suite(const std::string& name) {
  if (name == "all") return VerifySuite::all;
  if (name == "compositions") return VerifySuite::compositions;
  if (name == "series") return VerifySuite::series;
  if (name == "graphs") return VerifySuite::graphs;
  throw DomainError("unknown verify suite '" + name + "'");
}

namespace {

// Explicit enumeration stays below ~2^20 compositions per n.
constexpr std::int64_t kEnumerationMaxN = 20;

class Check {
 public:
  explicit Check(std::string name) { result_.name = std::move(name); }

  void expect_equal(const BigInt& actual, const BigInt& expected, const std::string& where) {
    if (!result_.passed || actual == expected) return;
    result_.passed = false;
    result_.detail = where + ": got " + to_decimal(actual) + ", expected " + to_decimal(expected);
  }

  void expect(bool condition, const std::string& where) {
    if (!result_.passed || condition) return;
    result_.passed = false;
    result_.detail = where;
  }

  CheckResult finish() && { return std::move(result_); }

 private:
  CheckResult result_;
};

std::string at(std::initializer_list<std::pair<const char*, std::int64_t>> args) {
  std::ostringstream s;
  bool first = true;
  for (const auto& [k, v] : args) {
    s << (first ? "" : ", ") << k << '=' << v;
    first = false;
  }
  return s.str();
}

bool all_distinct(std::span<const std::int64_t> parts) {
  std::vector<std::int64_t> v(parts.begin(), parts.end());
  std::sort(v.begin(), v.end());
  return std::adjacent_find(v.begin(), v.end()) == v.end();
}

bool nonincreasing(std::span<const std::int64_t> parts) {
  return std::is_sorted(parts.rbegin(), parts.rend());
}

BigCount count_of(std::size_t n) { return BigCount(static_cast<unsigned long>(n)); }

void compositions_suite(std::int64_t max_n, std::vector<CheckResult>& out) {
  const std::int64_t enum_n = std::min(max_n, kEnumerationMaxN);
  const PartBounds positive = PartBounds::at_least(1);

  {
    Check c("distinct-part recurrences match enumeration");
    for (std::int64_t n = 0; n <= enum_n; ++n) {
      for (std::int64_t k = 0; k <= n; ++k) {
        const auto distinct = enumerate_compositions(n, k, positive, all_distinct);
        const auto sorted = enumerate_compositions(n, k, positive, [](auto p) {
          return all_distinct(p) && nonincreasing(p);
        });
        c.expect_equal(count_compositions_distinct(n, k), count_of(distinct.size()), "C" + at({{"n", n}, {"k", k}}));
        c.expect_equal(count_partitions_distinct(n, k), count_of(sorted.size()), "Pi" + at({{"n", n}, {"k", k}}));
      }
      c.expect_equal(count_compositions_distinct_total(n),
                     n == 0 ? BigCount(0) : count_of(enumerate_all_compositions(n, all_distinct).size()),
                     "C[n]" + at({{"n", n}}));
    }
    out.push_back(std::move(c).finish());
  }
  {
    Check c("C[n,k] = k! Pi[n,k]");
    for (std::int64_t n = 0; n <= max_n; ++n) {
      for (std::int64_t k = 0; k <= n; ++k) {
        c.expect_equal(count_compositions_distinct(n, k), factorial(k) * count_partitions_distinct(n, k),
                       at({{"n", n}, {"k", k}}));
      }
    }
    out.push_back(std::move(c).finish());
  }
  {
    Check c("restricted counts: closed forms, DP and enumeration agree");
    for (std::int64_t n = 0; n <= max_n; ++n) {
      for (std::int64_t k = 1; k <= max_n; ++k) {
        c.expect_equal(count_restricted(n, k, PartBounds{}), count_restricted_by_dp(n, k, PartBounds{}),
                       "[0,inf) " + at({{"n", n}, {"k", k}}));
        c.expect_equal(count_restricted(n, k, positive), count_restricted_by_dp(n, k, positive),
                       "[1,inf) " + at({{"n", n}, {"k", k}}));
      }
    }
    for (std::int64_t n = 0; n <= std::min<std::int64_t>(enum_n, 12); ++n) {
      for (std::int64_t k = 0; k <= 5; ++k) {
        for (std::int64_t a = 0; a <= 2; ++a) {
          for (std::int64_t b = a; b <= 4; ++b) {
            const auto bounds = PartBounds::between(a, b);
            c.expect_equal(count_restricted(n, k, bounds),
                           count_of(enumerate_compositions(n, k, bounds).size()),
                           at({{"n", n}, {"k", k}, {"a", a}, {"b", b}}));
          }
        }
      }
    }
    out.push_back(std::move(c).finish());
  }
  {
    Check c("leading-summand counts match enumeration");
    for (std::int64_t n = 1; n <= enum_n; ++n) {
      const auto all = enumerate_all_compositions(n);
      for (std::int64_t k = 1; k <= n; ++k) {
        std::size_t strict = 0;
        std::size_t weak = 0;
        for (const auto& comp : all) {
          if (comp.parts.front() != k) continue;
          const auto tail = std::span(comp.parts).subspan(1);
          if (std::all_of(tail.begin(), tail.end(), [k](auto p) { return p < k; })) ++strict;
          if (std::all_of(tail.begin(), tail.end(), [k](auto p) { return p <= k; })) ++weak;
        }
        c.expect_equal(count_leading_strict(n, k), count_of(strict), "strict " + at({{"n", n}, {"k", k}}));
        c.expect_equal(count_leading_weak(n, k), count_of(weak), "weak " + at({{"n", n}, {"k", k}}));
      }
    }
    for (std::int64_t n = 1; n < max_n; ++n) {
      c.expect_equal(leading_weak_total(n), count_leading_strict_total(n + 1), "f_(n+1) = f*_n " + at({{"n", n}}));
    }
    out.push_back(std::move(c).finish());
  }
  {
    Check c("avoiding/containing part k match enumeration");
    for (std::int64_t n = 1; n <= enum_n; ++n) {
      const auto all = enumerate_all_compositions(n);
      for (std::int64_t k = 1; k <= 6; ++k) {
        const auto with_k = std::count_if(all.begin(), all.end(), [k](const Composition& comp) {
          return std::find(comp.parts.begin(), comp.parts.end(), k) != comp.parts.end();
        });
        const auto contain = static_cast<std::size_t>(with_k);
        c.expect_equal(count_containing(n, k), count_of(contain), "contain " + at({{"n", n}, {"k", k}}));
        c.expect_equal(count_avoiding(n, k), count_of(all.size() - contain), "avoid " + at({{"n", n}, {"k", k}}));
      }
    }
    out.push_back(std::move(c).finish());
  }
  {
    Check c("higher-order Fibonacci numbers match enumeration");
    for (std::int64_t n = 0; n <= enum_n; ++n) {
      for (std::int64_t m = 1; m <= 5; ++m) {
        const auto bounded = enumerate_all_compositions(n, [m](auto p) {
          return std::all_of(p.begin(), p.end(), [m](auto x) { return x <= m; });
        });
        c.expect_equal(fibonacci_higher(m, n), count_of(bounded.size()), at({{"m", m}, {"n", n}}));
      }
    }
    out.push_back(std::move(c).finish());
  }
  {
    Check c("Stirling, Bell and partition-multiplicity identities");
    const std::int64_t top = std::min<std::int64_t>(max_n, 12);
    for (std::int64_t n = 0; n <= top; ++n) {
      BigCount row_sum = 0;
      for (std::int64_t k = 0; k <= n; ++k) {
        row_sum += stirling2(n, k);
        c.expect_equal(stirling2_via_compositions(n, k), stirling2(n, k), "S2 " + at({{"n", n}, {"k", k}}));
        c.expect_equal(stirling1_via_compositions(n, k), stirling1(n, k), "S1 " + at({{"n", n}, {"k", k}}));
        if (k >= 1) {
          c.expect_equal(binomial_via_partition_multiplicities(n, k), binomial(n - 1, k - 1),
                         "multiplicities " + at({{"n", n}, {"k", k}}));
        }
      }
      c.expect_equal(bell(n), row_sum, "Bell " + at({{"n", n}}));
    }
    out.push_back(std::move(c).finish());
  }
}

void series_suite(std::int64_t max_n, std::vector<CheckResult>& out) {
  const std::int64_t order = std::max<std::int64_t>(max_n, 1);
  {
    Check c("leading-summand gf expansions match recurrences");
    for (std::int64_t k = 1; k <= 6; ++k) {
      const auto strict = series_from_rational(gf_leading_strict(k), order);
      const auto weak = series_from_rational(gf_leading_weak(k), order);
      const auto strict_fib = series_from_rational(gf_leading_fibonacci_form(k, false), order);
      const auto weak_fib = series_from_rational(gf_leading_fibonacci_form(k, true), order);
      for (std::int64_t n = 0; n <= order; ++n) {
        c.expect_equal(strict.coefficient(n), count_leading_strict(n, k), "F_k " + at({{"k", k}, {"n", n}}));
        c.expect_equal(weak.coefficient(n), count_leading_weak(n, k), "F*_k " + at({{"k", k}, {"n", n}}));
        c.expect_equal(strict_fib.coefficient(n), strict.coefficient(n), "Fibonacci form " + at({{"k", k}, {"n", n}}));
        c.expect_equal(weak_fib.coefficient(n), weak.coefficient(n), "Fibonacci form* " + at({{"k", k}, {"n", n}}));
      }
    }
    out.push_back(std::move(c).finish());
  }
  {
    Check c("avoiding/containing gf expansions match recurrences");
    for (std::int64_t k = 1; k <= 6; ++k) {
      const auto avoid = series_from_rational(gf_avoiding(k), order);
      const auto contain = series_from_rational(gf_containing(k), order);
      for (std::int64_t n = 0; n <= order; ++n) {
        c.expect_equal(avoid.coefficient(n), count_avoiding(n, k), "avoid " + at({{"k", k}, {"n", n}}));
        c.expect_equal(contain.coefficient(n), count_containing(n, k), "contain " + at({{"k", k}, {"n", n}}));
      }
    }
    out.push_back(std::move(c).finish());
  }
  {
    Check c("distinct-part total gf matches C[n]");
    const auto total = gf_distinct_total(order);
    for (std::int64_t n = 0; n <= order; ++n) {
      c.expect_equal(total.coefficient(n), count_compositions_distinct_total(n), at({{"n", n}}));
    }
    out.push_back(std::move(c).finish());
  }
  {
    Check c("z F*(z) = F(z) - z");
    const auto f = gf_leading_total(order, false);
    const auto f_star = gf_leading_total(order, true);
    const auto lhs = f_star.shifted(1);
    const auto rhs = series_sub(f, TruncatedSeries::from_polynomial(Polynomial{0, 1}, order));
    for (std::int64_t n = 0; n <= order; ++n) {
      c.expect_equal(lhs.coefficient(n), rhs.coefficient(n), at({{"n", n}}));
      c.expect_equal(f.coefficient(n), count_leading_strict_total(n), "F total " + at({{"n", n}}));
    }
    out.push_back(std::move(c).finish());
  }
}

void graphs_suite(std::int64_t max_n, std::uint64_t seed, std::size_t cap, std::vector<CheckResult>& out) {
  SeededRng rng(seed);
  {
    Check c("family closed forms match the subset DP");
    const std::int64_t top = std::min<std::int64_t>(max_n, static_cast<std::int64_t>(cap));
    for (std::int64_t n = 0; n <= top; ++n) {
      for (auto family : {GraphFamily::path, GraphFamily::tree, GraphFamily::complete,
                          GraphFamily::complete_minus_edge, GraphFamily::cycle, GraphFamily::ladder}) {
        if ((family == GraphFamily::complete_minus_edge && n < 2) || (family == GraphFamily::cycle && n < 3) ||
            (family == GraphFamily::ladder && (n < 1 || 2 * n > top))) {
          continue;
        }
        // dense graphs make the DP visit ~3^n states
        if ((family == GraphFamily::complete || family == GraphFamily::complete_minus_edge) && n > 13) {
          continue;
        }
        c.expect_equal(count_compositions_graph(build_family(family, n), cap), family_count(family, n),
                       std::string(family_name(family)) + " " + at({{"n", n}}));
      }
    }
    for (std::int64_t n = 1; n <= 50; ++n) {
      c.expect_equal(ladder_binet(n), family_count(GraphFamily::ladder, n), "Binet " + at({{"n", n}}));
    }
    out.push_back(std::move(c).finish());
  }
  {
    Check c("subset DP matches composition enumeration");
    const std::int64_t top = std::min<std::int64_t>(max_n, 8);
    for (int trial = 0; trial < 40; ++trial) {
      const auto n = static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(top) + 1));
      const auto g = random_graph(n, 1 + rng.below(3), 4, rng);
      c.expect_equal(count_compositions_graph(g, cap), count_of(enumerate_graph_compositions(g).size()),
                     "random graph " + at({{"trial", trial}, {"n", static_cast<std::int64_t>(n)}}));
    }
    out.push_back(std::move(c).finish());
  }
  {
    Check c("connected graphs satisfy 2^(n-1) <= C(G) <= B_n");
    const std::int64_t top = std::min<std::int64_t>(max_n, 10);
    for (int trial = 0; trial < 60 && top >= 1; ++trial) {
      const auto n = static_cast<std::int64_t>(1 + rng.below(static_cast<std::uint64_t>(top)));
      const auto g = random_connected_graph(static_cast<std::size_t>(n), rng.below(4), 4, rng);
      const BigCount value = count_compositions_graph(g, cap);
      c.expect(pow2(n - 1) <= value && value <= bell(n),
               "trial " + std::to_string(trial) + ": C(G) = " + to_decimal(value) + " at n=" + std::to_string(n));
    }
    out.push_back(std::move(c).finish());
  }
  {
    Check c("block decomposition matches the subset DP");
    const std::int64_t top = std::min<std::int64_t>(max_n, 12);
    for (int trial = 0; trial < 40; ++trial) {
      const auto n = static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(top) + 1));
      const auto g = trial % 2 == 0 ? random_block_graph(n, rng) : random_graph(n, 1, 3, rng);
      c.expect_equal(reduce_and_count(g, cap), count_compositions_graph(g, cap),
                     "trial " + std::to_string(trial));
    }
    out.push_back(std::move(c).finish());
  }
}

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& options) {
  if (options.max_n < 0) throw DomainError("verify: --max-n must be nonnegative");
  std::vector<CheckResult> out;
  const bool all = options.suite == VerifySuite::all;
  if (all || options.suite == VerifySuite::compositions) compositions_suite(options.max_n, out);
  if (all || options.suite == VerifySuite::series) series_suite(options.max_n, out);
  if (all || options.suite == VerifySuite::graphs) graphs_suite(options.max_n, options.seed, options.vertex_cap, out);
  return out;
}

}  // namespace compcount
