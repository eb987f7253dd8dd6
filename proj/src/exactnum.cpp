#include "compcount/exactnum.hpp"

#include <mutex>
#include <vector>

#include "composition_walk.hpp"

namespace compcount {

namespace {

// Factorials are requested over and over by the composition-summation
// formulas; the table only ever grows and entries never change.
class FactorialTable {
 public:
  BigCount get(std::int64_t n) {
    std::lock_guard lock(mutex_);
    while (static_cast<std::int64_t>(table_.size()) <= n) {
      const auto next = static_cast<unsigned long>(table_.size());
      table_.push_back(table_.back() * next);
    }
    return table_[static_cast<std::size_t>(n)];
  }

 private:
  std::mutex mutex_;
  std::vector<BigCount> table_{BigCount(1)};
};

FactorialTable& factorials() {
  static FactorialTable table;
  return table;
}

}  // namespace

std::string to_decimal(const BigInt& value) { return value.get_str(10); }

BigInt exact_div(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0) throw ArithmeticError("exact_div: division by zero");
  BigInt quotient;
  BigInt remainder;
  mpz_tdiv_qr(quotient.get_mpz_t(), remainder.get_mpz_t(), numerator.get_mpz_t(),
              denominator.get_mpz_t());
  if (remainder != 0) {
    throw ArithmeticError("exact_div: " + to_decimal(numerator) + " is not divisible by " +
                          to_decimal(denominator));
  }
  return quotient;
}

BigInt pow2(std::int64_t exponent) {
  if (exponent < 0) throw DomainError("pow2: negative exponent");
  BigInt result;
  mpz_ui_pow_ui(result.get_mpz_t(), 2, static_cast<unsigned long>(exponent));
  return result;
}

BigCount factorial(std::int64_t n) {
  if (n < 0) return 0;
  return factorials().get(n);
}

BigCount binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  BigCount result;
  mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return result;
}

BigCount multinomial(std::int64_t n, std::span<const std::int64_t> parts) {
  std::int64_t sum = 0;
  for (auto p : parts) {
    if (p < 0) throw DomainError("multinomial: negative part " + std::to_string(p));
    sum += p;
  }
  if (sum != n) {
    throw DomainError("multinomial: parts sum to " + std::to_string(sum) + ", expected " +
                      std::to_string(n));
  }
  BigCount denominator = 1;
  for (auto p : parts) denominator *= factorial(p);
  return exact_div(factorial(n), denominator);
}

BigCount bell(std::int64_t n) {
  if (n < 0) return 0;
  // Bell triangle: each row starts with the last entry of the previous row.
  std::vector<BigCount> row{BigCount(1)};
  for (std::int64_t i = 1; i <= n; ++i) {
    std::vector<BigCount> next;
    next.reserve(row.size() + 1);
    next.push_back(row.back());
    for (const auto& x : row) next.push_back(next.back() + x);
    row = std::move(next);
  }
  return row.front();
}

BigCount stirling2(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  // row[j] = {i j} for the current i
  std::vector<BigCount> row(static_cast<std::size_t>(k) + 1, 0);
  row[0] = 1;
  for (std::int64_t i = 1; i <= n; ++i) {
    for (std::int64_t j = std::min(i, k); j >= 1; --j) {
      const auto uj = static_cast<std::size_t>(j);
      row[uj] = static_cast<unsigned long>(j) * row[uj] + row[uj - 1];
    }
    row[0] = 0;
  }
  return row[static_cast<std::size_t>(k)];
}

BigCount stirling1(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  std::vector<BigCount> row(static_cast<std::size_t>(k) + 1, 0);
  row[0] = 1;
  for (std::int64_t i = 1; i <= n; ++i) {
    for (std::int64_t j = std::min(i, k); j >= 1; --j) {
      const auto uj = static_cast<std::size_t>(j);
      row[uj] = static_cast<unsigned long>(i - 1) * row[uj] + row[uj - 1];
    }
    row[0] = 0;
  }
  return row[static_cast<std::size_t>(k)];
}

BigCount stirling2_via_compositions(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0) return 0;
  BigCount sum = 0;
  detail::walk_compositions(n, k, 1, -1, [&](const std::vector<std::int64_t>& parts) {
    sum += multinomial(n, parts);
    return true;
  });
  return exact_div(sum, factorial(k));
}

BigCount stirling1_via_compositions(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0) return 0;
  BigRational sum = 0;
  detail::walk_compositions(n, k, 1, -1, [&](const std::vector<std::int64_t>& parts) {
    BigInt product = 1;
    for (auto p : parts) product *= static_cast<long>(p);
    BigRational term(BigInt(1), product);
    term.canonicalize();
    sum += term;
    return true;
  });
  BigRational scaled = sum * BigRational(factorial(n), factorial(k));
  scaled.canonicalize();
  if (scaled.get_den() != 1) {
    throw ArithmeticError("stirling1_via_compositions: non-integral result for n=" +
                          std::to_string(n) + ", k=" + std::to_string(k));
  }
  return scaled.get_num();
}

BigCount equal_block_partitions(std::int64_t eta, std::int64_t kappa, std::int64_t lambda) {
  if (lambda < 1) throw DomainError("equal_block_partitions: block size must be positive");
  if (eta < 0 || kappa < 0 || eta != kappa * lambda) return 0;
  BigCount denominator;
  mpz_pow_ui(denominator.get_mpz_t(), factorial(lambda).get_mpz_t(),
             static_cast<unsigned long>(kappa));
  denominator *= factorial(kappa);
  return exact_div(factorial(eta), denominator);
}

BigCount binomial_via_partition_multiplicities(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  const BigCount k_factorial = factorial(k);
  BigCount sum = 0;
  // Partitions as nonincreasing part lists; the multiplicity vector is read
  // off the runs of equal parts.
  std::vector<std::int64_t> parts;
  auto rec = [&](auto&& self, std::int64_t remaining, std::int64_t left, std::int64_t cap) -> void {
    if (left == 0) {
      if (remaining != 0) return;
      BigCount denominator = 1;
      std::size_t i = 0;
      while (i < parts.size()) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        denominator *= factorial(static_cast<std::int64_t>(j - i));
        i = j;
      }
      sum += exact_div(k_factorial, denominator);
      return;
    }
    // largest part p must leave room for left-1 parts of size >= 1 and the
    // remaining parts are at most p each
    for (std::int64_t p = std::min(cap, remaining - (left - 1)); p >= 1; --p) {
      if (p * left < remaining) break;
      parts.push_back(p);
      self(self, remaining - p, left - 1, p);
      parts.pop_back();
    }
  };
  rec(rec, n, k, n);
  return sum;
}

}  // namespace compcount
