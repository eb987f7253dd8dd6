#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

namespace compcount::detail {

// Calls visit(parts) for every composition of n into exactly k parts with
// lower <= part <= upper, in lexicographic order. upper < 0 means unbounded.
// visit returns false to stop the walk early.
template <typename Visit>
bool walk_compositions(std::int64_t n, std::int64_t k, std::int64_t lower, std::int64_t upper,
                       Visit&& visit) {
  if (n < 0 || k < 0) return true;
  std::vector<std::int64_t> parts;
  parts.reserve(static_cast<std::size_t>(k));

  auto rec = [&](auto&& self, std::int64_t remaining, std::int64_t left) -> bool {
    if (left == 0) {
      if (remaining != 0) return true;
      return visit(static_cast<const std::vector<std::int64_t>&>(parts));
    }
    // the parts after this one need at least lower*(left-1) and at most
    // upper*(left-1)
    std::int64_t lo = lower;
    std::int64_t hi = remaining - lower * (left - 1);
    if (upper >= 0) {
      lo = std::max(lo, remaining - upper * (left - 1));
      hi = std::min(hi, upper);
    }
    for (std::int64_t p = lo; p <= hi; ++p) {
      parts.push_back(p);
      const bool go_on = self(self, remaining - p, left - 1);
      parts.pop_back();
      if (!go_on) return false;
    }
    return true;
  };
  return rec(rec, n, k);
}

}  // namespace compcount::detail
