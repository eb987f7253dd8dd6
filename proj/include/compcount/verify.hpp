#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "compcount/graphcomp.hpp"

namespace compcount {

/// splitmix64. Bounded draws use plain modulo so that a seed reproduces the
/// same graphs on every platform, unlike the std distributions.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  /// Uniform-ish value in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound);
  bool chance(std::uint64_t numerator, std::uint64_t denominator);

 private:
  std::uint64_t state_;
};

/// Random labeled tree on n vertices (each vertex i >= 1 attaches to a
/// uniformly chosen earlier vertex, then labels are shuffled).
LabeledGraph random_tree(std::size_t n, SeededRng& rng);

/// Random tree plus each remaining pair as an edge with probability p = num/den.
LabeledGraph random_connected_graph(std::size_t n, std::uint64_t num, std::uint64_t den, SeededRng& rng);

/// G(n, p) with p = num/den; may be disconnected.
LabeledGraph random_graph(std::size_t n, std::uint64_t num, std::uint64_t den, SeededRng& rng);

/// Small dense blobs glued at shared vertices, bridges, or not at all, so the
/// block decomposition has something to do.
LabeledGraph random_block_graph(std::size_t n, SeededRng& rng);

enum class VerifySuite { all, compositions, series, graphs };

VerifySuite parse_verify_suite(const std::string& name);

struct VerifyOptions {
  VerifySuite suite = VerifySuite::all;
  std::int64_t max_n = 10;
  std::uint64_t seed = 1;
  std::size_t vertex_cap = kDefaultVertexCap;
};

struct CheckResult {
  std::string name;
  bool passed = true;
  std::string detail;  // first mismatch, empty when passed
};

/// Cross-checks every counter against its brute-force oracle and every
/// recurrence against its generating function, up to options.max_n.
std::vector<CheckResult> run_verification(const VerifyOptions& options);

}  // namespace compcount
