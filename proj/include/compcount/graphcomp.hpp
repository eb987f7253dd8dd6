#pragma once

#include <cstdint>
#include <istream>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "compcount/exactnum.hpp"

namespace compcount {

/// Membership bits over vertices 0..n-1.
class VertexSubset {
 public:
  VertexSubset() = default;
  explicit VertexSubset(std::size_t vertex_count) : bits_(vertex_count, false) {}
  VertexSubset(std::size_t vertex_count, std::initializer_list<std::size_t> members);

  static VertexSubset all(std::size_t vertex_count);

  std::size_t universe() const { return bits_.size(); }
  bool contains(std::size_t v) const { return v < bits_.size() && bits_[v]; }
  void insert(std::size_t v);
  void erase(std::size_t v);
  std::size_t count() const;
  bool empty() const { return count() == 0; }
  std::vector<std::size_t> members() const;

  friend auto operator<=>(const VertexSubset&, const VertexSubset&) = default;

 private:
  std::vector<bool> bits_;
};

/// Simple undirected graph on vertices 0..n-1: no loops, no multi-edges.
class LabeledGraph {
 public:
  using Edge = std::pair<std::size_t, std::size_t>;

  LabeledGraph() = default;
  explicit LabeledGraph(std::size_t vertex_count);
  /// Throws DomainError on loops or out-of-range endpoints; repeated edges
  /// collapse.
  LabeledGraph(std::size_t vertex_count, const std::vector<Edge>& edges);

  /// Returns false if the edge was already present.
  bool add_edge(std::size_t u, std::size_t v);
  bool has_edge(std::size_t u, std::size_t v) const;

  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  /// Edges as (min, max) pairs in lexicographic order.
  const std::set<Edge>& edges() const { return edges_; }
  const std::vector<std::size_t>& neighbors(std::size_t v) const { return adjacency_.at(v); }

  /// Subgraph induced by `keep`, relabeled 0..|keep|-1 in increasing order.
  LabeledGraph induced(const std::vector<std::size_t>& keep) const;

  friend bool operator==(const LabeledGraph& a, const LabeledGraph& b) {
    return a.vertex_count() == b.vertex_count() && a.edges_ == b.edges_;
  }

 private:
  std::vector<std::vector<std::size_t>> adjacency_;
  std::set<Edge> edges_;
};

/// Edge-list text format error, carrying the 1-based line number.
class ParseError : public DomainError {
 public:
  ParseError(std::size_t line, const std::string& message);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// First nonblank, non-'#' line: vertex count. Every further such line: "u v".
LabeledGraph parse_edge_list(std::istream& in);
LabeledGraph parse_edge_list(std::string_view text);

/// Inverse of parse_edge_list.
std::string format_edge_list(const LabeledGraph& g);

/// Whether the subgraph induced by s is connected. Throws DomainError for an
/// empty subset or one over a different vertex range.
bool is_connected(const LabeledGraph& g, const VertexSubset& s);

/// Vertex partition into blocks that each induce a connected subgraph. Blocks
/// are kept sorted so equal partitions compare equal.
struct GraphComposition {
  std::vector<VertexSubset> blocks;
  friend auto operator<=>(const GraphComposition&, const GraphComposition&) = default;
};

inline constexpr std::size_t kDefaultVertexCap = 24;
inline constexpr std::size_t kEnumerationVertexCap = 10;

/// Number of partitions of V(g) into connected induced blocks, by subset DP:
/// D(S) = sum over connected T with min(S) in T subset of S of D(S \ T),
/// D(empty) = 1. Throws ResourceError above `vertex_cap` vertices.
BigCount count_compositions_graph(const LabeledGraph& g, std::size_t vertex_cap = kDefaultVertexCap);

/// Every composition of g, by filtering all set partitions of V(g).
/// Throws ResourceError above kEnumerationVertexCap vertices.
std::vector<GraphComposition> enumerate_graph_compositions(const LabeledGraph& g);

enum class GraphFamily { path, tree, complete, complete_minus_edge, cycle, ladder };

GraphFamily parse_graph_family(std::string_view name);
std::string_view family_name(GraphFamily family);

/// Closed form or recurrence value of C(G) for a family member:
/// path/tree 2^(n-1), complete B_n, complete_minus_edge B_n - B_(n-2),
/// cycle 2^n - n, ladder C(L_n) = 6 C(L_(n-1)) + C(L_(n-2)) from 2, 12.
BigCount family_count(GraphFamily family, std::int64_t n);

/// Explicit member graph. The tree is the star centered at vertex 0. Ladder
/// rung i joins vertices 2i and 2i+1.
LabeledGraph build_family(GraphFamily family, std::int64_t n);

/// ((3+sqrt10)^n - (3-sqrt10)^n) / sqrt10, evaluated in Z[sqrt10].
BigCount ladder_binet(std::int64_t n);

/// C(G) as the product over biconnected blocks, each bridge contributing 2 and
/// every larger block its subset-DP count. The cap applies per block.
BigCount reduce_and_count(const LabeledGraph& g, std::size_t vertex_cap = kDefaultVertexCap);

}  // namespace compcount
