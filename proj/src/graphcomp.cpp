#include "compcount/graphcomp.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <sstream>

namespace compcount {

// ---------------------------------------------------------------------------
// VertexSubset / LabeledGraph

VertexSubset::VertexSubset(std::size_t vertex_count, std::initializer_list<std::size_t> members)
    : bits_(vertex_count, false) {
  for (auto v : members) insert(v);
}

VertexSubset VertexSubset::all(std::size_t vertex_count) {
  VertexSubset s(vertex_count);
  s.bits_.assign(vertex_count, true);
  return s;
}

void VertexSubset::insert(std::size_t v) {
  if (v >= bits_.size()) {
    throw DomainError("vertex " + std::to_string(v) + " outside subset range " +
                      std::to_string(bits_.size()));
  }
  bits_[v] = true;
}

void VertexSubset::erase(std::size_t v) {
  if (v < bits_.size()) bits_[v] = false;
}

std::size_t VertexSubset::count() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), true));
}

std::vector<std::size_t> VertexSubset::members() const {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < bits_.size(); ++v) {
    if (bits_[v]) out.push_back(v);
  }
  return out;
}

LabeledGraph::LabeledGraph(std::size_t vertex_count) : adjacency_(vertex_count) {}

LabeledGraph::LabeledGraph(std::size_t vertex_count, const std::vector<Edge>& edges)
    : adjacency_(vertex_count) {
  for (const auto& [u, v] : edges) add_edge(u, v);
}

bool LabeledGraph::add_edge(std::size_t u, std::size_t v) {
  if (u == v) throw DomainError("loop edge at vertex " + std::to_string(u));
  if (u >= vertex_count() || v >= vertex_count()) {
    throw DomainError("edge " + std::to_string(u) + "-" + std::to_string(v) +
                      " has an endpoint outside 0.." + std::to_string(vertex_count()) + "-1");
  }
  if (!edges_.emplace(std::min(u, v), std::max(u, v)).second) return false;
  adjacency_[u].push_back(v);
  adjacency_[v].push_back(u);
  return true;
}

bool LabeledGraph::has_edge(std::size_t u, std::size_t v) const {
  return edges_.contains({std::min(u, v), std::max(u, v)});
}

LabeledGraph LabeledGraph::induced(const std::vector<std::size_t>& keep) const {
  std::vector<std::size_t> sorted = keep;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  constexpr auto absent = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> relabel(vertex_count(), absent);
  for (std::size_t i = 0; i < sorted.size(); ++i) relabel.at(sorted[i]) = i;
  LabeledGraph h(sorted.size());
  for (const auto& [u, v] : edges_) {
    if (relabel[u] != absent && relabel[v] != absent) h.add_edge(relabel[u], relabel[v]);
  }
  return h;
}

// ---------------------------------------------------------------------------
// Edge-list format

ParseError::ParseError(std::size_t line, const std::string& message)
    : DomainError("line " + std::to_string(line) + ": " + message), line_(line) {}

namespace {

std::string_view strip(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_fields(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::size_t parse_label(std::string_view field, std::size_t line) {
  if (field.empty() || field.size() > 18 ||
      !std::all_of(field.begin(), field.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw ParseError(line, "expected a nonnegative decimal integer, got '" + std::string(field) + "'");
  }
  std::size_t value = 0;
  for (char c : field) value = value * 10 + static_cast<std::size_t>(c - '0');
  return value;
}

}  // namespace

LabeledGraph parse_edge_list(std::istream& in) {
  std::string raw;
  std::size_t line = 0;
  bool have_count = false;
  LabeledGraph g;
  while (std::getline(in, raw)) {
    ++line;
    const std::string_view text = strip(raw);
    if (text.empty() || text.front() == '#') continue;
    const auto fields = split_fields(text);
    if (!have_count) {
      if (fields.size() != 1) throw ParseError(line, "expected the vertex count alone on the first line");
      g = LabeledGraph(parse_label(fields[0], line));
      have_count = true;
      continue;
    }
    if (fields.size() != 2) throw ParseError(line, "expected an edge 'u v'");
    const std::size_t u = parse_label(fields[0], line);
    const std::size_t v = parse_label(fields[1], line);
    if (u == v) throw ParseError(line, "loop edge at vertex " + std::to_string(u));
    if (u >= g.vertex_count() || v >= g.vertex_count()) {
      throw ParseError(line, "vertex label out of range 0.." + std::to_string(g.vertex_count()) + "-1");
    }
    g.add_edge(u, v);
  }
  if (!have_count) throw ParseError(line, "missing vertex count");
  return g;
}

LabeledGraph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in);
}

std::string format_edge_list(const LabeledGraph& g) {
  std::ostringstream out;
  out << g.vertex_count() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

// ---------------------------------------------------------------------------
// Connectivity

bool is_connected(const LabeledGraph& g, const VertexSubset& s) {
  if (s.universe() != g.vertex_count()) {
    throw DomainError("vertex subset range does not match the graph");
  }
  const auto members = s.members();
  if (members.empty()) throw DomainError("is_connected: empty vertex subset");
  std::vector<bool> seen(g.vertex_count(), false);
  std::vector<std::size_t> stack{members.front()};
  seen[members.front()] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const auto v = stack.back();
    stack.pop_back();
    for (auto w : g.neighbors(v)) {
      if (!seen[w] && s.contains(w)) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == members.size();
}

// ---------------------------------------------------------------------------
// Subset DP

namespace {

using Mask = std::uint64_t;

// B_25 < 2^64, and D(S) <= B_|S|, so 64-bit counters are exact up to here.
constexpr std::size_t kMachineWordVertices = 25;
// memo tables hold 2^n entries
constexpr std::size_t kHardVertexLimit = 30;

template <typename Count>
class SubsetCounter {
 public:
  explicit SubsetCounter(const LabeledGraph& g) : n_(g.vertex_count()), adjacency_(n_, 0) {
    for (const auto& [u, v] : g.edges()) {
      adjacency_[u] |= Mask{1} << v;
      adjacency_[v] |= Mask{1} << u;
    }
    const std::size_t size = std::size_t{1} << n_;
    memo_.assign(size, Count{});
    known_.assign(size, false);
    memo_[0] = Count{1};
    known_[0] = true;
  }

  Count count() { return compositions_of((Mask{1} << n_) - 1); }

 private:
  Count compositions_of(Mask s) {
    if (known_[s]) return memo_[s];
    const Mask low = s & (~s + 1);
    Count total{};
    // every connected T with low in T, T subset of s
    for_each_connected(low, s, 0, [&](Mask block) { total += compositions_of(s & ~block); });
    memo_[s] = total;
    known_[s] = true;
    return total;
  }

  // Grows a connected set one neighbor at a time. Each candidate is either
  // taken or banned, so every connected superset of `block` inside `within`
  // that avoids `banned` is reported exactly once.
  template <typename Emit>
  void for_each_connected(Mask block, Mask within, Mask banned, Emit&& emit) {
    Mask frontier = 0;
    for (Mask rest = block; rest != 0; rest &= rest - 1) {
      frontier |= adjacency_[static_cast<std::size_t>(std::countr_zero(rest))];
    }
    frontier &= within & ~block & ~banned;
    if (frontier == 0) {
      emit(block);
      return;
    }
    const Mask pick = frontier & (~frontier + 1);
    for_each_connected(block | pick, within, banned, emit);
    for_each_connected(block, within, banned | pick, emit);
  }

  std::size_t n_;
  std::vector<Mask> adjacency_;
  std::vector<Count> memo_;
  std::vector<bool> known_;
};

}  // namespace

BigCount count_compositions_graph(const LabeledGraph& g, std::size_t vertex_cap) {
  const std::size_t n = g.vertex_count();
  if (n > vertex_cap || n > kHardVertexLimit) {
    throw ResourceError("graph has " + std::to_string(n) + " vertices, above the subset-DP cap of " +
                        std::to_string(std::min(vertex_cap, kHardVertexLimit)) +
                        "; split it at cut vertices and bridges with reduce_and_count (CLI: --reduce)");
  }
  if (n == 0) return 1;
  if (n <= kMachineWordVertices) {
    SubsetCounter<std::uint64_t> counter(g);
    const std::uint64_t value = counter.count();
    BigCount out;
    mpz_import(out.get_mpz_t(), 1, -1, sizeof value, 0, 0, &value);
    return out;
  }
  SubsetCounter<BigCount> counter(g);
  return counter.count();
}

std::vector<GraphComposition> enumerate_graph_compositions(const LabeledGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n > kEnumerationVertexCap) {
    throw ResourceError("graph composition enumeration is limited to " +
                        std::to_string(kEnumerationVertexCap) + " vertices");
  }
  std::vector<GraphComposition> out;
  // restricted growth strings: block[v] <= 1 + max(block[0..v-1])
  std::vector<std::size_t> block(n, 0);
  auto emit = [&](std::size_t block_count) {
    std::vector<VertexSubset> blocks(block_count, VertexSubset(n));
    for (std::size_t v = 0; v < n; ++v) blocks[block[v]].insert(v);
    for (const auto& b : blocks) {
      if (!is_connected(g, b)) return;
    }
    std::sort(blocks.begin(), blocks.end());
    out.push_back(GraphComposition{std::move(blocks)});
  };
  auto rec = [&](auto&& self, std::size_t v, std::size_t used) -> void {
    if (v == n) {
      emit(used);
      return;
    }
    for (std::size_t b = 0; b <= used; ++b) {
      block[v] = b;
      self(self, v + 1, std::max(used, b + 1));
    }
  };
  rec(rec, 0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Families

GraphFamily parse_graph_family(std::string_view name) {
  if (name == "path") return GraphFamily::path;
  if (name == "tree") return GraphFamily::tree;
  if (name == "complete") return GraphFamily::complete;
  if (name == "kminus" || name == "complete_minus_edge") return GraphFamily::complete_minus_edge;
  if (name == "cycle") return GraphFamily::cycle;
  if (name == "ladder") return GraphFamily::ladder;
  throw DomainError("unknown graph family '" + std::string(name) + "'");
}

std::string_view family_name(GraphFamily family) {
  switch (family) {
    case GraphFamily::path: return "path";
    case GraphFamily::tree: return "tree";
    case GraphFamily::complete: return "complete";
    case GraphFamily::complete_minus_edge: return "kminus";
    case GraphFamily::cycle: return "cycle";
    case GraphFamily::ladder: return "ladder";
  }
  return "?";
}

namespace {

void check_family_size(GraphFamily family, std::int64_t n) {
  std::int64_t minimum = 0;
  switch (family) {
    case GraphFamily::path:
    case GraphFamily::tree:
    case GraphFamily::complete: minimum = 0; break;
    case GraphFamily::complete_minus_edge: minimum = 2; break;
    case GraphFamily::cycle: minimum = 3; break;
    case GraphFamily::ladder: minimum = 1; break;
  }
  if (n < minimum) {
    throw DomainError(std::string(family_name(family)) + " needs n >= " + std::to_string(minimum) +
                      ", got " + std::to_string(n));
  }
}

}  // namespace

BigCount family_count(GraphFamily family, std::int64_t n) {
  check_family_size(family, n);
  switch (family) {
    case GraphFamily::path:
    case GraphFamily::tree:
      return n == 0 ? BigCount(1) : pow2(n - 1);
    case GraphFamily::complete:
      return bell(n);
    case GraphFamily::complete_minus_edge:
      return bell(n) - bell(n - 2);
    case GraphFamily::cycle:
      return pow2(n) - n;
    case GraphFamily::ladder: {
      BigCount previous = 2;
      BigCount current = 12;
      if (n == 1) return previous;
      for (std::int64_t i = 3; i <= n; ++i) {
        BigCount next = 6 * current + previous;
        previous = std::move(current);
        current = std::move(next);
      }
      return current;
    }
  }
  return 0;
}

LabeledGraph build_family(GraphFamily family, std::int64_t n) {
  check_family_size(family, n);
  const auto un = static_cast<std::size_t>(n);
  switch (family) {
    case GraphFamily::path: {
      LabeledGraph g(un);
      for (std::size_t i = 1; i < un; ++i) g.add_edge(i - 1, i);
      return g;
    }
    case GraphFamily::tree: {
      LabeledGraph g(un);
      for (std::size_t i = 1; i < un; ++i) g.add_edge(0, i);
      return g;
    }
    case GraphFamily::complete:
    case GraphFamily::complete_minus_edge: {
      LabeledGraph g(un);
      for (std::size_t u = 0; u < un; ++u) {
        for (std::size_t v = u + 1; v < un; ++v) {
          if (family == GraphFamily::complete_minus_edge && u == 0 && v == 1) continue;
          g.add_edge(u, v);
        }
      }
      return g;
    }
    case GraphFamily::cycle: {
      LabeledGraph g(un);
      for (std::size_t i = 0; i < un; ++i) g.add_edge(i, (i + 1) % un);
      return g;
    }
    case GraphFamily::ladder: {
      LabeledGraph g(2 * un);
      for (std::size_t i = 0; i < un; ++i) {
        g.add_edge(2 * i, 2 * i + 1);
        if (i + 1 < un) {
          g.add_edge(2 * i, 2 * i + 2);
          g.add_edge(2 * i + 1, 2 * i + 3);
        }
      }
      return g;
    }
  }
  return LabeledGraph{};
}

namespace {

// a + b*sqrt(10)
struct RootTen {
  BigInt a;
  BigInt b;

  friend RootTen operator*(const RootTen& x, const RootTen& y) {
    return {x.a * y.a + 10 * x.b * y.b, x.a * y.b + x.b * y.a};
  }
  friend RootTen operator-(const RootTen& x, const RootTen& y) { return {x.a - y.a, x.b - y.b}; }
};

RootTen power(RootTen base, std::int64_t exponent) {
  RootTen result{1, 0};
  while (exponent > 0) {
    if (exponent & 1) result = result * base;
    base = base * base;
    exponent >>= 1;
  }
  return result;
}

}  // namespace

BigCount ladder_binet(std::int64_t n) {
  if (n < 1) throw DomainError("ladder_binet: n must be at least 1");
  // roots of x^2 = 6x + 1
  const RootTen difference = power({3, 1}, n) - power({3, -1}, n);
  // (x + y sqrt10) / sqrt10 is an integer only when x = 0
  if (difference.a != 0) {
    throw ArithmeticError("ladder_binet: conjugate difference has rational part " +
                          to_decimal(difference.a));
  }
  return difference.b;
}

// ---------------------------------------------------------------------------
// Block decomposition

namespace {

// Vertex sets of the biconnected components (bridges included as 2-vertex
// blocks). Isolated vertices form no block. Iterative Hopcroft-Tarjan.
std::vector<std::vector<std::size_t>> biconnected_blocks(const LabeledGraph& g) {
  const std::size_t n = g.vertex_count();
  constexpr auto unvisited = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> order(n, unvisited);
  std::vector<std::size_t> low(n, 0);
  std::vector<LabeledGraph::Edge> edge_stack;
  std::vector<std::vector<std::size_t>> blocks;
  std::size_t clock = 0;

  struct Frame {
    std::size_t vertex;
    std::size_t parent;
    std::size_t next_neighbor;
  };

  for (std::size_t root = 0; root < n; ++root) {
    if (order[root] != unvisited) continue;
    order[root] = low[root] = clock++;
    std::vector<Frame> stack{{root, unvisited, 0}};
    while (!stack.empty()) {
      Frame& top = stack.back();
      const auto& nbrs = g.neighbors(top.vertex);
      if (top.next_neighbor < nbrs.size()) {
        const std::size_t w = nbrs[top.next_neighbor++];
        if (order[w] == unvisited) {
          edge_stack.emplace_back(top.vertex, w);
          order[w] = low[w] = clock++;
          stack.push_back({w, top.vertex, 0});
        } else if (w != top.parent && order[w] < order[top.vertex]) {
          edge_stack.emplace_back(top.vertex, w);
          low[top.vertex] = std::min(low[top.vertex], order[w]);
        }
        continue;
      }
      const std::size_t v = top.vertex;
      const std::size_t parent = top.parent;
      stack.pop_back();
      if (parent == unvisited) continue;
      low[parent] = std::min(low[parent], low[v]);
      if (low[v] >= order[parent]) {
        // parent separates the subtree at v: pop its block
        std::vector<std::size_t> vertices;
        while (true) {
          const auto e = edge_stack.back();
          edge_stack.pop_back();
          vertices.push_back(e.first);
          vertices.push_back(e.second);
          if (e.first == parent && e.second == v) break;
        }
        std::sort(vertices.begin(), vertices.end());
        vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
        blocks.push_back(std::move(vertices));
      }
    }
  }
  return blocks;
}

}  // namespace

BigCount reduce_and_count(const LabeledGraph& g, std::size_t vertex_cap) {
  BigCount product = 1;
  for (const auto& block : biconnected_blocks(g)) {
    if (block.size() == 2) {
      product *= 2;  // bridge
    } else {
      product *= count_compositions_graph(g.induced(block), vertex_cap);
    }
  }
  return product;
}

}  // namespace compcount
