#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>

namespace hepta {

inline constexpr int kMaxSmallOrder = 8;

/// Labeled adjacency code of a small graph: the upper triangle read
/// row-major, (0,1),(0,2),...,(0,n-1),(1,2),..., with (0,1) as bit 0.
using Code = std::uint32_t;

constexpr int pair_count(int order) { return order * (order - 1) / 2; }

/// Bit position of the pair (i, j), i < j, in a row-major code.
constexpr int pair_index(int order, int i, int j) {
  return i * order - i * (i + 1) / 2 + (j - i - 1);
}

/// A simple undirected graph on at most 8 vertices, one bitmask row per vertex.
class SmallGraph {
 public:
  explicit SmallGraph(int order);
  SmallGraph(int order, std::initializer_list<std::pair<int, int>> edges);

  static SmallGraph from_code(int order, Code code);
  /// Adopts rows verbatim; throws if they break symmetry or carry loops.
  static SmallGraph from_rows(int order, std::span<const std::uint8_t> rows);

  int order() const { return order_; }
  std::uint8_t row(int v) const { return rows_[v]; }
  bool adjacent(int u, int v) const { return (rows_[u] >> v) & 1u; }
  int degree(int v) const;
  int edge_count() const;
  Code code() const;

  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  /// Vertex v of this graph becomes vertex perm[v] of the result.
  SmallGraph relabeled(std::span<const int> perm) const;
  /// Subgraph induced by `vertices`; vertices[i] becomes vertex i.
  SmallGraph induced(std::span<const int> vertices) const;

  bool operator==(const SmallGraph&) const = default;

 private:
  void check_vertex(int v) const;

  int order_;
  std::array<std::uint8_t, kMaxSmallOrder> rows_{};
};

SmallGraph cycle_graph(int order);
SmallGraph path_graph(int order);
SmallGraph complete_graph(int order);
SmallGraph star_graph(int leaves);
SmallGraph complete_bipartite(int a, int b);

}  // namespace hepta
