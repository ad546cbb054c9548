#include "hepta/small_graph.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace hepta {

SmallGraph::SmallGraph(int order) : order_(order) {
  if (order < 1 || order > kMaxSmallOrder)
    throw std::out_of_range("SmallGraph order must be in [1,8], got " + std::to_string(order));
}

SmallGraph::SmallGraph(int order, std::initializer_list<std::pair<int, int>> edges)
    : SmallGraph(order) {
  for (auto [u, v] : edges) add_edge(u, v);
}

SmallGraph SmallGraph::from_code(int order, Code code) {
  SmallGraph g(order);
  int bit = 0;
  for (int i = 0; i < order; ++i)
    for (int j = i + 1; j < order; ++j, ++bit)
      if ((code >> bit) & 1u) g.add_edge(i, j);
  if (order < kMaxSmallOrder && (code >> pair_count(order)) != 0)
    throw std::invalid_argument("code has bits beyond the upper triangle");
  return g;
}

SmallGraph SmallGraph::from_rows(int order, std::span<const std::uint8_t> rows) {
  SmallGraph g(order);
  if (rows.size() != static_cast<std::size_t>(order))
    throw std::invalid_argument("row count does not match order");
  const unsigned valid = (1u << order) - 1u;
  for (int i = 0; i < order; ++i) {
    if (rows[i] & ~valid) throw std::invalid_argument("row has bits beyond the order");
    if ((rows[i] >> i) & 1u) throw std::invalid_argument("self-loop");
    for (int j = 0; j < order; ++j)
      if (((rows[i] >> j) & 1u) != ((rows[j] >> i) & 1u))
        throw std::invalid_argument("adjacency is not symmetric");
    g.rows_[i] = rows[i];
  }
  return g;
}

int SmallGraph::degree(int v) const { return std::popcount(rows_[v]); }

int SmallGraph::edge_count() const {
  int total = 0;
  for (int v = 0; v < order_; ++v) total += std::popcount(rows_[v]);
  return total / 2;
}

Code SmallGraph::code() const {
  Code c = 0;
  int bit = 0;
  for (int i = 0; i < order_; ++i)
    for (int j = i + 1; j < order_; ++j, ++bit)
      if (adjacent(i, j)) c |= Code{1} << bit;
  return c;
}

void SmallGraph::check_vertex(int v) const {
  if (v < 0 || v >= order_) throw std::out_of_range("vertex out of range");
}

void SmallGraph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("self-loops are not allowed");
  rows_[u] |= static_cast<std::uint8_t>(1u << v);
  rows_[v] |= static_cast<std::uint8_t>(1u << u);
}

void SmallGraph::remove_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  rows_[u] &= static_cast<std::uint8_t>(~(1u << v));
  rows_[v] &= static_cast<std::uint8_t>(~(1u << u));
}

SmallGraph SmallGraph::relabeled(std::span<const int> perm) const {
  if (perm.size() != static_cast<std::size_t>(order_))
    throw std::invalid_argument("permutation size does not match order");
  SmallGraph out(order_);
  for (int u = 0; u < order_; ++u) {
    std::uint8_t r = 0;
    for (int v = 0; v < order_; ++v)
      if (adjacent(u, v)) r |= static_cast<std::uint8_t>(1u << perm[v]);
    out.rows_[perm[u]] = r;
  }
  return out;
}

SmallGraph SmallGraph::induced(std::span<const int> vertices) const {
  SmallGraph out(static_cast<int>(vertices.size()));
  for (std::size_t a = 0; a < vertices.size(); ++a) {
    check_vertex(vertices[a]);
    for (std::size_t b = a + 1; b < vertices.size(); ++b)
      if (adjacent(vertices[a], vertices[b]))
        out.add_edge(static_cast<int>(a), static_cast<int>(b));
  }
  return out;
}

SmallGraph cycle_graph(int order) {
  SmallGraph g(order);
  for (int v = 0; v < order; ++v) g.add_edge(v, (v + 1) % order);
  return g;
}

SmallGraph path_graph(int order) {
  SmallGraph g(order);
  for (int v = 0; v + 1 < order; ++v) g.add_edge(v, v + 1);
  return g;
}

SmallGraph complete_graph(int order) {
  SmallGraph g(order);
  for (int u = 0; u < order; ++u)
    for (int v = u + 1; v < order; ++v) g.add_edge(u, v);
  return g;
}

SmallGraph star_graph(int leaves) {
  SmallGraph g(leaves + 1);
  for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

SmallGraph complete_bipartite(int a, int b) {
  SmallGraph g(a + b);
  for (int u = 0; u < a; ++u)
    for (int v = a; v < a + b; ++v) g.add_edge(u, v);
  return g;
}

}  // namespace hepta
