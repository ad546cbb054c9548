#include "hepta/host_graph.hpp"

#include <bit>
#include <stdexcept>

namespace hepta {

HostGraph::HostGraph(int order, std::string name)
    : order_(order), words_((order + 63) / 64), name_(std::move(name)) {
  if (order < 1 || order > kMaxOrder)
    throw std::out_of_range("HostGraph order must be in [1,4096], got " + std::to_string(order));
  bits_.assign(static_cast<std::size_t>(order_) * words_, 0);
}

HostGraph HostGraph::from_small(const SmallGraph& g) {
  HostGraph h(g.order());
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (g.adjacent(u, v)) h.add_edge(u, v);
  return h;
}

void HostGraph::check_vertex(int v) const {
  if (v < 0 || v >= order_) throw std::out_of_range("vertex out of range");
}

void HostGraph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("self-loops are not allowed");
  bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
  bits_[static_cast<std::size_t>(v) * words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
}

void HostGraph::remove_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] &= ~(std::uint64_t{1} << (v & 63));
  bits_[static_cast<std::size_t>(v) * words_ + (u >> 6)] &= ~(std::uint64_t{1} << (u & 63));
}

int HostGraph::degree(int v) const {
  int d = 0;
  for (auto w : row(v)) d += std::popcount(w);
  return d;
}

std::int64_t HostGraph::edge_count() const {
  std::int64_t total = 0;
  for (auto w : bits_) total += std::popcount(w);
  return total / 2;
}

std::vector<int> HostGraph::neighbors(int v) const {
  std::vector<int> out;
  auto r = row(v);
  for (int w = 0; w < words_; ++w) {
    std::uint64_t bits = r[w];
    while (bits) {
      out.push_back(w * 64 + std::countr_zero(bits));
      bits &= bits - 1;
    }
  }
  return out;
}

std::optional<int> HostGraph::regular_degree() const {
  const int d = degree(0);
  for (int v = 1; v < order_; ++v)
    if (degree(v) != d) return std::nullopt;
  return d;
}

int HostGraph::common_neighbors(int u, int v) const {
  auto a = row(u);
  auto b = row(v);
  int c = 0;
  for (int w = 0; w < words_; ++w) c += std::popcount(a[w] & b[w]);
  return c;
}

SmallGraph HostGraph::induced(std::span<const int> vertices) const {
  SmallGraph out(static_cast<int>(vertices.size()));
  for (std::size_t a = 0; a < vertices.size(); ++a) {
    check_vertex(vertices[a]);
    for (std::size_t b = a + 1; b < vertices.size(); ++b)
      if (adjacent(vertices[a], vertices[b]))
        out.add_edge(static_cast<int>(a), static_cast<int>(b));
  }
  return out;
}

HostGraph HostGraph::with_isolated(int extra) const {
  HostGraph out(order_ + extra, name_);
  for (int u = 0; u < order_; ++u)
    for (int v : neighbors(u))
      if (u < v) out.add_edge(u, v);
  return out;
}

}  // namespace hepta
