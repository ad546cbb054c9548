#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hepta/small_graph.hpp"

namespace hepta {

/// Census target: up to 4096 vertices, adjacency stored as packed 64-bit rows.
class HostGraph {
 public:
  static constexpr int kMaxOrder = 4096;

  explicit HostGraph(int order, std::string name = {});
  static HostGraph from_small(const SmallGraph& g);

  int order() const { return order_; }
  int words_per_row() const { return words_; }
  std::span<const std::uint64_t> row(int v) const {
    return {bits_.data() + static_cast<std::size_t>(v) * words_, static_cast<std::size_t>(words_)};
  }
  bool adjacent(int u, int v) const {
    return (bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1u;
  }

  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  int degree(int v) const;
  std::int64_t edge_count() const;
  std::vector<int> neighbors(int v) const;
  /// Common degree if every vertex has the same degree.
  std::optional<int> regular_degree() const;
  int common_neighbors(int u, int v) const;

  /// Subgraph induced by `vertices` (at most 8); vertices[i] becomes vertex i.
  SmallGraph induced(std::span<const int> vertices) const;
  /// Copy with `extra` isolated vertices appended.
  HostGraph with_isolated(int extra) const;

  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  /// Adjacency equality; names are ignored.
  bool operator==(const HostGraph& other) const {
    return order_ == other.order_ && bits_ == other.bits_;
  }

 private:
  void check_vertex(int v) const;

  int order_;
  int words_;
  std::vector<std::uint64_t> bits_;
  std::string name_;
};

}  // namespace hepta
