#pragma once

#include <array>
#include <cstdint>

#include "hepta/host_graph.hpp"

namespace hepta {

inline constexpr int kMaxPolygon = 7;

/// Induced (chordless) cycle counts; p(i) for i in [3, 7].
struct PolygonCounts {
  std::array<std::uint64_t, kMaxPolygon + 1> by_length{};

  std::uint64_t p(int i) const { return by_length.at(i); }
  bool operator==(const PolygonCounts&) const = default;
};

/// Counts vertex subsets of size 3..max_length inducing a cycle, by growing
/// induced paths from each cycle's smallest vertex. `jobs` as in census_extend.
PolygonCounts count_polygons(const HostGraph& host, int max_length = kMaxPolygon, int jobs = 1);

}  // namespace hepta
