#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "hepta/small_graph.hpp"

namespace hepta {

/// Isomorphism-class key of a small graph.
///
/// `bits` is the upper-triangle bit sequence of the lexicographically minimal
/// relabeling, read row-major and packed so that the first pair (0,1) is the
/// most significant of pair_count(order) bits. Numeric order on `bits` is
/// therefore lexicographic order on the sequence.
struct CanonKey {
  int order = 0;
  std::uint32_t bits = 0;

  /// The same relabeling as a labeled code ((0,1) as bit 0).
  Code labeled_code() const;
  SmallGraph graph() const { return SmallGraph::from_code(order, labeled_code()); }

  auto operator<=>(const CanonKey&) const = default;
};

/// Minimum over all order! relabelings. Results are memoized per labeled code;
/// the memo is shared and safe for concurrent use.
CanonKey canonical_form(const SmallGraph& g);

/// Size of the automorphism group.
std::uint64_t automorphism_count(const SmallGraph& g);

/// All permutations of 0..order-1 in lexicographic order (order <= 8).
std::span<const std::array<std::uint8_t, kMaxSmallOrder>> permutations(int order);

/// Labeled code of g relabeled by `perm` (vertex v -> perm[v]).
Code relabel_code(int order, Code code, const std::array<std::uint8_t, kMaxSmallOrder>& perm);

}  // namespace hepta
